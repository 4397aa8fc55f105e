// Finite object systems: the semantic domain the checker works over.
//
// A System is one finite candidate realization of a set of diagrams: a
// type universe, the class universe embedded into it, per-type carrier
// sets, a subclass relation, attribute facts, and association links. The
// predicates below are the togglable validity conditions a system must
// meet; which of them apply is a per-run choice (VariationConfig).

#ifndef CDSEM_SYSTEM_HPP
#define CDSEM_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <variant>

#include "cdsem/ast.hpp"

namespace cdsem {

struct BasicType {
    Ident name;
    auto operator<=>(const BasicType&) const = default;
};

// A class name wrapped into the type universe; distinct from any BasicType
// of the same name by construction.
struct ClassType {
    Ident name;
    auto operator<=>(const ClassType&) const = default;
};

using TypeId = std::variant<BasicType, ClassType>;

const Ident& type_name(const TypeId& t);

// Opaque carrier value; identity is all that matters.
struct ValueToken {
    std::uint32_t id = 0;
    auto operator<=>(const ValueToken&) const = default;
};

struct AttrEntry {
    Ident cls;
    Ident attr;
    TypeId type;

    bool operator==(const AttrEntry& o) const;
    bool operator<(const AttrEntry& o) const;
};

using Relation = std::set<std::pair<Ident, Ident>>;

struct System {
    std::set<TypeId> types;
    std::set<Ident> classes;                    // class identity is the name
    std::map<TypeId, std::set<ValueToken>> car;  // keyed by exactly `types`
    Relation sub;                               // (a, b): a is a subclass of b
    std::set<AttrEntry> attrs;
    Relation assoc_links;

    bool operator==(const System&) const = default;
};

// Validity predicates that can be switched per run. single_inheritance has
// no reading on a System value; the checker tests it on the declarations.
struct VariationConfig {
    bool require_car_nonempty = true;
    bool require_transitive = true;
    bool require_noncircular = false;
    bool single_inheritance = false;
};

// Structural invariants: classes embed into types, sub/attr/assoc facts
// only mention declared classes and types, car is keyed by exactly the
// type set.
bool well_formed(const System& sm);

// Every type has a non-empty carrier set.
bool p_car_type1(const System& sm);

// sub is transitive.
bool p_sub_trans(const System& sm);

// sub is antisymmetric; self-loops are permitted.
bool p_sub_noncirc(const System& sm);

// well_formed plus every predicate whose flag is on.
bool valid(const System& sm, const VariationConfig& cfg);

// Smallest transitive superset of rel.
Relation transitive_closure(const Relation& rel);

}  // namespace cdsem

#endif
