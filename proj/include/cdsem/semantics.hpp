// The meaning of a diagram set, represented intensionally.
//
// A diagram denotes the set of all valid systems that contain the facts it
// declares. Those facts are positive atoms (class exists, subclass edge,
// attribute fact, ...) extracted per element; a set of diagrams denotes
// the intersection of the per-diagram sets, i.e. the conjunction of their
// atoms. Membership of a concrete System is decidable by evaluation.

#ifndef CDSEM_SEMANTICS_HPP
#define CDSEM_SEMANTICS_HPP

#include <set>
#include <span>
#include <variant>

#include "cdsem/ast.hpp"
#include "cdsem/system.hpp"

namespace cdsem {

struct ClassExists {
    Ident name;
    auto operator<=>(const ClassExists&) const = default;
};

// Some type of this name exists, basic or class; which one is resolved
// against the system at evaluation time.
struct TypeExistsByName {
    Ident name;
    auto operator<=>(const TypeExistsByName&) const = default;
};

struct SubEdge {
    Ident sub_class;
    Ident super_class;
    auto operator<=>(const SubEdge&) const = default;
};

struct AttrFact {
    Ident cls;
    Ident attr;
    Ident type_name;
    auto operator<=>(const AttrFact&) const = default;
};

struct AssocFact {
    Ident left;
    Ident right;
    auto operator<=>(const AssocFact&) const = default;
};

using Atom = std::variant<ClassExists, TypeExistsByName, SubEdge, AttrFact, AssocFact>;
using ConstraintSet = std::set<Atom>;

// Atoms a satisfying system must contain. Per element:
//   class C extends S1.. { T a; .. }  ->  ClassExists(C), ClassExists(Si),
//       SubEdge(C, Si), AttrFact(C, a, T), TypeExistsByName(T)
//   association L -- R                ->  ClassExists(L), ClassExists(R),
//       AssocFact(L, R)
// Invariants and attribute modifiers contribute nothing.
ConstraintSet extract_constraints(const Diagram& d);

// Union over all documents.
ConstraintSet extract_constraints(std::span<const Diagram> docs);

// Requires well_formed(sm).
bool holds_atom(const System& sm, const Atom& a);

bool satisfies(const System& sm, const ConstraintSet& cs);

// Membership of sm in the denotation of docs under cfg:
// well_formed, valid, and every document's atoms hold.
bool in_sem(const System& sm, std::span<const Diagram> docs, const VariationConfig& cfg);

// Same, over pre-extracted atoms; used by the enumeration oracle to avoid
// re-extracting per candidate.
bool in_sem_atoms(const System& sm, const ConstraintSet& cs, const VariationConfig& cfg);

}  // namespace cdsem

#endif
