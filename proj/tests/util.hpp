// Shared test utilities: the two running example models, deterministic
// random generators for small diagrams and systems, and a tokenizer for
// order-insensitive comparison of emitted constdefs terms.

#ifndef CDSEM_TESTS_UTIL_HPP
#define CDSEM_TESTS_UTIL_HPP

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsem/ast.hpp"
#include "cdsem/checker.hpp"
#include "cdsem/parser.hpp"
#include "cdsem/semantics.hpp"
#include "cdsem/system.hpp"

namespace cdsem::testutil {

inline constexpr const char* kAbcSource =
    "classdiagram ABC {\n"
    "  class A;\n"
    "  class B extends A;\n"
    "  class C extends B;\n"
    "}\n";

inline constexpr const char* kCaSource =
    "classdiagram CA {\n"
    "  class C;\n"
    "  class A extends C;\n"
    "}\n";

inline Diagram abc() { return parse_diagram(kAbcSource); }
inline Diagram ca() { return parse_diagram(kCaSource); }

inline Ident id(const std::string& s) { return Ident(s); }

// Well-formed system: class types for `classes`, basic types for `basics`,
// `car_count` tokens per type.
inline System sys_of(const std::vector<std::string>& classes,
                     const std::vector<std::pair<std::string, std::string>>& sub,
                     std::size_t car_count = 1, const std::vector<std::string>& basics = {}) {
    System sm;
    for (const auto& c : classes) {
        sm.classes.insert(id(c));
        sm.types.insert(ClassType{id(c)});
    }
    for (const auto& b : basics) sm.types.insert(BasicType{id(b)});
    std::uint32_t token = 0;
    for (const TypeId& t : sm.types) {
        auto& values = sm.car[t];
        for (std::size_t i = 0; i < car_count; ++i) values.insert(ValueToken{token++});
    }
    for (const auto& [a, b] : sub) sm.sub.insert({id(a), id(b)});
    return sm;
}

inline const std::vector<std::string>& class_pool() {
    static const std::vector<std::string> pool = {"A", "B", "C"};
    return pool;
}

inline std::size_t below(std::mt19937& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// Diagram within the oracle's small-scope limits: classes from {A,B,C},
// each with up to two supers from the same pool, at most two attributes
// and one association per diagram.
inline Diagram small_diagram(std::mt19937& rng) {
    static const std::vector<std::string> names = {"M", "N", "P", "Q"};
    static const std::vector<std::string> attr_types = {"int", "bool", "A", "B"};
    static const std::vector<std::string> attr_names = {"x", "y"};

    const auto& pool = class_pool();
    std::vector<std::string> declared;
    for (const auto& c : pool)
        if (chance(rng, 0.6)) declared.push_back(c);

    Diagram d{id(names[below(rng, names.size())]), {}, {}};
    for (const auto& c : declared) {
        ClassDecl decl{id(c), {}, {}};
        std::size_t n_supers = below(rng, 3);
        for (std::size_t i = 0; i < n_supers; ++i)
            decl.supers.push_back(id(pool[below(rng, pool.size())]));
        d.elements.push_back(std::move(decl));
    }
    if (!declared.empty()) {
        std::size_t n_attrs = below(rng, 3);
        for (std::size_t i = 0; i < n_attrs; ++i) {
            auto* cls = std::get_if<ClassDecl>(&d.elements[below(rng, d.elements.size())]);
            if (cls)
                cls->attrs.push_back(Attribute{std::nullopt,
                                               id(attr_types[below(rng, attr_types.size())]),
                                               id(attr_names[below(rng, attr_names.size())])});
        }
        if (chance(rng, 0.4))
            d.elements.push_back(AssocDecl{id(pool[below(rng, pool.size())]),
                                           id(pool[below(rng, pool.size())])});
    }
    return d;
}

inline std::vector<Diagram> small_docs(std::mt19937& rng, std::size_t max_docs = 2) {
    std::vector<Diagram> docs;
    std::size_t n = below(rng, max_docs + 1);
    for (std::size_t i = 0; i < n; ++i) docs.push_back(small_diagram(rng));
    return docs;
}

// Broader generator for round-trip tests: invariants with escapes,
// modifiers, duplicate supers, classes with and without bodies.
inline Diagram any_diagram(std::mt19937& rng) {
    static const std::vector<std::string> names = {"Model", "Shapes", "W1", "zz"};
    static const std::vector<std::string> classes = {"A", "B", "C", "Dee", "e2"};
    static const std::vector<std::string> types = {"int", "bool", "String", "A"};
    static const std::vector<std::string> attrs = {"x", "y", "count", "next"};
    static const std::vector<std::string> invs = {
        "x > 0", "a \\; b", "forall o . alive(o)", "size(items)  <  10", ""};

    Diagram d{id(names[below(rng, names.size())]), {}, {}};
    std::size_t n_invs = below(rng, 3);
    for (std::size_t i = 0; i < n_invs; ++i)
        d.invariants.push_back(RawInvariant{invs[below(rng, invs.size())]});

    std::size_t n_classes = below(rng, 5);
    for (std::size_t i = 0; i < n_classes; ++i) {
        ClassDecl decl{id(classes[below(rng, classes.size())]), {}, {}};
        std::size_t n_supers = below(rng, 3);
        for (std::size_t s = 0; s < n_supers; ++s)
            decl.supers.push_back(id(classes[below(rng, classes.size())]));
        std::size_t n_attrs = below(rng, 3);
        for (std::size_t a = 0; a < n_attrs; ++a) {
            std::optional<Modifier> mod;
            if (chance(rng, 0.3)) mod = Modifier::Public;
            else if (chance(rng, 0.3)) mod = Modifier::Private;
            decl.attrs.push_back(Attribute{mod, id(types[below(rng, types.size())]),
                                           id(attrs[below(rng, attrs.size())])});
        }
        d.elements.push_back(std::move(decl));
    }
    std::size_t n_assocs = below(rng, 2);
    for (std::size_t i = 0; i < n_assocs; ++i)
        d.elements.push_back(AssocDecl{id(classes[below(rng, classes.size())]),
                                       id(classes[below(rng, classes.size())])});
    return d;
}

// Random well-formed system over classes from {A,B,C} and basic types from
// {int,bool}. Carrier sets are non-empty when nonempty_car is set.
inline System small_system(std::mt19937& rng, bool nonempty_car = true) {
    static const std::vector<std::string> basics = {"int", "bool"};
    static const std::vector<std::string> attr_names = {"x", "y"};

    System sm;
    for (const auto& c : class_pool())
        if (chance(rng, 0.6)) {
            sm.classes.insert(id(c));
            sm.types.insert(ClassType{id(c)});
        }
    for (const auto& b : basics)
        if (chance(rng, 0.4)) sm.types.insert(BasicType{id(b)});

    std::uint32_t token = 0;
    for (const TypeId& t : sm.types) {
        auto& values = sm.car[t];
        std::size_t n = nonempty_car ? 1 + below(rng, 2) : below(rng, 3);
        for (std::size_t i = 0; i < n; ++i) values.insert(ValueToken{token++});
    }
    for (const Ident& a : sm.classes)
        for (const Ident& b : sm.classes)
            if (chance(rng, 0.3)) sm.sub.insert({a, b});
    for (const Ident& c : sm.classes)
        for (const auto& a : attr_names)
            if (chance(rng, 0.25) && !sm.types.empty()) {
                std::size_t i = below(rng, sm.types.size());
                sm.attrs.insert(AttrEntry{c, id(a), *std::next(sm.types.begin(), i)});
            }
    for (const Ident& a : sm.classes)
        for (const Ident& b : sm.classes)
            if (chance(rng, 0.2)) sm.assoc_links.insert({a, b});
    return sm;
}

inline VariationConfig random_config(std::mt19937& rng, bool with_single_inheritance = false) {
    VariationConfig cfg;
    cfg.require_car_nonempty = chance(rng, 0.5);
    cfg.require_transitive = chance(rng, 0.5);
    cfg.require_noncircular = chance(rng, 0.5);
    cfg.single_inheritance = with_single_inheritance && chance(rng, 0.5);
    return cfg;
}

// --- constdefs term comparison ------------------------------------------

struct TermParts {
    std::string head;                        // up to the invariant list
    std::vector<std::string> invariants;     // top-level items, normalized
    std::vector<std::string> elements;       // top-level items, normalized, sorted
    bool operator==(const TermParts&) const = default;
};

inline std::string collapse_ws(const std::string& s) {
    std::string out;
    bool in_ws = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n') {
            in_ws = true;
            continue;
        }
        if (in_ws && !out.empty()) out.push_back(' ');
        in_ws = false;
        out.push_back(c);
    }
    return out;
}

// Splits `name == CDDefinition ''N'' [invs] [elems]` into parts. Accepts
// the body either bare or wrapped in `constdefs "..."`.
inline TermParts parse_term_body(std::string text) {
    auto first_quote = text.find('"');
    if (text.rfind("constdefs", 0) == 0 && first_quote != std::string::npos) {
        auto last_quote = text.rfind('"');
        text = text.substr(first_quote + 1, last_quote - first_quote - 1);
    }
    auto first_bracket = text.find('[');
    if (first_bracket == std::string::npos) throw std::runtime_error("no list in term");
    TermParts parts;
    parts.head = collapse_ws(text.substr(0, first_bracket));

    // Returns the top-level comma-separated items of the list opening at
    // `open` and the index of its closing ']'.
    auto split_list = [&](std::size_t open) -> std::pair<std::vector<std::string>, std::size_t> {
        std::vector<std::string> items;
        std::string cur;
        int depth = 1;
        std::size_t i = open + 1;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c == '[' || c == '(') ++depth;
            if (c == ']' || c == ')') {
                --depth;
                if (depth == 0) break;
            }
            if (depth == 1 && c == ',') {
                items.push_back(collapse_ws(cur));
                cur.clear();
                continue;
            }
            cur.push_back(c);
        }
        if (depth != 0) throw std::runtime_error("unbalanced term");
        cur = collapse_ws(cur);
        if (!cur.empty()) items.push_back(cur);
        return {items, i};
    };

    auto [invs, inv_end] = split_list(first_bracket);
    parts.invariants = invs;
    auto second_bracket = text.find('[', inv_end + 1);
    if (second_bracket == std::string::npos) throw std::runtime_error("no element list");
    auto [elems, elem_end] = split_list(second_bracket);
    (void)elem_end;
    parts.elements = elems;
    std::sort(parts.elements.begin(), parts.elements.end());
    return parts;
}

}  // namespace cdsem::testutil

#endif
