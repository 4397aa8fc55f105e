#include "cdsem/checker.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cdsem {

namespace {

Relation declared_edges(const ConstraintSet& cs) {
    Relation edges;
    for (const Atom& a : cs)
        if (const auto* e = std::get_if<SubEdge>(&a)) edges.insert({e->sub_class, e->super_class});
    return edges;
}

// A cycle of >= 2 distinct classes in the declared-edge graph, if any:
// walk inside one strongly connected component taking the least successor
// each step, then report the lexicographically least rotation, closed.
std::optional<std::vector<Ident>> find_cycle(const Relation& edges) {
    Relation closure = transitive_closure(edges);
    std::optional<Ident> start;
    for (const auto& [a, b] : closure) {
        if (a != b && closure.contains({b, a})) {
            start = a;  // pairs are sorted, so the first hit has the least source
            break;
        }
    }
    if (!start) return std::nullopt;

    auto in_component = [&](const Ident& c) {
        return c == *start ||
               (closure.contains({*start, c}) && closure.contains({c, *start}));
    };

    std::vector<Ident> path{*start};
    for (;;) {
        const Ident& cur = path.back();
        std::optional<Ident> next;
        for (const auto& [a, b] : edges)
            if (a == cur && in_component(b) && (!next || b < *next)) next = b;
        // Strong connectivity guarantees a successor inside the component.
        if (!next) return std::nullopt;
        auto seen = std::find(path.begin(), path.end(), *next);
        if (seen != path.end()) {
            std::vector<Ident> cycle(seen, path.end());
            std::size_t m = cycle.size();
            std::size_t best = 0;
            for (std::size_t r = 1; r < m; ++r) {
                for (std::size_t i = 0; i < m; ++i) {
                    const Ident& lhs = cycle[(r + i) % m];
                    const Ident& rhs = cycle[(best + i) % m];
                    if (lhs != rhs) {
                        if (lhs < rhs) best = r;
                        break;
                    }
                }
            }
            std::vector<Ident> rotated;
            rotated.reserve(m + 1);
            for (std::size_t i = 0; i < m; ++i) rotated.push_back(cycle[(best + i) % m]);
            rotated.push_back(rotated.front());
            return rotated;
        }
        path.push_back(*next);
    }
}

TypeId resolve_type(const Ident& name, const std::set<Ident>& classes) {
    if (classes.contains(name)) return ClassType{name};
    return BasicType{name};
}

System canonical_from_atoms(const ConstraintSet& cs, const VariationConfig& cfg) {
    System sm;
    for (const Atom& a : cs)
        if (const auto* c = std::get_if<ClassExists>(&a)) sm.classes.insert(c->name);
    for (const Ident& c : sm.classes) sm.types.insert(ClassType{c});
    for (const Atom& a : cs)
        if (const auto* t = std::get_if<TypeExistsByName>(&a))
            if (!sm.classes.contains(t->name)) sm.types.insert(BasicType{t->name});

    Relation edges = declared_edges(cs);
    sm.sub = cfg.require_transitive ? transitive_closure(edges) : edges;

    std::uint32_t token = 0;
    for (const TypeId& t : sm.types) {
        auto& values = sm.car[t];
        if (cfg.require_car_nonempty) values.insert(ValueToken{token++});
    }

    for (const Atom& a : cs) {
        if (const auto* f = std::get_if<AttrFact>(&a))
            sm.attrs.insert(AttrEntry{f->cls, f->attr, resolve_type(f->type_name, sm.classes)});
        else if (const auto* l = std::get_if<AssocFact>(&a))
            sm.assoc_links.insert({l->left, l->right});
    }
    return sm;
}

}  // namespace

System canonical_system(std::span<const Diagram> docs, const VariationConfig& cfg) {
    return canonical_from_atoms(extract_constraints(docs), cfg);
}

CheckResult check_consistency(std::span<const Diagram> docs, const VariationConfig& cfg) {
    ConstraintSet cs = extract_constraints(docs);
    System canon = canonical_from_atoms(cs, cfg);
    if (in_sem_atoms(canon, cs, cfg)) {
        if (cfg.single_inheritance) {
            auto violations = single_inheritance_violations(docs);
            if (!violations.empty()) return Inconsistent{violations.front()};
        }
        return Consistent{std::move(canon)};
    }
    // The canonical system satisfies every atom and every enabled predicate
    // except possibly antisymmetry, so the failure is an inheritance cycle.
    if (auto cycle = find_cycle(declared_edges(cs))) return Inconsistent{CycleEvidence{*cycle}};
    return Inconsistent{NoWitnessInScope{}};
}

RefineResult check_refinement(std::span<const Diagram> refined, std::span<const Diagram> abstract,
                              const VariationConfig& cfg) {
    CheckResult rc = check_consistency(refined, cfg);
    if (std::holds_alternative<Inconsistent>(rc)) return Refines{};  // empty set refines anything
    System canon = std::move(std::get<Consistent>(rc).witness);
    for (const Atom& a : extract_constraints(abstract))
        if (!holds_atom(canon, a)) return NotRefines{std::move(canon)};
    return Refines{};
}

std::vector<SingleInheritanceViolation> single_inheritance_violations(
    std::span<const Diagram> docs) {
    std::map<Ident, std::set<Ident>> supers;
    for (const Diagram& d : docs)
        for (const Element& e : d.elements)
            if (const auto* c = std::get_if<ClassDecl>(&e)) {
                auto& s = supers[c->name];
                s.insert(c->supers.begin(), c->supers.end());
            }
    std::vector<SingleInheritanceViolation> out;
    for (const auto& [cls, s] : supers)
        if (s.size() >= 2)
            out.push_back(SingleInheritanceViolation{cls, {s.begin(), s.end()}});
    return out;
}

SystemEnumerator::SystemEnumerator(std::span<const Diagram> base, const Scope& scope,
                                   const VariationConfig& cfg)
    : scope_(scope), cfg_(cfg) {
    if (scope_.values_per_type < 1)
        throw std::invalid_argument("values_per_type must be at least 1");

    ConstraintSet cs = extract_constraints(base);
    std::set<Ident> classes;
    std::set<Ident> basics;
    std::set<std::pair<Ident, Ident>> assoc;
    for (const Atom& a : cs) {
        if (const auto* c = std::get_if<ClassExists>(&a)) classes.insert(c->name);
        if (const auto* t = std::get_if<TypeExistsByName>(&a)) basics.insert(t->name);
        if (const auto* f = std::get_if<AttrFact>(&a)) base_attr_facts_.push_back(*f);
        if (const auto* l = std::get_if<AssocFact>(&a)) assoc.insert({l->left, l->right});
    }
    base_classes_.assign(classes.begin(), classes.end());
    for (const Ident& b : basics)
        if (!classes.contains(b)) basic_names_.push_back(b);
    base_assoc_.assign(assoc.begin(), assoc.end());

    // Up-front cap check over every fresh-class level.
    const std::uint64_t cap = scope_.max_candidates;
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= scope_.extra_classes; ++k) {
        std::uint64_t n = base_classes_.size() + k;
        std::uint64_t pair_bits = n * n;
        std::uint64_t type_count = n + basic_names_.size();
        std::uint64_t attr_bits = base_attr_facts_.size();
        std::uint64_t assoc_bits = base_assoc_.size();
        if (scope_.allow_extra_attr_facts) {
            std::set<Ident> attr_names;
            for (const AttrFact& f : base_attr_facts_) attr_names.insert(f.attr);
            attr_bits = n * attr_names.size() * type_count;
            assoc_bits = n * n;
        }
        if (pair_bits > 62 || attr_bits > 62 || assoc_bits > 62)
            throw ScopeTooLarge("scope too large: subset mask exceeds 62 bits");
        long double level = std::pow(2.0L, static_cast<long double>(pair_bits + attr_bits + assoc_bits));
        std::uint64_t car_choices =
            cfg_.require_car_nonempty ? scope_.values_per_type : scope_.values_per_type + 1;
        for (std::uint64_t i = 0; i < type_count; ++i) {
            level *= static_cast<long double>(car_choices);
            if (level > static_cast<long double>(cap)) break;
        }
        if (level > static_cast<long double>(cap) ||
            static_cast<long double>(total) + level > static_cast<long double>(cap))
            throw ScopeTooLarge("scope too large: more than " + std::to_string(cap) +
                                " candidate systems");
        total += static_cast<std::uint64_t>(level);
    }

    setup_level();
}

void SystemEnumerator::setup_level() {
    classes_ = base_classes_;
    for (std::size_t i = 0; i < fresh_count_; ++i)
        classes_.push_back(Ident("_X" + std::to_string(i)));
    std::sort(classes_.begin(), classes_.end());

    std::set<TypeId> types;
    for (const Ident& c : classes_) types.insert(ClassType{c});
    for (const Ident& b : basic_names_)
        if (std::find(classes_.begin(), classes_.end(), b) == classes_.end())
            types.insert(BasicType{b});
    types_.assign(types.begin(), types.end());

    pairs_.clear();
    for (const Ident& a : classes_)
        for (const Ident& b : classes_) pairs_.emplace_back(a, b);

    std::set<Ident> class_set(classes_.begin(), classes_.end());
    std::set<AttrEntry> attr_cands;
    for (const AttrFact& f : base_attr_facts_)
        attr_cands.insert(AttrEntry{f.cls, f.attr, resolve_type(f.type_name, class_set)});
    if (scope_.allow_extra_attr_facts) {
        std::set<Ident> attr_names;
        for (const AttrFact& f : base_attr_facts_) attr_names.insert(f.attr);
        for (const Ident& c : classes_)
            for (const Ident& a : attr_names)
                for (const TypeId& t : types_) attr_cands.insert(AttrEntry{c, a, t});
    }
    attr_cands_.assign(attr_cands.begin(), attr_cands.end());

    std::set<std::pair<Ident, Ident>> assoc_cands(base_assoc_.begin(), base_assoc_.end());
    if (scope_.allow_extra_attr_facts)
        for (const Ident& a : classes_)
            for (const Ident& b : classes_) assoc_cands.insert({a, b});
    assoc_cands_.assign(assoc_cands.begin(), assoc_cands.end());

    sub_mask_ = 0;
    attr_mask_ = 0;
    assoc_mask_ = 0;
    std::size_t lo = cfg_.require_car_nonempty ? 1 : 0;
    car_counts_.assign(types_.size(), lo);
    level_ready_ = true;
}

System SystemEnumerator::build() const {
    System sm;
    sm.classes.insert(classes_.begin(), classes_.end());
    sm.types.insert(types_.begin(), types_.end());
    for (std::size_t i = 0; i < types_.size(); ++i) {
        auto& values = sm.car[types_[i]];
        for (std::size_t s = 0; s < car_counts_[i]; ++s)
            values.insert(ValueToken{static_cast<std::uint32_t>(i * scope_.values_per_type + s)});
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p)
        if (sub_mask_ & (std::uint64_t{1} << p)) sm.sub.insert(pairs_[p]);
    for (std::size_t p = 0; p < attr_cands_.size(); ++p)
        if (attr_mask_ & (std::uint64_t{1} << p)) sm.attrs.insert(attr_cands_[p]);
    for (std::size_t p = 0; p < assoc_cands_.size(); ++p)
        if (assoc_mask_ & (std::uint64_t{1} << p)) sm.assoc_links.insert(assoc_cands_[p]);
    return sm;
}

bool SystemEnumerator::advance() {
    if (assoc_mask_ + 1 < (std::uint64_t{1} << assoc_cands_.size())) {
        ++assoc_mask_;
        return true;
    }
    assoc_mask_ = 0;
    if (attr_mask_ + 1 < (std::uint64_t{1} << attr_cands_.size())) {
        ++attr_mask_;
        return true;
    }
    attr_mask_ = 0;
    std::size_t lo = cfg_.require_car_nonempty ? 1 : 0;
    for (std::size_t i = car_counts_.size(); i-- > 0;) {
        if (car_counts_[i] < scope_.values_per_type) {
            ++car_counts_[i];
            return true;
        }
        car_counts_[i] = lo;
    }
    if (sub_mask_ + 1 < (std::uint64_t{1} << pairs_.size())) {
        ++sub_mask_;
        return true;
    }
    return false;
}

std::optional<System> SystemEnumerator::next() {
    while (fresh_count_ <= scope_.extra_classes) {
        if (!level_ready_) setup_level();
        System sm = build();
        if (!advance()) {
            level_ready_ = false;
            ++fresh_count_;
        }
        return sm;
    }
    return std::nullopt;
}

CheckResult brute_force_consistency(std::span<const Diagram> docs, const VariationConfig& cfg,
                                    const Scope& scope) {
    ConstraintSet cs = extract_constraints(docs);
    SystemEnumerator en(docs, scope, cfg);
    while (auto sm = en.next())
        if (in_sem_atoms(*sm, cs, cfg)) return Consistent{std::move(*sm)};
    if (cfg.require_noncircular)
        if (auto cycle = find_cycle(declared_edges(cs))) return Inconsistent{CycleEvidence{*cycle}};
    return Inconsistent{NoWitnessInScope{}};
}

RefineResult brute_force_refinement(std::span<const Diagram> refined,
                                    std::span<const Diagram> abstract, const VariationConfig& cfg,
                                    const Scope& scope) {
    ConstraintSet cs_refined = extract_constraints(refined);
    ConstraintSet cs_abstract = extract_constraints(abstract);
    SystemEnumerator en(refined, scope, cfg);
    while (auto sm = en.next())
        if (in_sem_atoms(*sm, cs_refined, cfg) && !in_sem_atoms(*sm, cs_abstract, cfg))
            return NotRefines{std::move(*sm)};
    return Refines{};  // exhaustive within scope
}

}  // namespace cdsem
