#include "cdsem/system.hpp"

#include <algorithm>
#include <vector>

namespace cdsem {

const Ident& type_name(const TypeId& t) {
    return std::visit([](const auto& x) -> const Ident& { return x.name; }, t);
}

bool AttrEntry::operator==(const AttrEntry& o) const {
    return cls == o.cls && attr == o.attr && type == o.type;
}

bool AttrEntry::operator<(const AttrEntry& o) const {
    if (cls != o.cls) return cls < o.cls;
    if (attr != o.attr) return attr < o.attr;
    return type < o.type;
}

bool well_formed(const System& sm) {
    for (const Ident& c : sm.classes)
        if (!sm.types.contains(TypeId{ClassType{c}})) return false;
    for (const auto& [a, b] : sm.sub)
        if (!sm.classes.contains(a) || !sm.classes.contains(b)) return false;
    for (const AttrEntry& e : sm.attrs)
        if (!sm.classes.contains(e.cls) || !sm.types.contains(e.type)) return false;
    if (sm.car.size() != sm.types.size()) return false;
    for (const auto& [t, values] : sm.car) {
        (void)values;
        if (!sm.types.contains(t)) return false;
    }
    for (const auto& [l, r] : sm.assoc_links)
        if (!sm.classes.contains(l) || !sm.classes.contains(r)) return false;
    return true;
}

bool p_car_type1(const System& sm) {
    for (const TypeId& t : sm.types) {
        auto it = sm.car.find(t);
        if (it == sm.car.end() || it->second.empty()) return false;
    }
    return true;
}

bool p_sub_trans(const System& sm) {
    for (const auto& [a, b] : sm.sub)
        for (const auto& [b2, c] : sm.sub)
            if (b == b2 && !sm.sub.contains({a, c})) return false;
    return true;
}

bool p_sub_noncirc(const System& sm) {
    for (const auto& [a, b] : sm.sub)
        if (a != b && sm.sub.contains({b, a})) return false;
    return true;
}

bool valid(const System& sm, const VariationConfig& cfg) {
    if (!well_formed(sm)) return false;
    if (cfg.require_car_nonempty && !p_car_type1(sm)) return false;
    if (cfg.require_transitive && !p_sub_trans(sm)) return false;
    if (cfg.require_noncircular && !p_sub_noncirc(sm)) return false;
    return true;
}

Relation transitive_closure(const Relation& rel) {
    std::vector<Ident> nodes;
    for (const auto& [a, b] : rel) {
        nodes.push_back(a);
        nodes.push_back(b);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    Relation closure = rel;
    // Warshall over the mentioned nodes.
    for (const Ident& k : nodes)
        for (const Ident& i : nodes) {
            if (!closure.contains({i, k})) continue;
            for (const Ident& j : nodes)
                if (closure.contains({k, j})) closure.insert({i, j});
        }
    return closure;
}

}  // namespace cdsem
