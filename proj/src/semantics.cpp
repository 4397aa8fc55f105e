#include "cdsem/semantics.hpp"

namespace cdsem {

namespace {

void extract_into(const Diagram& d, ConstraintSet& out) {
    for (const Element& e : d.elements) {
        if (const auto* c = std::get_if<ClassDecl>(&e)) {
            out.insert(ClassExists{c->name});
            for (const Ident& s : c->supers) {
                out.insert(ClassExists{s});
                out.insert(SubEdge{c->name, s});
            }
            for (const Attribute& a : c->attrs) {
                out.insert(AttrFact{c->name, a.name, a.type_name});
                out.insert(TypeExistsByName{a.type_name});
            }
        } else {
            const auto& a = std::get<AssocDecl>(e);
            out.insert(ClassExists{a.left});
            out.insert(ClassExists{a.right});
            out.insert(AssocFact{a.left, a.right});
        }
    }
}

}  // namespace

ConstraintSet extract_constraints(const Diagram& d) {
    ConstraintSet cs;
    extract_into(d, cs);
    return cs;
}

ConstraintSet extract_constraints(std::span<const Diagram> docs) {
    ConstraintSet cs;
    for (const Diagram& d : docs) extract_into(d, cs);
    return cs;
}

bool holds_atom(const System& sm, const Atom& a) {
    struct Eval {
        const System& sm;
        bool operator()(const ClassExists& x) const { return sm.classes.contains(x.name); }
        bool operator()(const TypeExistsByName& x) const {
            return sm.types.contains(TypeId{ClassType{x.name}}) ||
                   sm.types.contains(TypeId{BasicType{x.name}});
        }
        bool operator()(const SubEdge& x) const {
            return sm.sub.contains({x.sub_class, x.super_class});
        }
        bool operator()(const AttrFact& x) const {
            // Any type of that name will do; well-formedness already ties
            // attr entries to declared types.
            return sm.attrs.contains(AttrEntry{x.cls, x.attr, ClassType{x.type_name}}) ||
                   sm.attrs.contains(AttrEntry{x.cls, x.attr, BasicType{x.type_name}});
        }
        bool operator()(const AssocFact& x) const {
            return sm.assoc_links.contains({x.left, x.right});
        }
    };
    return std::visit(Eval{sm}, a);
}

bool satisfies(const System& sm, const ConstraintSet& cs) {
    for (const Atom& a : cs)
        if (!holds_atom(sm, a)) return false;
    return true;
}

bool in_sem(const System& sm, std::span<const Diagram> docs, const VariationConfig& cfg) {
    return in_sem_atoms(sm, extract_constraints(docs), cfg);
}

bool in_sem_atoms(const System& sm, const ConstraintSet& cs, const VariationConfig& cfg) {
    return valid(sm, cfg) && satisfies(sm, cs);
}

}  // namespace cdsem
