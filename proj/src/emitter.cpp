#include "cdsem/emitter.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cdsem {

namespace {

std::string quoted(const std::string& s) { return "''" + s + "''"; }

void render_attribute(std::ostream& os, const Attribute& a) {
    os << "CDAttribute ";
    if (!a.modifier) {
        os << "None";
    } else if (*a.modifier == Modifier::Public) {
        os << "Some CModifierPUBLIC";
    } else {
        os << "Some CModifierPRIVATE";
    }
    os << " " << quoted(a.type_name.str()) << " " << quoted(a.name.str());
}

void render_element(std::ostream& os, const Element& e) {
    if (const auto* c = std::get_if<ClassDecl>(&e)) {
        os << "CDElementCDClass (CDClass " << quoted(c->name.str()) << " [";
        for (std::size_t i = 0; i < c->supers.size(); ++i) {
            if (i > 0) os << ", ";
            os << quoted(c->supers[i].str());
        }
        os << "] [";
        for (std::size_t i = 0; i < c->attrs.size(); ++i) {
            if (i > 0) os << ", ";
            render_attribute(os, c->attrs[i]);
        }
        os << "])";
    } else {
        const auto& a = std::get<AssocDecl>(e);
        os << "CDElementCDAssociation (CDAssociation " << quoted(a.left.str()) << " "
           << quoted(a.right.str()) << ")";
    }
}

std::string render_type(const TypeId& t) {
    if (std::holds_alternative<BasicType>(t)) return "Basic " + type_name(t).str();
    return "Class " + type_name(t).str();
}

void render_section(std::ostream& os, const char* header, std::vector<std::string> lines) {
    os << header << "\n";
    std::sort(lines.begin(), lines.end());
    for (const std::string& l : lines) os << "  " << l << "\n";
}

}  // namespace

std::string emit_term(const Diagram& d, const Ident& const_name) {
    std::ostringstream os;
    os << "constdefs \"" << const_name.str() << " == CDDefinition " << quoted(d.name.str())
       << " [";
    for (std::size_t i = 0; i < d.invariants.size(); ++i) {
        if (i > 0) os << ", ";
        os << quoted(d.invariants[i].text);
    }
    os << "] [";
    for (std::size_t i = 0; i < d.elements.size(); ++i) {
        if (i > 0) os << ", ";
        render_element(os, d.elements[i]);
    }
    os << "]\"\n";
    return os.str();
}

std::string emit_theory(const Diagram& d, const Ident& const_name,
                        const std::string& import_root) {
    std::ostringstream os;
    os << "theory " << d.name.str() << "\n";
    os << "imports \"" << import_root << "/CDSimpAS\"\n";
    os << "begin\n";
    os << emit_term(d, const_name);
    os << "end\n";
    return os.str();
}

std::string emit_system(const System& sm) {
    std::ostringstream os;

    std::vector<std::string> types;
    for (const TypeId& t : sm.types) types.push_back(render_type(t));
    render_section(os, "TYPES", std::move(types));

    std::vector<std::string> classes;
    for (const Ident& c : sm.classes) classes.push_back(c.str());
    render_section(os, "CLASSES", std::move(classes));

    std::vector<std::string> sub;
    for (const auto& [a, b] : sm.sub) sub.push_back(a.str() + " < " + b.str());
    render_section(os, "SUB", std::move(sub));

    std::vector<std::string> car;
    for (const auto& [t, values] : sm.car)
        car.push_back(render_type(t) + " : " + std::to_string(values.size()) +
                      (values.size() == 1 ? " value" : " values"));
    render_section(os, "CAR", std::move(car));

    std::vector<std::string> attrs;
    for (const AttrEntry& e : sm.attrs)
        attrs.push_back(e.cls.str() + "." + e.attr.str() + " : " + render_type(e.type));
    render_section(os, "ATTRS", std::move(attrs));

    std::vector<std::string> assoc;
    for (const auto& [l, r] : sm.assoc_links) assoc.push_back(l.str() + " -- " + r.str());
    render_section(os, "ASSOC", std::move(assoc));

    return os.str();
}

}  // namespace cdsem
