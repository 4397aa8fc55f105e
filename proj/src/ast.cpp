#include "cdsem/ast.hpp"

#include <cctype>
#include <sstream>

namespace cdsem {

bool is_valid_ident(const std::string& text) {
    if (text.empty()) return false;
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (!std::isalpha(first) && first != '_') return false;
    for (std::size_t i = 1; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (!std::isalnum(c) && c != '_') return false;
    }
    return true;
}

Ident::Ident(std::string text) : text_(std::move(text)) {
    if (!is_valid_ident(text_))
        throw std::invalid_argument("not a valid identifier: '" + text_ + "'");
}

namespace {

void print_attribute(std::ostream& os, const Attribute& a) {
    os << "    ";
    if (a.modifier == Modifier::Public) os << "public ";
    if (a.modifier == Modifier::Private) os << "private ";
    os << a.type_name.str() << " " << a.name.str() << ";\n";
}

void print_class(std::ostream& os, const ClassDecl& c) {
    os << "  class " << c.name.str();
    if (!c.supers.empty()) {
        os << " extends ";
        for (std::size_t i = 0; i < c.supers.size(); ++i) {
            if (i > 0) os << ", ";
            os << c.supers[i].str();
        }
    }
    if (c.attrs.empty()) {
        os << ";\n";
        return;
    }
    os << " {\n";
    for (const Attribute& a : c.attrs) print_attribute(os, a);
    os << "  }\n";
}

}  // namespace

std::string to_source(const Diagram& d) {
    std::ostringstream os;
    os << "classdiagram " << d.name.str() << " {\n";
    // A space always precedes the `;` so that invariant text ending in a
    // backslash cannot swallow the terminator on re-parse.
    for (const RawInvariant& inv : d.invariants)
        os << "  inv " << inv.text << " ;\n";
    for (const Element& e : d.elements) {
        if (const auto* c = std::get_if<ClassDecl>(&e)) {
            print_class(os, *c);
        } else {
            const auto& a = std::get<AssocDecl>(e);
            os << "  association " << a.left.str() << " -- " << a.right.str() << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace cdsem
