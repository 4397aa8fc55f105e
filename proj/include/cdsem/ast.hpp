// Abstract syntax of the class-diagram language.
//
// A Diagram is the parse result of one `classdiagram` document: its name,
// the opaque invariant strings, and the class/association elements in
// source order. All values are immutable after construction and compare
// structurally.

#ifndef CDSEM_AST_HPP
#define CDSEM_AST_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cdsem {

// Identifier: [A-Za-z_][A-Za-z0-9_]*. The leading underscore is admitted by
// the type (the enumeration oracle mints fresh `_X<n>` names) but rejected
// by the parser for user-written models.
class Ident {
public:
    explicit Ident(std::string text);

    const std::string& str() const { return text_; }

    auto operator<=>(const Ident&) const = default;

private:
    std::string text_;
};

bool is_valid_ident(const std::string& text);

enum class Modifier { Public, Private };

struct Attribute {
    std::optional<Modifier> modifier;
    Ident type_name;
    Ident name;

    bool operator==(const Attribute&) const = default;
};

struct ClassDecl {
    Ident name;
    std::vector<Ident> supers;   // may be empty; duplicates permitted
    std::vector<Attribute> attrs;

    bool operator==(const ClassDecl&) const = default;
};

struct AssocDecl {
    Ident left;
    Ident right;

    bool operator==(const AssocDecl&) const = default;
};

using Element = std::variant<ClassDecl, AssocDecl>;

// Invariant text is opaque: everything between `inv` and the terminating
// unescaped `;`, trimmed of surrounding whitespace.
struct RawInvariant {
    std::string text;

    bool operator==(const RawInvariant&) const = default;
};

struct Diagram {
    Ident name;
    std::vector<RawInvariant> invariants;
    std::vector<Element> elements;  // source order

    bool operator==(const Diagram&) const = default;
};

// Canonical surface syntax. Re-parsing the result yields an equal Diagram;
// invariants print first, then elements in order, a class without
// attributes prints in its `;` form.
std::string to_source(const Diagram& d);

}  // namespace cdsem

#endif
