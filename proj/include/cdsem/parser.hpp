// Recursive-descent parser for the class-diagram language.
//
// Grammar (whitespace and `//` line comments are insignificant between
// tokens; invariant text is read raw):
//
//   diagram     = "classdiagram" IDENT "{" ( element | invariant )* "}"
//   element     = class | association
//   class       = "class" IDENT ("extends" IDENT ("," IDENT)*)?
//                 ( "{" attribute* "}" | ";" )
//   attribute   = ("public" | "private")? IDENT IDENT ";"
//   association = "association" IDENT "--" IDENT ";"
//   invariant   = "inv" <raw text up to the first unescaped ';'> ";"
//
// Keywords are reserved and never parse as identifiers. Identifiers with a
// leading underscore are rejected (that prefix is reserved for fresh names
// minted by the enumeration oracle).

#ifndef CDSEM_PARSER_HPP
#define CDSEM_PARSER_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdsem/ast.hpp"

namespace cdsem {

// Syntax error with 1-based position and a description of what was
// expected. The first error encountered aborts the parse.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string expected, std::string found);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

    // Set by parse_files to name the offending file.
    void set_path(const std::string& path);

private:
    int line_;
    int column_;
    std::string expected_;
};

// I/O failure while reading a model file.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& path, const std::string& reason);

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Parse one document. Pure; throws ParseError on the first syntax error.
Diagram parse_diagram(std::string_view source);

// Parse each file in argument order. Duplicate diagram names are allowed.
// Throws IoError or ParseError (carrying the path) on the first failure.
std::vector<Diagram> parse_files(const std::vector<std::filesystem::path>& paths);

}  // namespace cdsem

#endif
