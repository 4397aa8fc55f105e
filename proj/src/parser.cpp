#include "cdsem/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cdsem {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error("<input>:" + std::to_string(line) + ":" + std::to_string(column) +
                         ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

void ParseError::set_path(const std::string& path) {
    std::string msg = what();
    auto pos = msg.find("<input>");
    if (pos != std::string::npos) msg.replace(pos, 7, path);
    static_cast<std::runtime_error&>(*this) = std::runtime_error(msg);
}

IoError::IoError(const std::string& path, const std::string& reason)
    : std::runtime_error(path + ": " + reason), path_(path) {}

namespace {

enum class Tok {
    KwClassdiagram,
    KwClass,
    KwExtends,
    KwAssociation,
    KwPublic,
    KwPrivate,
    KwInv,
    Identifier,
    LBrace,
    RBrace,
    Semicolon,
    Comma,
    DashDash,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::KwClassdiagram: return "'classdiagram'";
        case Tok::KwClass: return "'class'";
        case Tok::KwExtends: return "'extends'";
        case Tok::KwAssociation: return "'association'";
        case Tok::KwPublic: return "'public'";
        case Tok::KwPrivate: return "'private'";
        case Tok::KwInv: return "'inv'";
        case Tok::Identifier: return "identifier";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Semicolon: return "';'";
        case Tok::Comma: return "','";
        case Tok::DashDash: return "'--'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::string show(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_trivia();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        char c = src_[pos_];
        if (c == '{') return single(Tok::LBrace, line, col);
        if (c == '}') return single(Tok::RBrace, line, col);
        if (c == ';') return single(Tok::Semicolon, line, col);
        if (c == ',') return single(Tok::Comma, line, col);
        if (c == '-') {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                advance();
                advance();
                return {Tok::DashDash, "--", line, col};
            }
            throw ParseError(line, col, "'--'", "'-'");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < src_.size()) {
                char w = src_[pos_];
                if (!std::isalnum(static_cast<unsigned char>(w)) && w != '_') break;
                word.push_back(w);
                advance();
            }
            return {keyword_or_ident(word), word, line, col};
        }
        throw ParseError(line, col, "a token", std::string("'") + c + "'");
    }

    // Raw mode, used after 'inv': everything up to the first unescaped ';'
    // (the ';' is consumed). Comments do not apply inside invariant text.
    std::string raw_until_semicolon(int start_line, int start_col) {
        std::string text;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                advance();
                return trim(text);
            }
            if (c == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] == ';') {
                text += "\\;";
                advance();
                advance();
                continue;
            }
            text.push_back(c);
            advance();
        }
        throw ParseError(start_line, start_col, "';' terminating the invariant", "end of input");
    }

private:
    Token single(Tok k, int line, int col) {
        std::string t(1, src_[pos_]);
        advance();
        return {k, t, line, col};
    }

    static Tok keyword_or_ident(const std::string& w) {
        if (w == "classdiagram") return Tok::KwClassdiagram;
        if (w == "class") return Tok::KwClass;
        if (w == "extends") return Tok::KwExtends;
        if (w == "association") return Tok::KwAssociation;
        if (w == "public") return Tok::KwPublic;
        if (w == "private") return Tok::KwPrivate;
        if (w == "inv") return Tok::KwInv;
        return Tok::Identifier;
    }

    static std::string trim(const std::string& s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return s.substr(b, e - b);
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { shift(); }

    Diagram parse() {
        expect(Tok::KwClassdiagram);
        Ident name = ident();
        expect(Tok::LBrace);
        std::vector<RawInvariant> invariants;
        std::vector<Element> elements;
        while (cur_.kind != Tok::RBrace) {
            switch (cur_.kind) {
                case Tok::KwClass:
                    elements.push_back(parse_class());
                    break;
                case Tok::KwAssociation:
                    elements.push_back(parse_association());
                    break;
                case Tok::KwInv:
                    invariants.push_back(parse_invariant());
                    break;
                default:
                    fail("'class', 'association', 'inv', or '}'");
            }
        }
        shift();  // '}'
        if (cur_.kind != Tok::End) fail("end of input");
        return Diagram{std::move(name), std::move(invariants), std::move(elements)};
    }

private:
    Element parse_class() {
        shift();  // 'class'
        Ident name = ident();
        std::vector<Ident> supers;
        if (cur_.kind == Tok::KwExtends) {
            shift();
            supers.push_back(ident());
            while (cur_.kind == Tok::Comma) {
                shift();
                supers.push_back(ident());
            }
        }
        std::vector<Attribute> attrs;
        if (cur_.kind == Tok::Semicolon) {
            shift();
        } else if (cur_.kind == Tok::LBrace) {
            shift();
            while (cur_.kind != Tok::RBrace) attrs.push_back(parse_attribute());
            shift();
        } else {
            fail("'{' or ';'");
        }
        return ClassDecl{std::move(name), std::move(supers), std::move(attrs)};
    }

    Attribute parse_attribute() {
        std::optional<Modifier> mod;
        if (cur_.kind == Tok::KwPublic) {
            mod = Modifier::Public;
            shift();
        } else if (cur_.kind == Tok::KwPrivate) {
            mod = Modifier::Private;
            shift();
        }
        Ident type = ident();
        Ident name = ident();
        expect(Tok::Semicolon);
        return Attribute{mod, std::move(type), std::move(name)};
    }

    Element parse_association() {
        shift();  // 'association'
        Ident left = ident();
        expect(Tok::DashDash);
        Ident right = ident();
        expect(Tok::Semicolon);
        return AssocDecl{std::move(left), std::move(right)};
    }

    RawInvariant parse_invariant() {
        int line = cur_.line, col = cur_.column;
        // Raw read starts right after the 'inv' keyword; we must not have
        // pre-lexed past it, so 'inv' handling never calls shift() first.
        std::string text = lex_.raw_until_semicolon(line, col);
        shift();
        return RawInvariant{std::move(text)};
    }

    Ident ident() {
        if (cur_.kind != Tok::Identifier) fail("identifier");
        if (cur_.text[0] == '_')
            throw ParseError(cur_.line, cur_.column,
                             "identifier without leading '_' (reserved prefix)", show(cur_));
        Ident id{cur_.text};
        shift();
        return id;
    }

    void expect(Tok k) {
        if (cur_.kind != k) fail(describe(k));
        shift();
    }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(cur_.line, cur_.column, expected, show(cur_));
    }

    void shift() { cur_ = lex_.next(); }

    Lexer lex_;
    Token cur_{Tok::End, "", 1, 1};
};

}  // namespace

Diagram parse_diagram(std::string_view source) { return Parser(source).parse(); }

std::vector<Diagram> parse_files(const std::vector<std::filesystem::path>& paths) {
    std::vector<Diagram> out;
    out.reserve(paths.size());
    for (const auto& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw IoError(p.string(), "cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw IoError(p.string(), "read failure");
        try {
            out.push_back(parse_diagram(buf.str()));
        } catch (ParseError& e) {
            e.set_path(p.string());
            throw;
        }
    }
    return out;
}

}  // namespace cdsem
