// cdsem command line: parse class-diagram files, check consistency of a
// document set, check refinement between two sets, emit the Isabelle-style
// term of a document.
//
// Exit codes: 0 positive verdict / success, 1 negative verdict, 2 input
// (parse or I/O) error, 3 enumeration scope refused.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdsem/checker.hpp"
#include "cdsem/emitter.hpp"
#include "cdsem/parser.hpp"
#include "cdsem/semantics.hpp"
#include "cdsem/system.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitScopeRefused = 3;

std::vector<std::filesystem::path> to_paths(const std::vector<std::string>& files) {
    return {files.begin(), files.end()};
}

void print_diagram(const cdsem::Diagram& d) {
    std::cout << "diagram " << d.name.str() << "\n";
    for (const auto& inv : d.invariants) std::cout << "inv " << inv.text << "\n";
    for (const auto& e : d.elements) {
        if (const auto* c = std::get_if<cdsem::ClassDecl>(&e)) {
            std::cout << "class " << c->name.str() << " extends [";
            for (std::size_t i = 0; i < c->supers.size(); ++i) {
                if (i > 0) std::cout << ", ";
                std::cout << c->supers[i].str();
            }
            std::cout << "]\n";
            for (const auto& a : c->attrs) {
                std::cout << "  attr ";
                if (a.modifier == cdsem::Modifier::Public) std::cout << "public ";
                if (a.modifier == cdsem::Modifier::Private) std::cout << "private ";
                std::cout << a.type_name.str() << " " << a.name.str() << "\n";
            }
        } else {
            const auto& a = std::get<cdsem::AssocDecl>(e);
            std::cout << "association " << a.left.str() << " -- " << a.right.str() << "\n";
        }
    }
}

void print_evidence(const cdsem::Evidence& ev) {
    if (const auto* cyc = std::get_if<cdsem::CycleEvidence>(&ev)) {
        std::cout << "CYCLE";
        for (std::size_t i = 0; i < cyc->cycle.size(); ++i)
            std::cout << (i == 0 ? " " : " -> ") << cyc->cycle[i].str();
        std::cout << "\n";
    } else if (const auto* si = std::get_if<cdsem::SingleInheritanceViolation>(&ev)) {
        std::cout << "SINGLE-INHERITANCE " << si->cls.str() << " extends ";
        for (std::size_t i = 0; i < si->supers.size(); ++i) {
            if (i > 0) std::cout << ", ";
            std::cout << si->supers[i].str();
        }
        std::cout << "\n";
    } else {
        std::cout << "NO-WITNESS within scope\n";
    }
}

struct CheckFlags {
    bool noncircular = false;
    bool no_transitive = false;
    bool no_car = false;
    bool single_inheritance = false;
    bool oracle = false;
    std::size_t scope = 0;

    cdsem::VariationConfig config() const {
        cdsem::VariationConfig cfg;
        cfg.require_noncircular = noncircular;
        cfg.require_transitive = !no_transitive;
        cfg.require_car_nonempty = !no_car;
        cfg.single_inheritance = single_inheritance;
        return cfg;
    }

    cdsem::Scope oracle_scope() const {
        cdsem::Scope s;
        s.extra_classes = scope;
        return s;
    }
};

void add_check_flags(CLI::App* cmd, CheckFlags& f) {
    cmd->add_flag("--noncircular", f.noncircular, "require an acyclic inheritance relation");
    cmd->add_flag("--no-transitive", f.no_transitive, "do not require transitivity of sub");
    cmd->add_flag("--no-car", f.no_car, "do not require non-empty carrier sets");
    cmd->add_flag("--single-inheritance", f.single_inheritance,
                  "reject classes with multiple declared superclasses");
    cmd->add_flag("--oracle", f.oracle, "cross-check with the brute-force enumeration oracle");
    cmd->add_option("--scope", f.scope, "extra fresh classes for the oracle enumeration");
}

int run_check(const std::vector<std::string>& files, const CheckFlags& flags) {
    auto docs = cdsem::parse_files(to_paths(files));
    auto cfg = flags.config();
    cdsem::CheckResult result = cdsem::check_consistency(docs, cfg);
    bool consistent = std::holds_alternative<cdsem::Consistent>(result);
    std::cout << "RESULT consistent=" << (consistent ? "true" : "false") << "\n";
    if (flags.oracle) {
        auto oracle = cdsem::brute_force_consistency(docs, cfg, flags.oracle_scope());
        bool oracle_consistent = std::holds_alternative<cdsem::Consistent>(oracle);
        std::cout << "ORACLE consistent=" << (oracle_consistent ? "true" : "false")
                  << " agreement=" << (oracle_consistent == consistent ? "true" : "false")
                  << "\n";
    }
    if (consistent) {
        std::cout << cdsem::emit_system(std::get<cdsem::Consistent>(result).witness);
        return kExitPositive;
    }
    print_evidence(std::get<cdsem::Inconsistent>(result).evidence);
    return kExitNegative;
}

int run_refine(const std::vector<std::string>& refined_files,
               const std::vector<std::string>& abstract_files, const CheckFlags& flags) {
    auto refined = cdsem::parse_files(to_paths(refined_files));
    auto abstract = cdsem::parse_files(to_paths(abstract_files));
    auto cfg = flags.config();
    cdsem::RefineResult result = cdsem::check_refinement(refined, abstract, cfg);
    bool refines = std::holds_alternative<cdsem::Refines>(result);
    std::cout << "RESULT refines=" << (refines ? "true" : "false") << "\n";
    if (flags.oracle) {
        auto oracle =
            cdsem::brute_force_refinement(refined, abstract, cfg, flags.oracle_scope());
        bool oracle_refines = std::holds_alternative<cdsem::Refines>(oracle);
        std::cout << "ORACLE refines=" << (oracle_refines ? "true" : "false")
                  << " agreement=" << (oracle_refines == refines ? "true" : "false") << "\n";
    }
    if (refines) return kExitPositive;
    std::cout << cdsem::emit_system(std::get<cdsem::NotRefines>(result).counterexample);
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"class-diagram semantics workbench"};
    app.require_subcommand(1);

    std::vector<std::string> parse_files_arg;
    CLI::App* cmd_parse = app.add_subcommand("parse", "parse a file and dump its syntax tree");
    cmd_parse->add_option("file", parse_files_arg, "model file")->required()->expected(1);

    std::vector<std::string> check_files;
    CheckFlags check_flags;
    CLI::App* cmd_check = app.add_subcommand("check", "decide consistency of a document set");
    cmd_check->add_option("files", check_files, "model files")->required()->expected(-1);
    add_check_flags(cmd_check, check_flags);

    std::vector<std::string> refine_files;
    std::vector<std::string> refine_of;
    CheckFlags refine_flags;
    CLI::App* cmd_refine =
        app.add_subcommand("refine", "decide whether one document set refines another");
    cmd_refine->add_option("refined", refine_files, "refined model files")
        ->required()
        ->expected(-1);
    cmd_refine->add_option("--of", refine_of, "abstract model files")->required();
    add_check_flags(cmd_refine, refine_flags);

    std::string emit_file;
    std::string emit_name;
    std::string emit_imports = "$UMLP/abstractSyntax/gen";
    CLI::App* cmd_emit = app.add_subcommand("emit", "emit the theory term of a document");
    cmd_emit->add_option("file", emit_file, "model file")->required();
    cmd_emit->add_option("--name", emit_name, "constant name")->required();
    cmd_emit->add_option("--imports", emit_imports, "import root for the theory header");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (cmd_parse->parsed()) {
            auto docs = cdsem::parse_files(to_paths(parse_files_arg));
            print_diagram(docs.front());
            return kExitPositive;
        }
        if (cmd_check->parsed()) return run_check(check_files, check_flags);
        if (cmd_refine->parsed()) return run_refine(refine_files, refine_of, refine_flags);
        if (cmd_emit->parsed()) {
            if (!cdsem::is_valid_ident(emit_name) || emit_name[0] == '_') {
                std::cerr << "error: invalid constant name '" << emit_name << "'\n";
                return kExitInputError;
            }
            auto docs = cdsem::parse_files({emit_file});
            std::cout << cdsem::emit_theory(docs.front(), cdsem::Ident(emit_name), emit_imports);
            return kExitPositive;
        }
    } catch (const cdsem::ScopeTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScopeRefused;
    } catch (const cdsem::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cdsem::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitPositive;
}
