#include "lambda/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "lambda/alpha.hpp"
#include "lambda/bvc.hpp"
#include "lambda/nameless.hpp"
#include "lambda/parser.hpp"
#include "lambda/printer.hpp"
#include "lambda/reduce.hpp"
#include "lambda/subst.hpp"

namespace lambda {

namespace {

// Comma-separated variable names; written leftmost-first on the command
// line, which is already snoc order (outermost at index 0).
Context parse_name_list(const std::string& csv) {
    Context out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const std::string piece =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        out.push_back(parse_var_name(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join_names(std::span<const VarName> names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i != 0) out += ' ';
        out += names[i].text;
    }
    return out;
}

std::size_t enum_buffer_size() {
    std::size_t cap = std::size_t{1} << 16;
    if (const char* env = std::getenv("LAMBDA_ENUM_BUFFER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0)
            cap = static_cast<std::size_t>(v);
    }
    return cap;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"untyped lambda calculus toolkit"};
    app.name("lambda");
    app.require_subcommand(1);

    std::string term_text;
    std::string term2_text;
    std::string var_text;
    std::string left_csv;
    std::string right_csv;
    std::string avoid_csv;
    std::string mode_text = "ca";
    std::string names_csv;
    std::uint64_t max_steps = 1000;
    std::uint64_t max_nodes = 0;

    CLI::App* cmd_alpha =
        app.add_subcommand("alpha", "alpha-equivalence of two terms (empty contexts)");
    cmd_alpha->add_option("term1", term_text)->required();
    cmd_alpha->add_option("term2", term2_text)->required();

    CLI::App* cmd_alpha_ctx = app.add_subcommand(
        "alpha-ctx", "alpha-equivalence under explicit binder contexts");
    cmd_alpha_ctx->add_option("--left", left_csv,
                              "left context, comma-separated, leftmost = outermost");
    cmd_alpha_ctx->add_option("--right", right_csv,
                              "right context, comma-separated, leftmost = outermost");
    cmd_alpha_ctx->add_option("term1", term_text)->required();
    cmd_alpha_ctx->add_option("term2", term2_text)->required();

    CLI::App* cmd_fv = app.add_subcommand("fv", "free variables, in order, duplicates kept");
    cmd_fv->add_option("term", term_text)->required();

    CLI::App* cmd_vars = app.add_subcommand("vars", "all variable occurrences");
    cmd_vars->add_option("term", term_text)->required();

    CLI::App* cmd_subst =
        app.add_subcommand("subst", "capture-avoiding substitution term[var -> repl]");
    cmd_subst->add_option("term", term_text)->required();
    cmd_subst->add_option("var", var_text)->required();
    cmd_subst->add_option("repl", term2_text)->required();

    CLI::App* cmd_ssubst =
        app.add_subcommand("ssubst", "simple (possibly capturing) substitution");
    cmd_ssubst->add_option("term", term_text)->required();
    cmd_ssubst->add_option("var", var_text)->required();
    cmd_ssubst->add_option("repl", term2_text)->required();

    CLI::App* cmd_refresh =
        app.add_subcommand("refresh", "rename binders away from the avoid set");
    cmd_refresh->add_option("term", term_text)->required();
    cmd_refresh->add_option("--avoid", avoid_csv, "comma-separated names");

    CLI::App* cmd_check_bvc = app.add_subcommand(
        "check-bvc", "whether no binder is drawn from the avoid set");
    cmd_check_bvc->add_option("term", term_text)->required();
    cmd_check_bvc->add_option("--avoid", avoid_csv, "comma-separated names");

    CLI::App* cmd_reduce =
        app.add_subcommand("reduce", "normal-order beta reduction");
    cmd_reduce->add_option("term", term_text)->required();
    cmd_reduce->add_option("--steps", max_steps, "step budget")
        ->capture_default_str();
    cmd_reduce->add_option("--mode", mode_text, "ca | bvc")
        ->check(CLI::IsMember({"ca", "bvc"}))
        ->capture_default_str();

    CLI::App* cmd_nameless =
        app.add_subcommand("nameless", "de Bruijn rendering of a term");
    cmd_nameless->add_option("term", term_text)->required();

    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "all terms up to a node count, one per line");
    cmd_enumerate->add_option("--nodes", max_nodes, "maximum AST node count")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_enumerate->add_option("--names", names_csv, "comma-separated alphabet")
        ->required();

    std::vector<std::string> reversed(args.begin(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        const auto chosen = app.get_subcommands();
        out << (chosen.empty() ? app.help() : chosen.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cmd_alpha->parsed()) {
            const bool eq = alpha_eq(parse_term(term_text), parse_term(term2_text));
            out << (eq ? "true" : "false") << '\n';
            return eq ? 0 : 1;
        }
        if (cmd_alpha_ctx->parsed()) {
            const bool eq =
                alpha_eq_ctx(parse_name_list(left_csv), parse_name_list(right_csv),
                             parse_term(term_text), parse_term(term2_text));
            out << (eq ? "true" : "false") << '\n';
            return eq ? 0 : 1;
        }
        if (cmd_fv->parsed()) {
            out << join_names(free_vars(*parse_term(term_text))) << '\n';
            return 0;
        }
        if (cmd_vars->parsed()) {
            out << join_names(all_vars(*parse_term(term_text))) << '\n';
            return 0;
        }
        if (cmd_subst->parsed()) {
            const TermPtr r = subst(parse_term(term_text), parse_var_name(var_text),
                                    parse_term(term2_text));
            out << print_term(r) << '\n';
            return 0;
        }
        if (cmd_ssubst->parsed()) {
            const TermPtr r = simple_subst(parse_term(term_text),
                                           parse_var_name(var_text),
                                           parse_term(term2_text));
            out << print_term(r) << '\n';
            return 0;
        }
        if (cmd_refresh->parsed()) {
            const TermPtr r =
                bvc_refresh(parse_term(term_text), parse_name_list(avoid_csv));
            out << print_term(r) << '\n';
            return 0;
        }
        if (cmd_check_bvc->parsed()) {
            const bool ok =
                check_bvc(parse_name_list(avoid_csv), *parse_term(term_text));
            out << (ok ? "true" : "false") << '\n';
            return ok ? 0 : 1;
        }
        if (cmd_reduce->parsed()) {
            ReductionConfig cfg;
            cfg.max_steps = max_steps;
            cfg.subst_mode = mode_text == "bvc" ? SubstMode::BvcRefreshThenSimple
                                                : SubstMode::CaptureAvoiding;
            const NormalizeResult r = normalize(parse_term(term_text), cfg);
            out << print_term(r.term) << '\n'
                << r.steps << (r.normal ? " normal" : " budget") << '\n';
            return 0;
        }
        if (cmd_nameless->parsed()) {
            out << print_nameless(to_nameless({}, *parse_term(term_text))) << '\n';
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            const Context names = parse_name_list(names_csv);
            if (names.empty()) {
                err << "usage error: --names must list at least one name\n";
                return 2;
            }
            const std::size_t cap = enum_buffer_size();
            std::string buffer;
            for_each_term(max_nodes, names, [&](const TermPtr& t) {
                buffer += print_term(t);
                buffer += '\n';
                if (buffer.size() >= cap) {
                    out << buffer;
                    buffer.clear();
                }
            });
            out << buffer;
            return 0;
        }
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }
    err << "usage error: no command\n";
    return 2;
}

}  // namespace lambda
