#include "flagcalc/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "flagcalc/cohomology.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/ktheory.hpp"
#include "flagcalc/localization.hpp"
#include "flagcalc/matrix_io.hpp"
#include "flagcalc/motivic.hpp"
#include "flagcalc/textio.hpp"
#include "flagcalc/verify.hpp"

namespace flagcalc {

namespace {

struct Options {
    std::string type = "A";
    int rank = 2;
    int gen = 1;
    std::string basis;
    std::string matrix_basis = "schubert";
    std::string format = "ascii";
    bool no_check = false;
    std::string expr;
    std::string suite = "all";
    std::size_t word_limit = VerifyOptions{}.word_limit;
};

class UsageError : public Error {
   public:
    using Error::Error;
};

/// FLAGCALC_MAX_RANK lowers the largest accepted rank.
void check_rank_cap(int rank) {
    const char* cap = std::getenv("FLAGCALC_MAX_RANK");
    if (!cap || !*cap) return;
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError(std::string("FLAGCALC_MAX_RANK is not a positive integer: ") + cap);
    if (rank > v) throw UsageError("rank " + std::to_string(rank) + " exceeds FLAGCALC_MAX_RANK=" + cap);
}

WeylGroup build_group(const Options& o) {
    if (o.type.size() != 1) throw UsageError("--type takes a single letter");
    check_rank_cap(o.rank);
    return WeylGroup(RootSystem::build(static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0]))), o.rank));
}

std::optional<Basis> k_basis(const std::string& name) {
    if (name == "schubert") return Basis::Schubert;
    if (name == "ideal") return Basis::Ideal;
    if (name == "fixed") return Basis::Fixed;
    return std::nullopt;
}

bool is_cohomology_expr(std::string_view text) {
    for (std::size_t k = 0; k + 1 < text.size(); ++k)
        if (text[k] == 'X' && text[k + 1] == '[') return true;
    return false;
}

int cmd_matrix(const Options& o, std::ostream& out) {
    const WeylGroup g = build_group(o);
    g.generator(o.gen);
    const Format f = *parse_format(o.format);
    if (o.matrix_basis == "coh") {
        const auto m = si_coh_matrix(g, o.gen);
        if (!o.no_check && !is_identity(multiply(m, m), SymPolynomial::constant(1)))
            throw OracleInconsistency("cohomology matrix of s" + std::to_string(o.gen) + " fails the involution check");
        out << render_matrix(g, {o.gen, "coh", "X"}, m, f);
        return kExitOk;
    }
    const Basis b = *k_basis(o.matrix_basis);
    const auto m = si_k_matrix_in(g, o.gen, b);
    if (!o.no_check && !is_identity(multiply(m, m), LaurentPolynomial::constant(g.rank(), 1)))
        throw OracleInconsistency("matrix of s" + std::to_string(o.gen) + " in basis " + o.matrix_basis +
                                  " fails the involution check");
    out << render_matrix(g, {o.gen, o.matrix_basis, basis_symbol(b)}, m, f);
    return kExitOk;
}

int cmd_act(const Options& o, std::ostream& out) {
    const WeylGroup g = build_group(o);
    g.generator(o.gen);
    const RootSystem& rs = g.root_system();
    if (is_cohomology_expr(o.expr)) {
        if (!o.basis.empty() && o.basis != "coh") throw UsageError("cohomology classes only print in basis coh");
        out << format_cohclass(rs, si_coh(g, o.gen, parse_cohclass(g, o.expr))) << '\n';
        return kExitOk;
    }
    const ParsedKClass parsed = parse_kclass(g, o.expr);
    Basis target = parsed.basis;
    if (!o.basis.empty()) {
        if (o.basis == "coh") throw UsageError("K-theory classes cannot print in basis coh");
        target = *k_basis(o.basis);
    }
    KClass u = parsed.coords;
    if (parsed.basis != Basis::Schubert) u = BasisChange::of(g, parsed.basis).to_schubert(u);
    KClass image = si_k(g, o.gen, u);
    if (target != Basis::Schubert) image = BasisChange::of(g, target).express(image);
    out << format_kclass(rs, image, target) << '\n';
    return kExitOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    const WeylGroup g = build_group(o);
    if (is_cohomology_expr(o.expr)) throw UsageError("restrict takes K-theory classes (O, I or FP)");
    const ParsedKClass parsed = parse_kclass(g, o.expr);
    KClass u = parsed.coords;
    if (parsed.basis != Basis::Schubert) u = BasisChange::of(g, parsed.basis).to_schubert(u);
    out << format_restriction(g, RestrictionTable(g).restrict(u));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const WeylGroup g = build_group(o);
    VerifyOptions opt;
    opt.word_limit = o.word_limit;
    const auto results = run_suite(g, *parse_suite(o.suite), opt);
    out << format_results(results);
    const bool ok = all_passed(results);
    out << (ok ? "all checks passed" : "verification failed") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Weyl group actions on equivariant K-theory and cohomology of flag varieties", "flagcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--type", o.type, "Cartan type letter (A, B, C, D, G)")->capture_default_str();
    app.add_option("--rank", o.rank, "rank")->capture_default_str()->check(CLI::Range(1, 8));

    const std::vector<std::string> bases{"schubert", "ideal", "fixed", "coh"};

    auto* matrix = app.add_subcommand("matrix", "matrix of s_i in a basis; column j is the image of basis element j");
    matrix->add_option("--gen", o.gen, "simple reflection index")->required();
    matrix->add_option("--basis", o.matrix_basis, "schubert, ideal, fixed or coh")
        ->capture_default_str()
        ->check(CLI::IsMember(bases));
    matrix->add_option("--format", o.format, "ascii, csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"ascii", "csv", "json"}));
    matrix->add_flag("--no-check", o.no_check, "skip the involution check before printing");

    auto* act = app.add_subcommand("act", "apply s_i to a class expression");
    act->add_option("expr", o.expr, "class, e.g. \"e[1,0]*O[] + O[1]\"")->required();
    act->add_option("--gen", o.gen, "simple reflection index")->required();
    act->add_option("--basis", o.basis, "output basis (default: the input's)")->check(CLI::IsMember(bases));

    auto* restrict = app.add_subcommand("restrict", "restrictions of a K-theory class to the fixed points");
    restrict->add_option("expr", o.expr, "class expression")->required();

    auto* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--suite", o.suite, "all, involution, braid, chevalley, oracle, theorem41, sln or motivic")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "involution", "braid", "chevalley", "oracle", "theorem41", "sln", "motivic"}));
    verify->add_option("--word-limit", o.word_limit, "reduced words tried per element")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (matrix->parsed()) return cmd_matrix(o, out);
        if (act->parsed()) return cmd_act(o, out);
        if (restrict->parsed()) return cmd_restrict(o, out);
        return cmd_verify(o, out);
    } catch (const ParseError& e) {
        err << render_parse_error(o.expr, e) << '\n';
        return kExitUsage;
    } catch (const NotInSpan& e) {
        err << "not in span: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const OracleInconsistency& e) {
        err << "inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace flagcalc
