// cli.cpp

#include "f2x/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"
#include "f2x/factorize.hpp"
#include "f2x/function_expr.hpp"
#include "f2x/identities.hpp"
#include "f2x/perfect.hpp"
#include "f2x/poly.hpp"

namespace f2x {

namespace {

constexpr unsigned kMaxVerifyPrimeDeg = 8;
constexpr unsigned kMaxVerifyExp = 16;
constexpr unsigned kMaxMersenneDeg = 32;
// verify --corollaries runs on S^2 for every S of degree <= this.
constexpr unsigned kCorollaryRootDeg = 6;

unsigned default_jobs() {
    if (const char* env = std::getenv("F2X_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

Poly read_poly(const std::string& text, std::ostream& err) {
    std::vector<std::string> notes;
    Poly p = parse_poly(text, &notes);
    for (const auto& n : notes) err << "note: " << n << "\n";
    return p;
}

Poly read_nonzero(const std::string& text, std::ostream& err) {
    Poly p = read_poly(text, err);
    if (p.is_zero()) throw DomainError("the zero polynomial has no factorization or function values");
    return p;
}

int cmd_factor(const std::string& text, std::ostream& out, std::ostream& err) {
    out << to_string(factor(read_nonzero(text, err))) << "\n";
    return kExitOk;
}

int cmd_eval(const std::string& expr_text, const std::string& poly_text, bool oracle, std::ostream& out,
             std::ostream& err) {
    const FunctionExpr e = parse_function_expr(expr_text);
    const Poly a = read_nonzero(poly_text, err);
    const Poly v = oracle ? oracle_evaluate(e, a) : compile(e)(a);
    out << to_string(v) << "\n";
    return kExitOk;
}

int cmd_verify(unsigned max_prime_deg, unsigned max_exp, const std::string& lemma, bool with_corollaries,
               unsigned jobs, bool verbose, std::ostream& out) {
    if (max_prime_deg < 1 || max_prime_deg > kMaxVerifyPrimeDeg) {
        throw ResourceError("--max-prime-deg must lie in [1, " + std::to_string(kMaxVerifyPrimeDeg) + "]");
    }
    if (max_exp > kMaxVerifyExp) {
        throw ResourceError("--max-exp must be at most " + std::to_string(kMaxVerifyExp));
    }
    CheckOptions opts;
    opts.jobs = jobs;
    if (!lemma.empty()) opts.lemma = lemma;
    const CheckSummary s = check_all(max_prime_deg, max_exp, opts);

    std::size_t passed = s.passed;
    std::size_t total = s.total;
    for (const auto& r : s.reports) {
        if (verbose || opts.lemma || !r.pass) out << format_report(r) << "\n";
    }
    if (with_corollaries) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (kCorollaryRootDeg + 1)); ++mask) {
            const Poly a = square(Poly::from_mask(mask));
            for (const auto& r : check_corollaries(a)) {
                if (!r.applicable) continue;
                ++total;
                if (r.pass) ++passed;
                if (verbose || !r.pass) out << format_report(r) << "\n";
            }
        }
    }
    out << format_summary(passed, total) << "\n";
    return passed == total ? kExitOk : kExitFailure;
}

int cmd_search(const std::string& kind, std::size_t max_deg, unsigned jobs, bool kv, std::ostream& out) {
    SearchOptions o;
    o.max_deg = max_deg;
    o.jobs = jobs;
    o.unitary = kind == "unitary";
    o.odd_only = kind == "odd";
    for (const auto& r : search(o).results) out << (kv ? format_result_kv(r) : format_result(r)) << "\n";
    return kExitOk;
}

int cmd_mersenne(unsigned max_deg, std::ostream& out) {
    if (max_deg > kMaxMersenneDeg) {
        throw ResourceError("--max-deg must be at most " + std::to_string(kMaxMersenneDeg));
    }
    struct Hit {
        Poly p;
        MersenneForm form;
    };
    std::vector<Hit> hits;
    const Poly x1 = Poly::from_mask(0b11);
    for (unsigned a = 1; a < max_deg; ++a) {
        for (unsigned b = 1; a + b <= max_deg; ++b) {
            const Poly p = Poly::one() + pow(Poly::x(), a) * pow(x1, b);
            if (is_irreducible(p)) hits.push_back({p, {a, b}});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.p < r.p; });
    for (const auto& h : hits) out << to_string(h.p) << " a=" << h.form.a << " b=" << h.form.b << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"f2x: multiplicative functions over F2[x]"};
    app.require_subcommand(1);

    std::string poly_text, expr_text, rhs_expr_text, lemma, kind;
    bool oracle = false, corollaries_flag = false, verbose = false, kv = false;
    unsigned max_prime_deg = 3, max_exp = 6, jobs = default_jobs(), mersenne_deg = 8;
    std::size_t max_deg = 6;

    auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial into irreducibles");
    factor_cmd->add_option("poly", poly_text, "Polynomial, term or hex form")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function expression at a polynomial");
    eval_cmd->add_option("expr", expr_text, "e.g. sigma, inv(sigma), sigma_star*mu")->required();
    eval_cmd->add_option("poly", poly_text)->required();
    eval_cmd->add_flag("--oracle", oracle, "Use the divisor-lattice oracle");

    auto* conv_cmd = app.add_subcommand("conv", "Evaluate (f)*(g) at a polynomial");
    conv_cmd->add_option("f", expr_text)->required();
    conv_cmd->add_option("g", rhs_expr_text)->required();
    conv_cmd->add_option("poly", poly_text)->required();
    conv_cmd->add_flag("--oracle", oracle, "Use the divisor-lattice oracle");

    auto* verify_cmd = app.add_subcommand("verify", "Check the identity catalogue");
    verify_cmd->add_option("--max-prime-deg", max_prime_deg)->capture_default_str();
    verify_cmd->add_option("--max-exp", max_exp)->capture_default_str();
    verify_cmd->add_option("--lemma", lemma, "Restrict to one identity id");
    verify_cmd->add_flag("--corollaries", corollaries_flag, "Also check corollaries on squares");
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--verbose", verbose, "Print every report line");

    auto* search_cmd = app.add_subcommand("search", "Search for perfect polynomials");
    search_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"perfect", "unitary", "odd"}));
    search_cmd->add_option("--max-deg", max_deg)->capture_default_str();
    search_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    search_cmd->add_flag("--kv", kv, "key=value output");

    auto* mersenne_cmd = app.add_subcommand("mersenne", "List Mersenne prime polynomials");
    mersenne_cmd->add_option("--max-deg", mersenne_deg)->capture_default_str();

    std::vector<const char*> argv{"f2x"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (factor_cmd->parsed()) return cmd_factor(poly_text, out, err);
        if (eval_cmd->parsed()) return cmd_eval(expr_text, poly_text, oracle, out, err);
        if (conv_cmd->parsed()) {
            return cmd_eval("(" + expr_text + ")*(" + rhs_expr_text + ")", poly_text, oracle, out, err);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(max_prime_deg, max_exp, lemma, corollaries_flag, jobs, verbose, out);
        }
        if (search_cmd->parsed()) return cmd_search(kind, max_deg, jobs, kv, out);
        if (mersenne_cmd->parsed()) return cmd_mersenne(mersenne_deg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace f2x
