// identities.hpp - closed-form convolution identities and their checker.
//
// Each LemmaSpec pairs a function expression with a closed form on prime
// powers P^m. check_lemma evaluates the expression through the divisor-
// lattice oracle (never through the prime-power recursions in multfun) and
// compares bitmasks. Corollary specs are checked on whole polynomials A: the
// left side is a literal divisor sum, the right side a value derived from
// sigma(A), sigma*(A), rad(A) and friends.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "f2x/factorize.hpp"
#include "f2x/function_expr.hpp"
#include "f2x/poly.hpp"

namespace f2x {

struct PrimePowerPoint {
    Poly prime;
    unsigned exponent = 0;
};

struct LemmaSpec {
    std::string id;
    std::string lhs;  // function expression
    std::function<Poly(const Poly& prime, unsigned exponent)> closed_form;
    // Exponents outside this predicate are not part of the statement and are
    // skipped. Empty means every m >= 0.
    std::function<bool(unsigned exponent)> applies;
};

struct IdentityReport {
    std::string spec_id;
    std::variant<PrimePowerPoint, Poly> point;
    Poly expected;
    Poly got;
    bool pass = false;
    // Corollaries whose input class excludes A are reported, not checked.
    bool applicable = true;
};

const std::vector<LemmaSpec>& registry();
// Throws DomainError for an unknown id.
const LemmaSpec& find_lemma(std::string_view id);

// Throws DomainError when prime is reducible.
IdentityReport check_lemma(const LemmaSpec& spec, const Poly& prime, unsigned exponent,
                           const FunctionTable& table = FunctionTable::standard());

struct CheckOptions {
    unsigned jobs = 1;
    std::optional<std::string> lemma;  // restrict to one spec
    FunctionTable table = FunctionTable::standard();
};

struct CheckSummary {
    std::vector<IdentityReport> reports;  // ordered by (registry order, P, m)
    std::size_t passed = 0;
    std::size_t total = 0;

    bool all_pass() const noexcept { return passed == total; }
    std::vector<IdentityReport> failures() const;
};

// Every spec at every irreducible P with 1 <= deg P <= max_prime_deg and
// every 0 <= m <= max_exp. The result does not depend on options.jobs.
CheckSummary check_all(unsigned max_prime_deg, unsigned max_exp, const CheckOptions& options = {});

enum class InputClass { any, square, special };

struct CorollaryContext;

struct CorollarySpec {
    std::string id;
    InputClass input = InputClass::any;
    std::function<Poly(const CorollaryContext&)> lhs;  // divisor sum
    std::function<Poly(const CorollaryContext&)> rhs;  // closed value
};

const std::vector<CorollarySpec>& corollaries();

// Runs every corollary on a (a != 0). Specs whose input class does not hold,
// and every spec at a = 1, come back with applicable = false.
std::vector<IdentityReport> check_corollaries(const Poly& a);

// "LEMMA <id> P=<poly> m=<int> OK" or "... FAIL expected=<poly> got=<poly>";
// corollaries use "COROLLARY <id> A=<poly> ..." and "N/A" when skipped.
std::string format_report(const IdentityReport& r);
// "PASS <passed>/<total>"
std::string format_summary(std::size_t passed, std::size_t total);

// Fault injection: for every builtin used by some lemma, flip one prime-power
// value (add 1) and rerun the lemma suite. A healthy checker reports at least
// one failure per mutation.
struct MutationOutcome {
    std::string function;
    Poly prime;
    unsigned exponent = 0;
    std::size_t failures = 0;
};
std::vector<MutationOutcome> mutation_test(unsigned max_prime_deg = 2, unsigned max_exp = 4, unsigned jobs = 1);

}  // namespace f2x
