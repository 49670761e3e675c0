// factorize.hpp - irreducibility, factorization into irreducibles, and the
// Mersenne prime form 1 + x^a (x+1)^b.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f2x/poly.hpp"

namespace f2x {

struct PrimePower {
    Poly prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Irreducible factors with multiplicities, ascending (degree, bitmask).
// Every prime is irreducible, primes are distinct, exponents are >= 1.
class Factorization {
public:
    Factorization() = default;
    // Sorts and merges repeated primes; drops zero exponents. Does not test
    // irreducibility, callers pass primes they already know.
    explicit Factorization(std::vector<PrimePower> factors);

    std::span<const PrimePower> factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }
    const PrimePower& operator[](std::size_t i) const { return factors_[i]; }

    Poly product() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

// "(x)^1 * (x+1)^2 * (x^2+x+1)^1"; the empty factorization renders as "1".
std::string to_string(const Factorization& f);

struct MersenneForm {
    unsigned a = 0;
    unsigned b = 0;

    friend bool operator==(const MersenneForm&, const MersenneForm&) = default;
};

enum class Parity { even, odd };

struct FactorOptions {
    // Seed of the equal-degree splitter; the result does not depend on it,
    // only the path taken to reach it.
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Rabin's test: x^(2^n) = x mod a, and gcd(x^(2^(n/q)) - x, a) = 1 for every
// prime q | n. Throws DomainError for constants.
bool is_irreducible(const Poly& a);

// Trial division by the precomputed table (degree <= 24 only).
bool is_irreducible_trial(const Poly& a);

Factorization factor(const Poly& a, const FactorOptions& options = {});

// The two factoring routes, exposed so they can be checked against each
// other. factor() picks trial division up to degree 24 and splitting above.
Factorization factor_trial_division(const Poly& a);
Factorization factor_by_splitting(const Poly& a, const FactorOptions& options = {});

// All irreducibles of degree 1..d in ascending order, built once by a sieve.
// d must lie in [1, 16].
std::span<const Poly> irreducibles_up_to(unsigned d);

std::optional<MersenneForm> mersenne_form(const Poly& p);

Parity parity(const Poly& a);

}  // namespace f2x
