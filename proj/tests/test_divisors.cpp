#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"
#include "oracles.hpp"

using namespace f2x;
using oracle::P;

namespace {

std::vector<Poly> sorted(std::vector<Poly> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Poly> as_polys(const std::vector<oracle::M>& v) {
    std::vector<Poly> out;
    for (auto m : v) out.push_back(P(m));
    return out;
}

}  // namespace

TEST(Divisors, Examples) {
    EXPECT_EQ(sorted(divisors(factor(P(0b110)))), (std::vector<Poly>{P(1), P(0b10), P(0b11), P(0b110)}));
    EXPECT_EQ(sorted(divisors(factor(P(0b100)))), (std::vector<Poly>{P(1), P(0b10), P(0b100)}));
    EXPECT_EQ(divisors(factor(P(0b1100))).size(), 6u);
    EXPECT_EQ(divisors(Factorization{}), (std::vector<Poly>{Poly::one()}));
}

TEST(Divisors, MixedRadixOrderFirstPrimeFastest) {
    const auto d = divisors(factor(P(0b1100)));  // x^2 (x+1)
    const std::vector<Poly> expected{P(1), P(0b10), P(0b100), P(0b11), P(0b110), P(0b1100)};
    EXPECT_EQ(d, expected);
}

TEST(Divisors, MatchTrialDivisionOracle) {
    for (oracle::M m = 1; m < 2048; ++m) {
        const Factorization f = factor(P(m));
        const auto d = sorted(divisors(f));
        ASSERT_EQ(d, as_polys(oracle::divisors(m))) << m;
        std::size_t expected_count = 1;
        for (const auto& pp : f.factors()) expected_count *= pp.exponent + 1;
        EXPECT_EQ(divisor_count(f), expected_count);
    }
}

TEST(UnitaryDivisors, Examples) {
    EXPECT_EQ(sorted(unitary_divisors(factor(P(0b1100)))), (std::vector<Poly>{P(1), P(0b11), P(0b100), P(0b1100)}));
    EXPECT_EQ(sorted(unitary_divisors(factor(P(0b10000)))), (std::vector<Poly>{P(1), P(0b10000)}));
    const Factorization sf = factor(P(0b1110));  // x(x^2+x+1), squarefree
    EXPECT_EQ(sorted(unitary_divisors(sf)), sorted(divisors(sf)));
}

TEST(UnitaryDivisors, GcdDefinitionOracle) {
    for (oracle::M m = 1; m < 2048; ++m) {
        std::vector<oracle::M> ref;
        for (auto d : oracle::divisors(m)) {
            if (oracle::gcd(d, oracle::divmod(m, d).first) == 1) ref.push_back(d);
        }
        const Factorization f = factor(P(m));
        ASSERT_EQ(sorted(unitary_divisors(f)), as_polys(ref)) << m;
        EXPECT_EQ(unitary_divisors(f).size(), std::size_t{1} << omega(f));
    }
}

TEST(Radical, Examples) {
    EXPECT_EQ(radical(factor(P(0b1100))), P(0b110));
    EXPECT_EQ(radical(factor(P(0b1110))), P(0b1110));
    EXPECT_EQ(radical(factor(P(0b10101))), P(0b111));
    EXPECT_EQ(radical(Factorization{}), Poly::one());
}

TEST(Omega, Examples) {
    EXPECT_EQ(omega(factor(P(0b1100))), 2u);
    EXPECT_EQ(big_omega(factor(P(0b1100))), 3u);
    EXPECT_EQ(omega(factor(Poly::one())), 0u);
    EXPECT_EQ(big_omega(factor(Poly::one())), 0u);
    const Factorization c = factor(pow(P(0b110), 3));
    EXPECT_EQ(omega(c), 2u);
    EXPECT_EQ(big_omega(c), 6u);
}

TEST(Special, Examples) {
    EXPECT_TRUE(is_special(P(0b10101)));
    EXPECT_FALSE(is_special(pow(P(0b111), 4)));
    EXPECT_TRUE(is_special(square(P(0b110))));
    EXPECT_FALSE(is_special(P(0b111)));
    EXPECT_THROW(is_special(Poly{}), DomainError);
}

TEST(Predicates, SquareAndSquarefreeOracle) {
    for (oracle::M m = 1; m < 4096; ++m) {
        const Factorization f = factor(P(m));
        EXPECT_EQ(is_squarefree(f), oracle::squarefree(m)) << m;
        bool square = true;
        for (int i = 1; i < 64; i += 2) square = square && !((m >> i) & 1);
        EXPECT_EQ(is_square(f), square) << m;
    }
}

TEST(DivisorSums, AllRoutesAgree) {
    for (oracle::M m = 1; m < 4096; ++m) {
        const Poly a = P(m);
        const Poly s = P(oracle::sigma(m));
        const Poly u = P(oracle::sigma_star(m));
        ASSERT_EQ(divisor_sum(a), s) << m;
        ASSERT_EQ(unitary_divisor_sum(a), u) << m;
        if (m < 512) {
            ASSERT_EQ(divisor_sum_by_trial(a), s) << m;
            ASSERT_EQ(unitary_divisor_sum_by_trial(a), u) << m;
        }
    }
}

TEST(Enumeration, ResourceLimit) {
    // 21 distinct primes give 2^21 divisors.
    const auto irr = irreducibles_up_to(6);
    std::vector<PrimePower> pp;
    for (std::size_t i = 0; i < 21; ++i) pp.push_back({irr[i], 1});
    EXPECT_THROW(divisor_count(Factorization(pp)), ResourceError);
    EXPECT_THROW(divisor_sum_by_trial(Poly::monomial(25)), ResourceError);
}

TEST(Enumeration, ComplementAndSubFactorization) {
    const Factorization f = factor(P(0b1100) * P(0b111));
    for_each_divisor_exponents(f, [&](const ExponentVector& t) {
        const Poly d = divisor_from_exponents(f, t);
        const Poly c = divisor_from_exponents(f, complement(f, t));
        EXPECT_EQ(d * c, f.product());
        EXPECT_EQ(sub_factorization(f, t).product(), d);
    });
}
