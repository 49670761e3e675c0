// divisors.hpp - divisor-lattice queries on a factorization.

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "f2x/factorize.hpp"
#include "f2x/poly.hpp"

namespace f2x {

// Enumerations larger than this throw ResourceError.
inline constexpr std::size_t kMaxDivisorCount = std::size_t{1} << 20;

// Exponent vector t with 0 <= t[i] <= e[i], relative to a Factorization.
using ExponentVector = std::vector<unsigned>;

std::size_t divisor_count(const Factorization& f);

// Visits every exponent vector in mixed-radix order: the first prime's
// exponent varies fastest. Throws ResourceError above kMaxDivisorCount.
void for_each_divisor_exponents(const Factorization& f,
                                const std::function<void(const ExponentVector&)>& visit);

// prod p_i^t[i], and the factorization of that divisor.
Poly divisor_from_exponents(const Factorization& f, const ExponentVector& t);
Factorization sub_factorization(const Factorization& f, const ExponentVector& t);
// e - t
ExponentVector complement(const Factorization& f, const ExponentVector& t);

std::vector<Poly> divisors(const Factorization& f);
std::vector<Poly> unitary_divisors(const Factorization& f);

Poly radical(const Factorization& f);
std::size_t omega(const Factorization& f);
std::size_t big_omega(const Factorization& f);

bool is_squarefree(const Factorization& f);
// Every exponent even (the empty factorization counts: 1 = 1^2).
bool is_square(const Factorization& f);
// A = S^2 with S squarefree, i.e. every exponent equals 2.
bool is_special(const Factorization& f);
bool is_special(const Poly& a);

// Literal sums over the enumerated divisor lists. These never go through a
// multiplicative rule, so they serve as independent checks of sigma and
// sigma*.
Poly divisor_sum(const Poly& a);
Poly unitary_divisor_sum(const Poly& a);

// The same sums found by testing every polynomial of degree <= deg a for
// divisibility. No factorization involved; limited to degree 24.
Poly divisor_sum_by_trial(const Poly& a);
Poly unitary_divisor_sum_by_trial(const Poly& a);

}  // namespace f2x
