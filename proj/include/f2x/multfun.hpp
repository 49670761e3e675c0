// multfun.hpp - multiplicative functions F2[x] \ {0} -> F2[x].
//
// A multiplicative function is stored as its rule on prime powers,
// (P, r) -> f(P^r) for irreducible P and r >= 1; f(1) = 1 and
// f(P1^r1 ... Pk^rk) = f(P1^r1) ... f(Pk^rk). Convolution, Dirichlet inverse
// and pointwise products are built as new rules, so every derived function
// evaluates in time proportional to its factorization.

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "f2x/factorize.hpp"
#include "f2x/poly.hpp"

namespace f2x {

// Any map on nonzero polynomials; only used where a function is not
// multiplicative (pointwise sums) or where the caller wants the literal
// divisor sum.
using ArithmeticFunction = std::function<Poly(const Poly&)>;

class MultiplicativeFunction {
public:
    using Rule = std::function<Poly(const Poly& prime, unsigned exponent)>;

    MultiplicativeFunction(std::string name, Rule rule, bool totally_multiplicative = false);

    const std::string& name() const noexcept;
    bool totally_multiplicative() const noexcept;
    // True for a convolution product; used to parenthesize derived names.
    bool is_product() const noexcept;

    // f(P^m); m = 0 gives 1. Values are memoized per (P, m). The cache is
    // shared by copies and safe to fill from several threads.
    Poly at(const Poly& prime, unsigned exponent) const;

    Poly operator()(const Factorization& a) const;
    Poly operator()(const Poly& a) const;

    ArithmeticFunction as_function() const;

private:
    friend MultiplicativeFunction convolve(const MultiplicativeFunction&, const MultiplicativeFunction&);

    struct State;
    std::shared_ptr<State> state_;
};

// delta, z, id, mu, phi, sigma, sigma_star
std::span<const std::string_view> builtin_names();
// Throws DomainError for an unknown name.
MultiplicativeFunction builtin(std::string_view name);

Poly evaluate(const MultiplicativeFunction& f, const Poly& a);

// (f*g)(P^m) = sum_{l=0..m} f(P^l) g(P^(m-l)). Named "f*g".
MultiplicativeFunction convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g);

// f^inv(P^r) = sum_{l=0}^{r-1} f^inv(P^l) f(P^(r-l)), which is f*f^inv = delta
// solved on prime powers (every f(1) = 1 is a unit in F2). Named "inv(f)".
MultiplicativeFunction inverse(const MultiplicativeFunction& f);

// f*f, named "sq(f)".
MultiplicativeFunction square_conv(const MultiplicativeFunction& f);

// (fg)(A) = f(A) g(A); multiplicative, totally so when both factors are.
MultiplicativeFunction pointwise_mul(const MultiplicativeFunction& f, const MultiplicativeFunction& g);

// (f+g)(A) = f(A) + g(A). Not multiplicative in general, hence a plain map.
ArithmeticFunction pointwise_add(const MultiplicativeFunction& f, const MultiplicativeFunction& g);

// sum over the enumerated divisor list of a of f(D) g(a/D). This is the
// definition of the convolution, with no prime-power composition.
Poly convolve_bruteforce(const ArithmeticFunction& f, const ArithmeticFunction& g, const Poly& a);
Poly convolve_bruteforce(const MultiplicativeFunction& f, const MultiplicativeFunction& g, const Poly& a);

// Same rule as f except f(P^m) + delta_value at one prime power. Used to
// inject faults into the identity checker.
MultiplicativeFunction with_perturbed_value(const MultiplicativeFunction& f, const Poly& prime, unsigned exponent,
                                            const Poly& delta_value);

// Replaces the whole rule while keeping the name, for mutation testing.
MultiplicativeFunction with_rule(const MultiplicativeFunction& f, MultiplicativeFunction::Rule rule);

}  // namespace f2x
