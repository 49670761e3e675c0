// divisors.cpp

#include "f2x/divisors.hpp"

#include <algorithm>

#include "f2x/error.hpp"

namespace f2x {

std::size_t divisor_count(const Factorization& f) {
    std::size_t n = 1;
    for (const auto& pe : f.factors()) {
        n *= pe.exponent + 1;
        if (n > kMaxDivisorCount) {
            throw ResourceError("divisor list exceeds " + std::to_string(kMaxDivisorCount) + " entries");
        }
    }
    return n;
}

void for_each_divisor_exponents(const Factorization& f,
                                const std::function<void(const ExponentVector&)>& visit) {
    const std::size_t total = divisor_count(f);
    ExponentVector t(f.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        visit(t);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < f[i].exponent) {
                ++t[i];
                break;
            }
            t[i] = 0;
        }
    }
}

Poly divisor_from_exponents(const Factorization& f, const ExponentVector& t) {
    Poly d = Poly::one();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i]) d = d * pow(f[i].prime, t[i]);
    }
    return d;
}

Factorization sub_factorization(const Factorization& f, const ExponentVector& t) {
    std::vector<PrimePower> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i]) out.push_back({f[i].prime, t[i]});
    }
    return Factorization(std::move(out));
}

ExponentVector complement(const Factorization& f, const ExponentVector& t) {
    ExponentVector c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) c[i] = f[i].exponent - t[i];
    return c;
}

std::vector<Poly> divisors(const Factorization& f) {
    std::vector<Poly> out;
    out.reserve(divisor_count(f));
    for_each_divisor_exponents(f, [&](const ExponentVector& t) { out.push_back(divisor_from_exponents(f, t)); });
    return out;
}

std::vector<Poly> unitary_divisors(const Factorization& f) {
    if (f.size() >= 63 || (std::size_t{1} << f.size()) > kMaxDivisorCount) {
        throw ResourceError("unitary divisor list exceeds " + std::to_string(kMaxDivisorCount) + " entries");
    }
    std::vector<Poly> full(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) full[i] = pow(f[i].prime, f[i].exponent);
    const std::size_t total = std::size_t{1} << f.size();
    std::vector<Poly> out;
    out.reserve(total);
    for (std::size_t subset = 0; subset < total; ++subset) {
        Poly d = Poly::one();
        for (std::size_t i = 0; i < f.size(); ++i) {
            if ((subset >> i) & 1) d = d * full[i];
        }
        out.push_back(std::move(d));
    }
    return out;
}

Poly radical(const Factorization& f) {
    Poly r = Poly::one();
    for (const auto& pe : f.factors()) r = r * pe.prime;
    return r;
}

std::size_t omega(const Factorization& f) { return f.size(); }

std::size_t big_omega(const Factorization& f) {
    std::size_t n = 0;
    for (const auto& pe : f.factors()) n += pe.exponent;
    return n;
}

bool is_squarefree(const Factorization& f) {
    return std::all_of(f.factors().begin(), f.factors().end(), [](const PrimePower& pe) { return pe.exponent == 1; });
}

bool is_square(const Factorization& f) {
    return std::all_of(f.factors().begin(), f.factors().end(),
                       [](const PrimePower& pe) { return pe.exponent % 2 == 0; });
}

bool is_special(const Factorization& f) {
    return std::all_of(f.factors().begin(), f.factors().end(), [](const PrimePower& pe) { return pe.exponent == 2; });
}

bool is_special(const Poly& a) {
    if (a.is_zero()) throw DomainError("is_special requires a nonzero polynomial");
    return is_special(factor(a));
}

Poly divisor_sum(const Poly& a) {
    Poly s;
    for (const Poly& d : divisors(factor(a))) s += d;
    return s;
}

Poly unitary_divisor_sum(const Poly& a) {
    Poly s;
    for (const Poly& d : unitary_divisors(factor(a))) s += d;
    return s;
}

namespace {

template <class Accept>
Poly sum_by_trial(const Poly& a, Accept accept) {
    if (a.is_zero()) throw DomainError("divisor sum of the zero polynomial");
    if (a.degree() > 24) throw ResourceError("trial divisor sums are limited to degree 24");
    const std::uint64_t limit = std::uint64_t{1} << (a.degree() + 1);
    Poly s;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const Poly d = Poly::from_mask(mask);
        DivRem qr = divrem(a, d);
        if (qr.remainder.is_zero() && accept(d, qr.quotient)) s += d;
    }
    return s;
}

}  // namespace

Poly divisor_sum_by_trial(const Poly& a) {
    return sum_by_trial(a, [](const Poly&, const Poly&) { return true; });
}

Poly unitary_divisor_sum_by_trial(const Poly& a) {
    return sum_by_trial(a, [](const Poly& d, const Poly& q) { return gcd(d, q).is_one(); });
}

}  // namespace f2x
