// oracles.hpp - reference implementations for tests.
//
// Everything here works on raw uint64_t masks with plain loops and shares no
// code with the library beyond converting to and from Poly at the edges. The
// values they produce are what the library is checked against.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2x/poly.hpp"

namespace oracle {

using M = std::uint64_t;

inline int deg(M a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

// Carryless product; caller keeps deg a + deg b < 64.
inline M mul(M a, M b) {
    M r = 0;
    for (int i = 0; b >> i; ++i) {
        if ((b >> i) & 1) r ^= a << i;
    }
    return r;
}

inline std::pair<M, M> divmod(M a, M b) {
    M q = 0;
    const int db = deg(b);
    while (deg(a) >= db) {
        const int s = deg(a) - db;
        q |= M{1} << s;
        a ^= b << s;
    }
    return {q, a};
}

inline M mod(M a, M b) { return divmod(a, b).second; }
inline bool divides(M d, M a) { return mod(a, d) == 0; }

inline M gcd(M a, M b) {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

inline M power(M a, unsigned k) {
    M r = 1;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

// Every d of degree <= deg a that divides a, ascending.
inline std::vector<M> divisors(M a) {
    std::vector<M> out;
    for (M d = 1; d < (M{2} << deg(a)); ++d) {
        if (divides(d, a)) out.push_back(d);
    }
    return out;
}

// Repeatedly strips the numerically smallest nontrivial divisor, which is
// always irreducible.
inline std::vector<std::pair<M, unsigned>> factor(M a) {
    std::map<M, unsigned> counts;
    while (deg(a) >= 1) {
        M p = a;
        for (M d = 2; deg(d) * 2 <= deg(a); ++d) {
            if (divides(d, a)) {
                p = d;
                break;
            }
        }
        ++counts[p];
        a = divmod(a, p).first;
    }
    return {counts.begin(), counts.end()};
}

inline bool irreducible(M a) {
    if (deg(a) < 1) return false;
    for (M d = 2; deg(d) * 2 <= deg(a); ++d) {
        if (divides(d, a)) return false;
    }
    return true;
}

inline bool squarefree(M a) {
    for (M d = 2; deg(d) * 2 <= deg(a); ++d) {
        if (divides(mul(d, d), a)) return false;
    }
    return true;
}

// Monic irreducibles of degree n over F2: (1/n) sum_{d|n} mu(d) 2^(n/d).
inline long necklace_count(unsigned n) {
    auto mu = [](unsigned k) {
        int r = 1;
        for (unsigned p = 2; p * p <= k; ++p) {
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                r = -r;
            }
        }
        if (k > 1) r = -r;
        return r;
    };
    long s = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) s += mu(d) * (1L << (n / d));
    }
    return s / static_cast<long>(n);
}

// Builtins from their divisor-sum or factor-free definitions.
inline M sigma(M a) {
    M s = 0;
    for (M d : divisors(a)) s ^= d;
    return s;
}

inline M sigma_star(M a) {
    M s = 0;
    for (M d : divisors(a)) {
        if (gcd(d, divmod(a, d).first) == 1) s ^= d;
    }
    return s;
}

// mu is 1 on squarefree, 0 otherwise (signs vanish mod 2).
inline M mu(M a) { return squarefree(a) ? 1 : 0; }

// phi = Id * mu: sum of a/d over squarefree d | a.
inline M phi(M a) {
    M s = 0;
    for (M d : divisors(a)) {
        if (squarefree(d)) s ^= divmod(a, d).first;
    }
    return s;
}

inline M builtin(const std::string& name, M a) {
    if (name == "delta") return a == 1 ? 1 : 0;
    if (name == "z") return 1;
    if (name == "id") return a;
    if (name == "mu") return mu(a);
    if (name == "phi") return phi(a);
    if (name == "sigma") return sigma(a);
    if (name == "sigma_star") return sigma_star(a);
    throw std::runtime_error("unknown oracle function " + name);
}

template <class F, class G>
M convolve(F f, G g, M a) {
    M s = 0;
    for (M d : divisors(a)) s ^= mul(f(d), g(divmod(a, d).first));
    return s;
}

// Dirichlet inverse by solving f * g = delta over the ascending divisor list.
template <class F>
class Inverse {
public:
    explicit Inverse(F f) : f_(std::move(f)) {}
    M operator()(M a) {
        if (a == 1) return 1;
        if (auto it = memo_.find(a); it != memo_.end()) return it->second;
        M s = 0;
        for (M d : divisors(a)) {
            if (d != 1) s ^= mul(f_(d), (*this)(divmod(a, d).first));
        }
        memo_[a] = s;
        return s;
    }

private:
    F f_;
    std::map<M, M> memo_;
};

inline f2x::Poly P(M m) { return f2x::Poly::from_mask(m); }
inline M mask(const f2x::Poly& p) { return p.low_word(); }

// Nonzero polynomial of degree <= max_deg.
inline M random_poly(std::mt19937_64& rng, unsigned max_deg) {
    std::uniform_int_distribution<M> dist(1, (M{2} << max_deg) - 1);
    return dist(rng);
}

}  // namespace oracle
