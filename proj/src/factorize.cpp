// factorize.cpp - factoring in F2[x].
//
// Small inputs go through trial division against a sieved table of
// irreducibles. Larger inputs use square-free decomposition, distinct-degree
// factorization and an equal-degree splitter built on the absolute trace
// t + t^2 + ... + t^(2^(d-1)), which takes values in F2 on each degree-d
// factor (the random-power splitter for odd characteristic does not apply).

#include "f2x/factorize.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "f2x/error.hpp"

namespace f2x {

namespace {

constexpr unsigned kTableDegree = 16;
constexpr std::size_t kTrialDivisionMaxDegree = 24;

struct IrreducibleTable {
    std::vector<Poly> primes;            // ascending numeric order
    std::vector<std::size_t> end_of_degree;  // end_of_degree[d] = count of primes with degree <= d
};

const IrreducibleTable& table() {
    static const IrreducibleTable t = [] {
        IrreducibleTable out;
        const std::uint64_t limit = std::uint64_t{1} << (kTableDegree + 1);
        std::vector<bool> composite(limit, false);
        out.end_of_degree.assign(kTableDegree + 1, 0);
        for (std::uint64_t p = 2; p < limit; ++p) {
            if (composite[p]) continue;
            const Poly pp = Poly::from_mask(p);
            const std::size_t dp = pp.degree();
            out.primes.push_back(pp);
            // mark p*q for q >= p; every composite has its smallest factor p here
            const std::size_t max_dq = kTableDegree - dp;
            if (max_dq < dp) continue;
            const std::uint64_t q_limit = std::uint64_t{1} << (max_dq + 1);
            for (std::uint64_t q = p; q < q_limit; ++q) {
                composite[(pp * Poly::from_mask(q)).low_word()] = true;
            }
        }
        for (const Poly& p : out.primes) ++out.end_of_degree[p.degree()];
        for (unsigned d = 1; d <= kTableDegree; ++d) out.end_of_degree[d] += out.end_of_degree[d - 1];
        return out;
    }();
    return t;
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// grouped[(prime)] += exponent, kept as an unsorted list and normalized by
// the Factorization constructor.
using FactorList = std::vector<PrimePower>;

FactorList square_free_decomposition(const Poly& f) {
    FactorList out;
    if (f.degree() == 0) return out;
    const Poly fd = derivative(f);
    if (fd.is_zero()) {
        for (auto& [g, m] : square_free_decomposition(*sqrt_if_square(f))) out.push_back({g, 2 * m});
        return out;
    }
    Poly c = gcd(f, fd);
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_one()) out.push_back({z, i});
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_one()) {
        for (auto& [g, m] : square_free_decomposition(*sqrt_if_square(c))) out.push_back({g, 2 * m});
    }
    return out;
}

// Splits a square-free f into (product of all degree-d factors, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x = Poly::x();
    Poly h = x % f;
    unsigned d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = square(h) % f;
        Poly g = gcd(h + x, f);
        if (!g.is_one()) {
            f = f / g;
            h = h % f;
            out.emplace_back(std::move(g), d);
        }
    }
    if (f.degree() >= 1) {
        const auto deg = static_cast<unsigned>(f.degree());
        out.emplace_back(std::move(f), deg);
    }
    return out;
}

Poly random_below(std::size_t degree_bound, std::mt19937_64& rng) {
    std::vector<Poly::Word> w(degree_bound / Poly::kWordBits + 1);
    for (auto& v : w) v = rng();
    const std::size_t top_bits = degree_bound % Poly::kWordBits;
    w.back() &= top_bits == 0 ? 0 : ((Poly::Word{1} << top_bits) - 1);
    return Poly::from_words(w);
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    const std::size_t n = g.degree();
    if (n == d) {
        out.push_back(g);
        return;
    }
    while (true) {
        const Poly r = random_below(n, rng);
        if (r.is_zero() || r.degree() == 0) continue;
        Poly t = r;
        Poly trace = r;
        for (unsigned i = 1; i < d; ++i) {
            t = square(t) % g;
            trace += t;
        }
        if (trace.is_zero()) continue;
        Poly u = gcd(trace, g);
        if (u.is_one() || u.degree() == n) continue;
        Poly v = g / u;
        equal_degree(u, d, rng, out);
        equal_degree(v, d, rng, out);
        return;
    }
}

void require_nonzero(const Poly& a, const char* what) {
    if (a.is_zero()) throw DomainError(std::string(what) + " of the zero polynomial");
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
    for (auto& f : factors) {
        if (f.exponent == 0) continue;
        if (!factors_.empty() && factors_.back().prime == f.prime) {
            factors_.back().exponent += f.exponent;
        } else {
            factors_.push_back(std::move(f));
        }
    }
}

Poly Factorization::product() const {
    Poly acc = Poly::one();
    for (const auto& [p, e] : factors_) acc = acc * pow(p, e);
    return acc;
}

std::string to_string(const Factorization& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f.factors()) {
        if (!first) os << " * ";
        first = false;
        os << '(' << to_string(p) << ")^" << e;
    }
    return os.str();
}

bool is_irreducible(const Poly& a) {
    if (a.is_zero() || a.degree() == 0) throw DomainError("irreducibility is undefined for constants");
    const auto n = static_cast<unsigned>(a.degree());
    if (n == 1) return true;
    if (!a.constant_term()) return false;

    // frobenius[k] = x^(2^k) mod a
    std::vector<Poly> frobenius(n + 1);
    frobenius[0] = Poly::x();
    for (unsigned k = 1; k <= n; ++k) frobenius[k] = square(frobenius[k - 1]) % a;
    if (frobenius[n] != Poly::x()) return false;
    for (unsigned q : prime_divisors(n)) {
        if (!gcd(frobenius[n / q] + Poly::x(), a).is_one()) return false;
    }
    return true;
}

bool is_irreducible_trial(const Poly& a) {
    if (a.is_zero() || a.degree() == 0) throw DomainError("irreducibility is undefined for constants");
    const Factorization f = factor_trial_division(a);
    return f.size() == 1 && f[0].exponent == 1;
}

Factorization factor_trial_division(const Poly& a) {
    require_nonzero(a, "factorization");
    if (a.degree() > kTrialDivisionMaxDegree) {
        throw DomainError("trial division is limited to degree " + std::to_string(kTrialDivisionMaxDegree));
    }
    std::vector<PrimePower> out;
    Poly rem = a;
    for (const Poly& p : table().primes) {
        if (rem.degree() < 2 * p.degree()) break;
        unsigned e = 0;
        while (true) {
            DivRem qr = divrem(rem, p);
            if (!qr.remainder.is_zero()) break;
            rem = std::move(qr.quotient);
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (rem.degree() >= 1) out.push_back({rem, 1});
    return Factorization(std::move(out));
}

Factorization factor_by_splitting(const Poly& a, const FactorOptions& options) {
    require_nonzero(a, "factorization");
    std::mt19937_64 rng(options.seed);
    std::vector<PrimePower> out;
    for (const auto& [part, mult] : square_free_decomposition(a)) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> primes;
            equal_degree(block, d, rng, primes);
            for (auto& p : primes) out.push_back({std::move(p), mult});
        }
    }
    return Factorization(std::move(out));
}

Factorization factor(const Poly& a, const FactorOptions& options) {
    require_nonzero(a, "factorization");
    if (a.degree() <= kTrialDivisionMaxDegree) return factor_trial_division(a);
    return factor_by_splitting(a, options);
}

std::span<const Poly> irreducibles_up_to(unsigned d) {
    if (d < 1 || d > kTableDegree) {
        throw DomainError("irreducibles_up_to supports degrees 1.." + std::to_string(kTableDegree));
    }
    const auto& t = table();
    return std::span<const Poly>(t.primes).first(t.end_of_degree[d]);
}

std::optional<MersenneForm> mersenne_form(const Poly& p) {
    if (p.is_zero() || p.degree() < 2) return std::nullopt;
    if (!is_irreducible(p)) return std::nullopt;
    Poly rest = p + Poly::one();
    unsigned a = 0;
    while (!rest.constant_term()) {
        rest >>= 1;
        ++a;
    }
    const Poly x_plus_1 = Poly::from_mask(3);
    unsigned b = 0;
    while (!rest.is_one()) {
        DivRem qr = divrem(rest, x_plus_1);
        if (!qr.remainder.is_zero()) return std::nullopt;
        rest = std::move(qr.quotient);
        ++b;
    }
    if (a == 0 || b == 0) return std::nullopt;
    return MersenneForm{a, b};
}

Parity parity(const Poly& a) {
    require_nonzero(a, "parity");
    const bool even = !a.constant_term() || a.weight() % 2 == 0;
    return even ? Parity::even : Parity::odd;
}

}  // namespace f2x
