// perfect.cpp

#include "f2x/perfect.hpp"

#include <algorithm>
#include <bit>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"
#include "f2x/factorize.hpp"
#include "f2x/multfun.hpp"
#include "f2x/parallel.hpp"

namespace f2x {

namespace {

// sigma(P^e) or sigma*(P^e) written out, without going through the shared
// memo of the builtin (the search would serialize on its lock).
Poly local_value(const Poly& p, unsigned e, bool unitary) {
    if (unitary) return Poly::one() + pow(p, e);
    Poly acc = Poly::one();
    Poly q = Poly::one();
    for (unsigned i = 1; i <= e; ++i) {
        q = q * p;
        acc += q;
    }
    return acc;
}

Poly truncate_word(const Poly& a) { return Poly::from_mask(a.low_word()); }

Poly low_product(const Factorization& f, unsigned scale) {
    Poly acc = Poly::one();
    for (const auto& [p, e] : f.factors()) acc = truncate_word(acc * truncate_word(local_value(p, e * scale, false)));
    return acc;
}

Poly full_product(const Factorization& f, unsigned scale, bool unitary) {
    Poly acc = Poly::one();
    for (const auto& [p, e] : f.factors()) acc = acc * local_value(p, e * scale, unitary);
    return acc;
}

bool odd_weight_no_x(std::uint64_t mask) { return (mask & 1) && (std::popcount(mask) & 1); }

struct Chunk {
    std::vector<SearchResult> hits;
    std::vector<Poly> rejected;
    std::size_t candidates = 0;
};

SearchResult make_result(const Poly& a, bool unitary) {
    return SearchResult{a, unitary ? PerfectKind::unitary : PerfectKind::sigma, classify(a), a.degree()};
}

// Independent confirmation through the literal divisor list.
void reverify(const SearchResult& r) {
    const Poly s = r.kind == PerfectKind::unitary ? unitary_divisor_sum(r.polynomial) : divisor_sum(r.polynomial);
    if (s != r.polynomial) {
        throw Error("search hit " + to_string(r.polynomial) + " failed divisor-sum re-verification");
    }
}

}  // namespace

std::string_view to_string(PerfectKind k) { return k == PerfectKind::sigma ? "sigma" : "unitary"; }

std::string_view to_string(PerfectClass c) {
    switch (c) {
        case PerfectClass::trivial: return "trivial";
        case PerfectClass::even_nontrivial: return "even-nontrivial";
        case PerfectClass::odd: return "odd";
    }
    return "?";
}

bool verify_perfect(const Poly& a, bool unitary) {
    if (a.is_zero()) throw DomainError("verify_perfect: zero polynomial");
    return evaluate(builtin(unitary ? "sigma_star" : "sigma"), a) == a;
}

std::optional<unsigned> trivial_form(const Poly& a) {
    if (a.is_zero() || a.is_one()) return std::nullopt;
    const std::size_t d = a.degree();
    if (d % 2 != 0) return std::nullopt;
    const std::uint64_t k = d / 2;
    if (!std::has_single_bit(k + 1)) return std::nullopt;
    if (pow(Poly::from_mask(0b110), k) != a) return std::nullopt;
    return static_cast<unsigned>(std::countr_zero(k + 1));
}

PerfectClass classify(const Poly& a) {
    if (trivial_form(a)) return PerfectClass::trivial;
    return parity(a) == Parity::even ? PerfectClass::even_nontrivial : PerfectClass::odd;
}

OddFilterReport odd_perfect_filter(const Poly& a, const OddFilterConfig& config) {
    if (a.is_zero()) throw DomainError("odd_perfect_filter: zero polynomial");
    if (parity(a) != Parity::odd) throw DomainError("odd_perfect_filter: " + to_string(a) + " is even");
    const Factorization f = factor(a);
    OddFilterReport r;
    r.candidate = a;
    r.is_square = is_square(f);
    r.omega = omega(f);
    r.big_omega = big_omega(f);
    r.degree = a.is_one() ? 0 : a.degree();
    r.special = is_special(f);
    r.square_ok = r.is_square;
    r.omega_ok = r.omega >= config.min_omega;
    r.big_omega_ok = r.big_omega >= config.min_big_omega;
    r.degree_ok = r.degree > config.degree_exceeds;
    r.special_omega_ok = !r.special || r.omega >= config.min_omega_special;
    return r;
}

SearchOutcome search(const SearchOptions& options) {
    if (options.odd_only) {
        if (options.unitary) throw DomainError("the odd-square search covers sigma only");
        if (options.max_deg > kMaxOddDegree) {
            throw ResourceError("odd search degree " + std::to_string(options.max_deg) + " exceeds " +
                                std::to_string(kMaxOddDegree));
        }
    } else if (options.max_deg > kMaxExhaustiveDegree) {
        throw ResourceError("exhaustive search degree " + std::to_string(options.max_deg) + " exceeds " +
                            std::to_string(kMaxExhaustiveDegree));
    }

    // Exhaustive: every A with 1 <= deg A <= max_deg.
    // Odd: every S with deg S <= max_deg / 2, S(0) = S(1) = 1, tested as A = S^2.
    const std::size_t top_bits = options.odd_only ? options.max_deg / 2 + 1 : options.max_deg + 1;
    const std::uint64_t lo = 2;
    const std::uint64_t hi = std::uint64_t{1} << top_bits;
    const std::uint64_t span = hi > lo ? hi - lo : 0;

    std::uint64_t stride = 1;
    if (options.rejected_sample > 0) {
        // About a quarter of all masks are eligible S.
        stride = std::max<std::uint64_t>(1, hi / (4 * options.rejected_sample));
    }

    const unsigned jobs = std::max(1u, options.jobs);
    const std::size_t n_chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(span, std::size_t{jobs} * 16));
    std::vector<Chunk> chunks(n_chunks);

    parallel_chunks(n_chunks, jobs, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c) {
            Chunk& out = chunks[c];
            const std::uint64_t begin = lo + span * c / n_chunks;
            const std::uint64_t end = lo + span * (c + 1) / n_chunks;
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                if (options.odd_only) {
                    if (!odd_weight_no_x(mask)) continue;
                    ++out.candidates;
                    const Poly s = Poly::from_mask(mask);
                    const Poly a = square(s);
                    const Factorization fs = factor(s);
                    if (low_product(fs, 2) != truncate_word(a)) {
                        if (options.rejected_sample > 0 && (mask >> 1) % stride == 0) out.rejected.push_back(a);
                        continue;
                    }
                    if (full_product(fs, 2, false) == a) out.hits.push_back(make_result(a, false));
                } else {
                    ++out.candidates;
                    const Poly a = Poly::from_mask(mask);
                    if (full_product(factor(a), 1, options.unitary) == a) {
                        out.hits.push_back(make_result(a, options.unitary));
                    }
                }
            }
        }
    });

    SearchOutcome outcome;
    for (auto& c : chunks) {
        outcome.candidates += c.candidates;
        for (auto& h : c.hits) outcome.results.push_back(std::move(h));
        for (auto& r : c.rejected) outcome.rejected_sample.push_back(std::move(r));
    }
    if (outcome.rejected_sample.size() > options.rejected_sample) outcome.rejected_sample.resize(options.rejected_sample);
    std::sort(outcome.results.begin(), outcome.results.end(),
              [](const SearchResult& x, const SearchResult& y) { return x.polynomial < y.polynomial; });
    for (const auto& r : outcome.results) reverify(r);
    return outcome;
}

std::vector<SearchResult> search_fixed_points(std::size_t max_deg, bool unitary, bool odd_only, unsigned jobs) {
    SearchOptions o;
    o.max_deg = max_deg;
    o.unitary = unitary;
    o.odd_only = odd_only;
    o.jobs = jobs;
    return search(o).results;
}

std::string format_result(const SearchResult& r) {
    return "PERFECT deg=" + std::to_string(r.degree) + " " + to_string(r.polynomial) + " class=" +
           std::string(to_string(r.classification));
}

std::string format_result_kv(const SearchResult& r) {
    return "kind=" + std::string(to_string(r.kind)) + " degree=" + std::to_string(r.degree) +
           " poly=" + to_string(r.polynomial) + " hex=" + to_hex(r.polynomial) +
           " class=" + std::string(to_string(r.classification));
}

}  // namespace f2x
