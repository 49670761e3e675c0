// perfect.hpp - fixed points of sigma and sigma*, and the necessary-condition
// filter for odd candidates.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2x/poly.hpp"

namespace f2x {

enum class PerfectKind { sigma, unitary };
enum class PerfectClass { trivial, even_nontrivial, odd };

std::string_view to_string(PerfectKind k);
std::string_view to_string(PerfectClass c);

struct SearchResult {
    Poly polynomial;
    PerfectKind kind = PerfectKind::sigma;
    PerfectClass classification = PerfectClass::even_nontrivial;
    std::size_t degree = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// sigma(a) == a, or sigma*(a) == a when unitary. Throws DomainError on 0.
bool verify_perfect(const Poly& a, bool unitary);

// n >= 1 with a = (x^2+x)^(2^n - 1).
std::optional<unsigned> trivial_form(const Poly& a);

PerfectClass classify(const Poly& a);

// Bounds quoted from the literature on odd perfect polynomials. They are
// configuration, not anything this code derives.
struct OddFilterConfig {
    std::size_t min_omega = 5;
    std::size_t min_omega_special = 10;
    std::size_t min_big_omega = 12;
    std::size_t degree_exceeds = 200;
};

struct OddFilterReport {
    Poly candidate;
    bool is_square = false;
    std::size_t omega = 0;
    std::size_t big_omega = 0;
    std::size_t degree = 0;
    bool special = false;

    bool square_ok = false;
    bool omega_ok = false;
    bool big_omega_ok = false;
    bool degree_ok = false;
    bool special_omega_ok = false;

    // All conditions hold. Necessary only; says nothing about perfection.
    bool viable() const noexcept { return square_ok && omega_ok && big_omega_ok && degree_ok && special_omega_ok; }
};

// Throws DomainError when a is zero or even.
OddFilterReport odd_perfect_filter(const Poly& a, const OddFilterConfig& config = {});

inline constexpr std::size_t kMaxExhaustiveDegree = 24;
inline constexpr std::size_t kMaxOddDegree = 80;

struct SearchOptions {
    std::size_t max_deg = 0;
    bool unitary = false;
    // Enumerate A = S^2 with S free of linear factors instead of every A.
    bool odd_only = false;
    unsigned jobs = 1;
    // Odd mode keeps up to this many candidates rejected by the low-word
    // pre-filter, spread evenly over the candidate range, so callers can
    // confirm the filter never discards a fixed point.
    std::size_t rejected_sample = 0;
};

struct SearchOutcome {
    std::vector<SearchResult> results;  // ascending (degree, bitmask)
    std::size_t candidates = 0;
    std::vector<Poly> rejected_sample;  // ascending
};

// Throws ResourceError past kMaxExhaustiveDegree / kMaxOddDegree, and
// DomainError for a unitary odd search (not supported).
SearchOutcome search(const SearchOptions& options);

std::vector<SearchResult> search_fixed_points(std::size_t max_deg, bool unitary, bool odd_only, unsigned jobs = 1);

// "PERFECT deg=<d> <poly> class=<c>"
std::string format_result(const SearchResult& r);
// "kind=<k> degree=<d> poly=<poly> hex=<hex> class=<c>"
std::string format_result_kv(const SearchResult& r);

}  // namespace f2x
