// poly.hpp - binary polynomials, i.e. elements of F2[x].
//
// A Poly is a coefficient bitmask (bit i = coefficient of x^i) kept in
// canonical form: no high zero words are stored, so two polynomials are equal
// iff their word vectors are equal. The first two words live inline, which
// covers every degree the searches in this project reach without touching the
// heap; larger values spill transparently.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace f2x {

class Poly {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Poly() = default;

    static Poly from_mask(Word mask);
    static Poly from_words(std::span<const Word> words);
    static Poly monomial(std::size_t k);
    static Poly one() { return from_mask(1); }
    static Poly x() { return from_mask(2); }

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    // Index of the highest set coefficient. The zero polynomial has no degree:
    // asking for it throws DomainError rather than returning a value that
    // could take part in arithmetic.
    std::size_t degree() const;

    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    void flip_coeff(std::size_t i);

    // Number of nonzero coefficients, i.e. the value at x = 1 read as an integer.
    std::size_t weight() const noexcept;
    bool constant_term() const noexcept { return !words_.empty() && (words_[0] & 1); }

    std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
    bool fits_word() const noexcept { return words_.size() <= 1; }
    Word low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

    Poly& operator+=(const Poly& other);
    Poly& operator<<=(std::size_t k);
    Poly& operator>>=(std::size_t k);

    // this += other * x^shift, in place.
    void add_shifted(const Poly& other, std::size_t shift);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator<<(Poly a, std::size_t k) { return a <<= k; }
    friend Poly operator>>(Poly a, std::size_t k) { return a >>= k; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) noexcept;
    // Numeric order of the bitmasks; equivalently (degree, bitmask) order.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

private:
    void trim() noexcept;

    boost::container::small_vector<Word, 2> words_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

// Product by the bit-serial shift-XOR loop. Reference for the faster path
// used by operator*.
Poly mul_schoolbook(const Poly& a, const Poly& b);

DivRem divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly gcd(Poly a, Poly b);
Poly square(const Poly& a);
Poly pow(const Poly& a, std::uint64_t k);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);

// S with S^2 = a when a is a square (all odd-index coefficients clear).
std::optional<Poly> sqrt_if_square(const Poly& a);

// a(x+1). An involutive ring automorphism of F2[x].
Poly conjugate(const Poly& a);
Poly derivative(const Poly& a);

// Canonical rendering in strictly descending powers, e.g. "x^5+x^4+x^2+x".
std::string to_string(const Poly& a);
// "0x..." with bit i = coefficient of x^i.
std::string to_hex(const Poly& a);
std::ostream& operator<<(std::ostream& os, const Poly& a);

// Accepts `term ('+' term)*` with term = 0 | 1 | x | x^N (whitespace ignored)
// or a hex literal. Repeated terms cancel; each cancellation is appended to
// diagnostics when a sink is supplied.
Poly parse_poly(std::string_view text, std::vector<std::string>* diagnostics = nullptr);

struct PolyHash {
    std::size_t operator()(const Poly& p) const noexcept;
};

}  // namespace f2x
