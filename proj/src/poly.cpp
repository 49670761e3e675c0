// poly.cpp - F2[x] arithmetic on coefficient bitmasks.

#include "f2x/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <ostream>

#include "f2x/error.hpp"

namespace f2x {

namespace {

using Word = Poly::Word;
constexpr std::size_t kBits = Poly::kWordBits;

// Highest exponent accepted by the text parser; keeps a typo such as
// "x^99999999999" from allocating gigabytes.
constexpr std::size_t kMaxParsedExponent = 1u << 20;

Word spread32(Word v) {
    v &= 0xffffffffULL;
    v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
    v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & 0x5555555555555555ULL;
    return v;
}

Word compress32(Word v) {
    v &= 0x5555555555555555ULL;
    v = (v | (v >> 1)) & 0x3333333333333333ULL;
    v = (v | (v >> 2)) & 0x0f0f0f0f0f0f0f0fULL;
    v = (v | (v >> 4)) & 0x00ff00ff00ff00ffULL;
    v = (v | (v >> 8)) & 0x0000ffff0000ffffULL;
    v = (v | (v >> 16)) & 0x00000000ffffffffULL;
    return v;
}

// Carryless 64x64 -> 128 product with a 4-bit window table.
unsigned __int128 clmul64(Word a, Word b) {
    unsigned __int128 table[16];
    table[0] = 0;
    for (unsigned i = 1; i < 16; ++i) {
        table[i] = (table[i >> 1] << 1) ^ ((i & 1) ? static_cast<unsigned __int128>(b) : 0);
    }
    unsigned __int128 acc = 0;
    for (int nibble = 15; nibble >= 0; --nibble) {
        acc <<= 4;
        acc ^= table[(a >> (4 * nibble)) & 15];
    }
    return acc;
}

std::size_t word_degree(Word w) { return kBits - 1 - static_cast<std::size_t>(std::countl_zero(w)); }

}  // namespace

Poly Poly::from_mask(Word mask) {
    Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
}

Poly Poly::from_words(std::span<const Word> words) {
    Poly p;
    p.words_.assign(words.begin(), words.end());
    p.trim();
    return p;
}

Poly Poly::monomial(std::size_t k) {
    Poly p;
    p.words_.resize(k / kBits + 1, 0);
    p.words_.back() = Word{1} << (k % kBits);
    return p;
}

std::size_t Poly::degree() const {
    if (words_.empty()) throw DomainError("degree of the zero polynomial is undefined");
    return (words_.size() - 1) * kBits + word_degree(words_.back());
}

bool Poly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kBits;
    return w < words_.size() && ((words_[w] >> (i % kBits)) & 1);
}

void Poly::set_coeff(std::size_t i, bool value) {
    if (coeff(i) != value) flip_coeff(i);
}

void Poly::flip_coeff(std::size_t i) {
    const std::size_t w = i / kBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= Word{1} << (i % kBits);
    trim();
}

std::size_t Poly::weight() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

void Poly::add_shifted(const Poly& other, std::size_t shift) {
    if (other.is_zero()) return;
    const std::size_t ws = shift / kBits;
    const unsigned bs = static_cast<unsigned>(shift % kBits);
    const std::size_t need = other.words_.size() + ws + (bs ? 1 : 0);
    if (words_.size() < need) words_.resize(need, 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        const Word w = other.words_[i];
        words_[i + ws] ^= w << bs;
        if (bs) words_[i + ws + 1] ^= w >> (kBits - bs);
    }
    trim();
}

Poly& Poly::operator<<=(std::size_t k) {
    if (is_zero() || k == 0) return *this;
    Poly shifted;
    shifted.add_shifted(*this, k);
    return *this = std::move(shifted);
}

Poly& Poly::operator>>=(std::size_t k) {
    const std::size_t ws = k / kBits;
    const unsigned bs = static_cast<unsigned>(k % kBits);
    if (ws >= words_.size()) {
        words_.clear();
        return *this;
    }
    const std::size_t n = words_.size() - ws;
    for (std::size_t i = 0; i < n; ++i) {
        Word w = words_[i + ws] >> bs;
        if (bs && i + ws + 1 < words_.size()) w |= words_[i + ws + 1] << (kBits - bs);
        words_[i] = w;
    }
    words_.resize(n);
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto aw = a.words();
    const auto bw = b.words();
    std::vector<Word> out(aw.size() + bw.size(), 0);
    for (std::size_t i = 0; i < aw.size(); ++i) {
        if (aw[i] == 0) continue;
        for (std::size_t j = 0; j < bw.size(); ++j) {
            const unsigned __int128 prod = clmul64(aw[i], bw[j]);
            out[i + j] ^= static_cast<Word>(prod);
            out[i + j + 1] ^= static_cast<Word>(prod >> 64);
        }
    }
    return Poly::from_words(out);
}

Poly mul_schoolbook(const Poly& a, const Poly& b) {
    Poly acc;
    if (a.is_zero() || b.is_zero()) return acc;
    const std::size_t da = a.degree();
    for (std::size_t i = 0; i <= da; ++i) {
        if (a.coeff(i)) acc.add_shifted(b, i);
    }
    return acc;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
    return std::equal(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (a.words_.size() != b.words_.size()) return a.words_.size() <=> b.words_.size();
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
}

DivRem divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    const std::size_t db = b.degree();
    if (a.is_zero() || a.degree() < db) return {Poly{}, a};

    if (a.fits_word()) {
        Word r = a.low_word();
        const Word d = b.low_word();
        Word q = 0;
        while (r != 0) {
            const std::size_t dr = word_degree(r);
            if (dr < db) break;
            r ^= d << (dr - db);
            q |= Word{1} << (dr - db);
        }
        return {Poly::from_mask(q), Poly::from_mask(r)};
    }

    Poly r = a;
    Poly q;
    while (!r.is_zero()) {
        const std::size_t dr = r.degree();
        if (dr < db) break;
        r.add_shifted(b, dr - db);
        q.flip_coeff(dr - db);
    }
    return {std::move(q), std::move(r)};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }
bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly square(const Poly& a) {
    const auto w = a.words();
    std::vector<Word> out(2 * w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        out[2 * i] = spread32(w[i]);
        out[2 * i + 1] = spread32(w[i] >> 32);
    }
    return Poly::from_words(out);
}

Poly pow(const Poly& a, std::uint64_t k) {
    if (k == 0) {
        if (a.is_zero()) throw DomainError("0^0 is undefined");
        return Poly::one();
    }
    Poly result = Poly::one();
    Poly base = a;
    while (true) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k == 0) break;
        base = square(base);
    }
    return result;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

std::optional<Poly> sqrt_if_square(const Poly& a) {
    if (a.is_zero()) throw DomainError("sqrt_if_square requires a nonzero polynomial");
    const auto w = a.words();
    for (Word v : w) {
        if (v & 0xaaaaaaaaaaaaaaaaULL) return std::nullopt;
    }
    std::vector<Word> out((w.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Word half = compress32(w[i]);
        out[i / 2] |= (i % 2 == 0) ? half : (half << 32);
    }
    return Poly::from_words(out);
}

Poly conjugate(const Poly& a) {
    Poly r;
    if (a.is_zero()) return r;
    for (std::size_t i = a.degree() + 1; i-- > 0;) {
        // r <- r * (x + 1) + a_i
        Poly shifted = r << 1;
        r += shifted;
        if (a.coeff(i)) r.flip_coeff(0);
    }
    return r;
}

Poly derivative(const Poly& a) {
    Poly d = a >> 1;
    std::vector<Word> w(d.words().begin(), d.words().end());
    for (Word& v : w) v &= 0x5555555555555555ULL;
    return Poly::from_words(w);
}

std::string to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.degree() + 1; i-- > 0;) {
        if (!a.coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += '1';
        } else if (i == 1) {
            out += 'x';
        } else {
            out += "x^";
            out += std::to_string(i);
        }
    }
    return out;
}

std::string to_hex(const Poly& a) {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (a.is_zero()) return "0x0";
    std::string digits;
    const std::size_t nibbles = a.degree() / 4 + 1;
    for (std::size_t n = nibbles; n-- > 0;) {
        unsigned v = 0;
        for (unsigned b = 0; b < 4; ++b) v |= static_cast<unsigned>(a.coeff(4 * n + b)) << b;
        digits += kDigits[v];
    }
    return "0x" + digits;
}

std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << to_string(a); }

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
};

Poly parse_hex(Cursor& cur) {
    cur.pos += 2;  // "0x"
    std::vector<int> nibbles;
    while (!cur.at_end()) {
        const char c = cur.text[cur.pos];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw ParseError(std::string("invalid hex digit '") + c + "'", cur.pos);
        }
        nibbles.push_back(v);
        ++cur.pos;
    }
    if (nibbles.empty()) throw ParseError("hex literal has no digits", cur.pos);
    if (nibbles.size() * 4 > kMaxParsedExponent) throw ParseError("hex literal too long", 0);
    Poly p;
    std::size_t bit = 0;
    for (auto it = nibbles.rbegin(); it != nibbles.rend(); ++it, bit += 4) {
        for (unsigned b = 0; b < 4; ++b) {
            if ((*it >> b) & 1) p.flip_coeff(bit + b);
        }
    }
    return p;
}

}  // namespace

Poly parse_poly(std::string_view text, std::vector<std::string>* diagnostics) {
    Cursor cur{text};
    if (cur.at_end()) throw ParseError("empty polynomial", cur.pos);

    {
        const std::size_t start = cur.pos;
        if (start + 1 < text.size() && text[start] == '0' && (text[start + 1] == 'x' || text[start + 1] == 'X')) {
            return parse_hex(cur);
        }
    }

    Poly p;
    while (true) {
        const std::size_t term_pos = (cur.skip_space(), cur.pos);
        const char c = cur.peek();
        std::optional<std::size_t> exponent;
        if (c == '0') {
            ++cur.pos;
        } else if (c == '1') {
            ++cur.pos;
            exponent = 0;
        } else if (c == 'x' || c == 'X') {
            ++cur.pos;
            exponent = 1;
            if (cur.peek() == '^') {
                ++cur.pos;
                cur.skip_space();
                const std::size_t digits_pos = cur.pos;
                std::size_t value = 0;
                while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
                    value = value * 10 + static_cast<std::size_t>(text[cur.pos] - '0');
                    if (value > kMaxParsedExponent) throw ParseError("exponent too large", digits_pos);
                    ++cur.pos;
                }
                if (cur.pos == digits_pos) throw ParseError("expected exponent after '^'", digits_pos);
                exponent = value;
            }
        } else if (c == '\0') {
            throw ParseError("expected a term", cur.pos);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", cur.pos);
        }

        if (exponent) {
            if (p.coeff(*exponent) && diagnostics) {
                diagnostics->push_back("term at position " + std::to_string(term_pos) +
                                       " cancels an earlier x^" + std::to_string(*exponent));
            }
            p.flip_coeff(*exponent);
        }

        if (cur.at_end()) break;
        if (cur.peek() != '+') {
            throw ParseError(std::string("expected '+' but found '") + cur.peek() + "'", cur.pos);
        }
        ++cur.pos;
    }
    return p;
}

std::size_t PolyHash::operator()(const Poly& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Word w : p.words()) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace f2x
