// multfun.cpp

#include "f2x/multfun.hpp"

#include <array>
#include <mutex>
#include <unordered_map>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"

namespace f2x {

namespace {

struct PointKey {
    Poly prime;
    unsigned exponent;
    friend bool operator==(const PointKey&, const PointKey&) = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const noexcept {
        return PolyHash{}(k.prime) * 31 + k.exponent;
    }
};

constexpr std::array<std::string_view, 7> kBuiltinNames = {"delta", "z", "id", "mu", "phi", "sigma", "sigma_star"};

Poly sigma_prime_power(const Poly& p, unsigned r) {
    Poly acc = Poly::one();
    Poly term = Poly::one();
    for (unsigned i = 1; i <= r; ++i) {
        term = term * p;
        acc += term;
    }
    return acc;
}

}  // namespace

struct MultiplicativeFunction::State {
    std::string name;
    Rule rule;
    bool totally_multiplicative = false;
    bool product = false;

    std::mutex mutex;
    std::unordered_map<PointKey, Poly, PointKeyHash> cache;
};

MultiplicativeFunction::MultiplicativeFunction(std::string name, Rule rule, bool totally_multiplicative)
    : state_(std::make_shared<State>()) {
    state_->name = std::move(name);
    state_->rule = std::move(rule);
    state_->totally_multiplicative = totally_multiplicative;
}

const std::string& MultiplicativeFunction::name() const noexcept { return state_->name; }
bool MultiplicativeFunction::totally_multiplicative() const noexcept { return state_->totally_multiplicative; }
bool MultiplicativeFunction::is_product() const noexcept { return state_->product; }

Poly MultiplicativeFunction::at(const Poly& prime, unsigned exponent) const {
    if (exponent == 0) return Poly::one();
    PointKey key{prime, exponent};
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->cache.find(key); it != state_->cache.end()) return it->second;
    }
    // Computed outside the lock: rules recurse into other functions (and, for
    // sq(f), into this one's operands). Racing writers insert equal values.
    Poly value = state_->rule(prime, exponent);
    std::lock_guard lock(state_->mutex);
    state_->cache.emplace(std::move(key), value);
    return value;
}

Poly MultiplicativeFunction::operator()(const Factorization& a) const {
    Poly acc = Poly::one();
    for (const auto& [p, e] : a.factors()) acc = acc * at(p, e);
    return acc;
}

Poly MultiplicativeFunction::operator()(const Poly& a) const {
    if (a.is_zero()) throw DomainError("multiplicative functions are undefined at 0");
    return (*this)(factor(a));
}

ArithmeticFunction MultiplicativeFunction::as_function() const {
    return [f = *this](const Poly& a) { return f(a); };
}

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

MultiplicativeFunction builtin(std::string_view name) {
    using MF = MultiplicativeFunction;
    if (name == "delta") return MF("delta", [](const Poly&, unsigned) { return Poly{}; }, true);
    if (name == "z") return MF("z", [](const Poly&, unsigned) { return Poly::one(); }, true);
    if (name == "id") return MF("id", [](const Poly& p, unsigned r) { return pow(p, r); }, true);
    if (name == "mu") return MF("mu", [](const Poly&, unsigned r) { return r == 1 ? Poly::one() : Poly{}; });
    if (name == "phi") return MF("phi", [](const Poly& p, unsigned r) { return pow(p, r) + pow(p, r - 1); });
    if (name == "sigma") return MF("sigma", sigma_prime_power);
    if (name == "sigma_star") return MF("sigma_star", [](const Poly& p, unsigned r) { return Poly::one() + pow(p, r); });
    throw DomainError("unknown function '" + std::string(name) + "'");
}

Poly evaluate(const MultiplicativeFunction& f, const Poly& a) { return f(a); }

MultiplicativeFunction convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g) {
    std::string name = f.name() + "*" + (g.is_product() ? "(" + g.name() + ")" : g.name());
    MultiplicativeFunction h(std::move(name), [f, g](const Poly& p, unsigned m) {
        Poly acc;
        for (unsigned l = 0; l <= m; ++l) acc += f.at(p, l) * g.at(p, m - l);
        return acc;
    });
    h.state_->product = true;
    return h;
}

MultiplicativeFunction inverse(const MultiplicativeFunction& f) {
    return MultiplicativeFunction("inv(" + f.name() + ")", [f](const Poly& p, unsigned r) {
        std::vector<Poly> inv(r + 1);
        inv[0] = Poly::one();
        for (unsigned k = 1; k <= r; ++k) {
            Poly acc;
            for (unsigned l = 0; l < k; ++l) acc += inv[l] * f.at(p, k - l);
            inv[k] = std::move(acc);
        }
        return inv[r];
    });
}

MultiplicativeFunction square_conv(const MultiplicativeFunction& f) {
    return MultiplicativeFunction("sq(" + f.name() + ")", [f](const Poly& p, unsigned m) {
        Poly acc;
        for (unsigned l = 0; l <= m; ++l) acc += f.at(p, l) * f.at(p, m - l);
        return acc;
    });
}

MultiplicativeFunction pointwise_mul(const MultiplicativeFunction& f, const MultiplicativeFunction& g) {
    return MultiplicativeFunction(
        "pmul(" + f.name() + "," + g.name() + ")",
        [f, g](const Poly& p, unsigned r) { return f.at(p, r) * g.at(p, r); },
        f.totally_multiplicative() && g.totally_multiplicative());
}

ArithmeticFunction pointwise_add(const MultiplicativeFunction& f, const MultiplicativeFunction& g) {
    return [f, g](const Poly& a) { return f(a) + g(a); };
}

Poly convolve_bruteforce(const ArithmeticFunction& f, const ArithmeticFunction& g, const Poly& a) {
    if (a.is_zero()) throw DomainError("convolution is undefined at 0");
    Poly acc;
    for (const Poly& d : divisors(factor(a))) acc += f(d) * g(a / d);
    return acc;
}

Poly convolve_bruteforce(const MultiplicativeFunction& f, const MultiplicativeFunction& g, const Poly& a) {
    if (a.is_zero()) throw DomainError("convolution is undefined at 0");
    const Factorization fa = factor(a);
    Poly acc;
    for_each_divisor_exponents(fa, [&](const ExponentVector& t) {
        acc += f(sub_factorization(fa, t)) * g(sub_factorization(fa, complement(fa, t)));
    });
    return acc;
}

MultiplicativeFunction with_perturbed_value(const MultiplicativeFunction& f, const Poly& prime, unsigned exponent,
                                            const Poly& delta_value) {
    return with_rule(f, [f, prime, exponent, delta_value](const Poly& p, unsigned r) {
        Poly v = f.at(p, r);
        if (r == exponent && p == prime) v += delta_value;
        return v;
    });
}

MultiplicativeFunction with_rule(const MultiplicativeFunction& f, MultiplicativeFunction::Rule rule) {
    return MultiplicativeFunction(f.name(), std::move(rule), f.totally_multiplicative());
}

}  // namespace f2x
