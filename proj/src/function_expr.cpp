// function_expr.cpp

#include "f2x/function_expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "f2x/divisors.hpp"
#include "f2x/error.hpp"

namespace f2x {

struct FunctionExpr::Node {
    Kind kind;
    std::string identifier;
    std::vector<FunctionExpr> operands;
};

FunctionExpr FunctionExpr::name(std::string identifier) {
    return FunctionExpr(std::make_shared<const Node>(Node{Kind::name, std::move(identifier), {}}));
}

FunctionExpr FunctionExpr::convolution(FunctionExpr lhs, FunctionExpr rhs) {
    return FunctionExpr(std::make_shared<const Node>(Node{Kind::convolution, {}, {std::move(lhs), std::move(rhs)}}));
}

FunctionExpr FunctionExpr::inverse(FunctionExpr operand) {
    return FunctionExpr(std::make_shared<const Node>(Node{Kind::inverse, {}, {std::move(operand)}}));
}

FunctionExpr FunctionExpr::square(FunctionExpr operand) {
    return FunctionExpr(std::make_shared<const Node>(Node{Kind::square, {}, {std::move(operand)}}));
}

FunctionExpr::Kind FunctionExpr::kind() const noexcept { return node_->kind; }

const std::string& FunctionExpr::identifier() const {
    if (node_->kind != Kind::name) throw DomainError("expression is not a name");
    return node_->identifier;
}

const FunctionExpr& FunctionExpr::lhs() const {
    if (node_->kind == Kind::name) throw DomainError("a name has no operands");
    return node_->operands[0];
}

const FunctionExpr& FunctionExpr::rhs() const {
    if (node_->kind != Kind::convolution) throw DomainError("only a convolution has a right operand");
    return node_->operands[1];
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    FunctionExpr parse() {
        if (at_end()) throw ParseError("empty function expression", pos_);
        FunctionExpr e = expression();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    FunctionExpr expression() {
        FunctionExpr e = primary();
        while (peek() == '*') {
            ++pos_;
            e = FunctionExpr::convolution(std::move(e), primary());
        }
        return e;
    }

    FunctionExpr primary() {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            FunctionExpr e = expression();
            expect(')');
            return e;
        }
        const std::size_t start = pos_;
        std::string word;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            word += text_[pos_++];
        }
        if (word.empty()) {
            if (pos_ >= text_.size()) throw ParseError("expected a function", pos_);
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        if ((word == "inv" || word == "sq") && peek() == '(') {
            ++pos_;
            FunctionExpr operand = expression();
            expect(')');
            return word == "inv" ? FunctionExpr::inverse(std::move(operand)) : FunctionExpr::square(std::move(operand));
        }
        const auto names = builtin_names();
        if (std::find(names.begin(), names.end(), word) == names.end()) {
            throw ParseError("unknown function '" + word + "'", start);
        }
        return FunctionExpr::name(std::move(word));
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Visits every s with 0 <= s[i] <= t[i], mixed radix.
template <class Visit>
void for_each_below(const ExponentVector& t, Visit visit) {
    ExponentVector s(t.size(), 0);
    while (true) {
        visit(s);
        std::size_t i = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < t[i]) {
                ++s[i];
                break;
            }
            s[i] = 0;
        }
        if (i == s.size()) return;
    }
}

ExponentVector minus(const ExponentVector& t, const ExponentVector& s) {
    ExponentVector d(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) d[i] = t[i] - s[i];
    return d;
}

class LatticeOracle {
public:
    LatticeOracle(const Factorization& a, const FunctionTable& table) : a_(a), table_(table) {}

    Poly eval(const FunctionExpr& e, const ExponentVector& t) {
        auto key = std::make_pair(e.node_id(), t);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Poly value = compute(e, t);
        memo_.emplace(std::move(key), value);
        return value;
    }

private:
    Poly compute(const FunctionExpr& e, const ExponentVector& t) {
        switch (e.kind()) {
            case FunctionExpr::Kind::name:
                return table_.get(e.identifier())(sub_factorization(a_, t));
            case FunctionExpr::Kind::convolution:
            case FunctionExpr::Kind::square: {
                const FunctionExpr& l = e.lhs();
                const FunctionExpr& r = e.kind() == FunctionExpr::Kind::square ? e.lhs() : e.rhs();
                Poly acc;
                for_each_below(t, [&](const ExponentVector& s) { acc += eval(l, s) * eval(r, minus(t, s)); });
                return acc;
            }
            case FunctionExpr::Kind::inverse: {
                if (std::all_of(t.begin(), t.end(), [](unsigned v) { return v == 0; })) return Poly::one();
                // sum_{D | A} f(D) g(A/D) = 0 with g(1) = 1 gives
                // g(A) = sum_{D | A, D != 1} f(D) g(A/D) in characteristic 2.
                Poly acc;
                for_each_below(t, [&](const ExponentVector& s) {
                    if (std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 0; })) return;
                    acc += eval(e.lhs(), s) * eval(e, minus(t, s));
                });
                return acc;
            }
        }
        throw DomainError("unreachable expression kind");
    }

    const Factorization& a_;
    const FunctionTable& table_;
    std::map<std::pair<const void*, ExponentVector>, Poly> memo_;
};

}  // namespace

FunctionExpr parse_function_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const FunctionExpr& e) {
    switch (e.kind()) {
        case FunctionExpr::Kind::name:
            return e.identifier();
        case FunctionExpr::Kind::convolution: {
            const bool wrap = e.rhs().kind() == FunctionExpr::Kind::convolution;
            return to_string(e.lhs()) + "*" + (wrap ? "(" + to_string(e.rhs()) + ")" : to_string(e.rhs()));
        }
        case FunctionExpr::Kind::inverse:
            return "inv(" + to_string(e.lhs()) + ")";
        case FunctionExpr::Kind::square:
            return "sq(" + to_string(e.lhs()) + ")";
    }
    return {};
}

FunctionTable FunctionTable::standard() {
    static const FunctionTable table = [] {
        FunctionTable t;
        for (std::string_view n : builtin_names()) t.set(std::string(n), builtin(n));
        return t;
    }();
    return table;
}

void FunctionTable::set(const std::string& name, MultiplicativeFunction f) {
    entries_.insert_or_assign(name, std::move(f));
}

const MultiplicativeFunction& FunctionTable::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw DomainError("function '" + name + "' is not bound");
    return it->second;
}

MultiplicativeFunction compile(const FunctionExpr& e, const FunctionTable& table) {
    switch (e.kind()) {
        case FunctionExpr::Kind::name:
            return table.get(e.identifier());
        case FunctionExpr::Kind::convolution:
            return convolve(compile(e.lhs(), table), compile(e.rhs(), table));
        case FunctionExpr::Kind::inverse:
            return inverse(compile(e.lhs(), table));
        case FunctionExpr::Kind::square:
            return square_conv(compile(e.lhs(), table));
    }
    throw DomainError("unreachable expression kind");
}

Poly oracle_evaluate(const FunctionExpr& e, const Factorization& a, const FunctionTable& table) {
    ExponentVector full(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) full[i] = a[i].exponent;
    return LatticeOracle(a, table).eval(e, full);
}

Poly oracle_evaluate(const FunctionExpr& e, const Poly& a, const FunctionTable& table) {
    if (a.is_zero()) throw DomainError("functions are undefined at 0");
    return oracle_evaluate(e, factor(a), table);
}

}  // namespace f2x
