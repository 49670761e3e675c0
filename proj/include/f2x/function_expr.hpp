// function_expr.hpp - expressions over the builtin multiplicative functions.
//
//   expr    := primary ('*' primary)*        left-associative convolution
//   primary := name | 'inv(' expr ')' | 'sq(' expr ')' | '(' expr ')'
//   name    := delta | z | id | mu | phi | sigma | sigma_star
//
// An expression has two evaluation routes. compile() turns it into a
// MultiplicativeFunction whose values come from prime-power recursions;
// oracle_evaluate() works directly on the divisor lattice of the argument,
// summing over every divisor at every convolution node and solving
// f*f^inv = delta divisor by divisor for inverses. The identity checker
// compares closed forms against the second route.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "f2x/factorize.hpp"
#include "f2x/multfun.hpp"
#include "f2x/poly.hpp"

namespace f2x {

class FunctionExpr {
public:
    enum class Kind { name, convolution, inverse, square };

    static FunctionExpr name(std::string identifier);
    static FunctionExpr convolution(FunctionExpr lhs, FunctionExpr rhs);
    static FunctionExpr inverse(FunctionExpr operand);
    static FunctionExpr square(FunctionExpr operand);

    Kind kind() const noexcept;
    const std::string& identifier() const;  // Kind::name only
    const FunctionExpr& lhs() const;         // convolution; also the operand of inverse/square
    const FunctionExpr& rhs() const;         // convolution only

    // Identity of the underlying node, stable across copies.
    const void* node_id() const noexcept { return node_.get(); }

private:
    struct Node;
    explicit FunctionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Throws ParseError on malformed text and for names outside the builtin set.
FunctionExpr parse_function_expr(std::string_view text);

// Canonical text; matches the name of the compiled function.
std::string to_string(const FunctionExpr& e);

// Name -> function binding used when compiling or oracle-evaluating. The
// standard table holds the seven builtins; tests swap entries to inject
// faults.
class FunctionTable {
public:
    static FunctionTable standard();

    void set(const std::string& name, MultiplicativeFunction f);
    const MultiplicativeFunction& get(const std::string& name) const;

private:
    std::map<std::string, MultiplicativeFunction, std::less<>> entries_;
};

MultiplicativeFunction compile(const FunctionExpr& e, const FunctionTable& table = FunctionTable::standard());

Poly oracle_evaluate(const FunctionExpr& e, const Factorization& a,
                     const FunctionTable& table = FunctionTable::standard());
Poly oracle_evaluate(const FunctionExpr& e, const Poly& a, const FunctionTable& table = FunctionTable::standard());

}  // namespace f2x
