#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opforge/rational.hpp"

namespace opforge {

// A binary operation symbol: name plus the single-character glyph used by the
// term grammar ('<' for prec, '>' for succ, '*' for circ).
struct Operation {
    std::string name;
    char glyph = '*';
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Operation> ops);

    int size() const { return static_cast<int>(ops_.size()); }
    const Operation& op(int i) const { return ops_[i]; }
    const std::vector<Operation>& ops() const { return ops_; }
    int op_by_glyph(char g) const;  // -1 if unknown

    bool operator==(const Signature& o) const;

private:
    std::vector<Operation> ops_;
};

Signature one_op_signature();   // { circ '*' }
Signature two_op_signature();   // { prec '<', succ '>' }

// Operation-labelled planar binary tree with variable-labelled leaves, stored
// as its preorder code: a leaf is the (positive) variable index, an internal
// node is -(op index + 1). Fixed arity two makes the code self-delimiting.
class Monomial {
public:
    Monomial() = default;

    static Monomial leaf(int var);
    static Monomial node(int op, const Monomial& l, const Monomial& r);

    bool is_leaf() const { return code_.size() == 1; }
    int leaf_var() const { return code_[0]; }
    int top_op() const { return -code_[0] - 1; }
    Monomial left() const;
    Monomial right() const;

    int degree() const;
    int max_var() const;
    bool multilinear() const;   // uses exactly the variables 1..degree(), once each
    bool mixed_ops() const;     // at least two distinct operation labels
    bool uses_only_op(int op) const;

    std::span<const std::int32_t> code() const { return code_; }

    Monomial relabel(std::span<const int> perm) const;  // var v -> perm[v-1]
    Monomial substitute(std::span<const Monomial> assignment) const;  // var v -> assignment[v-1]
    Monomial map_ops(std::span<const int> op_map) const;

    bool operator==(const Monomial& o) const { return code_ == o.code_; }

private:
    friend struct MonomialHash;
    friend int compare(const Monomial&, const Monomial&);
    std::vector<std::int32_t> code_;
};

// The term order used everywhere: lower degree first; within a degree, mixed-
// operation monomials beat single-operation ones; ties break lexicographically
// on the preorder code with operation tokens above leaf tokens, operations
// ranked by signature position and leaves by variable index.
int compare(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};
struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Finite linear combination of monomials with exact rational coefficients.
// Terms are kept sorted in descending monomial order (leading term first).
class Polynomial {
public:
    using Term = std::pair<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(const Monomial& m, Rational c = Rational(1));
    static Polynomial from_terms(std::vector<Term> terms);  // merges + sorts

    bool zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Monomial& leading_monomial() const { return terms_.front().first; }

    bool homogeneous() const;
    int degree() const;           // 0 for the zero polynomial
    bool multilinear() const;     // every term multilinear of the same degree

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

    Polynomial relabel(std::span<const int> perm) const;
    Polynomial substitute(std::span<const Monomial> assignment) const;
    Polynomial map_ops(std::span<const int> op_map) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

// All multilinear monomials of the given degree, sorted ascending by the term
// order. Count = Catalan(n-1) * n! * |ops|^(n-1). Results are cached.
const std::vector<Monomial>& multilinear_basis(const Signature& sig, int n);

std::string to_string(const Monomial& m, const Signature& sig);
std::string to_string(const Polynomial& p, const Signature& sig);

// Term grammar: variables x1, x2, ... (a,b,c,d alias x1..x4); every product
// fully parenthesised; '+'/'-' between terms; optional rational coefficient
// prefixes. Throws std::invalid_argument with a description on bad input.
Polynomial parse_polynomial(std::string_view text, const Signature& sig);

}  // namespace opforge
