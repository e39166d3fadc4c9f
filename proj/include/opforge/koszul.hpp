#pragma once

#include <span>

#include "opforge/expansion.hpp"
#include "opforge/presentation.hpp"

namespace opforge {

// Formal sum of tensors (left monomial over the dual signature) (x) (right
// monomial over the primal signature) with rational coefficients.
struct TensorTerm {
    Monomial left;
    Monomial right;
    Rational coeff;
};

class TensorElement {
public:
    TensorElement() = default;
    static TensorElement pair(int var);  // y_var (x) x_var

    const std::vector<TensorTerm>& terms() const { return terms_; }
    int size() const { return static_cast<int>(terms_.size()); }
    bool zero() const { return terms_.empty(); }

    TensorElement& operator+=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }

    static TensorElement from_terms(std::vector<TensorTerm> terms);  // merge + drop zeros

private:
    std::vector<TensorTerm> terms_;
};

// Skew-symmetric bracket: [u, v] = sum over operations i of
//   (u_l v_i u'_l) (x) (u_r o_i u'_r)  -  (u'_l v_i u_l) (x) (u'_r o_i u_r)
// extended bilinearly, with the dual-basis signs of the construction baked in.
TensorElement bracket(const TensorElement& u, const TensorElement& v, const Signature& sig);

// [[1,2],3] + [[2,3],1] + [[3,1],2] over generic degree-1 pairs.
TensorElement jacobiator(const Presentation& p);

// Koszul dual of a quadratic presentation: reduce the right tensor factors of
// the jacobiator to normal form, collect left factors per normal-form
// monomial, and return a row-reduced generating set of their span. The dual
// signature reuses the primal glyphs. Throws std::invalid_argument when p is
// not quadratic.
Presentation dual_presentation(const Presentation& p);

// True iff the reductions of the given degree-n monomials modulo p are
// linearly independent.
bool check_independence(const Presentation& p, std::span<const Monomial> monos, int n);

}  // namespace opforge
