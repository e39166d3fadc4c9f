#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opforge/term.hpp"

namespace opforge {

// Word forms of the closed-form basis monomials. A left-normed word
// (l1,...,ln) is ((...(x_l1 x_l2)...)x_l(n-1)) x_ln; a right-normed word
// (r1,...,rn) is x_r1 ((...(x_r2 x_r3)...) x_rn).
enum class WordShape { left_normed, right_normed };

struct BasisWord {
    WordShape shape = WordShape::left_normed;
    std::vector<int> letters;

    Monomial to_monomial() const;  // over the one-operation signature
};

std::optional<std::vector<int>> as_left_normed(const Monomial& m);
std::optional<std::vector<int>> as_right_normed(const Monomial& m);  // degree >= 3

// Membership in the closed-form bases (single-operation monomials):
//   N: degree <= 2 all words; degree 3 left-normed with k2<=k3 or right-normed
//      with l1>=l2; degree >= 4 left-normed with tail sorted or right-normed
//      with r2>=r1 and r3<=...<=rn.
//   B: same through degree 3; degree >= 4 only fully sorted left-normed.
bool is_basis_N(const Monomial& m);
bool is_basis_B(const Monomial& m);

// Structure constants of the free algebras on these bases. Arguments must be
// basis monomials; results are supported on basis monomials.
Polynomial mult_N(const Monomial& a, const Monomial& b);
Polynomial mult_N(const Polynomial& a, const Polynomial& b);
Polynomial mult_B(const Monomial& a, const Monomial& b);
Polynomial mult_B(const Polynomial& a, const Polynomial& b);

// Evaluation homomorphisms (leaves to generators) into the basis algebras;
// linear on polynomials, idempotent on basis-supported input.
Polynomial nf_nov_s(const Monomial& m);
Polynomial nf_nov_s(const Polynomial& p);
Polynomial nf_bicom_s(const Monomial& m);
Polynomial nf_bicom_s(const Polynomial& p);

// Rewrite a two-operation polynomial into its pure-< and pure-> components,
// then normalize each part (nf_nov_s for <, nf_bicom_s for >). Both returned
// polynomials are over the one-operation signature; degree-1 terms land in
// the first slot.
std::pair<Polynomial, Polynomial> split_dernov_dual(const Polynomial& q);

// Conversions between one-operation polynomials and pure two-operation ones.
Polynomial to_two_op(const Polynomial& p, int op);
Polynomial to_one_op(const Polynomial& p);

enum class CensusMode { multilinear, generators };

// Number of basis monomials of the given degree: multilinear mode counts words
// using x1..xn once each; generators mode counts words over x1..xk.
long long census_N(int degree, CensusMode mode, int generators = 0);
long long census_B(int degree, CensusMode mode, int generators = 0);

}  // namespace opforge
