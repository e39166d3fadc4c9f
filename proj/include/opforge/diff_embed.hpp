#pragma once

#include <string>
#include <vector>

#include "opforge/term.hpp"

namespace opforge {

// x_i^(n,m) = d^n ∂^m (x_i) in the commutative polynomial ring with two
// commuting derivations d and ∂.
struct DiffVariable {
    int gen = 1;
    int d_order = 0;
    int pd_order = 0;

    auto operator<=>(const DiffVariable&) const = default;
};

// Commutative monomial: multiset of variables, kept sorted.
using DiffMonomial = std::vector<DiffVariable>;

class DiffPolynomial {
public:
    using Term = std::pair<DiffMonomial, Rational>;

    DiffPolynomial() = default;
    static DiffPolynomial variable(int gen, int d_order = 0, int pd_order = 0);
    static DiffPolynomial from_terms(std::vector<Term> terms);

    bool zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }

    DiffPolynomial& operator+=(const DiffPolynomial& o);
    DiffPolynomial& operator*=(const Rational& c);
    friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);

    bool operator==(const DiffPolynomial& o) const { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

// Leibniz derivations: deriv_d raises d_order, deriv_pd raises pd_order.
DiffPolynomial deriv_d(const DiffPolynomial& p);
DiffPolynomial deriv_pd(const DiffPolynomial& p);

// The embedding of two-operation terms:
//   tau(x_i) = x_i^(0,0),  tau(a>b) = ∂(tau a) · d(tau b),
//   tau(a<b) = tau a · d(∂(tau b)).
DiffPolynomial tau(const Monomial& m);
DiffPolynomial tau(const Polynomial& p);

// The one-operation embedding a*b -> a · d(b).
DiffPolynomial tau_nov(const Monomial& m);
DiffPolynomial tau_nov(const Polynomial& p);

enum class TauMap { tau, tau_nov };

// True iff the image of the relation expands to the zero polynomial.
bool verify_identity_under_tau(const Polynomial& rel, TauMap map);

struct WeightEntry {
    DiffMonomial monomial;
    int total_d = 0;   // sum of d orders
    int total_pd = 0;  // sum of ∂ orders
};

struct WeightProfile {
    std::vector<WeightEntry> entries;
    bool homogeneous = false;  // all (total_d, total_pd) pairs equal
};

WeightProfile weight_profile(const DiffPolynomial& p);

// Monomials print as products x<i>^(<n>,<m>) sorted by (i, n, m).
std::string to_string(const DiffMonomial& m);
std::string to_string(const DiffPolynomial& p);

}  // namespace opforge
