#include "opforge/koszul.hpp"

#include <algorithm>
#include <map>

namespace opforge {

namespace {

// canonical order for merging tensor terms
bool tensor_term_less(const TensorTerm& a, const TensorTerm& b) {
    const int cl = compare(a.left, b.left);
    if (cl != 0) return cl > 0;
    return compare(a.right, b.right) > 0;
}

}  // namespace

TensorElement TensorElement::pair(int var) {
    TensorElement t;
    t.terms_.push_back({Monomial::leaf(var), Monomial::leaf(var), Rational(1)});
    return t;
}

TensorElement TensorElement::from_terms(std::vector<TensorTerm> terms) {
    std::sort(terms.begin(), terms.end(), tensor_term_less);
    TensorElement out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().left == t.left &&
            out.terms_.back().right == t.right)
            out.terms_.back().coeff += t.coeff;
        else
            out.terms_.push_back(std::move(t));
        if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
    }
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    std::vector<TensorTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    *this = from_terms(std::move(all));
    return *this;
}

TensorElement bracket(const TensorElement& u, const TensorElement& v, const Signature& sig) {
    std::vector<TensorTerm> out;
    out.reserve(2 * sig.size() * u.size() * v.size());
    for (const auto& a : u.terms()) {
        for (const auto& b : v.terms()) {
            const Rational c = a.coeff * b.coeff;
            for (int op = 0; op < sig.size(); ++op) {
                out.push_back({Monomial::node(op, a.left, b.left),
                               Monomial::node(op, a.right, b.right), c});
                out.push_back({Monomial::node(op, b.left, a.left),
                               Monomial::node(op, b.right, a.right), -c});
            }
        }
    }
    return TensorElement::from_terms(std::move(out));
}

TensorElement jacobiator(const Presentation& p) {
    const auto y1 = TensorElement::pair(1);
    const auto y2 = TensorElement::pair(2);
    const auto y3 = TensorElement::pair(3);
    TensorElement j = bracket(bracket(y1, y2, p.sig), y3, p.sig);
    j += bracket(bracket(y2, y3, p.sig), y1, p.sig);
    j += bracket(bracket(y3, y1, p.sig), y2, p.sig);
    return j;
}

Presentation dual_presentation(const Presentation& p) {
    if (!p.quadratic())
        throw std::invalid_argument("dual_presentation: presentation is not quadratic");
    const auto cb = normal_form_basis(p, 3);

    // J = sum_beta L_beta (x) beta over the normal-form monomials beta
    std::map<int, Polynomial> lefts;  // nf column -> accumulated left factor
    for (const auto& t : jacobiator(p).terms()) {
        const SparseVec red = cb->reduce_vec(cb->to_vec(Polynomial(t.right)));
        for (const auto& e : red)
            lefts[e.col] += Polynomial(t.left, t.coeff * e.val);
    }

    const auto& dual_basis = multilinear_basis(p.sig, 3);
    const int B = static_cast<int>(dual_basis.size());
    std::vector<Monomial> columns(dual_basis.rbegin(), dual_basis.rend());
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    for (int j = 0; j < B; ++j) col_of.emplace(columns[j], j);

    RrefBuilder builder(B);
    for (const auto& [beta, L] : lefts) {
        SparseVec v;
        v.reserve(L.size());
        for (const auto& [m, c] : L.terms()) v.push_back({col_of.at(m), c});
        builder.add_row(std::move(v));
    }

    Presentation dual;
    dual.name = p.name + "_dual";
    dual.sig = p.sig;  // the dual operations keep the primal glyphs
    const RrefResult r = builder.finish();
    for (int i = 0; i < r.rank; ++i) {
        std::vector<Polynomial::Term> terms;
        for (const auto& e : r.reduced.row(i)) terms.push_back({columns[e.col], e.val});
        dual.relations.push_back(Polynomial::from_terms(std::move(terms)));
    }
    return dual;
}

bool check_independence(const Presentation& p, std::span<const Monomial> monos, int n) {
    const auto cb = normal_form_basis(p, n);
    RrefBuilder builder(static_cast<int>(cb->columns().size()));
    int rank = 0;
    for (const auto& m : monos) {
        if (m.degree() != n)
            throw std::invalid_argument("check_independence: arity mismatch");
        if (builder.add_row(cb->reduce_vec(cb->to_vec(Polynomial(m))))) ++rank;
    }
    return rank == static_cast<int>(monos.size());
}

}  // namespace opforge
