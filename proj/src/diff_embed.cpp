#include "opforge/diff_embed.hpp"

#include <algorithm>

namespace opforge {

DiffPolynomial DiffPolynomial::variable(int gen, int d_order, int pd_order) {
    DiffPolynomial p;
    p.terms_.push_back({{DiffVariable{gen, d_order, pd_order}}, Rational(1)});
    return p;
}

DiffPolynomial DiffPolynomial::from_terms(std::vector<Term> terms) {
    for (auto& [m, c] : terms) std::sort(m.begin(), m.end());
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    DiffPolynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

DiffPolynomial& DiffPolynomial::operator+=(const DiffPolynomial& o) {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    *this = from_terms(std::move(all));
    return *this;
}

DiffPolynomial& DiffPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.second *= c;
    }
    return *this;
}

DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
    std::vector<DiffPolynomial::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            DiffMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.push_back({std::move(m), ca * cb});
        }
    }
    return DiffPolynomial::from_terms(std::move(out));
}

namespace {

template <typename Raise>
DiffPolynomial leibniz(const DiffPolynomial& p, Raise raise) {
    std::vector<DiffPolynomial::Term> out;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            DiffMonomial mm = m;
            raise(mm[i]);
            out.push_back({std::move(mm), c});
        }
    }
    return DiffPolynomial::from_terms(std::move(out));
}

}  // namespace

DiffPolynomial deriv_d(const DiffPolynomial& p) {
    return leibniz(p, [](DiffVariable& v) { ++v.d_order; });
}

DiffPolynomial deriv_pd(const DiffPolynomial& p) {
    return leibniz(p, [](DiffVariable& v) { ++v.pd_order; });
}

DiffPolynomial tau(const Monomial& m) {
    if (m.is_leaf()) return DiffPolynomial::variable(m.leaf_var());
    const DiffPolynomial l = tau(m.left());
    const DiffPolynomial r = tau(m.right());
    if (m.top_op() == 1)  // a>b = ∂(a)·d(b)
        return deriv_pd(l) * deriv_d(r);
    return l * deriv_d(deriv_pd(r));  // a<b = a·d(∂(b))
}

DiffPolynomial tau(const Polynomial& p) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        DiffPolynomial t = tau(m);
        t *= c;
        out += t;
    }
    return out;
}

DiffPolynomial tau_nov(const Monomial& m) {
    if (m.is_leaf()) return DiffPolynomial::variable(m.leaf_var());
    return tau_nov(m.left()) * deriv_d(tau_nov(m.right()));
}

DiffPolynomial tau_nov(const Polynomial& p) {
    DiffPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        DiffPolynomial t = tau_nov(m);
        t *= c;
        out += t;
    }
    return out;
}

bool verify_identity_under_tau(const Polynomial& rel, TauMap map) {
    return (map == TauMap::tau ? tau(rel) : tau_nov(rel)).zero();
}

WeightProfile weight_profile(const DiffPolynomial& p) {
    WeightProfile out;
    for (const auto& [m, c] : p.terms()) {
        WeightEntry e{m, 0, 0};
        for (const auto& v : m) {
            e.total_d += v.d_order;
            e.total_pd += v.pd_order;
        }
        out.entries.push_back(std::move(e));
    }
    out.homogeneous = true;
    for (const auto& e : out.entries)
        if (e.total_d != out.entries.front().total_d ||
            e.total_pd != out.entries.front().total_pd)
            out.homogeneous = false;
    return out;
}

std::string to_string(const DiffMonomial& m) {
    std::string out;
    for (const auto& v : m) {
        out += "x" + std::to_string(v.gen) + "^(" + std::to_string(v.d_order) + "," +
               std::to_string(v.pd_order) + ")";
    }
    return out;
}

std::string to_string(const DiffPolynomial& p) {
    if (p.zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational ac = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (ac != 1) out += rational_to_string(ac);
        out += to_string(m);
    }
    return out;
}

}  // namespace opforge
