#include "opforge/expansion.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace opforge {

int default_arity_cap(const Signature& sig) {
    int cap = sig.size() <= 1 ? 6 : 5;
    if (const char* env = std::getenv("OPERAD_FORGE_MAX_ARITY")) {
        const int v = std::atoi(env);
        if (v > cap) cap = v;
    }
    return cap;
}

namespace {

// Scale-normalised fingerprint used to drop duplicate polynomials.
std::string canonical_key(const Polynomial& p) {
    std::string key;
    if (p.zero()) return key;
    const Rational& lead = p.terms().front().second;
    for (const auto& [m, c] : p.terms()) {
        for (auto t : m.code()) key.append(reinterpret_cast<const char*>(&t), sizeof(t));
        key += ':';
        key += rational_to_string(c / lead);
        key += ';';
    }
    return key;
}

std::vector<Polynomial> grow_once(const Polynomial& p, int d, const Signature& sig) {
    std::vector<Polynomial> out;
    const int fresh = d + 1;
    const Monomial xf = Monomial::leaf(fresh);
    for (int op = 0; op < sig.size(); ++op) {
        std::vector<Polynomial::Term> right, left;
        for (const auto& [m, c] : p.terms()) {
            right.push_back({Monomial::node(op, m, xf), c});
            left.push_back({Monomial::node(op, xf, m), c});
        }
        out.push_back(Polynomial::from_terms(std::move(right)));
        out.push_back(Polynomial::from_terms(std::move(left)));
        for (int v = 1; v <= d; ++v) {
            std::vector<Monomial> assign;
            assign.reserve(d);
            for (int u = 1; u <= d; ++u) assign.push_back(Monomial::leaf(u));
            assign[v - 1] = Monomial::node(op, Monomial::leaf(v), xf);
            out.push_back(p.substitute(assign));
            assign[v - 1] = Monomial::node(op, xf, Monomial::leaf(v));
            out.push_back(p.substitute(assign));
        }
    }
    return out;
}

}  // namespace

void for_each_consequence_row(const Presentation& p, int n,
                              const std::function<void(const Polynomial&)>& sink) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    std::unordered_set<std::string> seen_rows;
    for (const auto& rel : p.relations) {
        const int d0 = rel.degree();
        if (d0 > n) continue;
        std::vector<Polynomial> level = {rel};
        for (int d = d0; d < n; ++d) {
            std::vector<Polynomial> next;
            std::unordered_set<std::string> seen;
            for (const auto& q : level)
                for (auto& g : grow_once(q, d, p.sig))
                    if (!g.zero() && seen.insert(canonical_key(g)).second)
                        next.push_back(std::move(g));
            level = std::move(next);
        }
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        for (const auto& q : level) {
            std::vector<int> pm = perm;
            do {
                Polynomial row = q.relabel(pm);
                if (seen_rows.insert(canonical_key(row)).second) sink(row);
            } while (std::next_permutation(pm.begin(), pm.end()));
        }
    }
}

namespace {

struct ColumnContext {
    std::vector<Monomial> columns;  // descending
    std::unordered_map<Monomial, int, MonomialHash> col_of;
    std::vector<std::int64_t> labels;

    explicit ColumnContext(const Signature& sig, int n) {
        const auto& basis = multilinear_basis(sig, n);
        const int B = static_cast<int>(basis.size());
        columns.assign(basis.rbegin(), basis.rend());
        col_of.reserve(columns.size() * 2);
        labels.resize(B);
        for (int j = 0; j < B; ++j) {
            col_of.emplace(columns[j], j);
            labels[j] = B - 1 - j;  // ascending basis index of this column
        }
    }
};

SparseVec poly_to_vec(const Polynomial& q,
                      const std::unordered_map<Monomial, int, MonomialHash>& col_of) {
    SparseVec v;
    v.reserve(q.size());
    // descending terms map to ascending column indices
    for (const auto& [m, c] : q.terms()) {
        auto it = col_of.find(m);
        if (it == col_of.end())
            throw std::invalid_argument("polynomial does not live in this component (arity mismatch)");
        v.push_back({it->second, c});
    }
    return v;
}

RrefResult echelonize(const Presentation& p, int n, const ColumnContext& ctx) {
    std::vector<SparseVec> rows;
    for_each_consequence_row(p, n, [&](const Polynomial& q) {
        rows.push_back(poly_to_vec(q, ctx.col_of));
    });
    // short rows first keeps fill-in during elimination low
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    RrefBuilder builder(static_cast<int>(ctx.columns.size()));
    for (auto& r : rows) builder.add_row(std::move(r));
    return builder.finish(ctx.labels);
}

}  // namespace

SparseMatrix consequence_space(const Presentation& p, int n) {
    const ColumnContext ctx(p.sig, n);
    return echelonize(p, n, ctx).reduced;
}

int component_dim(const Presentation& p, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    const ColumnContext ctx(p.sig, n);
    return static_cast<int>(ctx.columns.size()) - echelonize(p, n, ctx).rank;
}

ComponentBasis::ComponentBasis(Presentation pres, int arity)
    : pres_(std::move(pres)), arity_(arity) {
    const ColumnContext ctx(pres_.sig, arity_);
    columns_ = ctx.columns;
    col_of_ = ctx.col_of;
    rref_ = echelonize(pres_, arity_, ctx);
    row_of_lead_.assign(columns_.size(), -1);
    for (int i = 0; i < rref_.rank; ++i) row_of_lead_[rref_.pivots[i]] = i;
    for (int j = 0; j < static_cast<int>(columns_.size()); ++j)
        if (row_of_lead_[j] < 0) normal_forms_.push_back(columns_[j]);
}

int ComponentBasis::column_of(const Monomial& m) const {
    auto it = col_of_.find(m);
    if (it == col_of_.end())
        throw std::invalid_argument("monomial is not in this component (arity mismatch)");
    return it->second;
}

SparseVec ComponentBasis::to_vec(const Polynomial& q) const { return poly_to_vec(q, col_of_); }

Polynomial ComponentBasis::from_vec(const SparseVec& v) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(v.size());
    for (const auto& e : v) terms.push_back({columns_[e.col], e.val});
    return Polynomial::from_terms(std::move(terms));
}

SparseVec ComponentBasis::reduce_vec(SparseVec v) const {
    for (std::size_t i = 0; i < v.size();) {
        const int r = row_of_lead_[v[i].col];
        if (r < 0) {
            ++i;
            continue;
        }
        Rational c = v[i].val;
        submul(v, c, rref_.reduced.row(r));
    }
    return v;
}

Polynomial ComponentBasis::reduce(const Polynomial& q) const {
    return from_vec(reduce_vec(to_vec(q)));
}

std::vector<Rational> ComponentBasis::nf_coords(const Polynomial& q) const {
    const SparseVec v = reduce_vec(to_vec(q));
    std::vector<int> nf_col_index(columns_.size(), -1);
    int k = 0;
    for (int j = 0; j < static_cast<int>(columns_.size()); ++j)
        if (row_of_lead_[j] < 0) nf_col_index[j] = k++;
    std::vector<Rational> out(normal_forms_.size(), Rational(0));
    for (const auto& e : v) out[nf_col_index[e.col]] = e.val;
    return out;
}

std::shared_ptr<const ComponentBasis> normal_form_basis(const Presentation& p, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const ComponentBasis>> cache;
    std::string key = p.name + '\x1f';
    for (const auto& op : p.sig.ops()) key += op.glyph;
    for (const auto& r : p.relations) {
        key += '\x1e';
        key += to_string(r, p.sig);
    }
    std::lock_guard lock(mu);
    auto it = cache.find({key, n});
    if (it != cache.end()) return it->second;
    auto cb = std::make_shared<const ComponentBasis>(p, n);
    cache.emplace(std::make_pair(std::move(key), n), cb);
    return cb;
}

bool relation_spaces_equivalent(const Presentation& p1, const Presentation& p2,
                                const std::vector<int>& op_map, int max_arity) {
    if (p1.sig.size() != p2.sig.size() ||
        static_cast<int>(op_map.size()) != p1.sig.size())
        throw std::invalid_argument("relation_spaces_equivalent: signature size mismatch");
    std::vector<bool> hit(op_map.size(), false);
    for (int t : op_map) {
        if (t < 0 || t >= p2.sig.size() || hit[t])
            throw std::invalid_argument("relation_spaces_equivalent: op_map is not a bijection");
        hit[t] = true;
    }
    Presentation mapped{p1.name + "_mapped", p2.sig, {}};
    mapped.relations.reserve(p1.relations.size());
    for (const auto& r : p1.relations) mapped.relations.push_back(r.map_ops(op_map));
    for (int n = 1; n <= max_arity; ++n) {
        if (!subspace_equal(consequence_space(mapped, n), consequence_space(p2, n)))
            return false;
    }
    return true;
}

}  // namespace opforge
