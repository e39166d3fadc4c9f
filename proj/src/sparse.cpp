#include "opforge/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace opforge {

void submul(SparseVec& v, const Rational& c, const SparseVec& row) {
    if (c == 0 || row.empty()) return;
    SparseVec out;
    out.reserve(v.size() + row.size());
    auto a = v.begin();
    auto b = row.begin();
    while (a != v.end() && b != row.end()) {
        if (a->col < b->col) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a->col > b->col) {
            out.push_back({b->col, -c * b->val});
            ++b;
        } else {
            Rational nv = a->val - c * b->val;
            if (nv != 0) out.push_back({a->col, std::move(nv)});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(v.end()));
    for (; b != row.end(); ++b) out.push_back({b->col, -c * b->val});
    v = std::move(out);
}

void SparseMatrix::add_row(SparseVec v) {
    for (const auto& e : v)
        if (e.col < 0 || e.col >= cols_) throw std::out_of_range("sparse entry out of bounds");
    rows_.push_back(std::move(v));
}

void SparseMatrix::set(int row, int col, const Rational& val) {
    if (col < 0 || col >= cols_) throw std::out_of_range("sparse entry out of bounds");
    if (row >= static_cast<int>(rows_.size())) rows_.resize(row + 1);
    auto& r = rows_[row];
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const Entry& e, int c) { return e.col < c; });
    if (it != r.end() && it->col == col) {
        if (val == 0)
            r.erase(it);
        else
            it->val = val;
    } else if (val != 0) {
        r.insert(it, {col, val});
    }
}

RrefBuilder::RrefBuilder(int cols)
    : cols_(cols), row_of_lead_(cols, -1), touching_(cols) {}

SparseVec RrefBuilder::reduce(SparseVec v) const {
    while (!v.empty()) {
        const int lead = v.front().col;
        const int r = row_of_lead_[lead];
        if (r < 0) break;
        Rational c = v.front().val;  // pivot rows have unit lead
        submul(v, c, rows_[r]);
    }
    // The loop stops at the first free leading column; later pivot columns can
    // still occur inside v, so sweep the tail as well.
    for (std::size_t i = 1; i < v.size();) {
        const int r = row_of_lead_[v[i].col];
        if (r < 0) {
            ++i;
            continue;
        }
        Rational c = v[i].val;
        submul(v, c, rows_[r]);
    }
    return v;
}

bool RrefBuilder::add_row(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Rational inv = v.front().val;
    if (inv != 1)
        for (auto& e : v) e.val /= inv;
    const int lead = v.front().col;
    const int id = static_cast<int>(rows_.size());

    // Eliminate the new pivot column from every stored row that contains it.
    for (int rid : touching_[lead]) {
        auto& row = rows_[rid];
        auto it = std::lower_bound(row.begin(), row.end(), lead,
                                   [](const Entry& e, int c) { return e.col < c; });
        if (it == row.end() || it->col != lead) continue;  // stale
        Rational c = it->val;
        submul(row, c, v);
        for (std::size_t k = 1; k < v.size(); ++k) touching_[v[k].col].push_back(rid);
    }
    touching_[lead].clear();

    rows_.push_back(std::move(v));
    row_of_lead_[lead] = id;
    for (const auto& e : rows_[id])
        if (e.col != lead) touching_[e.col].push_back(id);
    return true;
}

RrefResult RrefBuilder::finish(std::vector<std::int64_t> labels) const {
    RrefResult out;
    out.rank = rank();
    std::vector<int> order;
    order.reserve(rows_.size());
    for (int c = 0; c < cols_; ++c)
        if (row_of_lead_[c] >= 0) {
            out.pivots.push_back(c);
            order.push_back(row_of_lead_[c]);
        }
    SparseMatrix m = labels.empty() ? SparseMatrix(cols_)
                                    : SparseMatrix(cols_, std::move(labels));
    for (int rid : order) m.add_row(rows_[rid]);
    out.reduced = std::move(m);
    return out;
}

RrefResult rref(const SparseMatrix& m) {
    RrefBuilder b(m.cols());
    for (const auto& r : m.row_data()) b.add_row(r);
    return b.finish(m.labels());
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> out;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[j] = 1;
        for (int i = 0; i < r.rank; ++i) {
            const auto& row = r.reduced.row(i);
            auto it = std::lower_bound(row.begin(), row.end(), j,
                                       [](const Entry& e, int c) { return e.col < c; });
            if (it != row.end() && it->col == j) v[r.pivots[i]] = -it->val;
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool subspace_equal(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.cols() || a.labels() != b.labels())
        throw std::invalid_argument("subspace_equal: column labeling mismatch");
    const int ra = rref(a).rank;
    const int rb = rref(b).rank;
    if (ra != rb) return false;
    RrefBuilder stacked(a.cols());
    for (const auto& r : a.row_data()) stacked.add_row(r);
    for (const auto& r : b.row_data()) stacked.add_row(r);
    return stacked.rank() == ra;
}

}  // namespace opforge
