#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opforge/rational.hpp"

namespace opforge {

// One entry of a sparse row vector.
struct Entry {
    int col = 0;
    Rational val;

    bool operator==(const Entry& o) const { return col == o.col && val == o.val; }
};

// Sparse row: entries sorted by column index, no stored zeros.
using SparseVec = std::vector<Entry>;

// v -= c * row  (row must be sorted; result stays sorted and zero-free).
void submul(SparseVec& v, const Rational& c, const SparseVec& row);

// Sparse matrix with an optional opaque label per column (used to make
// subspace comparisons refuse differently-labelled columns).
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(int cols) : cols_(cols) {}
    SparseMatrix(int cols, std::vector<std::int64_t> labels)
        : cols_(cols), labels_(std::move(labels)) {}

    int cols() const { return cols_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& row_data() const { return rows_; }
    const SparseVec& row(int i) const { return rows_[i]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    void add_row(SparseVec v);
    void set(int row, int col, const Rational& val);  // builds rows on demand

private:
    int cols_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<std::int64_t> labels_;
};

struct RrefResult {
    SparseMatrix reduced;      // rows sorted by pivot column, unit pivots
    int rank = 0;
    std::vector<int> pivots;   // ascending column indices
};

// Incremental echelonizer. Rows may be streamed in; the working set is kept
// fully back-reduced (Gauss-Jordan), so every stored row has a unit leading
// coefficient and no other stored row touches its pivot column. Pivoting is
// always on the first nonzero in column order.
class RrefBuilder {
public:
    explicit RrefBuilder(int cols);

    // Returns true if the row was independent (created a new pivot).
    bool add_row(SparseVec v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool is_pivot(int col) const { return row_of_lead_[col] >= 0; }

    // Fully reduce an arbitrary vector against the current pivot rows.
    SparseVec reduce(SparseVec v) const;

    RrefResult finish(std::vector<std::int64_t> labels = {}) const;

private:
    int cols_;
    std::vector<SparseVec> rows_;
    std::vector<int> row_of_lead_;               // col -> row id, -1 if free
    std::vector<std::vector<int>> touching_;     // col -> row ids (may be stale)
};

RrefResult rref(const SparseMatrix& m);

// Basis of {v : m v = 0}; each vector is dense of size m.cols().
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

// Row spans coincide? Requires identical column count and labels.
bool subspace_equal(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace opforge
