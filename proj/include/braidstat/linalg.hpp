#pragma once

#include <set>
#include <vector>

#include "braidstat/field.hpp"

namespace braidstat {

// Sparse row: sorted (column, coefficient) pairs, no zeros.
using SparseRow = std::vector<std::pair<long, Scalar>>;

// Exact rank by fraction-full elimination with reduction against stored
// pivots; deterministic (first nonzero column in canonical order).
long sparse_rank(const Field& F, std::vector<SparseRow> rows, std::set<long>* pivot_cols = nullptr);

// row_a - coef * row_b, sparse merge
SparseRow row_axpy(const Field& F, const SparseRow& a, const Scalar& coef, const SparseRow& b);

// Small sparse matrix with explicit shape, rows indexed 0..rows-1.
struct SpMat {
    long rows = 0, cols = 0;
    std::vector<SparseRow> data;  // by row

    static SpMat zero(long r, long c) {
        SpMat m;
        m.rows = r;
        m.cols = c;
        m.data.resize(r);
        return m;
    }
    void add_entry(const Field& F, long r, long c, const Scalar& s);
    void normalize(const Field& F);  // sort/merge/drop zeros
    long rank(const Field& F) const;
    SpMat times(const Field& F, const SpMat& other) const;  // this * other
    bool equals(const Field& F, const SpMat& other) const;
};

}  // namespace braidstat
