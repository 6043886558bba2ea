#include "braidstat/linalg.hpp"

#include <algorithm>
#include <map>

namespace braidstat {

SparseRow row_axpy(const Field& F, const SparseRow& a, const Scalar& coef, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = F.neg(F.mul(coef, b[j].second));
            if (!F.is_zero(v)) out.push_back({b[j].first, v});
            j++;
        } else {
            Scalar v = F.sub(a[i].second, F.mul(coef, b[j].second));
            if (!F.is_zero(v)) out.push_back({a[i].first, v});
            i++;
            j++;
        }
    }
    return out;
}

long sparse_rank(const Field& F, std::vector<SparseRow> rows, std::set<long>* pivot_cols) {
    // shortest rows first keeps pivots sparse
    std::sort(rows.begin(), rows.end(),
              [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    std::map<long, SparseRow> pivots;  // leading column -> normalized row
    long rank = 0;
    for (auto& row : rows) {
        SparseRow cur = std::move(row);
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            cur = row_axpy(F, cur, cur.front().second, it->second);
        }
        if (cur.empty()) continue;
        Scalar inv = F.inv(cur.front().second);
        for (auto& [c, s] : cur) s = F.mul(s, inv);
        long lead = cur.front().first;
        pivots.emplace(lead, std::move(cur));
        rank++;
    }
    if (pivot_cols) {
        pivot_cols->clear();
        for (auto& [c, r] : pivots) pivot_cols->insert(c);
    }
    return rank;
}

void SpMat::add_entry(const Field& F, long r, long c, const Scalar& s) {
    if (F.is_zero(s)) return;
    data[r].push_back({c, s});
}

void SpMat::normalize(const Field& F) {
    for (auto& row : data) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& [c, s] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = F.add(merged.back().second, s);
            else
                merged.push_back({c, s});
        }
        row.clear();
        for (auto& [c, s] : merged)
            if (!F.is_zero(s)) row.push_back({c, s});
    }
}

long SpMat::rank(const Field& F) const { return sparse_rank(F, data, nullptr); }

SpMat SpMat::times(const Field& F, const SpMat& other) const {
    SpMat out = SpMat::zero(rows, other.cols);
    for (long r = 0; r < rows; ++r) {
        std::map<long, Scalar> acc;
        for (auto& [k, s] : data[r])
            for (auto& [c, t] : other.data[k]) {
                auto it = acc.find(c);
                Scalar add = F.mul(s, t);
                if (it == acc.end())
                    acc[c] = add;
                else
                    it->second = F.add(it->second, add);
            }
        for (auto& [c, s] : acc)
            if (!F.is_zero(s)) out.data[r].push_back({c, s});
    }
    return out;
}

bool SpMat::equals(const Field& F, const SpMat& other) const {
    if (rows != other.rows || cols != other.cols) return false;
    for (long r = 0; r < rows; ++r) {
        SparseRow a = data[r], b = other.data[r];
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i].first != b[i].first || !F.eq(a[i].second, b[i].second)) return false;
    }
    return true;
}

}  // namespace braidstat
