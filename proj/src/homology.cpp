#include "braidstat/homology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace braidstat {

namespace {

// The evaluator applies letters sequentially, so as an operator a word w acts
// as the product of its letters in reverse order. The inverse group element
// u^{-1} therefore evaluates as u with every exponent flipped and the letter
// order preserved.
BraidWord inverse_eval_word(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    for (auto& [i, eps] : w.letters) out.letters.push_back({i, -eps});
    return out;
}

SparseRow merge_row(const Field& F, SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& [c, s] : row) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second = F.add(merged.back().second, s);
        else
            merged.push_back({c, s});
    }
    SparseRow out;
    for (auto& [c, s] : merged)
        if (!F.is_zero(s)) out.push_back({c, s});
    return out;
}

struct FoxTerm {
    int sign;
    BraidWord word;  // group element u; evaluated as the action of u^{-1}
};

// left Fox derivative of a relator with respect to generator s
std::vector<FoxTerm> fox_derivative(const BraidWord& relator, int s) {
    std::vector<FoxTerm> terms;
    BraidWord prefix;
    prefix.strands = relator.strands;
    for (auto& [i, eps] : relator.letters) {
        if (i == s) {
            if (eps > 0) {
                terms.push_back({+1, prefix});
            } else {
                BraidWord w = prefix;
                w.letters.push_back({i, -1});
                terms.push_back({-1, w});
            }
        }
        prefix.letters.push_back({i, eps});
    }
    return terms;
}

std::vector<BraidWord> braid_relators(int n) {
    std::vector<BraidWord> rs;
    for (int i = 1; i + 1 <= n - 1; ++i) {
        BraidWord r;
        r.strands = n;
        r.letters = {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}};
        rs.push_back(r);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) {
            BraidWord r;
            r.strands = n;
            r.letters = {{i, 1}, {j, 1}, {i, -1}, {j, -1}};
            rs.push_back(r);
        }
    return rs;
}

// ---- symmetric group scaffolding for the resolution ----

using Perm = std::vector<int>;

long inversions(const Perm& p) {
    long inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) inv++;
    return inv;
}

std::vector<Perm> parabolic_elements(int n, const std::vector<int>& gamma) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems = {id};
    std::map<Perm, bool> seen;
    seen[id] = true;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (int g : gamma) {
            Perm q = elems[i];
            std::swap(q[g - 1], q[g]);
            if (!seen.count(q)) {
                seen[q] = true;
                elems.push_back(q);
            }
        }
    }
    return elems;
}

// reduced word, 1-based generator indices
std::vector<int> reduced_word(Perm p) {
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < (int)p.size(); ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                word.push_back(i + 1);
                changed = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

struct BoundaryTerm {
    int sign;
    std::vector<int> word;  // positive braid lift
    unsigned target_subset;
};

std::vector<BoundaryTerm> boundary_terms(int n, unsigned mask) {
    std::vector<BoundaryTerm> terms;
    std::vector<int> gamma;
    for (int i = 1; i <= n - 1; ++i)
        if (mask >> (i - 1) & 1) gamma.push_back(i);
    std::vector<Perm> w_gamma = parabolic_elements(n, gamma);
    for (size_t t = 0; t < gamma.size(); ++t) {
        int tau = gamma[t];
        std::vector<int> rest = gamma;
        rest.erase(rest.begin() + t);
        int sign_tau = (t % 2 == 0) ? 1 : -1;
        for (const Perm& w : w_gamma) {
            // minimal-length representative of w W_rest: l(w s) > l(w) for s in rest
            bool minimal = true;
            for (int s : rest)
                if (w[s - 1] > w[s]) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            int sign = sign_tau * (inversions(w) % 2 == 0 ? 1 : -1);
            terms.push_back({sign, reduced_word(w), mask & ~(1u << (tau - 1))});
        }
    }
    return terms;
}

}  // namespace

SparseRow BnModule::apply_word(const BraidWord& w, long col) const {
    const Field& F = *field;
    SparseRow cur = {{col, F.one()}};
    for (auto& [i, eps] : w.letters) {
        const SparseCols& mat = eps > 0 ? gen[i - 1] : gen_inv[i - 1];
        std::map<long, Scalar> acc;
        for (auto& [c, s] : cur)
            for (auto& [r, t] : mat[c]) {
                Scalar add = F.mul(s, t);
                auto it = acc.find(r);
                if (it == acc.end())
                    acc[r] = add;
                else {
                    it->second = F.add(it->second, add);
                    if (F.is_zero(it->second)) acc.erase(it);
                }
            }
        cur.assign(acc.begin(), acc.end());
    }
    return cur;
}

BnModule tensor_power_module(const BraidedSpace& v, int n, std::optional<int> grade) {
    if (grade && !v.graded())
        throw validation_error("GradeIncompatible", "grade slice of an ungraded space");
    double logsize = n * std::max(1.0, std::log2((double)v.dim));
    if (logsize > 62) throw cap_error("SizeCapExceeded", "tensor power too large");
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) total *= (unsigned long long)v.dim;
    long cap = cap_value(kDefaultLinearBasisCap);
    std::vector<unsigned long long> elems;
    std::unordered_map<unsigned long long, long> pos;
    for (unsigned long long idx = 0; idx < total; ++idx) {
        if (grade) {
            auto t = index_to_tuple(idx, v.dim, n);
            int g = 0;
            for (int x : t) g += v.grades[x];
            if (g != *grade) continue;
        }
        pos[idx] = (long)elems.size();
        elems.push_back(idx);
        if ((long)elems.size() > cap)
            throw cap_error("SizeCapExceeded", "module dimension exceeds cap");
    }
    BnModule m;
    m.field = v.field;
    m.strands = n;
    m.dim = (long)elems.size();
    m.gen.resize(std::max(0, n - 1));
    m.gen_inv.resize(std::max(0, n - 1));
    for (int s = 1; s <= n - 1; ++s) {
        m.gen[s - 1].resize(m.dim);
        m.gen_inv[s - 1].resize(m.dim);
        BraidWord fw, bw;
        fw.strands = bw.strands = n;
        fw.letters = {{s, 1}};
        bw.letters = {{s, -1}};
        for (long c = 0; c < m.dim; ++c) {
            TensorVec start;
            start[elems[c]] = v.field->one();
            for (auto& [k, val] : braid_act(v, fw, start))
                m.gen[s - 1][c].push_back({(int)pos.at(k), val});
            for (auto& [k, val] : braid_act(v, bw, start))
                m.gen_inv[s - 1][c].push_back({(int)pos.at(k), val});
        }
    }
    return m;
}

BnModule module_from_matrices(FieldPtr F, int strands, long dim, std::vector<SparseCols> gens) {
    if ((int)gens.size() != strands - 1)
        throw validation_error("BadModule", "expected one matrix per generator");
    BnModule m;
    m.field = std::move(F);
    m.strands = strands;
    m.dim = dim;
    m.gen = std::move(gens);
    const Field& f = *m.field;
    // invert each generator with dense elimination
    for (auto& g : m.gen) {
        if ((long)g.size() != dim) throw validation_error("BadModule", "matrix shape mismatch");
        std::vector<std::vector<Scalar>> a(dim, std::vector<Scalar>(2 * dim, f.zero()));
        for (long c = 0; c < dim; ++c) {
            for (auto& [r, s] : g[c]) a[r][c] = s;
            a[c][dim + c] = f.one();
        }
        long rank = 0;
        for (long col = 0; col < dim && rank < dim; ++col) {
            long pivot = -1;
            for (long r = rank; r < dim; ++r)
                if (!f.is_zero(a[r][col])) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[rank], a[pivot]);
            Scalar inv = f.inv(a[rank][col]);
            for (long j = 0; j < 2 * dim; ++j) a[rank][j] = f.mul(a[rank][j], inv);
            for (long r = 0; r < dim; ++r) {
                if (r == rank || f.is_zero(a[r][col])) continue;
                Scalar coef = a[r][col];
                for (long j = 0; j < 2 * dim; ++j) a[r][j] = f.sub(a[r][j], f.mul(coef, a[rank][j]));
            }
            rank++;
        }
        if (rank < dim) throw validation_error("BadModule", "generator is singular");
        SparseCols inv_cols(dim);
        for (long c = 0; c < dim; ++c)
            for (long r = 0; r < dim; ++r)
                if (!f.is_zero(a[r][dim + c])) inv_cols[c].push_back({(int)r, a[r][dim + c]});
        m.gen_inv.push_back(inv_cols);
    }
    // braid relations must hold
    auto col_of_word = [&](const BraidWord& w, long c) { return m.apply_word(w, c); };
    for (int i = 1; i + 1 <= strands - 1; ++i) {
        BraidWord lhs = BraidWord::parse(strands,
                                         "s" + std::to_string(i) + " s" + std::to_string(i + 1) +
                                             " s" + std::to_string(i));
        BraidWord rhs = BraidWord::parse(strands,
                                         "s" + std::to_string(i + 1) + " s" + std::to_string(i) +
                                             " s" + std::to_string(i + 1));
        for (long c = 0; c < dim; ++c) {
            SparseRow a = merge_row(f, col_of_word(lhs, c)), b = merge_row(f, col_of_word(rhs, c));
            if (a.size() != b.size())
                throw validation_error("BadModule", "braid relation fails");
            for (size_t k = 0; k < a.size(); ++k)
                if (a[k].first != b[k].first || !f.eq(a[k].second, b[k].second))
                    throw validation_error("BadModule", "braid relation fails");
        }
    }
    for (int i = 1; i <= strands - 1; ++i)
        for (int j = i + 2; j <= strands - 1; ++j) {
            BraidWord lhs = BraidWord::parse(strands, "s" + std::to_string(i) + " s" + std::to_string(j));
            BraidWord rhs = BraidWord::parse(strands, "s" + std::to_string(j) + " s" + std::to_string(i));
            for (long c = 0; c < dim; ++c) {
                SparseRow a = merge_row(f, col_of_word(lhs, c)), b = merge_row(f, col_of_word(rhs, c));
                if (a.size() != b.size())
                    throw validation_error("BadModule", "commutation relation fails");
                for (size_t k = 0; k < a.size(); ++k)
                    if (a[k].first != b[k].first || !f.eq(a[k].second, b[k].second))
                        throw validation_error("BadModule", "commutation relation fails");
            }
        }
    return m;
}

std::pair<long, long> fox_h01_module(const BnModule& m) {
    const Field& F = *m.field;
    int n = m.strands;
    if (n < 2) return {m.dim, 0};
    // D1 rows: (sigma_s^{-1} - 1) b
    std::vector<SparseRow> d1_rows;
    d1_rows.reserve((size_t)m.dim * (n - 1));
    for (int s = 1; s <= n - 1; ++s) {
        for (long c = 0; c < m.dim; ++c) {
            SparseRow row(m.gen_inv[s - 1][c].begin(), m.gen_inv[s - 1][c].end());
            row = row_axpy(F, row, F.one(), SparseRow{{c, F.one()}});
            if (!row.empty()) d1_rows.push_back(std::move(row));
        }
    }
    long rank1 = sparse_rank(F, std::move(d1_rows), nullptr);
    long h0 = m.dim - rank1;
    // D2 rows in (n-1) blocks of size dim
    auto relators = braid_relators(n);
    std::vector<SparseRow> d2_rows;
    for (auto& r : relators) {
        std::vector<std::vector<FoxTerm>> per_gen;
        for (int s = 1; s <= n - 1; ++s) per_gen.push_back(fox_derivative(r, s));
        for (long c = 0; c < m.dim; ++c) {
            SparseRow row;
            for (int s = 1; s <= n - 1; ++s) {
                long off = (long)(s - 1) * m.dim;
                for (const FoxTerm& term : per_gen[s - 1]) {
                    SparseRow part = m.apply_word(inverse_eval_word(term.word), c);
                    for (auto& [cc, val] : part)
                        row.push_back({off + cc, term.sign > 0 ? val : F.neg(val)});
                }
            }
            row = merge_row(F, std::move(row));
            if (!row.empty()) d2_rows.push_back(std::move(row));
        }
    }
    // composite check: sum_s (sigma_s^{-1} - 1)(component s) vanishes
    for (const SparseRow& row : d2_rows) {
        std::map<long, Scalar> acc;
        for (auto& [col, val] : row) {
            int s = (int)(col / m.dim) + 1;
            long c = col % m.dim;
            SparseRow part(m.gen_inv[s - 1][c].begin(), m.gen_inv[s - 1][c].end());
            part = row_axpy(F, part, F.one(), SparseRow{{c, F.one()}});
            for (auto& [c2, s2] : part) {
                Scalar add = F.mul(val, s2);
                auto it = acc.find(c2);
                if (it == acc.end())
                    acc[c2] = add;
                else {
                    it->second = F.add(it->second, add);
                    if (F.is_zero(it->second)) acc.erase(it);
                }
            }
        }
        if (!acc.empty())
            throw validation_error("BoundaryNotSquareZero", "Fox composite is nonzero");
    }
    long rank2 = sparse_rank(F, std::move(d2_rows), nullptr);
    long h1 = ((long)(n - 1) * m.dim - rank1) - rank2;
    return {h0, h1};
}

std::pair<long, long> fox_h01(const BraidedSpace& v, int n, std::optional<int> grade) {
    return fox_h01_module(tensor_power_module(v, n, grade));
}

long fox_h0(const BraidedSpace& v, int n, std::optional<int> grade) {
    BnModule m = tensor_power_module(v, n, grade);
    const Field& F = *m.field;
    if (m.strands < 2) return m.dim;
    std::vector<SparseRow> rows;
    rows.reserve((size_t)m.dim * (m.strands - 1));
    for (int s = 1; s <= m.strands - 1; ++s)
        for (long c = 0; c < m.dim; ++c) {
            SparseRow row(m.gen_inv[s - 1][c].begin(), m.gen_inv[s - 1][c].end());
            row = row_axpy(F, row, F.one(), SparseRow{{c, F.one()}});
            if (!row.empty()) rows.push_back(std::move(row));
        }
    return m.dim - sparse_rank(F, std::move(rows), nullptr);
}

ResolutionResult resolution_homology_module(const BnModule& m, int i_max) {
    const Field& F = *m.field;
    int n = m.strands;
    long strand_cap = cap_value(kDefaultResolutionStrandCap);
    if (n > strand_cap)
        throw cap_error("SizeCapExceeded",
                        "resolution engine capped at " + std::to_string(strand_cap) + " strands");
    if (i_max > n - 1) i_max = n - 1;
    ResolutionResult res;
    res.n = n;
    if (n < 2) {
        res.dims = {m.dim};
        res.free_ranks = {1};
        res.euler_checked = true;
        return res;
    }
    int gens = n - 1;
    std::vector<std::vector<unsigned>> subsets(gens + 1);
    for (unsigned mask = 0; mask < (1u << gens); ++mask)
        subsets[__builtin_popcount(mask)].push_back(mask);
    std::vector<std::map<unsigned, long>> subset_pos(gens + 1);
    for (int k = 0; k <= gens; ++k)
        for (size_t i = 0; i < subsets[k].size(); ++i) subset_pos[k][subsets[k][i]] = (long)i;

    int top = std::min(gens, i_max + 1);
    std::map<unsigned, std::vector<BoundaryTerm>> terms_by_mask;
    for (int k = 1; k <= top; ++k)
        for (unsigned mask : subsets[k]) terms_by_mask[mask] = boundary_terms(n, mask);

    std::vector<std::vector<SparseRow>> boundary_rows(top + 1);
    std::vector<long> ranks(top + 2, 0);
    auto row_of = [&](int k, unsigned mask, long c) {
        SparseRow row;
        for (const BoundaryTerm& term : terms_by_mask.at(mask)) {
            BraidWord w;
            w.strands = n;
            for (int g : term.word) w.letters.push_back({g, 1});
            SparseRow part = m.apply_word(inverse_eval_word(w), c);
            long off = subset_pos[k - 1].at(term.target_subset) * m.dim;
            for (auto& [cc, s] : part)
                row.push_back({off + cc, term.sign > 0 ? s : F.neg(s)});
        }
        return merge_row(F, std::move(row));
    };
    for (int k = 1; k <= top; ++k) {
        boundary_rows[k].reserve(subsets[k].size() * (size_t)m.dim);
        for (unsigned mask : subsets[k])
            for (long c = 0; c < m.dim; ++c) boundary_rows[k].push_back(row_of(k, mask, c));
    }
    // composite check D_{k-1} o D_k = 0
    for (int k = 2; k <= top; ++k) {
        for (const SparseRow& img : boundary_rows[k]) {
            std::map<long, Scalar> acc;
            for (auto& [col, s] : img) {
                const SparseRow& next = boundary_rows[k - 1][col];
                for (auto& [c2, s2] : next) {
                    Scalar val = F.mul(s, s2);
                    auto it = acc.find(c2);
                    if (it == acc.end())
                        acc[c2] = val;
                    else {
                        it->second = F.add(it->second, val);
                        if (F.is_zero(it->second)) acc.erase(it);
                    }
                }
            }
            if (!acc.empty())
                throw validation_error("BoundaryNotSquareZero",
                                       "composite boundary is nonzero in degree " +
                                           std::to_string(k));
        }
    }
    for (int k = 1; k <= top; ++k) ranks[k] = sparse_rank(F, boundary_rows[k], nullptr);
    for (int k = 0; k <= gens; ++k) res.free_ranks.push_back((long)subsets[k].size());
    for (int j = 0; j <= i_max; ++j) {
        long cj = (long)subsets[j].size() * m.dim;
        long dj = j == 0 ? 0 : ranks[j];
        long dj1 = j + 1 <= top ? ranks[j + 1] : 0;
        res.dims.push_back(cj - dj - dj1);
    }
    // cross-checks
    auto [h0, h1] = fox_h01_module(m);
    if (res.dims[0] != h0 || (i_max >= 1 && res.dims[1] != h1))
        throw validation_error("EngineDisagreement",
                               "resolution and presentation homology disagree");
    if (i_max == n - 1) {
        long euler_complex = 0, euler_homology = 0;
        for (int k = 0; k <= gens; ++k)
            euler_complex += (k % 2 == 0 ? 1 : -1) * (long)subsets[k].size() * m.dim;
        for (int j = 0; j < (int)res.dims.size(); ++j)
            euler_homology += (j % 2 == 0 ? 1 : -1) * res.dims[j];
        if (euler_complex != euler_homology)
            throw validation_error("EulerMismatch", "Euler characteristic bookkeeping failed");
        res.euler_checked = true;
    }
    return res;
}

ResolutionResult resolution_homology(const BraidedSpace& v, int n, int i_max,
                                     std::optional<int> grade) {
    return resolution_homology_module(tensor_power_module(v, n, grade), i_max);
}

BigInt binom_big(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt num(1), den(1);
    for (long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    return num / den;
}

Rational vanishing_threshold(long d, long deg_v, long m) {
    return Rational(BigInt(m - d), BigInt(d + 2 * deg_v));
}

CharSumBound char_sum_bound(long n, long d, long rack_size, long q) {
    CharSumBound b;
    b.prefactor = BigInt::pow(BigInt(2), (unsigned long)(n - 1)) *
                  BigInt::pow(BigInt(rack_size), (unsigned long)n);
    b.q = q;
    b.q_exponent = Rational(n) - Rational(BigInt(n - d), BigInt(2 * d + 4));
    b.power_saving = b.q_exponent < Rational(n);
    b.q_threshold = BigInt::pow(BigInt(2 * rack_size), (unsigned long)(2 * d + 4));
    return b;
}

BigInt braid_betti_bound(long n, long j, long dim_module) {
    return binom_big(n - 1, j) * BigInt(dim_module);
}

BigInt surface_betti_bound(long g, long f, long n, long j, long dim_module) {
    return binom_big(2 * g + f + n, 2 * g + f + j) * BigInt(dim_module);
}

nlohmann::json HomologyReport::to_json() const {
    return {{"n", n},
            {"engine", engine},
            {"dims", dims},
            {"d", d},
            {"deg_v", deg_v},
            {"predicted_vanishing_below", predicted_vanishing_below.to_string()},
            {"conforms", conforms}};
}

HomologyReport homology_report(const BraidedSpace& v, int n, int i_max, const std::string& engine,
                               std::optional<long> d_coinv) {
    HomologyReport rep;
    rep.n = n;
    rep.engine = engine;
    if (engine == "fox") {
        auto [h0, h1] = fox_h01(v, n);
        rep.dims = {h0};
        if (i_max >= 1) rep.dims.push_back(h1);
    } else if (engine == "resolution") {
        rep.dims = resolution_homology(v, n, i_max).dims;
    } else {
        throw validation_error("BadEngine", "engine must be fox or resolution");
    }
    long d;
    if (d_coinv) {
        d = *d_coinv;
    } else {
        DegResult dr = deg_coinv_linear(v, std::max(2 * n, 4));
        if (dr.kind == DegResult::Kind::ExceedsBound) {
            rep.d = -1;
            rep.predicted_vanishing_below = Rational(0);
            rep.conforms = true;  // no finite degree, no prediction
            return rep;
        }
        d = dr.degree;
    }
    rep.d = d;
    rep.deg_v = v.graded() ? std::max(1, v.max_grade()) : 1;
    rep.predicted_vanishing_below = vanishing_threshold(d, rep.deg_v, n);
    rep.conforms = true;
    for (int p = 0; p < (int)rep.dims.size(); ++p)
        if (Rational(p) < rep.predicted_vanishing_below && rep.dims[p] != 0) rep.conforms = false;
    return rep;
}

}  // namespace braidstat
