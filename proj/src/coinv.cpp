#include "braidstat/coinv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace braidstat {

CoinvLinearResult coinv_dim_linear(const BraidedSpace& v, int n, std::optional<int> grade) {
    const Field& F = *v.field;
    if (grade && !v.graded())
        throw validation_error("GradeIncompatible", "grade restriction on an ungraded space");
    double logsize = n * std::max(1.0, std::log2((double)v.dim));
    if (logsize > 62) throw cap_error("SizeCapExceeded", "tensor power too large to index");
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) total *= (unsigned long long)v.dim;
    // collect the basis (grade slice when requested)
    std::vector<unsigned long long> basis;
    std::map<unsigned long long, long> col_of;
    for (unsigned long long idx = 0; idx < total; ++idx) {
        if (grade) {
            auto t = index_to_tuple(idx, v.dim, n);
            int g = 0;
            for (int x : t) g += v.grades[x];
            if (g != *grade) continue;
        }
        col_of[idx] = (long)basis.size();
        basis.push_back(idx);
    }
    long cap = cap_value(kDefaultLinearBasisCap);
    if ((long)basis.size() > cap)
        throw cap_error("SizeCapExceeded",
                        "linear engine basis " + std::to_string(basis.size()) + " exceeds cap");
    // relation rows sigma_i b - b
    std::vector<SparseRow> rows;
    rows.reserve(basis.size() * std::max(0, n - 1));
    BraidWord sigma;
    sigma.strands = n;
    for (int i = 1; i <= n - 1; ++i) {
        sigma.letters = {{i, 1}};
        for (unsigned long long idx : basis) {
            TensorVec start;
            start[idx] = F.one();
            TensorVec img = braid_act(v, sigma, start);
            std::map<unsigned long long, Scalar> diff(img.begin(), img.end());
            auto it = diff.find(idx);
            if (it == diff.end())
                diff[idx] = F.neg(F.one());
            else {
                it->second = F.sub(it->second, F.one());
                if (F.is_zero(it->second)) diff.erase(it);
            }
            if (diff.empty()) continue;
            SparseRow row;
            for (auto& [k, s] : diff) row.push_back({col_of.at(k), s});
            rows.push_back(std::move(row));
        }
    }
    std::set<long> pivots;
    long rank = sparse_rank(F, std::move(rows), &pivots);
    CoinvLinearResult res;
    res.dim = (long)basis.size() - rank;
    for (long c = 0; c < (long)basis.size(); ++c)
        if (!pivots.count(c)) res.quotient_basis.push_back(basis[c]);
    return res;
}

OrbitEngine::OrbitEngine(Rack r, Cocycle2 c) : rack_(std::move(r)), coc_(std::move(c)) {
    if (coc_.rack_size != rack_.size)
        throw validation_error("BadCocycle", "cocycle does not match the rack");
}

const OrbitEngine::Level& OrbitEngine::level(int n) {
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;
    Level lv;
    compute_level(n, lv);
    return levels_.emplace(n, std::move(lv)).first->second;
}

void OrbitEngine::drop_level(int n) { levels_.erase(n); }

void OrbitEngine::compute_level(int n, Level& lv) {
    const int R = rack_.size;
    long cap = cap_value(kDefaultOrbitNodeCap);
    double logn = n * std::log2((double)std::max(2, R));
    if (logn > 62) throw cap_error("SizeCapExceeded", "tuple index overflow");
    unsigned long long total = 1;
    for (int i = 0; i < n; ++i) total *= (unsigned long long)R;
    if ((long long)total > cap)
        throw cap_error("SizeCapExceeded",
                        "orbit engine: " + std::to_string(total) + " tuples exceed cap");
    lv.n = n;
    lv.nodes = total;
    lv.orbit_id.assign(total, -1);
    const bool cyc = cyclotomic();
    const long d = coc_.cyclotomic_order;
    if (cyc) {
        if (d > 30000) throw cap_error("SizeCapExceeded", "cocycle order too large");
        lv.pot.assign(total, 0);
    } else {
        if (total > 100000)
            throw cap_error("SizeCapExceeded", "generic-potential engine capped at 1e5 nodes");
        lv.pot_scalar.assign(total, field().zero());
    }
    // weights: slot i has weight R^(n-1-i)
    std::vector<unsigned long long> w(std::max(n, 1));
    if (n > 0) {
        w[n - 1] = 1;
        for (int i = n - 2; i >= 0; --i) w[i] = w[i + 1] * (unsigned long long)R;
    }
    std::vector<unsigned long long> queue;
    const Field& F = field();
    for (unsigned long long seed = 0; seed < total; ++seed) {
        if (lv.orbit_id[seed] >= 0) continue;
        int32_t oid = (int32_t)lv.orbit_rep.size();
        lv.orbit_rep.push_back(seed);
        lv.orbit_alive.push_back(1);
        lv.kill_witness.push_back(~0ULL);
        lv.orbit_id[seed] = oid;
        if (cyc)
            lv.pot[seed] = 0;
        else
            lv.pot_scalar[seed] = F.one();
        queue.clear();
        queue.push_back(seed);
        while (!queue.empty()) {
            unsigned long long u = queue.back();
            queue.pop_back();
            for (int i = 0; i + 1 < n; ++i) {
                int a = (int)((u / w[i]) % (unsigned long long)R);
                int b = (int)((u / w[i + 1]) % (unsigned long long)R);
                // forward: (a,b) -> (b, a^b), class(u) = c(a,b) class(v)
                {
                    int ab = rack_.act(a, b);
                    unsigned long long vtx = u + ((unsigned long long)b - a) * w[i] +
                                             ((unsigned long long)ab - b) * w[i + 1];
                    if (cyc) {
                        int16_t pv = (int16_t)(((lv.pot[u] - coc_.exponent(a, b)) % d + d) % d);
                        if (lv.orbit_id[vtx] < 0) {
                            lv.orbit_id[vtx] = oid;
                            lv.pot[vtx] = pv;
                            queue.push_back(vtx);
                        } else if (lv.orbit_alive[oid] && lv.pot[vtx] != pv) {
                            lv.orbit_alive[oid] = 0;
                            lv.kill_witness[oid] = vtx;
                        }
                    } else {
                        Scalar pv = F.mul(lv.pot_scalar[u], F.inv(coc_.value(a, b)));
                        if (lv.orbit_id[vtx] < 0) {
                            lv.orbit_id[vtx] = oid;
                            lv.pot_scalar[vtx] = pv;
                            queue.push_back(vtx);
                        } else if (lv.orbit_alive[oid] && !F.eq(lv.pot_scalar[vtx], pv)) {
                            lv.orbit_alive[oid] = 0;
                            lv.kill_witness[oid] = vtx;
                        }
                    }
                }
                // backward: (a,b) -> (pre, a) with pre^a = b;
                // class(z) = c(pre,a) class(u) read from the forward edge z -> u
                {
                    int pre = rack_.unact(b, a);
                    unsigned long long vtx = u + ((unsigned long long)pre - a) * w[i] +
                                             ((unsigned long long)a - b) * w[i + 1];
                    if (cyc) {
                        int16_t pv = (int16_t)(((lv.pot[u] + coc_.exponent(pre, a)) % d + d) % d);
                        if (lv.orbit_id[vtx] < 0) {
                            lv.orbit_id[vtx] = oid;
                            lv.pot[vtx] = pv;
                            queue.push_back(vtx);
                        } else if (lv.orbit_alive[oid] && lv.pot[vtx] != pv) {
                            lv.orbit_alive[oid] = 0;
                            lv.kill_witness[oid] = vtx;
                        }
                    } else {
                        Scalar pv = F.mul(lv.pot_scalar[u], coc_.value(pre, a));
                        if (lv.orbit_id[vtx] < 0) {
                            lv.orbit_id[vtx] = oid;
                            lv.pot_scalar[vtx] = pv;
                            queue.push_back(vtx);
                        } else if (lv.orbit_alive[oid] && !F.eq(lv.pot_scalar[vtx], pv)) {
                            lv.orbit_alive[oid] = 0;
                            lv.kill_witness[oid] = vtx;
                        }
                    }
                }
            }
        }
    }
    lv.alive = 0;
    for (uint8_t a : lv.orbit_alive)
        if (a) lv.alive++;
}

std::optional<std::pair<long, Scalar>> OrbitEngine::tuple_class(int n, unsigned long long idx) {
    const Level& lv = level(n);
    long oid = lv.orbit_id[idx];
    if (!lv.orbit_alive[oid]) return std::nullopt;
    Scalar coef;
    if (cyclotomic())
        coef = field().pow(coc_.zeta, lv.pot[idx]);
    else
        coef = lv.pot_scalar[idx];
    return std::make_pair(oid, coef);
}

std::vector<long> OrbitEngine::basis_columns(int n, bool generating_only) {
    const Level& lv = level(n);
    std::vector<long> cols;
    for (long o = 0; o < (long)lv.orbit_rep.size(); ++o) {
        if (!lv.orbit_alive[o]) continue;
        if (generating_only) {
            auto t = index_to_tuple(lv.orbit_rep[o], rack_.size, n);
            if (!rack_generates(rack_, t)) continue;
        }
        cols.push_back(o);
    }
    return cols;
}

SpMat OrbitEngine::multiplication_matrix(const std::vector<int>& prefix, int n,
                                         bool generating_only) {
    const Field& F = field();
    int m = (int)prefix.size();
    std::vector<long> cols = basis_columns(n, generating_only);
    std::vector<long> rows = basis_columns(n + m, generating_only);
    std::map<long, long> row_of, col_of;
    for (size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = (long)i;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = (long)i;
    const Level& src = level(n);
    unsigned long long shift = 1;
    for (int i = 0; i < n; ++i) shift *= (unsigned long long)rack_.size;
    unsigned long long pref_idx = tuple_to_index(prefix, rack_.size);
    SpMat mat = SpMat::zero((long)rows.size(), (long)cols.size());
    for (long o : cols) {
        unsigned long long rep = src.orbit_rep[o];
        unsigned long long t = pref_idx * shift + rep;
        auto cls = tuple_class(n + m, t);
        if (!cls) continue;
        auto it = row_of.find(cls->first);
        if (it == row_of.end()) continue;  // restricted basis drops it
        mat.add_entry(F, it->second, col_of.at(o), cls->second);
    }
    mat.normalize(F);
    return mat;
}

long OrbitEngine::dim_multidegree(int n, const std::vector<int>& color_of,
                                  const std::vector<int>& target) {
    const Level& lv = level(n);
    long count = 0;
    for (long o = 0; o < (long)lv.orbit_rep.size(); ++o) {
        if (!lv.orbit_alive[o]) continue;
        std::vector<int> counts(target.size(), 0);
        auto t = index_to_tuple(lv.orbit_rep[o], rack_.size, n);
        for (int x : t) counts[color_of[x]]++;
        if (std::equal(counts.begin(), counts.end(), target.begin())) count++;
    }
    return count;
}

CentralityData central_powers(const Rack& r, const Cocycle2& c, int x, int y) {
    if (c.cyclotomic_order <= 0)
        throw validation_error("NotCyclotomic", "central powers need a cyclotomic cocycle");
    const Field& F = *c.field;
    CentralityData d;
    d.x = x;
    d.y = y;
    int cur = x;
    long q = 0;
    do {
        cur = r.act(cur, y);
        q++;
    } while (cur != x);
    d.q_period = q;
    // accumulate the cocycle product along x, x^y, x^{y^2}, ...
    Scalar acc = F.one();
    cur = x;
    long t = 0;
    while (true) {
        acc = F.mul(acc, c.value(cur, y));
        cur = r.act(cur, y);
        t++;
        if (cur == x && F.is_one(acc)) break;
        if (t > q * (c.cyclotomic_order + 1))
            throw validation_error("NotCyclotomic", "cocycle product does not close");
    }
    d.p_period = t;
    // self-check: the braid bookkeeping gives the same product
    {
        BraidWord w;
        w.strands = (int)t + 1;
        for (long i = 1; i <= t; ++i) w.letters.push_back({(int)i, 1});
        std::vector<int> tuple(t + 1, y);
        tuple[0] = x;
        auto [scal, img] = nabla(r, c, tuple, w);
        Scalar expected = F.one();
        int z = x;
        for (long i = 0; i < t; ++i) {
            expected = F.mul(expected, c.value(z, y));
            z = r.act(z, y);
        }
        if (!F.eq(scal, expected) || img.back() != x)
            throw validation_error("CentralPowerSelfCheck", "commutation bookkeeping mismatch");
    }
    return d;
}

long central_power_lcm(const Rack& r, const Cocycle2& c, int y) {
    long l = 1;
    for (int x = 0; x < r.size; ++x) l = std::lcm(l, central_powers(r, c, x, y).p_period);
    return l;
}

DegResult deg_coinv_rack(OrbitEngine& eng, int bound) {
    if (bound < 1) throw validation_error("BadBound", "bound must be positive");
    const Rack& r = eng.rack();
    const Cocycle2& c = eng.cocycle();
    const Field& F = eng.field();
    // a-priori vanishing beyond |R| when every element satisfies x^x = x with
    // a nontrivial self-label (pigeonhole on repeated entries)
    bool certified = true;
    for (int x = 0; x < r.size; ++x)
        if (r.act(x, x) != x || F.is_one(c.value(x, x))) certified = false;
    DegResult res;
    int limit = certified ? std::min(bound, r.size) : bound;
    res.dims.push_back(1);  // degree 0
    int last_nonzero = 0;
    for (int n = 1; n <= limit; ++n) {
        long d = eng.dim(n);
        res.dims.push_back(d);
        if (d > 0) last_nonzero = n;
    }
    if (certified) {
        res.kind = DegResult::Kind::Exact;
        res.degree = last_nonzero;
        res.certified_bound = r.size;
    } else if (res.dims.back() > 0) {
        res.kind = DegResult::Kind::ExceedsBound;
        res.degree = bound;
    } else {
        res.kind = DegResult::Kind::UpToBound;
        res.degree = last_nonzero;
    }
    return res;
}

DegResult deg_coinv_linear(const BraidedSpace& v, int bound) {
    if (bound < 1) throw validation_error("BadBound", "bound must be positive");
    DegResult res;
    res.dims.push_back(1);
    int last_nonzero = 0;
    for (int n = 1; n <= bound; ++n) {
        long d = coinv_dim_linear(v, n).dim;
        res.dims.push_back(d);
        if (d > 0) last_nonzero = n;
    }
    if (res.dims.back() > 0) {
        res.kind = DegResult::Kind::ExceedsBound;
        res.degree = bound;
    } else {
        res.kind = DegResult::Kind::UpToBound;
        res.degree = last_nonzero;
    }
    return res;
}

nlohmann::json ControlledReport::to_json() const {
    nlohmann::json kc = nlohmann::json::array();
    for (auto& [k, c] : ker_coker) kc.push_back({{"ker", k}, {"coker", c}});
    return {{"m", m},
            {"N", N},
            {"dims", dims},
            {"ker_coker", kc},
            {"centrality_verified", centrality_verified},
            {"pass", pass}};
}

ControlledReport one_controlled_check(const Rack& r, const Cocycle2& c, int m, int N) {
    if (c.cyclotomic_order <= 0)
        throw validation_error("NotCyclotomic", "requires a cyclotomic cocycle");
    if (m % c.cyclotomic_order != 0)
        throw validation_error("DivisibilityHypothesisFails",
                               "m must be divisible by the cocycle order " +
                                   std::to_string(c.cyclotomic_order));
    for (int y = 0; y < r.size; ++y) {
        long p = central_power_lcm(r, c, y);
        if (m % p != 0)
            throw validation_error("DivisibilityHypothesisFails",
                                   "m must be divisible by the central power period " +
                                       std::to_string(p) + " of element " + std::to_string(y));
    }
    OrbitEngine eng(r, c);
    const Field& F = eng.field();
    ControlledReport rep;
    rep.m = m;
    rep.N = N;
    for (int n = 0; n <= N + m; ++n) rep.dims.push_back(n == 0 ? 1 : eng.dim(n));
    // h = sum over rack elements of the m-th power
    auto h_matrix = [&](int n, int len) {
        std::vector<long> cols = eng.basis_columns(n, false);
        std::vector<long> rows = eng.basis_columns(n + len, false);
        SpMat acc = SpMat::zero((long)rows.size(), (long)cols.size());
        for (int w = 0; w < r.size; ++w) {
            std::vector<int> prefix(len, w);
            SpMat part = eng.multiplication_matrix(prefix, n, false);
            for (long rr = 0; rr < part.rows; ++rr)
                for (auto& [cc, s] : part.data[rr]) acc.add_entry(F, rr, cc, s);
        }
        acc.normalize(F);
        return acc;
    };
    for (int n = 0; n <= N; ++n) {
        SpMat M = n == 0 ? SpMat::zero(0, 0) : h_matrix(n, m);
        long ker, coker;
        if (n == 0) {
            // degree 0 is the unit line; h maps it to the degree-m class of h
            std::vector<long> rows = eng.basis_columns(m, false);
            SpMat M0 = SpMat::zero((long)rows.size(), 1);
            std::map<long, long> row_of;
            for (size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = (long)i;
            for (int w = 0; w < r.size; ++w) {
                std::vector<int> t(m, w);
                auto cls = eng.tuple_class(m, tuple_to_index(t, r.size));
                if (cls) M0.add_entry(F, row_of.at(cls->first), 0, cls->second);
            }
            M0.normalize(F);
            long rank = M0.rank(F);
            ker = 1 - rank;
            coker = (long)rows.size() - rank;
        } else {
            long rank = M.rank(F);
            ker = M.cols - rank;
            coker = M.rows - rank;
        }
        rep.ker_coker.push_back({ker, coker});
    }
    // centrality: h commutes with every degree-1 generator in low degrees
    rep.centrality_verified = true;
    int upto = std::min(N - 1, 3);
    for (int y = 0; y < r.size && rep.centrality_verified; ++y) {
        for (int n = 0; n <= upto && rep.centrality_verified; ++n) {
            if (n == 0) continue;  // degree-0 commutation is trivial
            SpMat My_n = eng.multiplication_matrix({y}, n, false);
            SpMat Hh_n1 = h_matrix(n + 1, m);
            SpMat Hh_n = h_matrix(n, m);
            SpMat My_nm = eng.multiplication_matrix({y}, n + m, false);
            SpMat lhs = Hh_n1.times(F, My_n);
            SpMat rhs = My_nm.times(F, Hh_n);
            if (!lhs.equals(F, rhs)) rep.centrality_verified = false;
        }
    }
    rep.pass = rep.centrality_verified;
    for (int n = std::max(0, N - m); n <= N; ++n) {
        auto& [k, ck] = rep.ker_coker[n];
        if (k != 0 || ck != 0) rep.pass = false;
    }
    return rep;
}

nlohmann::json SplittingReport::to_json() const {
    return {{"splits", splits}, {"n0", n0}, {"mixed_dims", mixed_dims}};
}

SplittingReport splitting_check(const Rack& base, const Cocycle2& c_on_product, int N) {
    // base must be a hereditarily connected quandle
    if (!is_quandle(base))
        throw validation_error("HypothesisFails", "base rack must be a quandle");
    if (!hereditarily_connected(base))
        throw validation_error("HypothesisFails", "base rack must be hereditarily connected");
    Rack prod = product_rack(base, trivial_rack(2));
    if (c_on_product.rack_size != prod.size)
        throw validation_error("BadCocycle", "cocycle must live on the two-colored product");
    const Field& F = *c_on_product.field;
    for (int x = 0; x < base.size; ++x) {
        int phi = x * 2, psi = x * 2 + 1;
        Scalar prod_val =
            F.mul(c_on_product.value(phi, psi), c_on_product.value(psi, phi));
        if (F.is_one(prod_val))
            throw validation_error("HypothesisFails",
                                   "mixed self-labels multiply to one at element " +
                                       std::to_string(x));
    }
    OrbitEngine eng(prod, c_on_product);
    std::vector<int> color(prod.size);
    for (int x = 0; x < prod.size; ++x) color[x] = x % 2;
    SplittingReport rep;
    rep.mixed_dims.assign(N + 1, 0);
    for (int n = 1; n <= N; ++n) {
        long mixed = 0;
        for (int i = 1; i < n; ++i) mixed += eng.dim_multidegree(n, color, {n - i, i});
        rep.mixed_dims[n] = mixed;
    }
    rep.n0 = -1;
    for (int n = N; n >= 1; --n) {
        if (rep.mixed_dims[n] != 0) break;
        rep.n0 = n;
    }
    rep.splits = rep.n0 >= 0;
    return rep;
}

}  // namespace braidstat
