#include "braidstat/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace braidstat {

namespace {

struct TupleSpace {
    const NielsenClass& nc;
    int rsize;
    std::vector<int> elem_of;   // R-index -> group element
    std::map<int, int> idx_of;  // group element -> R-index
    std::vector<std::vector<int>> conj_idx;  // conj_idx[a][b] = index of b^{-1} a b
    std::vector<int> class_of;  // per R-index
    int num_classes;
    unsigned long long total;
    std::vector<unsigned long long> w;  // slot weights

    explicit TupleSpace(const NielsenClass& nc_in) : nc(nc_in) {
        if (!nc.G.is_conjugacy_closed(nc.R))
            throw validation_error("NotConjugacyClosed", "R must be conjugacy-closed");
        elem_of = nc.R;
        std::sort(elem_of.begin(), elem_of.end());
        rsize = (int)elem_of.size();
        for (int i = 0; i < rsize; ++i) idx_of[elem_of[i]] = i;
        conj_idx.assign(rsize, std::vector<int>(rsize));
        for (int a = 0; a < rsize; ++a)
            for (int b = 0; b < rsize; ++b)
                conj_idx[a][b] = idx_of.at(nc.G.conj(elem_of[a], elem_of[b]));
        auto classes = nc.classes();
        num_classes = (int)classes.size();
        class_of.assign(rsize, -1);
        for (int c = 0; c < num_classes; ++c)
            for (int e : classes[c]) class_of[idx_of.at(e)] = c;
        double logn = nc.n * std::log2((double)std::max(2, rsize));
        if (logn > 62) throw cap_error("SizeCapExceeded", "tuple index overflow");
        total = 1;
        for (int i = 0; i < nc.n; ++i) total *= (unsigned long long)rsize;
        long cap = cap_value(kDefaultTupleCap);
        if ((long long)total > cap)
            throw cap_error("SizeCapExceeded",
                            "tuple scan of " + std::to_string(total) + " exceeds cap");
        w.assign(std::max(nc.n, 1), 1);
        for (int i = nc.n - 2; i >= 0; --i) w[i] = w[i + 1] * (unsigned long long)rsize;
    }

    std::vector<int> decode(unsigned long long idx) const {
        std::vector<int> t(nc.n);
        for (int i = nc.n - 1; i >= 0; --i) {
            t[i] = (int)(idx % (unsigned long long)rsize);
            idx /= (unsigned long long)rsize;
        }
        return t;
    }

    int product_of(unsigned long long idx) const {
        auto t = decode(idx);
        int p = nc.G.id;
        for (int i : t) p = nc.G.op(p, elem_of[i]);
        return p;
    }

    std::vector<int> generated_of(unsigned long long idx) const {
        auto t = decode(idx);
        std::vector<int> gens;
        for (int i : t) gens.push_back(elem_of[i]);
        return nc.G.closure(gens);
    }

    std::vector<int> class_counts(unsigned long long idx) const {
        auto t = decode(idx);
        std::vector<int> counts(num_classes, 0);
        for (int i : t) counts[class_of[i]]++;
        return counts;
    }

    bool admitted(unsigned long long idx, std::map<std::vector<int>, bool>& gen_cache) const {
        if (nc.product_one && product_of(idx) != nc.G.id) return false;
        if (!nc.multidegree.empty()) {
            if ((int)nc.multidegree.size() != num_classes)
                throw validation_error("BadMultidegree", "class count mismatch");
            if (class_counts(idx) != nc.multidegree) return false;
        }
        if (nc.generating) {
            auto t = decode(idx);
            std::vector<int> key;
            for (int i : t) key.push_back(i);
            std::sort(key.begin(), key.end());
            key.erase(std::unique(key.begin(), key.end()), key.end());
            auto it = gen_cache.find(key);
            bool gen;
            if (it != gen_cache.end()) {
                gen = it->second;
            } else {
                std::vector<int> gens;
                for (int i : key) gens.push_back(elem_of[i]);
                gen = (int)nc.G.closure(gens).size() == nc.G.size;
                gen_cache[key] = gen;
            }
            if (!gen) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<std::vector<int>> NielsenClass::classes() const {
    std::set<int> left(R.begin(), R.end());
    std::vector<std::vector<int>> out;
    while (!left.empty()) {
        int x = *left.begin();
        auto cls = G.conjugacy_class(x);
        for (int y : cls)
            if (!left.count(y))
                throw validation_error("NotConjugacyClosed", "R must be conjugacy-closed");
        for (int y : cls) left.erase(y);
        out.push_back(cls);
    }
    return out;
}

long long nielsen_count(const NielsenClass& nc) {
    TupleSpace ts(nc);
    std::map<std::vector<int>, bool> gen_cache;
    long long count = 0;
    for (unsigned long long idx = 0; idx < ts.total; ++idx)
        if (ts.admitted(idx, gen_cache)) count++;
    return count;
}

BigInt product_one_count_oracle(const FiniteGroup& G, const std::vector<int>& R, int n) {
    std::vector<BigInt> vec(G.size, BigInt(0));
    vec[G.id] = BigInt(1);
    std::vector<BigInt> r_ind(G.size, BigInt(0));
    for (int x : R) r_ind[x] = BigInt(1);
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(G.size, BigInt(0));
        for (int a = 0; a < G.size; ++a) {
            if (vec[a].is_zero()) continue;
            for (int b = 0; b < G.size; ++b) {
                if (r_ind[b].is_zero()) continue;
                next[G.op(a, b)] += vec[a];
            }
        }
        vec = std::move(next);
    }
    return vec[G.id];
}

OrbitSet braid_orbits(const NielsenClass& nc) {
    TupleSpace ts(nc);
    std::map<std::vector<int>, bool> gen_cache;
    OrbitSet out;
    out.orbit_id.assign(ts.total, -1);
    std::vector<unsigned long long> queue;
    for (unsigned long long seed = 0; seed < ts.total; ++seed) {
        if (out.orbit_id[seed] >= 0) continue;
        if (!ts.admitted(seed, gen_cache)) continue;
        HurwitzOrbit orb;
        orb.rep = seed;
        orb.product = ts.product_of(seed);
        orb.generated = ts.generated_of(seed);
        orb.class_multiset = ts.class_counts(seed);
        int32_t oid = (int32_t)out.orbits.size();
        out.orbit_id[seed] = oid;
        queue.clear();
        queue.push_back(seed);
        long long size = 1;
        while (!queue.empty()) {
            unsigned long long u = queue.back();
            queue.pop_back();
            for (int i = 0; i + 1 < nc.n; ++i) {
                int a = (int)((u / ts.w[i]) % (unsigned long long)ts.rsize);
                int b = (int)((u / ts.w[i + 1]) % (unsigned long long)ts.rsize);
                // forward move: (a, b) -> (b, b^{-1} a b)
                unsigned long long v = u + ((unsigned long long)b - a) * ts.w[i] +
                                       ((unsigned long long)ts.conj_idx[a][b] - b) * ts.w[i + 1];
                // backward move: (a, b) -> (a b a^{-1}, a)
                int pre = -1;
                {
                    // unique x with x^a ... backward of forward: (x, y): x = a b a^{-1}
                    int g = nc.G.op(nc.G.op(ts.elem_of[a], ts.elem_of[b]), nc.G.inv[ts.elem_of[a]]);
                    pre = ts.idx_of.at(g);
                }
                unsigned long long z = u + ((unsigned long long)pre - a) * ts.w[i] +
                                       ((unsigned long long)a - b) * ts.w[i + 1];
                for (unsigned long long nb : {v, z}) {
                    if (out.orbit_id[nb] < 0) {
                        // moves preserve the constraints; verify the invariants
                        if (ts.product_of(nb) != orb.product)
                            throw validation_error("OrbitInvariantBroken",
                                                   "product changed along a move");
                        if (ts.class_counts(nb) != orb.class_multiset)
                            throw validation_error("OrbitInvariantBroken",
                                                   "class multiset changed along a move");
                        if (ts.generated_of(nb) != orb.generated)
                            throw validation_error("OrbitInvariantBroken",
                                                   "generated subgroup changed along a move");
                        out.orbit_id[nb] = oid;
                        queue.push_back(nb);
                        size++;
                    }
                }
            }
        }
        orb.size = size;
        out.total_tuples += size;
        out.orbits.push_back(std::move(orb));
    }
    return out;
}

long qpower_fixed_orbits(const NielsenClass& nc, const OrbitSet& orbits, long q) {
    TupleSpace ts(nc);
    // entrywise power map on R
    std::vector<int> power_idx(ts.rsize);
    for (int i = 0; i < ts.rsize; ++i) {
        int g = nc.G.id;
        for (long e = 0; e < q; ++e) g = nc.G.op(g, ts.elem_of[i]);
        auto it = ts.idx_of.find(g);
        if (it == ts.idx_of.end())
            throw validation_error("QPowerLeavesR", "q-th power leaves the branch set");
        power_idx[i] = it->second;
    }
    auto phi = [&](unsigned long long idx) {
        auto t = ts.decode(idx);
        for (int& x : t) x = power_idx[x];
        unsigned long long out = 0;
        for (int x : t) out = out * (unsigned long long)ts.rsize + (unsigned long long)x;
        return out;
    };
    // verify the map preserves the constrained set and descends to orbits
    for (unsigned long long idx = 0; idx < ts.total; ++idx) {
        int32_t oid = orbits.orbit_id[idx];
        if (oid < 0) continue;
        int32_t img = orbits.orbit_id[phi(idx)];
        if (img < 0)
            throw validation_error("QPowerDescent",
                                   "power map leaves the constrained tuple set");
        if (img != orbits.orbit_id[phi(orbits.orbits[oid].rep)])
            throw validation_error("QPowerDescent", "power map does not descend to orbits");
    }
    long fixed = 0;
    for (auto& orb : orbits.orbits)
        if (orbits.orbit_id[phi(orb.rep)] == orbits.orbit_id[orb.rep]) fixed++;
    return fixed;
}

nlohmann::json OrbitSet::to_json(const NielsenClass& nc) const {
    TupleSpace ts(nc);
    nlohmann::json arr = nlohmann::json::array();
    for (auto& orb : orbits)
        arr.push_back({{"rep", ts.decode(orb.rep)},
                       {"size", orb.size},
                       {"product", orb.product},
                       {"generated_order", orb.generated.size()},
                       {"class_multiset", orb.class_multiset}});
    return {{"total_tuples", total_tuples}, {"orbits", arr}};
}

std::vector<ComponentRow> component_table(const FiniteGroup& G, const std::vector<int>& R,
                                          int n_lo, int n_hi, long q) {
    std::vector<ComponentRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        NielsenClass nc{G, R, n, true, true, {}};
        OrbitSet orbits = braid_orbits(nc);
        ComponentRow row;
        row.n = n;
        row.tuples = orbits.total_tuples;
        row.orbits = (long)orbits.orbits.size();
        row.fixed = orbits.orbits.empty() ? 0 : qpower_fixed_orbits(nc, orbits, q);
        row.estimate = point_estimate(q, n, row.fixed);
        rows.push_back(row);
    }
    return rows;
}

bool component_periodicity(const std::vector<ComponentRow>& rows, long group_order) {
    long period = group_order * group_order;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            if ((rows[j].n - rows[i].n) % period != 0) continue;
            if (rows[i].orbits != rows[j].orbits) return false;
        }
    return true;
}

BigInt point_estimate(long q, int n, long fixed_components) {
    if (n < 1) return BigInt(fixed_components);
    BigInt qn = BigInt::pow(BigInt(q), (unsigned long)n);
    BigInt qn1 = BigInt::pow(BigInt(q), (unsigned long)(n - 1));
    return BigInt(fixed_components) * (qn - qn1);
}

}  // namespace braidstat
