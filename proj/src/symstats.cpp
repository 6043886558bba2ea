#include "braidstat/symstats.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace braidstat {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt partition_class_size(const Partition& ct) {
    int n = 0;
    for (int p : ct) n += p;
    BigInt fact(1);
    for (int i = 2; i <= n; ++i) fact *= BigInt(i);
    BigInt denom(1);
    std::map<int, int> mult;
    for (int p : ct) {
        denom *= BigInt(p);
        mult[p]++;
    }
    for (auto& [p, m] : mult)
        for (int i = 2; i <= m; ++i) denom *= BigInt(i);
    return fact / denom;
}

BigInt hook_length_dimension(const Partition& lam) {
    int n = 0;
    for (int p : lam) n += p;
    BigInt fact(1);
    for (int i = 2; i <= n; ++i) fact *= BigInt(i);
    // hook lengths
    std::vector<int> conj(lam.empty() ? 0 : lam[0], 0);
    for (int p : lam)
        for (int j = 0; j < p; ++j) conj[j]++;
    BigInt hooks(1);
    for (int i = 0; i < (int)lam.size(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            long h = (lam[i] - j) + (conj[j] - i) - 1;
            hooks *= BigInt(h);
        }
    return fact / hooks;
}

long long wedge_trace(const Partition& ct, int k, bool standard) {
    int n = 0;
    for (int p : ct) n += p;
    if (k < 0 || k > n) return 0;
    // prod over parts (1 - (-x)^l)
    std::vector<long long> poly = {1};
    for (int l : ct) {
        std::vector<long long> next(poly.size() + l, 0);
        long long sign = (l % 2 == 0) ? -1 : 1;  // -(-1)^l
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + l] += sign * poly[i];
        }
        poly = std::move(next);
    }
    if (standard) {
        // divide by 1 + x
        std::vector<long long> quot(poly.size() - 1, 0);
        long long carry = 0;
        for (size_t i = 0; i + 1 < poly.size(); ++i) {
            quot[i] = poly[i] - carry;
            carry = quot[i];
        }
        if (poly.back() != carry)
            throw validation_error("WedgeTraceSelfCheck", "series not divisible by 1+x");
        poly = std::move(quot);
    }
    return k < (int)poly.size() ? poly[k] : 0;
}

bool irr_identity_check(int n) {
    if (n < 1 || n > 12) throw validation_error("BadBound", "supported for 1 <= n <= 12");
    for (const Partition& ct : partitions_of(n)) {
        long long sum = 0;
        for (int k = 0; k <= n - 1; ++k)
            sum += (k % 2 == 0 ? 1 : -1) * wedge_trace(ct, k, true);
        if (sum % n != 0) return false;
        long long value = sum / n;
        long long expect = (ct.size() == 1) ? 1 : 0;
        if (value != expect) return false;
    }
    return true;
}

namespace {

// Murnaghan-Nakayama on beta sets: remove a strip of length l by moving a
// bead from b to b-l; sign is the number of beads strictly in between.
BigInt mn_char(std::set<int> beta, const Partition& parts, size_t pi,
               std::map<std::pair<std::vector<int>, size_t>, BigInt>& memo) {
    if (pi == parts.size()) return BigInt(1);
    std::vector<int> key(beta.begin(), beta.end());
    auto mk = std::make_pair(key, pi);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
    int l = parts[pi];
    BigInt total(0);
    for (int b : key) {
        if (b < l || beta.count(b - l)) continue;
        int between = 0;
        for (int x : key)
            if (x > b - l && x < b) between++;
        std::set<int> nb = beta;
        nb.erase(b);
        nb.insert(b - l);
        BigInt sub = mn_char(nb, parts, pi + 1, memo);
        if (between % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo[mk] = total;
    return total;
}

}  // namespace

BigInt sn_character(const Partition& lambda, const Partition& ct) {
    int n1 = 0, n2 = 0;
    for (int p : lambda) n1 += p;
    for (int p : ct) n2 += p;
    if (n1 != n2) throw validation_error("BadPartition", "size mismatch");
    int m = (int)lambda.size();
    std::set<int> beta;
    for (int i = 0; i < m; ++i) beta.insert(lambda[i] + (m - 1 - i));
    std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;
    return mn_char(beta, ct, 0, memo);
}

std::map<Partition, BigInt> sn_decompose(const BraidedSpace& v, int n) {
    const Field& F = *v.field;
    if (!v.permutational)
        throw validation_error("NotPermutational", "decomposition needs a permutational space");
    if (F.finite())
        throw validation_error("PositiveCharacteristic",
                               "decomposition needs characteristic zero");
    if (n > 8) throw cap_error("SizeCapExceeded", "decomposition capped at n = 8");
    // character of V^(x)n at each cycle type, via a braid lift acting on the
    // tensor basis
    auto trace_at = [&](const Partition& ct) {
        BraidWord w;
        w.strands = n;
        int pos = 1;
        for (int l : ct) {
            for (int j = 0; j + 1 < l; ++j) w.letters.push_back({pos + j, 1});
            pos += l;
        }
        unsigned long long total = 1;
        for (int i = 0; i < n; ++i) total *= (unsigned long long)v.dim;
        Scalar tr = F.zero();
        for (unsigned long long idx = 0; idx < total; ++idx) {
            TensorVec start;
            start[idx] = F.one();
            TensorVec img = braid_act(v, w, start);
            auto it = img.find(idx);
            if (it != img.end()) tr = F.add(tr, it->second);
        }
        // traces of permutational spaces built here are rational integers
        Scalar probe = tr;
        Rational val = probe.rat.empty() ? Rational(0) : probe.rat[0];
        for (size_t i = 1; i < probe.rat.size(); ++i)
            if (!probe.rat[i].is_zero())
                throw validation_error("NonIntegerTrace", "trace outside the prime field");
        if (!val.is_integer())
            throw validation_error("NonIntegerTrace", "trace is not an integer");
        return val.num();
    };
    auto cts = partitions_of(n);
    std::vector<BigInt> chi_v;
    for (auto& ct : cts) chi_v.push_back(trace_at(ct));
    BigInt fact(1);
    for (int i = 2; i <= n; ++i) fact *= BigInt(i);
    std::map<Partition, BigInt> mult;
    for (const Partition& lam : partitions_of(n)) {
        BigInt acc(0);
        for (size_t i = 0; i < cts.size(); ++i)
            acc += partition_class_size(cts[i]) * chi_v[i] * sn_character(lam, cts[i]);
        BigInt q, r;
        BigInt::divmod(acc, fact, q, r);
        if (!r.is_zero())
            throw validation_error("DecompositionSelfCheck", "non-integral multiplicity");
        if (!q.is_zero()) mult[lam] = q;
    }
    // dimension bookkeeping via hook lengths
    BigInt total(0);
    for (auto& [lam, m] : mult) total += m * hook_length_dimension(lam);
    BigInt dim_vn = BigInt::pow(BigInt(v.dim), (unsigned long)n);
    if (total != dim_vn)
        throw validation_error("DecompositionSelfCheck", "dimensions do not add up");
    return mult;
}

bool trace_convolution_check(long q, int n) {
    auto F = Field::create(FieldSpec::prime(q));
    bool ok = true;
    conf_enumerate(*F, n, [&](const Poly& fc) {
        if (!ok) return;
        PolyFq f(F, fc);
        const auto& factors = f.factor();
        int w = (int)factors.size();
        // convolution of the constant 1 with (-1)^deg mu
        long long conv = 0;
        for (unsigned mask = 0; mask < (1u << w); ++mask) {
            int deg_h = 0, omega_h = 0;
            for (int i = 0; i < w; ++i)
                if (mask >> i & 1) {
                    deg_h += fqp::deg(factors[i].first);
                    omega_h++;
                }
            int term = ((deg_h + omega_h) % 2 == 0) ? 1 : -1;  // (-1)^deg * (-1)^omega
            conv += term;
        }
        bool has_even = false;
        for (auto& [P, mpl] : factors)
            if (fqp::deg(P) % 2 == 0) has_even = true;
        long long expect = has_even ? 0 : (1LL << w);
        if (conv != expect) ok = false;
        // sign trace: (-1)^n mu(f) equals the sign of the factorization type
        int sign_perm = 1;
        for (auto& [P, mpl] : factors)
            if (fqp::deg(P) % 2 == 0) sign_perm = -sign_perm;
        int lhs = ((n % 2 == 0) ? 1 : -1) * mobius(f);
        if (lhs != sign_perm) ok = false;
    });
    return ok;
}

nlohmann::json decomposition_to_json(const std::map<Partition, BigInt>& mult) {
    nlohmann::json j = nlohmann::json::array();
    for (auto& [lam, m] : mult) {
        std::string key;
        for (size_t i = 0; i < lam.size(); ++i) {
            if (i) key += "+";
            key += std::to_string(lam[i]);
        }
        j.push_back({{"partition", key}, {"multiplicity", m.to_string()}});
    }
    return j;
}

}  // namespace braidstat
