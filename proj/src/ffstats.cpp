#include "braidstat/ffstats.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <sstream>
#include <thread>

namespace braidstat {

void enforce_work_cap(long q, int n) {
    long cap = cap_value(kDefaultWorkCap);
    double work = n * std::log2((double)q);
    if (work > 62 || (double)std::pow((double)q, n) > (double)cap)
        throw cap_error("WorkCapExceeded", "q^n exceeds the work cap");
}

namespace {

// Runs fn(block, field) over the constant-coefficient blocks 0..q-1 on the
// requested number of workers; per-block results land in a slot vector, so
// the reduction order is fixed regardless of scheduling.
template <typename T, typename Fn>
std::vector<T> run_blocks(long q, int threads, Fn fn) {
    std::vector<T> out((size_t)q);
    if (threads <= 1) {
        auto F = Field::create(FieldSpec::prime(q));
        for (long b = 0; b < q; ++b) out[b] = fn(b, *F);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            auto F = Field::create(FieldSpec::prime(q));
            while (true) {
                long b = next.fetch_add(1);
                if (b >= q) break;
                out[b] = fn(b, *F);
            }
        });
    for (auto& th : pool) th.join();
    return out;
}

// Enumerates monic squarefree degree-n polynomials with constant coefficient
// c0 and calls the visitor.
template <typename Fn>
void conf_block(const Field& F, int n, long c0, Fn visit) {
    long q = F.size();
    Poly f(n + 1, 0);
    f[n] = 1;
    f[0] = c0;
    if (n == 0) {
        if (c0 == 0) visit(Poly{1});
        return;
    }
    std::vector<long> digits(n - 1, 0);  // coefficients 1..n-1
    while (true) {
        for (int i = 1; i < n; ++i) f[i] = digits[i - 1];
        Poly g = f;
        fqp::trim(F, g);
        if (fqp::squarefree(F, g)) visit(g);
        int pos = n - 2;
        while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
        if (pos < 0) break;
        digits[pos]++;
    }
}

int mu_from_ddf(const Field& F, const Poly& f) {
    return squarefree_factor_degrees(F, f).size() % 2 == 0 ? 1 : -1;
}

int mu_from_sign(const Field& F, const Poly& f, int n) {
    // mu(f) = (-1)^n sign(sigma_f); the sign flips once per even-degree factor
    int sign = 1;
    for (int d : squarefree_factor_degrees(F, f))
        if (d % 2 == 0) sign = -sign;
    return (n % 2 == 0 ? 1 : -1) * sign;
}

}  // namespace

BigInt mobius_sum(long q, int n, int threads) {
    enforce_work_cap(q, n);
    auto parts = run_blocks<long long>(q, threads, [&](long b, const Field& F) {
        long long acc = 0;
        conf_block(F, n, b, [&](const Poly& f) { acc += mu_from_ddf(F, f); });
        return acc;
    });
    BigInt total(0);
    for (long long p : parts) total += BigInt(p);
    return total;
}

BigInt mobius_sum_sign_route(long q, int n, int threads) {
    enforce_work_cap(q, n);
    auto parts = run_blocks<long long>(q, threads, [&](long b, const Field& F) {
        long long acc = 0;
        conf_block(F, n, b, [&](const Poly& f) { acc += mu_from_sign(F, f, n); });
        return acc;
    });
    BigInt total(0);
    for (long long p : parts) total += BigInt(p);
    return total;
}

MobiusPair mobius_sum_both(long q, int n, int threads) {
    enforce_work_cap(q, n);
    struct Block {
        long long fact = 0, sign = 0;
        bool pointwise = true;
    };
    auto parts = run_blocks<Block>(q, threads, [&](long b, const Field& F) {
        Block acc;
        conf_block(F, n, b, [&](const Poly& f) {
            auto degs = squarefree_factor_degrees(F, f);
            int mu = degs.size() % 2 == 0 ? 1 : -1;
            int sign = 1;
            for (int d : degs)
                if (d % 2 == 0) sign = -sign;
            int mu_sign = (n % 2 == 0 ? 1 : -1) * sign;
            acc.fact += mu;
            acc.sign += mu_sign;
            if (mu != mu_sign) acc.pointwise = false;
        });
        return acc;
    });
    MobiusPair out;
    out.factorization_route = BigInt(0);
    out.sign_route = BigInt(0);
    out.pointwise_equal = true;
    for (auto& p : parts) {
        out.factorization_route += BigInt(p.fact);
        out.sign_route += BigInt(p.sign);
        out.pointwise_equal = out.pointwise_equal && p.pointwise;
    }
    return out;
}

Scalar chi_disc_sum(long q, int n, long order, int threads) {
    enforce_work_cap(q, n);
    auto target = Field::create(order <= 2 ? FieldSpec::rational() : FieldSpec::cyclotomic(order));
    auto base = Field::create(FieldSpec::prime(q));
    if ((q - 1) % order != 0)
        throw validation_error("NoRootOfUnityOfOrder", "character order must divide q-1");
    // count discriminant classes by discrete-log residue mod the order
    auto parts = run_blocks<std::vector<long long>>(q, threads, [&](long b, const Field& F) {
        std::vector<long long> counts(order, 0);
        conf_block(F, n, b, [&](const Poly& f) {
            long disc = discriminant(F, f);
            counts[F.dlog(disc) % order]++;
        });
        return counts;
    });
    std::vector<BigInt> counts(order, BigInt(0));
    for (auto& p : parts)
        for (long e = 0; e < order; ++e) counts[e] += BigInt(p[e]);
    Scalar zeta = target->root_of_unity(order);
    Scalar acc = target->zero();
    for (long e = 0; e < order; ++e) {
        if (!counts[e].fits_int64())
            throw cap_error("WorkCapExceeded", "count overflows the exact accumulator");
        Scalar term = target->mul(target->pow(zeta, e), target->from_int(counts[e].to_int64()));
        acc = target->add(acc, term);
    }
    (void)base;
    return acc;
}

IrrRatioRow irr_ratio(long q, int n) {
    IrrRatioRow row;
    row.irr_count = irreducible_count(q, n);
    auto F = Field::create(FieldSpec::prime(q));
    row.conf_count = BigInt(conf_count(*F, n));
    row.ratio = Rational(row.irr_count, row.conf_count);
    row.main_term = Rational(BigInt(q), BigInt((q - 1) * (long)n));
    // |ratio - main|^2 q^n <= 4, an exact rational comparison
    Rational diff = row.ratio - row.main_term;
    Rational lhs = diff * diff * Rational(BigInt::pow(BigInt(q), (unsigned long)n), BigInt(1));
    row.within_bound = lhs.cmp(Rational(4)) <= 0;
    return row;
}

LegendreRow legendre_main_term(long q, int n, int threads) {
    enforce_work_cap(q, n);
    if (q % 2 == 0) throw validation_error("EvenCharacteristic", "requires odd q");
    auto parts = run_blocks<BigInt>(q, threads, [&](long b, const Field& F) {
        BigInt acc(0);
        auto Fp = Field::create(F.spec());
        conf_block(F, n, b, [&](const Poly& f) {
            PolyFq poly(Fp, f);
            acc += BigInt(jacobi_convolution(poly));
        });
        return acc;
    });
    LegendreRow row;
    row.total = BigInt(0);
    for (auto& p : parts) row.total += p;
    auto F = Field::create(FieldSpec::prime(q));
    row.twice_conf = BigInt(2) * BigInt(conf_count(*F, n));
    row.residual = row.total - row.twice_conf;
    return row;
}

std::vector<StatRow> run_experiment(const ExperimentSpec& spec) {
    std::vector<StatRow> rows;
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        StatRow row;
        row.q = spec.q;
        row.n = n;
        if (spec.kind == "mobius") {
            MobiusPair p = mobius_sum_both(spec.q, n, spec.threads);
            row.statistic = "mobius_sum";
            row.value = p.factorization_route.to_string();
            row.main_term = "0";
            row.residual = p.factorization_route.to_string();
            bool pass = p.pointwise_equal && (n < 2 || p.factorization_route.is_zero());
            row.verdict = pass ? "PASS" : "FAIL";
        } else if (spec.kind == "chidisc") {
            Scalar s = chi_disc_sum(spec.q, n, spec.char_order, spec.threads);
            auto target =
                Field::create(spec.char_order <= 2 ? FieldSpec::rational()
                                                   : FieldSpec::cyclotomic(spec.char_order));
            row.statistic = "chi_disc_sum_order" + std::to_string(spec.char_order);
            row.value = target->to_string(s);
            row.main_term = "0";
            row.residual = row.value;
            row.verdict = (n < 2 || target->is_zero(s)) ? "PASS" : "FAIL";
        } else if (spec.kind == "irr") {
            IrrRatioRow r = irr_ratio(spec.q, n);
            row.statistic = "irr_ratio";
            row.value = r.ratio.to_string();
            row.main_term = r.main_term.to_string();
            row.residual = (r.ratio - r.main_term).to_string();
            row.verdict = r.within_bound ? "PASS" : "FAIL";
        } else if (spec.kind == "legendre") {
            LegendreRow r = legendre_main_term(spec.q, n, spec.threads);
            row.statistic = "legendre_convolution";
            row.value = r.total.to_string();
            row.main_term = r.twice_conf.to_string();
            row.residual = r.residual.to_string();
            row.verdict = n == 1 ? (r.residual.is_zero() ? "PASS" : "FAIL") : "";
        } else {
            throw validation_error("BadExperiment", "unknown statistic kind: " + spec.kind);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string stat_rows_to_csv(const std::vector<StatRow>& rows) {
    std::ostringstream out;
    out << "q,n,statistic,value,main_term,residual,verdict\n";
    for (auto& r : rows)
        out << r.q << "," << r.n << "," << r.statistic << "," << r.value << "," << r.main_term
            << "," << r.residual << "," << r.verdict << "\n";
    return out.str();
}

}  // namespace braidstat
