#include "doctest.h"

#include "braidstat/ffstats.hpp"

using namespace braidstat;

TEST_CASE("mobius sums vanish from degree two") {
    for (long q : {3L, 5L}) {
        for (int n = 2; n <= 6; ++n) {
            BigInt s = mobius_sum(q, n);
            CHECK(s.is_zero());
            CHECK(mobius_sum_sign_route(q, n) == s);
        }
        CHECK(mobius_sum(q, 1) == BigInt(-q));
    }
}

TEST_CASE("mobius routes agree pointwise through the sum at degree seven") {
    MobiusPair p = mobius_sum_both(3, 7);
    CHECK(p.pointwise_equal);
    CHECK(p.factorization_route.is_zero());
    CHECK(p.sign_route.is_zero());
    CHECK(mobius_sum(3, 7) == p.factorization_route);
    CHECK(mobius_sum_sign_route(3, 7) == p.sign_route);
}

TEST_CASE("reruns are bit-identical") {
    ExperimentSpec spec;
    spec.kind = "legendre";
    spec.q = 3;
    spec.n_lo = 1;
    spec.n_hi = 4;
    std::string a = stat_rows_to_csv(run_experiment(spec));
    std::string b = stat_rows_to_csv(run_experiment(spec));
    spec.threads = 2;
    std::string c = stat_rows_to_csv(run_experiment(spec));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("cap override through the environment") {
    setenv("BRAIDSTAT_CAP", "10", 1);
    CHECK_THROWS_AS((void)mobius_sum(3, 4), Error);
    unsetenv("BRAIDSTAT_CAP");
    CHECK(mobius_sum(3, 4).is_zero());
}

TEST_CASE("threaded enumeration matches single-threaded") {
    CHECK(mobius_sum(3, 6, 2) == mobius_sum(3, 6, 1));
    LegendreRow a = legendre_main_term(3, 5, 2);
    LegendreRow b = legendre_main_term(3, 5, 1);
    CHECK(a.total == b.total);
}

TEST_CASE("quadratic discriminant character sums vanish") {
    auto Q = Field::create(FieldSpec::rational());
    for (long q : {3L, 5L})
        for (int n = 2; n <= 5; ++n) {
            Scalar s = chi_disc_sum(q, n, 2);
            CHECK(Q->is_zero(s));
        }
    // degree one: disc of t + c is 1, so the sum is q
    Scalar s1 = chi_disc_sum(5, 1, 2);
    CHECK(Q->eq(s1, Q->from_int(5)));
}

TEST_CASE("higher-order character sums vanish unless the order divides n(n-1)") {
    auto Q4 = Field::create(FieldSpec::cyclotomic(4));
    for (int n : {2, 3, 6}) {  // 4 does not divide n(n-1)
        Scalar s = chi_disc_sum(5, n, 4);
        CHECK(Q4->is_zero(s));
    }
}

TEST_CASE("irreducible proportion with the main-term bound") {
    for (long q : {3L, 5L})
        for (int n = 2; n <= 10; ++n) {
            IrrRatioRow row = irr_ratio(q, n);
            CHECK(row.within_bound);
        }
    IrrRatioRow r = irr_ratio(5, 10);
    CHECK(r.conf_count == BigInt("7812500"));
}

TEST_CASE("legendre convolution main term") {
    // degree one: only trivial splittings, so T = 2 # Conf
    LegendreRow r1 = legendre_main_term(3, 1);
    CHECK(r1.total == BigInt(6));
    CHECK(r1.residual.is_zero());
    LegendreRow r5 = legendre_main_term(5, 1);
    CHECK(r5.total == BigInt(10));
    // degree two over F3: exact value from the six squarefree quadratics
    LegendreRow r2 = legendre_main_term(3, 2);
    auto F = Field::create(FieldSpec::prime(3));
    BigInt direct(0);
    conf_enumerate(*F, 2, [&](const Poly& f) {
        direct += BigInt(jacobi_convolution(PolyFq(F, f)));
    });
    CHECK(r2.total == direct);
}

TEST_CASE("jacobi convolution agrees with the resultant-character model") {
    // term by term: (g/h) = chi(Res(h,g)) for each splitting
    for (long q : {3L, 5L}) {
        auto F = Field::create(FieldSpec::prime(q));
        auto chi = CharSpec::make(F, 2, Field::create(FieldSpec::rational()));
        for (int n = 2; n <= 4; ++n) {
            conf_enumerate(*F, n, [&](const Poly& fc) {
                PolyFq f(F, fc);
                const auto& factors = f.factor();
                int w = (int)factors.size();
                long long direct = 0, model = 0;
                for (unsigned mask = 0; mask < (1u << w); ++mask) {
                    Poly g = {1}, h = {1};
                    for (int i = 0; i < w; ++i) {
                        if (mask >> i & 1)
                            g = fqp::mul(*F, g, factors[i].first);
                        else
                            h = fqp::mul(*F, h, factors[i].first);
                    }
                    direct += jacobi_symbol(*F, g, h);
                    model += fqp::deg(h) == 0 ? 1 : chi.sign_value(resultant(*F, h, g));
                }
                CHECK(direct == model);
                CHECK(direct == jacobi_convolution(f));
            });
        }
    }
}

TEST_CASE("experiment runner emits csv rows with verdicts") {
    ExperimentSpec spec;
    spec.kind = "mobius";
    spec.q = 3;
    spec.n_lo = 2;
    spec.n_hi = 4;
    auto rows = run_experiment(spec);
    REQUIRE(rows.size() == 3);
    for (auto& r : rows) CHECK(r.verdict == "PASS");
    std::string csv = stat_rows_to_csv(rows);
    CHECK(csv.find("q,n,statistic,value,main_term,residual,verdict") == 0);
    CHECK(csv.find("PASS") != std::string::npos);

    ExperimentSpec irr;
    irr.kind = "irr";
    irr.q = 5;
    irr.n_lo = 3;
    irr.n_hi = 5;
    for (auto& r : run_experiment(irr)) CHECK(r.verdict == "PASS");

    ExperimentSpec bad;
    bad.kind = "unknown";
    CHECK_THROWS_AS((void)run_experiment(bad), Error);
}

TEST_CASE("work cap guards the enumeration") {
    CHECK_THROWS_AS((void)mobius_sum(5, 30), Error);
}
