#include "doctest.h"

#include <set>

#include "braidstat/polyfq.hpp"

using namespace braidstat;

namespace {

FieldPtr F3() {
    static FieldPtr f = Field::create(FieldSpec::prime(3));
    return f;
}
FieldPtr F5() {
    static FieldPtr f = Field::create(FieldSpec::prime(5));
    return f;
}

// Enumerates all monic polynomials of degree n (coefficient odometer).
void for_each_monic(const Field& F, int n, const std::function<void(const Poly&)>& fn) {
    long q = F.size();
    Poly f(n + 1, 0);
    f[n] = 1;
    std::vector<long> d(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) f[i] = d[i];
        fn(f);
        int pos = n - 1;
        while (pos >= 0 && d[pos] == q - 1) d[pos--] = 0;
        if (pos < 0) break;
        d[pos]++;
    }
}

}  // namespace

TEST_CASE("factorization basics over F3") {
    auto F = F3();
    // oracle: t^2+1 has no root among 0,1,2
    Poly f = {1, 0, 1};
    for (long x = 0; x < 3; ++x) CHECK(fqp::eval(*F, f, x) != 0);
    PolyFq p(F, f);
    auto fs = p.factor();
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == f);
    CHECK(fs[0].second == 1);

    PolyFq tt(F, {0, 2, 1});  // t^2 - t = t(t-1): roots 0 and 1
    auto fs2 = tt.factor();
    REQUIRE(fs2.size() == 2);
    CHECK(fs2[0].first == Poly{0, 1});
    CHECK(fs2[1].first == Poly{2, 1});

    PolyFq sq(F, {0, 0, 1});  // t^2
    auto fs3 = sq.factor();
    REQUIRE(fs3.size() == 1);
    CHECK(fs3[0].first == Poly{0, 1});
    CHECK(fs3[0].second == 2);

    PolyFq cube(F, {0, 0, 0, 1});  // t^3, derivative vanishes
    auto fs4 = cube.factor();
    REQUIRE(fs4.size() == 1);
    CHECK(fs4[0].second == 3);
}

TEST_CASE("factorization round trips on every monic quintic over F3 and quartic over F5") {
    for (auto F : {F3(), F5()}) {
        int n = F->size() == 3 ? 5 : 4;
        for_each_monic(*F, n, [&](const Poly& f) {
            PolyFq p(F, f);
            auto& fs = p.factor();
            Poly prod = {1};
            for (auto& [P, m] : fs) {
                CHECK(fqp::irreducible(*F, P));
                for (int i = 0; i < m; ++i) prod = fqp::mul(*F, prod, P);
            }
            CHECK(prod == f);
        });
    }
}

TEST_CASE("conf enumeration counts") {
    CHECK(conf_enumerate(*F3(), 1, nullptr) == 3);
    CHECK(conf_enumerate(*F3(), 2, nullptr) == 6);
    // oracle: exhaustive squarefree scan over the 81 monic quartics
    long long brute = 0;
    for_each_monic(*F3(), 4, [&](const Poly& f) {
        Poly d = fqp::derivative(*F3(), f);
        if (!d.empty() && fqp::deg(fqp::gcd_monic(*F3(), f, d)) == 0) brute++;
    });
    CHECK(brute == 54);
    CHECK(conf_enumerate(*F3(), 4, nullptr) == brute);
    CHECK(conf_count(*F3(), 4) == 54);
    CHECK(conf_enumerate(*F3(), 0, nullptr) == 1);
    for (int n = 2; n <= 6; ++n) CHECK(conf_enumerate(*F3(), n, nullptr) == conf_count(*F3(), n));
}

TEST_CASE("mobius, omega, divisor count") {
    PolyFq f(F3(), {0, 2, 1});  // t(t-1)
    CHECK(omega(f) == 2);
    CHECK(mobius(f) == 1);
    CHECK(divisor_count(f, 2).to_int64() == 4);
    CHECK(one_irr(f) == 0);
    PolyFq sq(F3(), {0, 0, 1});
    CHECK_THROWS_AS((void)mobius(sq), Error);
    PolyFq irr(F3(), {1, 0, 1});
    CHECK(one_irr(irr) == 1);
}

TEST_CASE("resultants") {
    auto F = F3();
    CHECK(resultant(*F, {0, 1}, {2, 1}) == 2);  // Res(t, t-1) = -1
    CHECK(resultant(*F, {1, 0, 1}, {1, 0, 1}) == 0);
    // oracle for Res(t^2+1, t): evaluate t at the two roots in F9
    auto F9 = Field::create(FieldSpec::extension(3, 2));
    std::vector<long> roots;
    for (long c = 0; c < 9; ++c) {
        // evaluate c^2 + 1 in F9
        long v = F9->code_add(F9->code_mul(c, c), 1);
        if (v == 0) roots.push_back(c);
    }
    REQUIRE(roots.size() == 2);
    long prod = F9->code_mul(roots[0], roots[1]);  // g = t evaluates to the root itself
    // prod lies in the prime subfield: digits (c,0)
    Scalar s = F9->element(prod);
    CHECK(s.fin[1] == 0);
    CHECK(resultant(*F, {1, 0, 1}, {0, 1}) == s.fin[0]);
    CHECK(s.fin[0] == 1);
}

TEST_CASE("jacobi symbol via Euler criterion with exhaustive square oracle") {
    auto F = F3();
    // oracle: squares modulo an irreducible h = set of y^2 mod h
    auto is_square_mod = [&](const Poly& g, const Poly& h) {
        std::set<Poly> squares;
        long q = F->size();
        int n = fqp::deg(h);
        std::vector<long> d(n, 0);
        while (true) {
            Poly y(d.begin(), d.end());
            fqp::trim(*F, y);
            if (!y.empty()) squares.insert(fqp::rem(*F, fqp::mul(*F, y, y), h));
            int pos = n - 1;
            while (pos >= 0 && d[pos] == q - 1) d[pos--] = 0;
            if (pos < 0) break;
            d[pos]++;
        }
        return squares.count(fqp::rem(*F, g, h)) > 0;
    };
    Poly t = {0, 1};
    Poly h1 = {1, 0, 1};  // t^2+1
    Poly h2 = {2, 1, 1};  // t^2+t+2, irreducible over F3
    REQUIRE(fqp::irreducible(*F, h2));
    CHECK(is_square_mod(t, h1));       // t = (1-t)^2 mod t^2+1
    CHECK_FALSE(is_square_mod(t, h2));
    CHECK(jacobi_symbol(*F, t, h1) == 1);
    CHECK(jacobi_symbol(*F, t, h2) == -1);
    CHECK(jacobi_symbol(*F, {1}, h1) == 1);
    CHECK(jacobi_symbol(*F, t, t) == 0);
    auto F4 = Field::create(FieldSpec::extension(2, 2));
    CHECK_THROWS_AS((void)jacobi_symbol(*F4, t, h1), Error);
}

TEST_CASE("chi_disc example and quadratic character") {
    auto F = F5();
    auto chi = CharSpec::make(F, 2, Field::create(FieldSpec::rational()));
    PolyFq f(F, {1, 0, 1});  // t^2+1, disc = -4 = 1 in F5
    CHECK(discriminant(*F, f.coeffs()) == 1);
    Scalar v = chi_disc(f, chi);
    CHECK(chi.target->is_one(v));
    // character is multiplicative on F5^*
    for (long a = 1; a < 5; ++a)
        for (long b = 1; b < 5; ++b)
            CHECK(chi.sign_value(F->code_mul(a, b)) == chi.sign_value(a) * chi.sign_value(b));
}

TEST_CASE("chi(disc f) = (-1)^deg f * mu(f) pointwise, small degrees") {
    for (auto F : {F3(), F5()}) {
        auto chi = CharSpec::make(F, 2, Field::create(FieldSpec::rational()));
        for (int n = 1; n <= 5; ++n) {
            conf_enumerate(*F, n, [&](const Poly& fc) {
                PolyFq f(F, fc);
                int lhs = chi.sign_value(discriminant(*F, fc));
                int rhs = (n % 2 == 0 ? 1 : -1) * mobius(f);
                CHECK(lhs == rhs);
            });
        }
    }
}

TEST_CASE("chi(Res(f,g)) equals jacobi(g,f) on coprime squarefree pairs") {
    for (auto F : {F3(), F5()}) {
        auto chi = CharSpec::make(F, 2, Field::create(FieldSpec::rational()));
        for (int df = 1; df <= 3; ++df)
            conf_enumerate(*F, df, [&](const Poly& fc) {
                Poly f = fc;
                for (int dg = 1; dg <= 2; ++dg)
                    conf_enumerate(*F, dg, [&](const Poly& gc) {
                        Poly g = gc;
                        Poly gr = fqp::rem(*F, g, f);
                        if (gr.empty() || fqp::deg(fqp::gcd_monic(*F, gr, f)) != 0) return;
                        CHECK(chi.sign_value(resultant(*F, f, g)) == jacobi_symbol(*F, g, f));
                    });
            });
    }
}

TEST_CASE("mobius sums vanish and match the zeta-identity oracle") {
    for (auto F : {F3(), F5()}) {
        long q = F->size();
        int nmax = 6;
        // oracle: expand prod over irreducibles (1 - t^deg P)^{N_d} up to degree nmax
        std::vector<BigInt> series(nmax + 1, BigInt(0));
        series[0] = BigInt(1);
        for (int d = 1; d <= nmax; ++d) {
            BigInt Nd = irreducible_count(q, d);
            REQUIRE(Nd.fits_int64());
            for (long long rep = 0; rep < Nd.to_int64(); ++rep) {
                for (int i = nmax; i >= d; --i) series[i] = series[i] - series[i - d];
            }
        }
        // coefficient must be 1, -q, 0, 0, ...
        CHECK(series[1].to_int64() == -q);
        for (int n = 2; n <= nmax; ++n) CHECK(series[n].is_zero());
        // brute force agrees
        for (int n = 2; n <= nmax; ++n) {
            long long sum = 0;
            conf_enumerate(*F, n, [&](const Poly& fc) { sum += mobius(PolyFq(F, fc)); });
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("irreducible counts match enumeration") {
    for (auto F : {F3(), F5()}) {
        int top = F->size() == 3 ? 8 : 6;
        for (int n = 1; n <= top; ++n) {
            long long brute = 0;
            for_each_monic(*F, n, [&](const Poly& f) {
                if (fqp::irreducible(*F, f)) brute++;
            });
            CHECK(BigInt(brute) == irreducible_count(F->size(), n));
        }
    }
}

TEST_CASE("multiplicativity of mu, omega, d_k on coprime products") {
    auto F = F3();
    std::vector<Poly> pool;
    for (int n = 1; n <= 3; ++n) conf_enumerate(*F, n, [&](const Poly& f) { pool.push_back(f); });
    int checked = 0;
    for (size_t i = 0; i < pool.size() && checked < 200; i += 2)
        for (size_t j = i + 1; j < pool.size() && checked < 200; j += 3) {
            Poly g = fqp::gcd_monic(*F, pool[i], pool[j]);
            if (fqp::deg(g) != 0) continue;
            Poly prod = fqp::mul(*F, pool[i], pool[j]);
            if (!fqp::squarefree(*F, prod)) continue;
            PolyFq a(F, pool[i]), b(F, pool[j]), ab(F, prod);
            CHECK(mobius(ab) == mobius(a) * mobius(b));
            CHECK(omega(ab) == omega(a) + omega(b));
            CHECK(divisor_count(ab, 3) == divisor_count(a, 3) * divisor_count(b, 3));
            checked++;
        }
    CHECK(checked > 50);
}

TEST_CASE("jacobi convolution examples") {
    CHECK(jacobi_convolution(PolyFq(F3(), {0, 1})) == 2);
    // n=1 over F5: every linear f gives 2
    conf_enumerate(*F5(), 1, [&](const Poly& fc) { CHECK(jacobi_convolution(PolyFq(F5(), fc)) == 2); });
}

TEST_CASE("squarefree factor degrees by distinct-degree splitting") {
    auto F = F3();
    conf_enumerate(*F, 5, [&](const Poly& fc) {
        PolyFq f(F, fc);
        auto degs = squarefree_factor_degrees(*F, fc);
        std::vector<int> expect;
        for (auto& [P, m] : f.factor())
            for (int i = 0; i < m; ++i) expect.push_back(fqp::deg(P));
        std::sort(degs.begin(), degs.end());
        std::sort(expect.begin(), expect.end());
        CHECK(degs == expect);
    });
}

TEST_CASE("zero polynomial cannot be factored") {
    PolyFq z(F3(), {});
    CHECK(z.is_zero());
    CHECK_THROWS_WITH_AS((void)z.factor(), doctest::Contains("ZeroPolynomial"), Error);
    CHECK_THROWS_WITH_AS((void)resultant(*F3(), {}, {0, 1}),
                         doctest::Contains("ZeroPolynomial"), Error);
}

TEST_CASE("poly json round trip") {
    PolyFq f(F3(), {1, 0, 1});
    auto j = f.to_json();
    PolyFq back = PolyFq::from_json(j);
    CHECK(back.coeffs() == f.coeffs());
    CHECK(back.field()->size() == 3);
}
