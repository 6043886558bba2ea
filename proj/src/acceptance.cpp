#include "braidstat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "braidstat/builtin.hpp"
#include "braidstat/ffstats.hpp"
#include "braidstat/homology.hpp"
#include "braidstat/hurwitz.hpp"
#include "braidstat/symstats.hpp"

namespace braidstat {

namespace {

FieldPtr rational_field() { return Field::create(FieldSpec::rational()); }

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

// 1. degrees of coinvariant algebras
Check criterion_degrees() {
    Check c;
    for (long order : {2L, 3L, 4L}) {
        FieldPtr F = field_for_order(order);
        Rack t1 = trivial_rack(1);
        OrbitEngine eng(t1, constant_cocycle(t1, F, F->root_of_unity(order)));
        DegResult d = deg_coinv_rack(eng, 10);
        c.expect(d.kind == DegResult::Kind::Exact && d.degree == 1,
                 "scaling line of order " + std::to_string(order) + " must have degree 1");
    }
    {
        Rack r = s3_transposition_quandle();
        FieldPtr Q = rational_field();
        OrbitEngine eng(r, constant_cocycle(r, Q, Q->neg(Q->one())));
        DegResult d = deg_coinv_rack(eng, 10);
        c.expect(d.kind == DegResult::Kind::Exact && d.degree == 1,
                 "sign-twisted transposition quandle must have degree 1");
    }
    {
        Rack r = s4_transposition_quandle();
        FieldPtr Q = rational_field();
        OrbitEngine eng(r, constant_cocycle(r, Q, Q->neg(Q->one())));
        DegResult d = deg_coinv_rack(eng, 6);
        c.expect(d.kind == DegResult::Kind::Exact, "six-element quandle degree must be certified");
        c.expect(d.degree <= 2, "degree must be at most 2");
        c.expect(eng.dim(3) == 0, "three-strand coinvariants must vanish");
    }
    return c;
}

// 2. engine agreement
Check criterion_engines(int /*threads*/) {
    Check c;
    FieldPtr Q = rational_field();
    auto Q3 = Field::create(FieldSpec::cyclotomic(3));
    struct Item {
        std::string name;
        Rack rack;
        Cocycle2 coc;
    };
    std::vector<Item> items;
    Rack t1 = trivial_rack(1);
    items.push_back({"point", t1, constant_cocycle(t1, Q, Q->one())});
    items.push_back({"point_sign", t1, constant_cocycle(t1, Q, Q->neg(Q->one()))});
    items.push_back({"point_zeta3", t1, constant_cocycle(t1, Q3, Q3->root_of_unity(3))});
    Rack t2 = product_rack(trivial_rack(1), trivial_rack(2));
    items.push_back({"wedge2", t2, wedge_cocycle(t2, Q)});
    items.push_back({"pm2", t2, pm_cocycle(t2, Q)});
    Rack joyce = joyce_quandle();
    items.push_back({"joyce", joyce, constant_cocycle(joyce, Q, Q->one())});
    items.push_back({"joyce_sign", joyce, constant_cocycle(joyce, Q, Q->neg(Q->one()))});
    items.push_back({"cyclic2", cyclic_rack(2), constant_cocycle(cyclic_rack(2), Q, Q->one())});
    items.push_back({"cyclic3", cyclic_rack(3), constant_cocycle(cyclic_rack(3), Q, Q->one())});
    items.push_back({"cyclic4", cyclic_rack(4), constant_cocycle(cyclic_rack(4), Q, Q->one())});
    Rack s3t = s3_transposition_quandle();
    items.push_back({"s3t_sign", s3t, constant_cocycle(s3t, Q, Q->neg(Q->one()))});
    Rack w4 = product_rack(cyclic_rack(2), trivial_rack(2));
    items.push_back({"cyclic2_wedge", w4, wedge_cocycle(w4, Q)});
    for (auto& item : items) {
        BraidedSpace v = rack_space(item.rack, item.coc);
        OrbitEngine eng(item.rack, item.coc);
        for (int n = 1; n <= 5; ++n) {
            long orbit = eng.dim(n);
            long linear = coinv_dim_linear(v, n).dim;
            c.expect(orbit == linear, item.name + " n=" + std::to_string(n) +
                                          ": orbit " + std::to_string(orbit) + " vs linear " +
                                          std::to_string(linear));
            if (n >= 2) {
                long h0 = fox_h0(v, n);
                c.expect(h0 == orbit, item.name + " n=" + std::to_string(n) +
                                          ": presentation h0 " + std::to_string(h0));
            }
        }
    }
    return c;
}

// 3. vanishing conformance
Check criterion_vanishing() {
    Check c;
    FieldPtr Q = rational_field();
    auto Q3 = Field::create(FieldSpec::cyclotomic(3));
    struct Sys {
        std::string name;
        BraidedSpace space;
        Rack rack;
        Cocycle2 coc;
    };
    Rack t1 = trivial_rack(1);
    Rack s3t = s3_transposition_quandle();
    std::vector<Sys> systems;
    {
        Cocycle2 c1 = constant_cocycle(t1, Q, Q->neg(Q->one()));
        systems.push_back({"sign_line", rack_space(t1, c1), t1, c1});
        Cocycle2 c2 = constant_cocycle(t1, Q3, Q3->root_of_unity(3));
        systems.push_back({"zeta3_line", rack_space(t1, c2), t1, c2});
        Cocycle2 c3 = constant_cocycle(s3t, Q, Q->neg(Q->one()));
        systems.push_back({"s3t_sign", rack_space(s3t, c3), s3t, c3});
    }
    for (auto& sys : systems) {
        OrbitEngine eng(sys.rack, sys.coc);
        DegResult dr = deg_coinv_rack(eng, 8);
        c.expect(dr.kind == DegResult::Kind::Exact, sys.name + ": degree must be certified");
        long d = dr.degree;
        c.expect(d == 1, sys.name + ": expected degree 1, got " + std::to_string(d));
        for (int n = 2; n <= 6; ++n) {
            Rational threshold = vanishing_threshold(d, 1, n);
            auto [h0, h1] = fox_h01(sys.space, n);
            if (Rational(0) < threshold)
                c.expect(h0 == 0, sys.name + " n=" + std::to_string(n) + ": H0 = " +
                                      std::to_string(h0));
            if (Rational(1) < threshold)
                c.expect(h1 == 0, sys.name + " n=" + std::to_string(n) + ": H1 = " +
                                      std::to_string(h1));
        }
    }
    return c;
}

// 4. low-degree nonvanishing for the cube-root line at three strands
Check criterion_three_strand_nonvanishing() {
    Check c;
    auto Q3 = Field::create(FieldSpec::cyclotomic(3));
    BraidedSpace v = kappa_zeta(Q3, Q3->root_of_unity(3));
    auto [h0, h1] = fox_h01(v, 3);
    (void)h0;
    ResolutionResult res = resolution_homology(v, 3, 2);
    c.expect(res.dims[1] == h1, "engines disagree");
    c.expect(h1 >= 1, "expected dim H1 >= 1, computed " + std::to_string(h1) +
                          " over Q(zeta3); the analogous residue-field computation over F4 "
                          "gives dimension 1");
    return c;
}

// 5. two-line structure of the pm coinvariants and the splitting theorem
Check criterion_pm_structure() {
    Check c;
    FieldPtr Q = rational_field();
    Rack t2 = product_rack(trivial_rack(1), trivial_rack(2));
    OrbitEngine eng(t2, pm_cocycle(t2, Q));
    for (int n = 1; n <= 8; ++n)
        c.expect(eng.dim(n) == 2,
                 "pm coinvariants at n=" + std::to_string(n) + ": " + std::to_string(eng.dim(n)));
    Rack s3t = s3_transposition_quandle();
    Rack prod = product_rack(s3t, trivial_rack(2));
    SplittingReport rep = splitting_check(s3t, pm_cocycle(prod, Q), 6);
    c.expect(rep.splits, "mixed multidegrees must vanish in a tail window");
    c.note("splitting from degree " + std::to_string(rep.n0));
    return c;
}

// 6. one-controlled certification
Check criterion_controlled() {
    Check c;
    FieldPtr Q = rational_field();
    {
        Rack s3t = s3_transposition_quandle();
        Rack prod = product_rack(s3t, trivial_rack(2));
        ControlledReport rep = one_controlled_check(prod, wedge_cocycle(prod, Q), 2, 7);
        c.expect(rep.pass, "wedge system m=2 N=7 must certify");
        c.expect(rep.centrality_verified, "central element must commute with degree one");
        std::ostringstream dims;
        for (long d : rep.dims) dims << d << " ";
        c.note("wedge dims: " + dims.str());
    }
    {
        Rack t2 = product_rack(trivial_rack(1), trivial_rack(2));
        ControlledReport rep = one_controlled_check(t2, pm_cocycle(t2, Q), 2, 8);
        c.expect(rep.pass, "pm system m=2 N=8 must certify");
        for (int n = 3; n <= 8; ++n)
            c.expect(rep.ker_coker[n] == std::make_pair(0L, 0L),
                     "pm kernel/cokernel must vanish from degree 3");
    }
    return c;
}

// 7. pointwise arithmetic identities
Check criterion_identities() {
    Check c;
    for (long q : {3L, 5L}) {
        auto F = Field::create(FieldSpec::prime(q));
        auto chi = CharSpec::make(F, 2, rational_field());
        for (int n = 1; n <= 8; ++n) {
            bool ok = true;
            conf_enumerate(*F, n, [&](const Poly& fc) {
                if (!ok) return;
                int lhs = chi.sign_value(discriminant(*F, fc));
                // mu = (-1)^omega and the claimed value is (-1)^deg f mu(f)
                int omega = (int)squarefree_factor_degrees(*F, fc).size();
                int rhs = ((n + omega) % 2 == 0) ? 1 : -1;
                if (lhs != rhs) ok = false;
            });
            c.expect(ok, "disc identity fails at q=" + std::to_string(q) +
                             " n=" + std::to_string(n));
        }
        // resultant-character vs Jacobi symbol on coprime squarefree pairs
        std::vector<Poly> pool;
        for (int n = 1; n <= 4; ++n)
            conf_enumerate(*F, n, [&](const Poly& fc) { pool.push_back(fc); });
        bool ok = true;
        for (const Poly& f : pool) {
            if (!ok) break;
            for (const Poly& g : pool) {
                Poly gr = fqp::rem(*F, g, f);
                if (gr.empty() || fqp::deg(fqp::gcd_monic(*F, gr, f)) != 0) continue;
                if (chi.sign_value(resultant(*F, f, g)) != jacobi_symbol(*F, g, f)) {
                    ok = false;
                    break;
                }
            }
        }
        c.expect(ok, "resultant-character identity fails at q=" + std::to_string(q));
        for (int n = 1; n <= 8; ++n)
            c.expect(trace_convolution_check(q, n),
                     "convolution identity fails at q=" + std::to_string(q) +
                         " n=" + std::to_string(n));
    }
    for (int n = 1; n <= 12; ++n)
        c.expect(irr_identity_check(n), "irreducibility indicator fails at n=" + std::to_string(n));
    return c;
}

// 8. statistics over the configuration spaces
Check criterion_statistics(int threads) {
    Check c;
    for (long q : {3L, 5L}) {
        for (int n = 2; n <= 10; ++n) {
            MobiusPair p = mobius_sum_both(q, n, threads);
            c.expect(p.factorization_route.is_zero() && p.pointwise_equal,
                     "mobius sum q=" + std::to_string(q) + " n=" + std::to_string(n) + " is " +
                         p.factorization_route.to_string());
        }
        auto Q = rational_field();
        for (int n = 2; n <= 8; ++n) {
            Scalar s = chi_disc_sum(q, n, 2, threads);
            c.expect(Q->is_zero(s), "disc character sum q=" + std::to_string(q) +
                                        " n=" + std::to_string(n));
        }
        for (int n = 2; n <= 10; ++n)
            c.expect(irr_ratio(q, n).within_bound,
                     "irreducible ratio bound fails at q=" + std::to_string(q) +
                         " n=" + std::to_string(n));
    }
    // frozen golden data for the Jacobi convolution totals
    const std::vector<std::pair<long, std::vector<long long>>> golden = {
        {3, {6, 12, 24, 96, 336, 960, 2640}},
        {5, {10, 40, 160, 920, 5120, 24880, 120400}},
    };
    for (auto& [q, values] : golden) {
        for (int n = 1; n <= (int)values.size(); ++n) {
            LegendreRow r = legendre_main_term(q, n, threads);
            c.expect(r.total == BigInt(values[n - 1]),
                     "legendre total q=" + std::to_string(q) + " n=" + std::to_string(n) +
                         " got " + r.total.to_string());
            if (n == 1)
                c.expect(r.residual.is_zero(), "legendre main term must be exact at n=1");
        }
    }
    return c;
}

// 9. Hurwitz orbit counts and the quadratic model
Check criterion_hurwitz() {
    Check c;
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<int> T;
    for (int x = 0; x < 6; ++x)
        if (x != s3.id && s3.mul[x][x] == s3.id) T.push_back(x);
    NielsenClass nc{s3, T, 4, true, true, {}};
    c.expect(nielsen_count(nc) == 24, "expected 24 generating product-one quadruples");
    OrbitSet orbits = braid_orbits(nc);
    c.expect(orbits.orbits.size() == 1 && orbits.orbits[0].size == 24,
             "expected a single orbit of size 24");
    c.expect(qpower_fixed_orbits(nc, orbits, 5) == 1, "orbit must be fixed under fifth powers");
    auto rows = component_table(s3, T, 4, 9, 5);
    c.expect(component_periodicity(rows, s3.size), "component counts must be periodic");
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto F3 = Field::create(FieldSpec::prime(3));
    for (int n = 2; n <= 10; n += 2) {
        NielsenClass qc{z2, {1}, n, true, true, {}};
        OrbitSet o = braid_orbits(qc);
        long fixed = qpower_fixed_orbits(qc, o, 3);
        c.expect(point_estimate(3, n, fixed) == BigInt(conf_count(*F3, n)),
                 "quadratic model mismatch at n=" + std::to_string(n));
    }
    return c;
}

// 10. decomposition of the wedge space
Check criterion_decomposition() {
    Check c;
    FieldPtr Q = rational_field();
    for (int n = 2; n <= 6; ++n) {
        auto mult = sn_decompose(kappa_wedge(Q), n);
        c.expect((int)mult.size() == n, "expected exactly the hooks at n=" + std::to_string(n));
        for (int i = 0; i <= n - 1; ++i) {
            Partition hook = {n - i};
            for (int j = 0; j < i; ++j) hook.push_back(1);
            auto it = mult.find(hook);
            bool ok = it != mult.end() && it->second == BigInt(2);
            c.expect(ok, "hook multiplicity must be 2 at n=" + std::to_string(n) +
                             " i=" + std::to_string(i));
        }
    }
    return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, int threads) {
    struct Entry {
        int id;
        std::string name;
        std::function<Check()> fn;
    };
    std::vector<Entry> entries = {
        {1, "coinvariant-degrees", [] { return criterion_degrees(); }},
        {2, "engine-agreement", [threads] { return criterion_engines(threads); }},
        {3, "vanishing-conformance", [] { return criterion_vanishing(); }},
        {4, "three-strand-nonvanishing", [] { return criterion_three_strand_nonvanishing(); }},
        {5, "pm-coinvariant-structure", [] { return criterion_pm_structure(); }},
        {6, "one-controlled", [] { return criterion_controlled(); }},
        {7, "arithmetic-identities", [] { return criterion_identities(); }},
        {8, "statistics", [threads] { return criterion_statistics(threads); }},
        {9, "hurwitz-orbits", [] { return criterion_hurwitz(); }},
        {10, "wedge-decomposition", [] { return criterion_decomposition(); }},
    };
    std::vector<CriterionResult> out;
    for (auto& e : entries) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Check c = e.fn();
            r.pass = c.ok;
            r.detail = c.detail.str();
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms = (long)std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace braidstat
