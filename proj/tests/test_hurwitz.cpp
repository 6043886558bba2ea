#include "doctest.h"

#include "braidstat/hurwitz.hpp"
#include "braidstat/polyfq.hpp"

using namespace braidstat;

namespace {
std::vector<int> s3_transpositions(const FiniteGroup& s3) {
    std::vector<int> t;
    for (int x = 0; x < s3.size; ++x)
        if (x != s3.id && s3.mul[x][x] == s3.id) t.push_back(x);
    return t;
}
}  // namespace

TEST_CASE("nielsen counts for the symmetric group on three letters") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto T = s3_transpositions(s3);
    NielsenClass all{s3, T, 4, true, false, {}};
    CHECK(nielsen_count(all) == 27);
    CHECK(product_one_count_oracle(s3, T, 4) == BigInt(27));
    NielsenClass gen{s3, T, 4, true, true, {}};
    CHECK(nielsen_count(gen) == 24);  // 27 minus the 3 constant tuples
    NielsenClass odd{s3, T, 3, true, false, {}};
    CHECK(nielsen_count(odd) == 0);  // odd permutations cannot multiply to 1
}

TEST_CASE("nielsen count matches the group-algebra oracle") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto T = s3_transpositions(s3);
    for (int n = 1; n <= 6; ++n) {
        NielsenClass nc{s3, T, n, true, false, {}};
        CHECK(BigInt(nielsen_count(nc)) == product_one_count_oracle(s3, T, n));
    }
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    // reflections outside the rotation subgroup form a conjugacy-closed set
    std::vector<int> refl;
    for (int x = 4; x < 8; ++x) refl.push_back(x);
    REQUIRE(d4.is_conjugacy_closed(refl));
    for (int n = 1; n <= 6; ++n) {
        NielsenClass nc{d4, refl, n, true, false, {}};
        CHECK(BigInt(nielsen_count(nc)) == product_one_count_oracle(d4, refl, n));
    }
}

TEST_CASE("single braid orbit of transposition quadruples") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto T = s3_transpositions(s3);
    NielsenClass nc{s3, T, 4, true, true, {}};
    OrbitSet orbits = braid_orbits(nc);
    REQUIRE(orbits.orbits.size() == 1);
    CHECK(orbits.orbits[0].size == 24);
    CHECK(orbits.total_tuples == 24);
    CHECK(orbits.orbits[0].product == s3.id);
    CHECK((int)orbits.orbits[0].generated.size() == 6);
    // fixed under the 5th power map
    CHECK(qpower_fixed_orbits(nc, orbits, 5) == 1);
    auto j = orbits.to_json(nc);
    CHECK(j["orbits"].size() == 1);
}

TEST_CASE("two-element group tuples") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    for (int n = 2; n <= 8; ++n) {
        NielsenClass nc{z2, {1}, n, true, true, {}};
        long long expect = (n % 2 == 0) ? 1 : 0;
        CHECK(nielsen_count(nc) == expect);
        OrbitSet orbits = braid_orbits(nc);
        CHECK((long long)orbits.orbits.size() == expect);
        if (expect) {
            CHECK(orbits.orbits[0].size == 1);  // every move fixes the constant tuple
            CHECK(qpower_fixed_orbits(nc, orbits, 3) == 1);
        }
    }
}

TEST_CASE("hurwitz moves satisfy the braid relations on tuples") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto T = s3_transpositions(s3);
    // act on raw tuples (no constraints) for n up to 5
    auto conj = [&](int a, int b) { return s3.conj(a, b); };
    auto sigma = [&](std::vector<int> t, int i, int eps) {
        if (eps > 0) {
            int a = t[i - 1], b = t[i];
            t[i - 1] = b;
            t[i] = conj(a, b);
        } else {
            int a = t[i - 1], b = t[i];
            t[i - 1] = s3.op(s3.op(a, b), s3.inv[a]);
            t[i] = a;
        }
        return t;
    };
    for (int n = 3; n <= 5; ++n) {
        // enumerate all tuples over T
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur(n, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n) {
                std::vector<int> t(n);
                for (int i = 0; i < n; ++i) t[i] = T[cur[i]];
                tuples.push_back(t);
                return;
            }
            for (int c = 0; c < (int)T.size(); ++c) {
                cur[pos] = c;
                rec(pos + 1);
            }
        };
        rec(0);
        for (auto& t : tuples) {
            for (int i = 1; i + 1 <= n - 1; ++i) {
                auto lhs = sigma(sigma(sigma(t, i, 1), i + 1, 1), i, 1);
                auto rhs = sigma(sigma(sigma(t, i + 1, 1), i, 1), i + 1, 1);
                CHECK(lhs == rhs);
            }
            for (int i = 1; i <= n - 1; ++i) {
                CHECK(sigma(sigma(t, i, 1), i, -1) == t);
                CHECK(sigma(sigma(t, i, -1), i, 1) == t);
            }
        }
    }
}

TEST_CASE("inversion permutes orbits over the three-element cyclic group") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    std::vector<int> R = {1, 2};
    NielsenClass nc3{z3, R, 3, true, true, {}};
    OrbitSet o3 = braid_orbits(nc3);
    CHECK(o3.orbits.size() == 2);  // (1,1,1) and (2,2,2)
    CHECK(qpower_fixed_orbits(nc3, o3, 2) == 0);
    NielsenClass nc4{z3, R, 4, true, true, {}};
    OrbitSet o4 = braid_orbits(nc4);
    CHECK(o4.orbits.size() == 1);  // two entries of each kind
    CHECK(qpower_fixed_orbits(nc4, o4, 2) == 1);
    // q = 4 acts as the identity on Z/3
    CHECK(qpower_fixed_orbits(nc3, o3, 4) == 2);
    // a power map that leaves R is rejected
    NielsenClass bad{z3, {1}, 3, true, true, {}};
    OrbitSet ob = braid_orbits(bad);
    CHECK_THROWS_AS((void)qpower_fixed_orbits(bad, ob, 2), Error);
}

TEST_CASE("component tables and periodicity") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto rows = component_table(z2, {1}, 2, 10, 3);
    for (auto& row : rows) CHECK(row.orbits == (row.n % 2 == 0 ? 1 : 0));
    CHECK(component_periodicity(rows, z2.size));
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto T = s3_transpositions(s3);
    auto rows3 = component_table(s3, T, 4, 9, 5);
    for (auto& row : rows3) CHECK(row.orbits == (row.n % 2 == 0 ? 1 : 0));
    CHECK(component_periodicity(rows3, s3.size));
}

TEST_CASE("point estimates") {
    CHECK(point_estimate(3, 4, 1) == BigInt(54));
    CHECK(point_estimate(7, 5, 0).is_zero());
    // quadratic model: the estimate matches the exact squarefree count for
    // even degrees
    auto F3 = Field::create(FieldSpec::prime(3));
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    for (int n = 2; n <= 10; n += 2) {
        NielsenClass nc{z2, {1}, n, true, true, {}};
        OrbitSet orbits = braid_orbits(nc);
        long fixed = qpower_fixed_orbits(nc, orbits, 3);
        CHECK(point_estimate(3, n, fixed) == BigInt(conf_count(*F3, n)));
        if (n <= 6) CHECK(point_estimate(3, n, fixed) == BigInt(conf_enumerate(*F3, n, nullptr)));
    }
}
