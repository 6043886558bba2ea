#include "doctest.h"

#include "braidstat/field.hpp"

using namespace braidstat;

namespace {
struct Lcg {
    unsigned long long s = 0x9E3779B97F4A7C15ULL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long)((s >> 17) % (unsigned long long)(hi - lo + 1));
    }
};

void check_field_axioms(const FieldPtr& F, const std::vector<Scalar>& sample) {
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = 0; j < sample.size(); ++j)
            for (size_t k = 0; k < sample.size(); ++k) {
                const Scalar &a = sample[i], &b = sample[j], &c = sample[k];
                CHECK(F->eq(F->add(F->add(a, b), c), F->add(a, F->add(b, c))));
                CHECK(F->eq(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c))));
                CHECK(F->eq(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c))));
            }
    for (const Scalar& a : sample) {
        CHECK(F->eq(F->add(a, F->neg(a)), F->zero()));
        if (!F->is_zero(a)) CHECK(F->is_one(F->mul(a, F->inv(a))));
    }
}
}  // namespace

TEST_CASE("prime field basics") {
    auto F3 = Field::create(FieldSpec::prime(3));
    CHECK(F3->size() == 3);
    std::vector<Scalar> elems;
    for (long c = 0; c < 3; ++c) elems.push_back(F3->element(c));
    check_field_axioms(F3, elems);
    CHECK_THROWS_AS((void)Field::create(FieldSpec::prime(6)), Error);
}

TEST_CASE("extension field F9 has lex-smallest modulus t^2+1 and an element of order 8") {
    auto F9 = Field::create(FieldSpec::extension(3, 2));
    CHECK(F9->size() == 9);
    CHECK(F9->spec().modulus == std::vector<long>({1, 0, 1}));
    // exhaustive multiplicative-order scan
    long max_order = 0;
    for (long c = 1; c < 9; ++c) {
        Scalar x = F9->element(c);
        long ord = F9->torsion_order(x);
        max_order = std::max(max_order, ord);
    }
    CHECK(max_order == 8);
    std::vector<Scalar> elems;
    for (long c = 0; c < 9; ++c) elems.push_back(F9->element(c));
    check_field_axioms(F9, elems);
    // reducible explicit modulus rejected
    CHECK_THROWS_AS((void)Field::create(FieldSpec::extension(3, 2, {0, 0, 1})), Error);
}

TEST_CASE("frobenius fixes exactly the prime subfield") {
    auto F = Field::create(FieldSpec::extension(3, 2));
    int fixed = 0;
    for (long c = 0; c < F->size(); ++c) {
        Scalar x = F->element(c);
        if (F->eq(F->frobenius(x), x)) fixed++;
    }
    CHECK(fixed == 3);
    // frobenius is a homomorphism
    Lcg rng;
    for (int i = 0; i < 50; ++i) {
        Scalar a = F->element(rng.next(0, 8)), b = F->element(rng.next(0, 8));
        CHECK(F->eq(F->frobenius(F->mul(a, b)), F->mul(F->frobenius(a), F->frobenius(b))));
        CHECK(F->eq(F->frobenius(F->add(a, b)), F->add(F->frobenius(a), F->frobenius(b))));
    }
}

TEST_CASE("cyclotomic field Q(zeta3)") {
    auto F = Field::create(FieldSpec::cyclotomic(3));
    CHECK(F->repr_len() == 2);
    Scalar z = F->root_of_unity(3);
    // z satisfies z^2 + z + 1 = 0 and z^3 = 1
    Scalar expr = F->add(F->add(F->mul(z, z), z), F->one());
    CHECK(F->is_zero(expr));
    CHECK(F->is_one(F->pow(z, 3)));
    CHECK_FALSE(F->is_one(F->pow(z, 1)));
    CHECK_FALSE(F->is_one(F->pow(z, 2)));
    // sample axioms with mixed rationals
    std::vector<Scalar> sample = {F->zero(), F->one(), z, F->add(z, F->one()), F->neg(z)};
    check_field_axioms(F, sample);
    // Q(zeta3) contains an element of order 6 but none of order 4
    CHECK(F->torsion_order(F->neg(z)) == 6);
    CHECK_THROWS_AS((void)F->root_of_unity(4), Error);
}

TEST_CASE("root_of_unity canonical choices") {
    auto F5 = Field::create(FieldSpec::prime(5));
    CHECK(F5->code(F5->root_of_unity(2)) == 4);
    // orders in F5^*: 2 -> 4, 3 -> 4, 4 -> 2; canonical-smallest of order 4 is 2
    CHECK(F5->torsion_order(F5->element(2)) == 4);
    CHECK(F5->torsion_order(F5->element(3)) == 4);
    CHECK(F5->code(F5->root_of_unity(4)) == 2);
    auto F7 = Field::create(FieldSpec::prime(7));
    CHECK_THROWS_AS((void)F7->root_of_unity(5), Error);
    // determinism
    for (int i = 0; i < 3; ++i) CHECK(F5->code(F5->root_of_unity(4)) == 2);
}

TEST_CASE("root of unity powers have exact order") {
    for (long order : {2L, 3L, 4L, 6L}) {
        auto F = Field::create(FieldSpec::cyclotomic(12));
        Scalar z = F->root_of_unity(order);
        CHECK(F->is_one(F->pow(z, order)));
        for (long e = 1; e < order; ++e) CHECK_FALSE(F->is_one(F->pow(z, e)));
    }
}

TEST_CASE("field spec json round trip") {
    for (FieldSpec spec : {FieldSpec::rational(), FieldSpec::prime(5), FieldSpec::extension(3, 2),
                           FieldSpec::cyclotomic(4)}) {
        auto j = spec.to_json();
        FieldSpec back = FieldSpec::from_json(j);
        CHECK(back.kind == spec.kind);
        auto F = Field::create(back);
        Scalar x = F->finite() ? F->element(F->size() - 1) : F->neg(F->one());
        CHECK(F->eq(F->scalar_from_json(F->scalar_to_json(x)), x));
    }
}

TEST_CASE("scalar ordering is lexicographic on reduced repr") {
    auto F9 = Field::create(FieldSpec::extension(3, 2));
    // digits (d0,d1): (0,1) < (1,0) lexicographically
    Scalar a = F9->element(3);  // digits (0,1)
    Scalar b = F9->element(1);  // digits (1,0)
    CHECK(F9->cmp_repr(a, b) < 0);
}
