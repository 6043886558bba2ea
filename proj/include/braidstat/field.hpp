#pragma once

#include <memory>
#include <string>
#include <vector>

#include "braidstat/bigint.hpp"
#include "braidstat/util.hpp"
#include "json.hpp"

namespace braidstat {

struct FieldSpec {
    enum class Kind { Rational, Cyclotomic, Prime, Extension };
    Kind kind = Kind::Rational;
    long p = 0;                  // characteristic (Prime/Extension)
    int k = 1;                   // extension degree
    long m = 1;                  // cyclotomic conductor
    std::vector<long> modulus;   // optional explicit extension modulus, low-to-high, monic, length k+1

    static FieldSpec rational() { return {}; }
    static FieldSpec prime(long p);
    static FieldSpec extension(long p, int k, std::vector<long> modulus = {});
    static FieldSpec cyclotomic(long m);

    nlohmann::json to_json() const;
    static FieldSpec from_json(const nlohmann::json& j);
    std::string to_string() const;
};

// One element of a field, in the canonical reduced basis. Finite-field elements
// are digit vectors mod p (length = extension degree); characteristic-zero
// elements are rational coefficient vectors (length 1 over Q, phi(m) over Q(zeta_m)).
struct Scalar {
    std::vector<long> fin;
    std::vector<Rational> rat;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static FieldPtr create(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }
    bool finite() const;
    long size() const { return q_; }  // 0 when infinite
    long characteristic() const;
    int repr_len() const { return repr_len_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(const Scalar& a, long long e) const;
    bool eq(const Scalar& a, const Scalar& b) const;
    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    int cmp_repr(const Scalar& a, const Scalar& b) const;  // canonical ordering

    // Finite-field element codes 0..q-1 (digit vectors base p) and fast table ops.
    long code(const Scalar& a) const;
    Scalar element(long code) const;
    long code_add(long a, long b) const;
    long code_sub(long a, long b) const;
    long code_neg(long a) const;
    long code_mul(long a, long b) const;
    long code_inv(long a) const;
    long code_pow(long a, long long e) const;
    long generator_code() const { return generator_; }      // canonical generator of F_q^*
    long dlog(long a) const;                                // base canonical generator
    Scalar frobenius(const Scalar& a) const;                // x -> x^p

    // Multiplicative torsion. Returns the exact order when `a` is a root of
    // unity, 0 otherwise (checked against the field's torsion bound).
    long torsion_order(const Scalar& a) const;
    Scalar root_of_unity(long order) const;  // deterministic canonical choice

    std::string to_string(const Scalar& a) const;
    nlohmann::json scalar_to_json(const Scalar& a) const;
    Scalar scalar_from_json(const nlohmann::json& j) const;

    // Cyclotomic structure of the ambient torsion subgroup: every root of
    // unity in the field has order dividing this.
    long torsion_exponent() const;

private:
    explicit Field(const FieldSpec& spec);
    void init_finite();
    void init_cyclotomic();

    FieldSpec spec_;
    int repr_len_ = 1;
    long q_ = 0;                      // field size when finite
    std::vector<long> mod_;           // extension modulus (monic, len k+1)
    std::vector<long> mul_table_;     // q*q codes when small enough
    std::vector<long> inv_table_;     // q codes
    long generator_ = 0;
    std::vector<long> log_table_;     // dlog base generator, index by code
    std::vector<long> qm1_factors_;   // distinct prime factors of q-1
    std::vector<Rational> cyclo_;     // Phi_m coefficients, monic, len phi(m)+1
};

// Small integer helpers shared across modules.
bool is_prime_long(long n);
long phi_long(long n);
std::vector<long> prime_factors_long(long n);
std::vector<long> divisors_long(long n);

}  // namespace braidstat
