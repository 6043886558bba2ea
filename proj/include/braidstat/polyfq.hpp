#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "braidstat/field.hpp"

namespace braidstat {

// Univariate polynomials over a finite field, held as element codes low-to-high
// with no trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<long>;

namespace fqp {

int deg(const Poly& f);  // -1 for zero
void trim(const Field& F, Poly& f);
bool is_monic(const Field& F, const Poly& f);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, long c);
void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly gcd_monic(const Field& F, Poly a, Poly b);  // monic gcd, {1} for coprime
Poly derivative(const Field& F, const Poly& f);
long eval(const Field& F, const Poly& f, long x);
Poly pow_mod(const Field& F, Poly base, const BigInt& e, const Poly& mod);
Poly pow_mod_long(const Field& F, Poly base, unsigned long long e, const Poly& mod);
Poly make_monic(const Field& F, const Poly& f);
bool squarefree(const Field& F, const Poly& f);
bool irreducible(const Field& F, const Poly& f);

std::string to_string(const Field& F, const Poly& f);  // e.g. "t^2+2t+1"

}  // namespace fqp

// A monic polynomial with its field handle and a lazily cached factorization.
class PolyFq {
public:
    PolyFq() = default;
    PolyFq(FieldPtr F, Poly coeffs);

    const FieldPtr& field() const { return F_; }
    const Poly& coeffs() const { return c_; }
    int degree() const { return fqp::deg(c_); }
    bool is_zero() const { return c_.empty(); }
    bool monic() const;

    // Complete factorization into monic irreducibles, deterministic order
    // (degree, then lexicographic on coefficient codes).
    const std::vector<std::pair<Poly, int>>& factor() const;

    nlohmann::json to_json() const;
    static PolyFq from_json(const nlohmann::json& j);

private:
    FieldPtr F_;
    Poly c_;
    mutable std::shared_ptr<std::vector<std::pair<Poly, int>>> factors_;
};

// multiset of (degree, multiplicity) pairs, sorted
using FactorizationType = std::vector<std::pair<int, int>>;

FactorizationType factorization_type(const PolyFq& f);
// Degrees of the irreducible factors of a squarefree monic polynomial,
// obtained by distinct-degree splitting alone (no equal-degree refinement).
std::vector<int> squarefree_factor_degrees(const Field& F, const Poly& f);

int omega(const PolyFq& f);                     // distinct irreducible factors
int mobius(const PolyFq& f);                    // (-1)^omega, squarefree only
BigInt divisor_count(const PolyFq& f, long k);  // k^omega, squarefree only
int one_irr(const PolyFq& f);                   // 1 iff irreducible, squarefree only

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n; returns a code.
long resultant(const Field& F, const Poly& f, const Poly& g);
long discriminant(const Field& F, const Poly& f);

// Jacobi symbol (g/h) for monic squarefree h over odd q, via Euler's criterion
// per irreducible factor of h; 0 when gcd(g,h) != 1.
int jacobi_symbol(const Field& F, const Poly& g, const Poly& h);

// Multiplicative character of F_q^* determined by the image of the canonical
// generator, valued in a target field.
struct CharSpec {
    FieldPtr base;
    long order = 1;
    FieldPtr target;
    Scalar gen_image;

    static CharSpec make(FieldPtr base, long order, FieldPtr target);
    Scalar value(long code) const;        // 0 at 0
    int sign_value(long code) const;      // order <= 2 fast path: -1/0/+1
    nlohmann::json to_json() const;
};

Scalar chi_disc(const PolyFq& f, const CharSpec& chi);
long long jacobi_convolution(const PolyFq& f);  // sum over gh=f of (g/h)

// Visits every monic squarefree polynomial of degree n in lexicographic order
// (coefficient sequences low-to-high, constant coefficient most significant);
// returns the count.
long long conf_enumerate(const Field& F, int n, const std::function<void(const Poly&)>& visit);
long long conf_count(const Field& F, int n);

// Exact number of monic irreducibles of degree n over F_q (necklace formula).
BigInt irreducible_count(long q, int n);
int mobius_int(long n);

}  // namespace braidstat
