#include "braidstat/field.hpp"

#include <algorithm>
#include <numeric>

namespace braidstat {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long phi_long(long n) {
    long result = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> prime_factors_long(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::vector<long> divisors_long(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

FieldSpec FieldSpec::prime(long p) {
    FieldSpec s;
    s.kind = Kind::Prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::extension(long p, int k, std::vector<long> modulus) {
    FieldSpec s;
    s.kind = Kind::Extension;
    s.p = p;
    s.k = k;
    s.modulus = std::move(modulus);
    return s;
}

FieldSpec FieldSpec::cyclotomic(long m) {
    FieldSpec s;
    s.kind = Kind::Cyclotomic;
    s.m = m;
    return s;
}

nlohmann::json FieldSpec::to_json() const {
    switch (kind) {
        case Kind::Rational: return {{"kind", "rational"}};
        case Kind::Prime: return {{"kind", "prime"}, {"p", p}};
        case Kind::Extension: {
            nlohmann::json j = {{"kind", "extension"}, {"p", p}, {"k", k}};
            if (!modulus.empty()) j["modulus"] = modulus;
            return j;
        }
        case Kind::Cyclotomic: return {{"kind", "cyclotomic"}, {"m", m}};
    }
    return {};
}

FieldSpec FieldSpec::from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return rational();
    if (kind == "prime") return prime(j.at("p").get<long>());
    if (kind == "extension") {
        FieldSpec s = extension(j.at("p").get<long>(), j.at("k").get<int>());
        if (j.contains("modulus")) s.modulus = j["modulus"].get<std::vector<long>>();
        return s;
    }
    if (kind == "cyclotomic") return cyclotomic(j.at("m").get<long>());
    throw validation_error("BadFieldSpec", "unknown field kind: " + kind);
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case Kind::Rational: return "Q";
        case Kind::Prime: return "F" + std::to_string(p);
        case Kind::Extension: return "F" + std::to_string(p) + "^" + std::to_string(k);
        case Kind::Cyclotomic: return "Q(zeta" + std::to_string(m) + ")";
    }
    return "?";
}

namespace {

// Polynomial helpers over F_p with plain longs, used to bootstrap extension fields.
using PolyP = std::vector<long>;

void trim_poly(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& mod, long p) {
    if (a.empty() || b.empty()) return {};
    PolyP prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // reduce by monic mod of degree D
    size_t D = mod.size() - 1;
    for (size_t i = prod.size(); i-- > D;) {
        long c = prod[i];
        if (c) {
            size_t shift = i - D;
            for (size_t j = 0; j <= D; ++j)
                prod[shift + j] = ((prod[shift + j] - c * mod[j]) % p + p) % p;
        }
    }
    if (prod.size() > D) prod.resize(D);
    trim_poly(prod);
    return prod;
}

PolyP powmod_p(PolyP base, BigInt e, const PolyP& mod, long p) {
    PolyP acc = {1};
    while (!e.is_zero()) {
        if (!(e % BigInt(2)).is_zero()) acc = mulmod_p(acc, base, mod, p);
        e = e / BigInt(2);
        if (!e.is_zero()) base = mulmod_p(base, base, mod, p);
    }
    return acc;
}

PolyP gcd_p(PolyP a, PolyP b, long p) {
    trim_poly(a);
    trim_poly(b);
    while (!b.empty()) {
        // a mod b
        long lead_inv = 1;
        {
            long lead = b.back(), t = 1;
            for (long x = 1; x < p; ++x)
                if (lead * x % p == 1) { t = x; break; }
            lead_inv = t;
        }
        PolyP r = a;
        while (r.size() >= b.size() && !r.empty()) {
            long c = r.back() * lead_inv % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                r[shift + j] = ((r[shift + j] - c * b[j]) % p + p) % p;
            trim_poly(r);
            if (r.size() < b.size()) break;
        }
        a = b;
        b = r;
    }
    return a;
}

bool irreducible_p(const PolyP& f, long p) {
    // Rabin test: x^(p^k) == x mod f, and gcd(x^(p^(k/t)) - x, f) = 1 for prime t | k.
    int k = (int)f.size() - 1;
    if (k <= 0) return false;
    PolyP x = {0, 1};
    PolyP xq = powmod_p(x, BigInt::pow(BigInt(p), (unsigned long)k), f, p);
    PolyP diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim_poly(diff);
    if (!diff.empty()) return false;
    for (long t : prime_factors_long(k)) {
        PolyP xe = powmod_p(x, BigInt::pow(BigInt(p), (unsigned long)(k / t)), f, p);
        xe.resize(std::max<size_t>(xe.size(), 2), 0);
        xe[1] = ((xe[1] - 1) % p + p) % p;
        trim_poly(xe);
        PolyP g = gcd_p(xe, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// coefficient sequences compared low-to-high.
PolyP smallest_irreducible(long p, int k) {
    PolyP f(k + 1, 0);
    f[k] = 1;
    std::vector<long> digits(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) f[i] = digits[i];
        if (irreducible_p(f, p)) return f;
        int pos = k - 1;
        while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
        if (pos < 0) throw validation_error("ReducibleModulusPoly", "no irreducible found");
        digits[pos]++;
    }
}

// Rational polynomial division helpers for cyclotomic arithmetic.
using PolyQ = std::vector<Rational>;

void trim_poly(PolyQ& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

PolyQ mul_q(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// Division by a monic polynomial; returns quotient, remainder in `a`.
PolyQ divmod_monic_q(PolyQ& a, const PolyQ& b) {
    PolyQ q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
        trim_poly(a);
        if (a.size() < b.size()) break;
    }
    return q;
}

PolyQ cyclotomic_polynomial(long m) {
    // x^m - 1 divided by all Phi_d, d | m, d < m.
    PolyQ f(m + 1, Rational(0));
    f[0] = Rational(-1);
    f[m] = Rational(1);
    for (long d : divisors_long(m)) {
        if (d == m) continue;
        PolyQ phi_d = cyclotomic_polynomial(d);
        PolyQ q = divmod_monic_q(f, phi_d);
        f = q;
    }
    return f;
}

// Extended Euclid tracking the cofactor of `a` only: on return, s_out * a == g (mod b).
PolyQ ext_gcd_q(PolyQ a, PolyQ b, PolyQ& s_out) {
    PolyQ r0 = std::move(a), r1 = std::move(b);
    trim_poly(r0);
    trim_poly(r1);
    PolyQ s0 = {Rational(1)}, s1 = {};
    while (!r1.empty()) {
        PolyQ rem = r0;
        Rational lead = r1.back();
        PolyQ r1m = r1;
        for (auto& c : r1m) c = c / lead;
        PolyQ q = divmod_monic_q(rem, r1m);
        for (auto& c : q) c = c / lead;
        PolyQ qs = mul_q(q, s1);
        PolyQ s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = s2[i] - qs[i];
        trim_poly(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    s_out = s0;
    return r0;
}

}  // namespace

Field::Field(const FieldSpec& spec) : spec_(spec) {}

FieldPtr Field::create(const FieldSpec& spec) {
    auto f = std::shared_ptr<Field>(new Field(spec));
    switch (spec.kind) {
        case FieldSpec::Kind::Rational:
            f->repr_len_ = 1;
            break;
        case FieldSpec::Kind::Prime:
        case FieldSpec::Kind::Extension:
            f->init_finite();
            break;
        case FieldSpec::Kind::Cyclotomic:
            f->init_cyclotomic();
            break;
    }
    return f;
}

bool Field::finite() const {
    return spec_.kind == FieldSpec::Kind::Prime || spec_.kind == FieldSpec::Kind::Extension;
}

long Field::characteristic() const { return finite() ? spec_.p : 0; }

void Field::init_finite() {
    long p = spec_.p;
    if (!is_prime_long(p)) throw validation_error("NonPrimeModulus", "p is not prime: " + std::to_string(p));
    int k = spec_.kind == FieldSpec::Kind::Prime ? 1 : spec_.k;
    if (k < 1) throw validation_error("BadFieldSpec", "extension degree must be positive");
    spec_.k = k;
    repr_len_ = k;
    if (k == 1) {
        mod_ = {0, 1};
    } else if (!spec_.modulus.empty()) {
        mod_ = spec_.modulus;
        for (auto& c : mod_) c = ((c % p) + p) % p;
        if ((int)mod_.size() != k + 1 || mod_.back() != 1)
            throw validation_error("BadFieldSpec", "modulus must be monic of the declared degree");
        if (!irreducible_p(mod_, p))
            throw validation_error("ReducibleModulusPoly", "modulus is not irreducible");
    } else {
        mod_ = smallest_irreducible(p, k);
        spec_.modulus = mod_;
    }
    if (spec_.kind == FieldSpec::Kind::Extension) spec_.modulus = mod_;

    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > (1 << 20)) throw cap_error("FieldTooLarge", "finite field too large for tables");
    }

    // element codes: Sum digit_i * p^i
    auto decode = [&](long code) {
        PolyP d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = code % p;
            code /= p;
        }
        return d;
    };
    auto encode = [&](const PolyP& d) {
        long c = 0;
        for (int i = k - 1; i >= 0; --i) c = c * p + (i < (int)d.size() ? d[i] : 0);
        return c;
    };

    if (q_ <= 512) {
        mul_table_.assign(q_ * q_, 0);
        for (long a = 0; a < q_; ++a) {
            PolyP da = decode(a);
            trim_poly(da);
            for (long b = a; b < q_; ++b) {
                PolyP db = decode(b);
                trim_poly(db);
                long c = encode(mulmod_p(da, db, mod_, p));
                mul_table_[a * q_ + b] = c;
                mul_table_[b * q_ + a] = c;
            }
        }
    }

    // inverses, canonical generator, discrete logs
    inv_table_.assign(q_, 0);
    qm1_factors_ = prime_factors_long(q_ - 1);
    for (long a = 1; a < q_; ++a) {
        long x = code_pow(a, q_ - 2);
        inv_table_[a] = x;
    }
    // canonical generator: first element in lex repr order with maximal order
    auto order_of = [&](long a) {
        long ord = q_ - 1;
        for (long f : qm1_factors_)
            while (ord % f == 0 && code_pow(a, ord / f) == 1) ord /= f;
        return ord;
    };
    std::vector<long> lex_codes;
    lex_codes.reserve(q_);
    {
        // enumerate digit vectors in lexicographic order (first digit major)
        PolyP d(k, 0);
        while (true) {
            lex_codes.push_back(encode(d));
            int pos = k - 1;
            while (pos >= 0 && d[pos] == p - 1) d[pos--] = 0;
            if (pos < 0) break;
            d[pos]++;
        }
    }
    generator_ = 0;
    for (long c : lex_codes) {
        if (c == 0) continue;
        if (order_of(c) == q_ - 1) {
            generator_ = c;
            break;
        }
    }
    log_table_.assign(q_, -1);
    long acc = 1;
    for (long e = 0; e < q_ - 1; ++e) {
        log_table_[acc] = e;
        acc = code_mul(acc, generator_);
    }
}

void Field::init_cyclotomic() {
    long m = spec_.m;
    if (m < 1) throw validation_error("BadFieldSpec", "cyclotomic conductor must be >= 1");
    PolyQ phi = cyclotomic_polynomial(m);
    cyclo_ = phi;
    repr_len_ = (int)phi.size() - 1;
}

Scalar Field::zero() const {
    Scalar s;
    if (finite())
        s.fin.assign(repr_len_, 0);
    else
        s.rat.assign(repr_len_, Rational(0));
    return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    Scalar s = zero();
    if (finite()) {
        long p = spec_.p;
        s.fin[0] = (long)(((v % p) + p) % p);
    } else {
        s.rat[0] = Rational(v);
    }
    return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    Scalar r = zero();
    if (finite()) {
        long p = spec_.p;
        for (int i = 0; i < repr_len_; ++i) r.fin[i] = (a.fin[i] + b.fin[i]) % p;
    } else {
        for (int i = 0; i < repr_len_; ++i) r.rat[i] = a.rat[i] + b.rat[i];
    }
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    Scalar r = zero();
    if (finite()) {
        long p = spec_.p;
        for (int i = 0; i < repr_len_; ++i) r.fin[i] = (p - a.fin[i]) % p;
    } else {
        for (int i = 0; i < repr_len_; ++i) r.rat[i] = -a.rat[i];
    }
    return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (finite()) return element(code_mul(code(a), code(b)));
    Scalar r = zero();
    if (spec_.kind == FieldSpec::Kind::Rational) {
        r.rat[0] = a.rat[0] * b.rat[0];
        return r;
    }
    PolyQ prod(2 * repr_len_ - 1, Rational(0));
    for (int i = 0; i < repr_len_; ++i) {
        if (a.rat[i].is_zero()) continue;
        for (int j = 0; j < repr_len_; ++j) {
            if (b.rat[j].is_zero()) continue;
            prod[i + j] = prod[i + j] + a.rat[i] * b.rat[j];
        }
    }
    // reduce mod Phi_m (monic)
    for (int i = (int)prod.size() - 1; i >= repr_len_; --i) {
        Rational c = prod[i];
        if (c.is_zero()) continue;
        int shift = i - repr_len_;
        for (int j = 0; j <= repr_len_; ++j)
            prod[shift + j] = prod[shift + j] - c * cyclo_[j];
    }
    for (int i = 0; i < repr_len_; ++i) r.rat[i] = prod[i];
    return r;
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw validation_error("DivisionByZero", "inverse of zero");
    if (finite()) return element(code_inv(code(a)));
    Scalar r = zero();
    if (spec_.kind == FieldSpec::Kind::Rational) {
        r.rat[0] = a.rat[0].inv();
        return r;
    }
    // extended Euclid: s*a == gcd mod Phi_m, gcd is a nonzero constant
    PolyQ pa(a.rat.begin(), a.rat.end());
    trim_poly(pa);
    PolyQ s;
    PolyQ g = ext_gcd_q(pa, cyclo_, s);
    if (g.size() != 1)
        throw validation_error("DivisionByZero", "noninvertible cyclotomic element");
    Rational scale = g[0].inv();
    s.resize(repr_len_, Rational(0));
    Scalar sr = zero();
    for (int i = 0; i < repr_len_; ++i) sr.rat[i] = s[i] * scale;
    // reduce product to be safe (s may have degree >= repr_len_ before resize)
    return sr;
}

Scalar Field::pow(const Scalar& a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Scalar acc = one(), base = a;
    unsigned long long ue = (unsigned long long)e;
    while (ue) {
        if (ue & 1) acc = mul(acc, base);
        ue >>= 1;
        if (ue) base = mul(base, base);
    }
    return acc;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    return finite() ? a.fin == b.fin : a.rat == b.rat;
}

bool Field::is_zero(const Scalar& a) const { return eq(a, zero()); }
bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

int Field::cmp_repr(const Scalar& a, const Scalar& b) const {
    if (finite()) {
        for (int i = 0; i < repr_len_; ++i)
            if (a.fin[i] != b.fin[i]) return a.fin[i] < b.fin[i] ? -1 : 1;
        return 0;
    }
    for (int i = 0; i < repr_len_; ++i) {
        int c = a.rat[i].cmp(b.rat[i]);
        if (c) return c;
    }
    return 0;
}

long Field::code(const Scalar& a) const {
    long c = 0;
    for (int i = repr_len_ - 1; i >= 0; --i) c = c * spec_.p + a.fin[i];
    return c;
}

Scalar Field::element(long code) const {
    Scalar s = zero();
    for (int i = 0; i < repr_len_; ++i) {
        s.fin[i] = code % spec_.p;
        code /= spec_.p;
    }
    return s;
}

long Field::code_add(long a, long b) const {
    long p = spec_.p, r = 0, mul = 1;
    for (int i = 0; i < repr_len_; ++i) {
        r += ((a % p) + (b % p)) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

long Field::code_sub(long a, long b) const { return code_add(a, code_neg(b)); }

long Field::code_neg(long a) const {
    long p = spec_.p, r = 0, mul = 1;
    for (int i = 0; i < repr_len_; ++i) {
        r += (p - (a % p)) % p * mul;
        a /= p;
        mul *= p;
    }
    return r;
}

long Field::code_mul(long a, long b) const {
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    long p = spec_.p;
    PolyP da(repr_len_), db(repr_len_);
    long x = a, y = b;
    for (int i = 0; i < repr_len_; ++i) {
        da[i] = x % p;
        x /= p;
        db[i] = y % p;
        y /= p;
    }
    trim_poly(da);
    trim_poly(db);
    PolyP prod = mulmod_p(da, db, mod_, p);
    long c = 0;
    for (int i = repr_len_ - 1; i >= 0; --i) c = c * p + (i < (int)prod.size() ? prod[i] : 0);
    return c;
}

long Field::code_inv(long a) const {
    if (a == 0) throw validation_error("DivisionByZero", "inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return code_pow(a, q_ - 2);
}

long Field::code_pow(long a, long long e) const {
    long long mm = q_ - 1;
    if (e < 0) e = mm - ((-e) % mm);
    if (a == 0) return e == 0 ? 1 : 0;
    e %= mm;
    long acc = 1, base = a;
    while (e) {
        if (e & 1) acc = code_mul(acc, base);
        e >>= 1;
        if (e) base = code_mul(base, base);
    }
    return acc;
}

long Field::dlog(long a) const {
    if (a == 0) throw validation_error("DivisionByZero", "dlog of zero");
    return log_table_[a];
}

Scalar Field::frobenius(const Scalar& a) const { return pow(a, spec_.p); }

long Field::torsion_exponent() const {
    switch (spec_.kind) {
        case FieldSpec::Kind::Rational: return 2;
        case FieldSpec::Kind::Cyclotomic: return spec_.m % 2 == 0 ? spec_.m : 2 * spec_.m;
        default: return q_ - 1;
    }
}

long Field::torsion_order(const Scalar& a) const {
    if (is_zero(a)) return 0;
    long bound = torsion_exponent();
    Scalar x = a;
    for (long k = 1; k <= bound; ++k) {
        if (is_one(x)) return k;
        x = mul(x, a);
    }
    return 0;
}

Scalar Field::root_of_unity(long order) const {
    if (order < 1) throw validation_error("NoRootOfUnityOfOrder", "order must be positive");
    std::vector<Scalar> candidates;
    if (finite()) {
        if ((q_ - 1) % order != 0)
            throw validation_error("NoRootOfUnityOfOrder",
                                   "no root of order " + std::to_string(order) + " in " + spec_.to_string());
        // lex enumeration of elements
        std::vector<long> d(repr_len_, 0);
        while (true) {
            Scalar s = zero();
            s.fin = d;
            if (!is_zero(s) && torsion_order(s) == order) return s;
            int pos = repr_len_ - 1;
            while (pos >= 0 && d[pos] == spec_.p - 1) d[pos--] = 0;
            if (pos < 0) break;
            d[pos]++;
        }
        throw validation_error("NoRootOfUnityOfOrder", "no element of exact order found");
    }
    if (spec_.kind == FieldSpec::Kind::Rational) {
        if (order == 1) return one();
        if (order == 2) return from_int(-1);
        throw validation_error("NoRootOfUnityOfOrder", "Q only contains 1 and -1 as roots of unity");
    }
    // cyclotomic: torsion units are +-zeta^j
    Scalar zeta = zero();
    if (repr_len_ == 1) {
        zeta = one();  // m == 1 or 2 handled via repr of zeta in degree-1 field
        if (spec_.m == 2) zeta = from_int(-1);
    } else {
        zeta.rat[1] = Rational(1);
    }
    std::vector<Scalar> torsion;
    Scalar z = one();
    for (long j = 0; j < spec_.m; ++j) {
        torsion.push_back(z);
        torsion.push_back(neg(z));
        z = mul(z, zeta);
    }
    const Scalar* best = nullptr;
    for (const Scalar& t : torsion) {
        if (torsion_order(t) != order) continue;
        if (!best || cmp_repr(t, *best) < 0) best = &t;
    }
    if (!best)
        throw validation_error("NoRootOfUnityOfOrder",
                               "no root of order " + std::to_string(order) + " in " + spec_.to_string());
    return *best;
}

std::string Field::to_string(const Scalar& a) const {
    std::string s = "[";
    for (int i = 0; i < repr_len_; ++i) {
        if (i) s += ",";
        s += finite() ? std::to_string(a.fin[i]) : a.rat[i].to_string();
    }
    return s + "]";
}

nlohmann::json Field::scalar_to_json(const Scalar& a) const {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < repr_len_; ++i) {
        if (finite())
            j.push_back(a.fin[i]);
        else
            j.push_back(a.rat[i].to_string());
    }
    return j;
}

Scalar Field::scalar_from_json(const nlohmann::json& j) const {
    Scalar s = zero();
    if (!j.is_array() || (int)j.size() != repr_len_)
        throw validation_error("BadScalar", "scalar repr length mismatch");
    for (int i = 0; i < repr_len_; ++i) {
        if (finite()) {
            long v = j[i].get<long>();
            long p = spec_.p;
            s.fin[i] = ((v % p) + p) % p;
        } else if (j[i].is_number_integer()) {
            s.rat[i] = Rational(j[i].get<long long>());
        } else {
            s.rat[i] = Rational::parse(j[i].get<std::string>());
        }
    }
    return s;
}

}  // namespace braidstat
