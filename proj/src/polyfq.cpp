#include "braidstat/polyfq.hpp"

#include <algorithm>
#include <map>

namespace braidstat {

namespace fqp {

int deg(const Poly& f) { return (int)f.size() - 1; }

void trim(const Field&, Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool is_monic(const Field&, const Poly& f) { return !f.empty() && f.back() == 1; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long x = i < a.size() ? a[i] : 0;
        long y = i < b.size() ? b[i] : 0;
        r[i] = F.code_add(x, y);
    }
    trim(F, r);
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long x = i < a.size() ? a[i] : 0;
        long y = i < b.size() ? b[i] : 0;
        r[i] = F.code_sub(x, y);
    }
    trim(F, r);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = F.code_add(r[i + j], F.code_mul(a[i], b[j]));
        }
    }
    trim(F, r);
    return r;
}

Poly scale(const Field& F, const Poly& a, long c) {
    if (c == 0) return {};
    Poly r = a;
    for (auto& x : r) x = F.code_mul(x, c);
    return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw validation_error("ZeroPolynomial", "division by zero polynomial");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    long lead_inv = F.code_inv(b.back());
    int db = (int)b.size() - 1;
    for (int i = (int)r.size() - 1; i >= db; --i) {
        long c = F.code_mul(r[i], lead_inv);
        if (c != 0) {
            int shift = i - db;
            q[shift] = c;
            for (int j = 0; j <= db; ++j)
                r[shift + j] = F.code_sub(r[shift + j], F.code_mul(c, b[j]));
        }
    }
    trim(F, r);
    trim(F, q);
}

Poly rem(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(F, a, b, q, r);
    return r;
}

Poly make_monic(const Field& F, const Poly& f) {
    if (f.empty() || f.back() == 1) return f;
    return scale(F, f, F.code_inv(f.back()));
}

Poly gcd_monic(const Field& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

Poly derivative(const Field& F, const Poly& f) {
    Poly r;
    if (f.size() <= 1) return r;
    r.resize(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) {
        long m = (long)(i % F.characteristic());
        long coef = 0;
        for (long t = 0; t < m; ++t) coef = F.code_add(coef, f[i]);
        r[i - 1] = coef;
    }
    trim(F, r);
    return r;
}

long eval(const Field& F, const Poly& f, long x) {
    long acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = F.code_add(F.code_mul(acc, x), f[i]);
    return acc;
}

Poly pow_mod_long(const Field& F, Poly base, unsigned long long e, const Poly& mod) {
    Poly acc = {1};
    base = rem(F, base, mod);
    while (e) {
        if (e & 1) acc = rem(F, mul(F, acc, base), mod);
        e >>= 1;
        if (e) base = rem(F, mul(F, base, base), mod);
    }
    return acc;
}

Poly pow_mod(const Field& F, Poly base, const BigInt& e, const Poly& mod) {
    Poly acc = {1};
    base = rem(F, base, mod);
    BigInt k = e, q, r;
    const BigInt two(2);
    while (!k.is_zero()) {
        BigInt::divmod(k, two, q, r);
        if (!r.is_zero()) acc = rem(F, mul(F, acc, base), mod);
        k = q;
        if (!k.is_zero()) base = rem(F, mul(F, base, base), mod);
    }
    return acc;
}

bool squarefree(const Field& F, const Poly& f) {
    if (f.empty()) return false;
    if (deg(f) == 0) return true;
    Poly d = derivative(F, f);
    if (d.empty()) return false;  // p-th power
    Poly g = gcd_monic(F, f, d);
    return deg(g) == 0;
}

bool irreducible(const Field& F, const Poly& f) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    BigInt q(F.size());
    Poly x = {0, 1};
    Poly xq = pow_mod(F, x, BigInt::pow(q, (unsigned long)n), f);
    if (sub(F, xq, x) != Poly{}) return false;
    for (long t : prime_factors_long(n)) {
        Poly xe = pow_mod(F, x, BigInt::pow(q, (unsigned long)(n / t)), f);
        Poly g = gcd_monic(F, sub(F, xe, x), f);
        if (deg(g) != 0) return false;
    }
    return true;
}

std::string to_string(const Field&, const Poly& f) {
    if (f.empty()) return "0";
    std::string s;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += "+";
        bool show_coef = (f[i] != 1) || i == 0;
        if (show_coef) s += std::to_string(f[i]);
        if (i >= 1) {
            if (show_coef) s += "*";
            s += "t";
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// f = g(t^p) -> g, taking p-th roots of coefficients.
Poly pth_root(const Field& F, const Poly& f) {
    long p = F.characteristic();
    long q = F.size();
    Poly g((f.size() + p - 1) / p, 0);
    for (size_t i = 0; i < f.size(); i += p) g[i / p] = F.code_pow(f[i], q / p);
    return g;
}

// Equal-degree splitting of a squarefree monic product of degree-d irreducibles.
void edf(const Field& F, const Poly& g, int d, std::vector<Poly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    long q = F.size();
    // deterministic candidate scan in canonical code order
    for (long long idx = q;; ++idx) {
        Poly a;
        long long t = idx;
        while (t) {
            a.push_back(t % q);
            t /= q;
        }
        if (deg(a) >= deg(g)) a = rem(F, a, g);
        if (deg(a) < 1) continue;
        Poly u;
        if (q % 2 == 1) {
            BigInt e = (BigInt::pow(BigInt(q), (unsigned long)d) - BigInt(1)) / BigInt(2);
            Poly b = pow_mod(F, a, e, g);
            u = gcd_monic(F, sub(F, b, {1}), g);
        } else {
            // trace map over F_2
            long e2 = 1;
            long qq = q;
            while (qq > 2) {
                qq /= 2;
                e2++;
            }
            long bits = e2 * d;  // q^d = 2^bits
            Poly tr = a, cur = a;
            for (long i = 1; i < bits; ++i) {
                cur = rem(F, mul(F, cur, cur), g);
                tr = add(F, tr, cur);
            }
            u = gcd_monic(F, tr, g);
        }
        if (deg(u) > 0 && deg(u) < deg(g)) {
            Poly v, r;
            divmod(F, g, u, v, r);
            edf(F, u, d, out);
            edf(F, make_monic(F, v), d, out);
            return;
        }
    }
}

std::vector<std::pair<Poly, int>> factor_impl(const Field& F, Poly f) {
    if (f.empty()) throw validation_error("ZeroPolynomial", "cannot factor the zero polynomial");
    if (!fqp::is_monic(F, f)) throw validation_error("NotMonic", "factorization requires a monic input");
    std::map<Poly, int> counts;
    int carried = 1;  // p-power multiplier from p-th root extraction
    while (deg(f) > 0) {
        Poly d = derivative(F, f);
        if (d.empty()) {
            f = pth_root(F, f);
            carried *= (int)F.characteristic();
            continue;
        }
        Poly s = f;
        Poly g = gcd_monic(F, f, d);
        if (deg(g) > 0) {
            Poly q, r;
            divmod(F, f, g, q, r);
            s = q;  // squarefree part covering all factors of multiplicity not divisible by p
        }
        // distinct-degree splitting of s
        std::vector<std::pair<Poly, int>> irreducibles;  // (factor, degree)
        Poly rest = s;
        Poly h = rem(F, Poly{0, 1}, rest);
        for (int dd = 1; 2 * dd <= deg(rest); ++dd) {
            h = pow_mod_long(F, h, (unsigned long long)F.size(), rest);
            Poly gd = gcd_monic(F, sub(F, h, Poly{0, 1}), rest);
            if (deg(gd) > 0) {
                std::vector<Poly> split;
                edf(F, gd, dd, split);
                for (auto& P : split) irreducibles.push_back({P, dd});
                Poly q, r;
                divmod(F, rest, gd, q, r);
                rest = q;
                h = rem(F, h, rest);
            }
        }
        if (deg(rest) > 0) irreducibles.push_back({rest, deg(rest)});
        // extract exact multiplicities from f
        for (auto& [P, dd] : irreducibles) {
            (void)dd;
            int m = 0;
            while (true) {
                Poly q, r;
                divmod(F, f, P, q, r);
                if (!r.empty()) break;
                f = q;
                m++;
            }
            counts[P] += m * carried;
        }
    }
    std::vector<std::pair<Poly, int>> out(counts.begin(), counts.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

}  // namespace

}  // namespace fqp

PolyFq::PolyFq(FieldPtr F, Poly coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    if (!F_ || !F_->finite())
        throw validation_error("BadFieldSpec", "polynomials require a finite coefficient field");
    fqp::trim(*F_, c_);
}

bool PolyFq::monic() const { return fqp::is_monic(*F_, c_); }

const std::vector<std::pair<Poly, int>>& PolyFq::factor() const {
    if (!factors_) {
        auto fs = fqp::factor_impl(*F_, c_);
        // cached factorization must multiply back to the polynomial
        Poly check = {1};
        for (auto& [P, m] : fs)
            for (int i = 0; i < m; ++i) check = fqp::mul(*F_, check, P);
        if (check != c_) throw validation_error("FactorizationSelfCheck", "factor product mismatch");
        factors_ = std::make_shared<std::vector<std::pair<Poly, int>>>(std::move(fs));
    }
    return *factors_;
}

nlohmann::json PolyFq::to_json() const {
    return {{"field", F_->spec().to_json()}, {"coeffs", c_}};
}

PolyFq PolyFq::from_json(const nlohmann::json& j) {
    auto F = Field::create(FieldSpec::from_json(j.at("field")));
    return PolyFq(F, j.at("coeffs").get<Poly>());
}

FactorizationType factorization_type(const PolyFq& f) {
    std::map<int, int> by_deg;
    for (auto& [P, m] : f.factor()) by_deg[fqp::deg(P)] += m;
    FactorizationType t(by_deg.begin(), by_deg.end());
    // sanity: sum of degree*multiplicity equals deg f
    int total = 0;
    for (auto& [d, m] : t) total += d * m;
    if (total != f.degree()) throw validation_error("FactorizationSelfCheck", "degree bookkeeping");
    return t;
}

std::vector<int> squarefree_factor_degrees(const Field& F, const Poly& f) {
    std::vector<int> degs;
    Poly rest = f;
    Poly h = fqp::rem(F, Poly{0, 1}, rest);
    for (int d = 1; 2 * d <= fqp::deg(rest); ++d) {
        h = fqp::pow_mod_long(F, h, (unsigned long long)F.size(), rest);
        Poly gd = fqp::gcd_monic(F, fqp::sub(F, h, Poly{0, 1}), rest);
        if (fqp::deg(gd) > 0) {
            for (int i = 0; i < fqp::deg(gd) / d; ++i) degs.push_back(d);
            Poly q, r;
            fqp::divmod(F, rest, gd, q, r);
            rest = q;
            h = fqp::rem(F, h, rest);
        }
    }
    if (fqp::deg(rest) > 0) degs.push_back(fqp::deg(rest));
    return degs;
}

int omega(const PolyFq& f) { return (int)f.factor().size(); }

int mobius(const PolyFq& f) {
    for (auto& [P, m] : f.factor())
        if (m > 1) throw validation_error("NotSquarefree", "mobius requires a squarefree argument");
    return omega(f) % 2 == 0 ? 1 : -1;
}

BigInt divisor_count(const PolyFq& f, long k) {
    for (auto& [P, m] : f.factor())
        if (m > 1) throw validation_error("NotSquarefree", "d_k requires a squarefree argument");
    return BigInt::pow(BigInt(k), (unsigned long)omega(f));
}

int one_irr(const PolyFq& f) {
    for (auto& [P, m] : f.factor())
        if (m > 1) throw validation_error("NotSquarefree", "1_irr requires a squarefree argument");
    return omega(f) == 1 ? 1 : 0;
}

long resultant(const Field& F, const Poly& f, const Poly& g) {
    // Res(f,g) = prod over roots of monic f of g, via Euclidean reduction.
    if (f.empty()) throw validation_error("ZeroPolynomial", "resultant requires nonzero monic f");
    if (!fqp::is_monic(F, f)) throw validation_error("NotMonic", "resultant requires monic f");
    Poly a = f, b = g;  // a stays monic along the recursion
    long acc = 1;
    while (true) {
        int da = fqp::deg(a);
        if (da == 0) return acc;
        Poly r = fqp::rem(F, b, a);
        if (r.empty()) return 0;
        int dr = fqp::deg(r);
        long c = r.back();
        // prod_{a(x)=0} r(x) = c^deg(a) * (-1)^(deg a * deg r) * prod_{r'(y)=0} a(y)
        acc = F.code_mul(acc, F.code_pow(c, da));
        if ((da * dr) % 2 == 1) acc = F.code_neg(acc);
        b = a;
        a = fqp::make_monic(F, r);
    }
}

long discriminant(const Field& F, const Poly& f) {
    int n = fqp::deg(f);
    if (n <= 0) throw validation_error("ZeroPolynomial", "discriminant requires positive degree");
    long r = resultant(F, f, fqp::derivative(F, f));
    if (((long long)n * (n - 1) / 2) % 2 == 1) r = F.code_neg(r);
    return r;
}

int jacobi_symbol(const Field& F, const Poly& g, const Poly& h) {
    if (F.size() % 2 == 0)
        throw validation_error("EvenCharacteristic", "Jacobi symbols require odd q");
    if (!fqp::is_monic(F, h)) throw validation_error("NotMonic", "Jacobi symbol requires monic h");
    if (!fqp::squarefree(F, h))
        throw validation_error("NotSquarefree", "Jacobi symbol requires squarefree h");
    if (fqp::deg(h) == 0) return 1;
    Poly gr = fqp::rem(F, g, h);
    if (fqp::deg(fqp::gcd_monic(F, gr.empty() ? h : gr, h)) != 0) return 0;
    int sign = 1;
    auto factors = fqp::factor_impl(F, h);
    for (auto& [P, m] : factors) {
        (void)m;
        // Euler criterion: g^((q^deg P - 1)/2) mod P is 1 or -1
        BigInt e = (BigInt::pow(BigInt(F.size()), (unsigned long)fqp::deg(P)) - BigInt(1)) / BigInt(2);
        Poly b = fqp::pow_mod(F, g, e, P);
        if (b == Poly{1}) continue;
        Poly minus_one = {F.code_neg(1)};
        if (b == minus_one) {
            sign = -sign;
            continue;
        }
        throw validation_error("JacobiSelfCheck", "Euler criterion returned a non-unit");
    }
    return sign;
}

CharSpec CharSpec::make(FieldPtr base, long order, FieldPtr target) {
    if (!base || !base->finite())
        throw validation_error("BadFieldSpec", "characters are defined on finite fields");
    if (order < 1 || (base->size() - 1) % order != 0)
        throw validation_error("NoRootOfUnityOfOrder", "character order must divide q-1");
    CharSpec c;
    c.base = std::move(base);
    c.order = order;
    c.target = std::move(target);
    c.gen_image = c.target->root_of_unity(order);
    return c;
}

Scalar CharSpec::value(long code) const {
    if (code == 0) return target->zero();
    return target->pow(gen_image, base->dlog(code));
}

int CharSpec::sign_value(long code) const {
    if (code == 0) return 0;
    return base->dlog(code) % order == 0 ? 1 : -1;
}

nlohmann::json CharSpec::to_json() const {
    return {{"base", base->spec().to_json()},
            {"order", order},
            {"target", target->spec().to_json()},
            {"generator", base->generator_code()},
            {"generator_image", target->scalar_to_json(gen_image)}};
}

Scalar chi_disc(const PolyFq& f, const CharSpec& chi) {
    const Field& F = *f.field();
    if (!fqp::squarefree(F, f.coeffs()))
        throw validation_error("NotSquarefree", "chi_disc requires a squarefree argument");
    return chi.value(discriminant(F, f.coeffs()));
}

long long jacobi_convolution(const PolyFq& f) {
    const Field& F = *f.field();
    if (F.size() % 2 == 0)
        throw validation_error("EvenCharacteristic", "Jacobi symbols require odd q");
    auto& factors = f.factor();
    for (auto& [P, m] : factors)
        if (m > 1) throw validation_error("NotSquarefree", "requires a squarefree argument");
    int w = (int)factors.size();
    if (w > 24) throw cap_error("TooManyFactors", "divisor enumeration too large");
    // pairwise Legendre symbols s[i][j] = (P_i / P_j)
    std::vector<std::vector<int>> s(w, std::vector<int>(w, 1));
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
            if (i != j) s[i][j] = jacobi_symbol(F, factors[i].first, factors[j].first);
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        int prod = 1;
        for (int i = 0; i < w; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = 0; j < w; ++j)
                if (!(mask >> j & 1)) prod *= s[i][j];
        }
        total += prod;
    }
    return total;
}

long long conf_enumerate(const Field& F, int n, const std::function<void(const Poly&)>& visit) {
    if (n < 0) throw validation_error("BadDegree", "degree must be nonnegative");
    long q = F.size();
    Poly f(n + 1, 0);
    f[n] = 1;
    long long count = 0;
    std::vector<long> digits(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) f[i] = digits[i];
        if (fqp::squarefree(F, f)) {
            count++;
            if (visit) visit(f);
        }
        int pos = n - 1;
        while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
        if (pos < 0) break;
        digits[pos]++;
    }
    return count;
}

long long conf_count(const Field& F, int n) {
    long q = F.size();
    if (n == 0) return 1;
    if (n == 1) return q;
    long long r = 1;
    for (int i = 0; i < n - 1; ++i) r *= q;
    return r * (q - 1);
}

int mobius_int(long n) {
    int m = 1;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

BigInt irreducible_count(long q, int n) {
    BigInt total(0);
    for (long d : divisors_long(n)) {
        BigInt term = BigInt::pow(BigInt(q), (unsigned long)(n / d));
        int mu = mobius_int(d);
        if (mu == 1)
            total += term;
        else if (mu == -1)
            total -= term;
    }
    return total / BigInt(n);
}

}  // namespace braidstat
