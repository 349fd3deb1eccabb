#include "qd/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qd {

// ---------------------------------------------------------------------------
// integer polynomial helpers (ascending coefficients, no trailing zeros)
// ---------------------------------------------------------------------------

namespace {

void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

// Exact division in Z[x]; throws if not exact (internal invariant).
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw eval_error("polynomial division by zero");
    if (a.empty()) return {};
    std::vector<Rational> rem(a.begin(), a.end());
    std::vector<Rational> quo(a.size() - b.size() + 1, Rational(0));
    Rational lead(b.back());
    for (size_t k = quo.size(); k-- > 0;) {
        Rational c = rem[k + b.size() - 1] / lead;
        quo[k] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * Rational(b[j]);
    }
    for (const Rational& r : rem)
        if (r != 0) throw eval_error("inexact polynomial division");
    IntPoly out(quo.size());
    for (size_t i = 0; i < quo.size(); ++i) {
        if (boost::multiprecision::denominator(quo[i]) != 1)
            throw eval_error("inexact polynomial division");
        out[i] = boost::multiprecision::numerator(quo[i]);
    }
    poly_trim(out);
    return out;
}

// gcd in Z[x], primitive with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    poly_trim(a);
    poly_trim(b);
    if (a.empty()) std::swap(a, b);
    if (b.empty()) {
        if (a.empty()) return {};
        Int c = poly_content(a);
        IntPoly r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / c;
        if (r.back() < 0)
            for (Int& x : r) x = -x;
        return r;
    }
    // Euclid over Q, keeping remainders primitive in Z[x].
    auto primitive = [](IntPoly p) {
        Int c = poly_content(p);
        if (c != 0)
            for (Int& x : p) x /= c;
        if (!p.empty() && p.back() < 0)
            for (Int& x : p) x = -x;
        return p;
    };
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (!b.empty()) {
        // pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b
        if (a.size() < b.size()) {
            std::swap(a, b);
            continue;
        }
        IntPoly r = a;
        Int lb = b.back();
        size_t k = a.size() - b.size() + 1;
        for (size_t i = 0; i < k; ++i) {
            size_t d = r.size();
            if (d < b.size()) break;
            Int c = r.back();
            for (Int& x : r) x *= lb;
            for (size_t j = 0; j < b.size(); ++j) r[d - b.size() + j] -= c * b[j];
            poly_trim(r);
        }
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return primitive(std::move(a));
}

std::string int_to_str(const Int& v) { return v.str(); }

std::string rational_to_str(const Rational& v) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1)
        os << "/" << boost::multiprecision::denominator(v);
    return os.str();
}

// One monomial "c*q^k" (sign handled by caller via leading_sign).
std::string q_term_str(const Rational& coeff, long power) {
    Rational a = coeff < 0 ? Rational(-coeff) : coeff;
    std::string s;
    if (power == 0) {
        s = rational_to_str(a);
    } else {
        std::string qp = power == 1 ? "q" : "q^" + std::to_string(power);
        if (a == 1)
            s = qp;
        else
            s = rational_to_str(a) + "*" + qp;
    }
    return s;
}

// Print sum of (coeff, power) terms sorted ascending by power.
std::string q_poly_str(std::vector<std::pair<long, Rational>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (c == 0) continue;
        if (first) {
            if (c < 0) s += "-";
            s += q_term_str(c, p);
            first = false;
        } else {
            s += (c < 0) ? " - " : " + ";
            s += q_term_str(c, p);
        }
    }
    if (first) s = "0";
    return s;
}

} // namespace

// ---------------------------------------------------------------------------
// cyclotomic polynomials
// ---------------------------------------------------------------------------

namespace {
const IntPoly& cyclotomic_polynomial_impl(int n, std::map<int, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IntPoly xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        xn = poly_divexact(xn, cyclotomic_polynomial_impl(d, cache));
    }
    return cache.emplace(n, std::move(xn)).first->second;
}
} // namespace

const IntPoly& cyclotomic_polynomial(int n) {
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_polynomial_impl(n, cache);
}

FieldSpec FieldSpec::cyclotomic(int n) {
    if (n < 1) throw config_error("cyclotomic order must be >= 1");
    return {FieldKind::Cyclotomic, n};
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::RationalFunctionsQ: return "Q(q)";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(cyclotomic_order) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    switch (f.kind) {
        case FieldKind::Rationals: s.rat_ = 0; break;
        case FieldKind::RationalFunctionsQ:
            s.content_ = 0;
            s.num_ = {};
            s.den_ = {Int(1)};
            break;
        case FieldKind::Cyclotomic:
            s.cyclo_.assign(cyclotomic_polynomial(f.cyclotomic_order).size() - 1, Rational(0));
            if (s.cyclo_.empty()) s.cyclo_.assign(1, Rational(0)); // N = 1: degree-1 ext is trivial
            break;
    }
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) { return from_rational(Rational(v), f); }

Scalar Scalar::from_rational(const Rational& v, const FieldSpec& f) {
    Scalar s = zero(f);
    switch (f.kind) {
        case FieldKind::Rationals: s.rat_ = v; break;
        case FieldKind::RationalFunctionsQ:
            s.content_ = v;
            s.num_ = {Int(1)};
            s.den_ = {Int(1)};
            if (v == 0) s.num_ = {};
            break;
        case FieldKind::Cyclotomic: s.cyclo_[0] = v; break;
    }
    return s;
}

Scalar Scalar::q_power(long k) {
    Scalar s = zero(FieldSpec::rational_functions_q());
    s.content_ = 1;
    if (k >= 0) {
        s.num_.assign(k + 1, Int(0));
        s.num_[k] = 1;
        s.den_ = {Int(1)};
    } else {
        s.num_ = {Int(1)};
        s.den_.assign(-k + 1, Int(0));
        s.den_[-k] = 1;
    }
    return s;
}

Scalar Scalar::zeta_power(int n, long k) {
    FieldSpec f = FieldSpec::cyclotomic(n);
    Scalar s = zero(f);
    long d = static_cast<long>(s.cyclo_.size());
    long kk = ((k % n) + n) % n;
    if (kk < d) {
        s.cyclo_[kk] = 1;
        return s;
    }
    Scalar z = zero(f); // the class of x mod Phi_n
    if (d >= 2) {
        z.cyclo_[1] = 1;
    } else {
        // Phi_n linear (n = 1 or 2): x = -Phi[0]
        z.cyclo_[0] = -Rational(cyclotomic_polynomial(n)[0]);
    }
    Scalar r = one(f);
    for (long i = 0; i < kk; ++i) r *= z;
    return r;
}

Scalar Scalar::rational_function(const IntPoly& num, const IntPoly& den, long qshift) {
    Scalar s = zero(FieldSpec::rational_functions_q());
    s.content_ = 1;
    s.num_ = num;
    s.den_ = den;
    poly_trim(s.num_);
    poly_trim(s.den_);
    if (s.den_.empty()) throw eval_error("zero denominator in rational function");
    s.canonicalize_ratfun();
    if (qshift != 0) s *= q_power(qshift);
    return s;
}

void Scalar::canonicalize_ratfun() {
    poly_trim(num_);
    poly_trim(den_);
    if (num_.empty() || content_ == 0) {
        content_ = 0;
        num_ = {};
        den_ = {Int(1)};
        return;
    }
    Int cn = poly_content(num_);
    Int cd = poly_content(den_);
    for (Int& x : num_) x /= cn;
    for (Int& x : den_) x /= cd;
    if (num_.back() < 0) {
        for (Int& x : num_) x = -x;
        cn = -cn;
    }
    if (den_.back() < 0) {
        for (Int& x : den_) x = -x;
        cd = -cd;
    }
    content_ *= Rational(cn, cd);
    IntPoly g = poly_gcd(num_, den_);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    if (content_ == 0) {
        num_ = {};
        den_ = {Int(1)};
    }
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw config_error("mixed-field arithmetic: " + field_.to_string() + " vs " +
                           o.field_.to_string());
}

bool Scalar::is_zero() const {
    switch (field_.kind) {
        case FieldKind::Rationals: return rat_ == 0;
        case FieldKind::RationalFunctionsQ: return content_ == 0;
        case FieldKind::Cyclotomic:
            for (const Rational& c : cyclo_)
                if (c != 0) return false;
            return true;
    }
    return true;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::Rationals: r.rat_ = -r.rat_; break;
        case FieldKind::RationalFunctionsQ: r.content_ = -r.content_; break;
        case FieldKind::Cyclotomic:
            for (Rational& c : r.cyclo_) c = -c;
            break;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    switch (field_.kind) {
        case FieldKind::Rationals: rat_ += o.rat_; break;
        case FieldKind::RationalFunctionsQ: {
            if (o.content_ == 0) return *this;
            if (content_ == 0) {
                *this = o;
                return *this;
            }
            // a*n1/d1 + b*n2/d2 = (a' n1 d2 + b' n2 d1) / (q d1 d2) over common content q
            Rational a = content_, b = o.content_;
            Int an = boost::multiprecision::numerator(a) * boost::multiprecision::denominator(b);
            Int bn = boost::multiprecision::numerator(b) * boost::multiprecision::denominator(a);
            IntPoly lhs = poly_mul(num_, o.den_);
            for (Int& x : lhs) x *= an;
            IntPoly rhs = poly_mul(o.num_, den_);
            for (Int& x : rhs) x *= bn;
            num_ = poly_add(lhs, rhs);
            den_ = poly_mul(den_, o.den_);
            content_ = Rational(1, boost::multiprecision::denominator(a) *
                                       boost::multiprecision::denominator(b));
            canonicalize_ratfun();
            break;
        }
        case FieldKind::Cyclotomic:
            for (size_t i = 0; i < cyclo_.size(); ++i) cyclo_[i] += o.cyclo_[i];
            break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    switch (field_.kind) {
        case FieldKind::Rationals: rat_ *= o.rat_; break;
        case FieldKind::RationalFunctionsQ:
            content_ *= o.content_;
            if (content_ == 0) {
                num_ = {};
                den_ = {Int(1)};
                return *this;
            }
            num_ = poly_mul(num_, o.num_);
            den_ = poly_mul(den_, o.den_);
            canonicalize_ratfun();
            break;
        case FieldKind::Cyclotomic: {
            size_t d = cyclo_.size();
            std::vector<Rational> prod(2 * d - 1, Rational(0));
            for (size_t i = 0; i < d; ++i) {
                if (cyclo_[i] == 0) continue;
                for (size_t j = 0; j < d; ++j) prod[i + j] += cyclo_[i] * o.cyclo_[j];
            }
            // reduce mod Phi_N (monic)
            const IntPoly& phi = cyclotomic_polynomial(field_.cyclotomic_order);
            for (size_t k = prod.size(); k-- > d;) {
                Rational c = prod[k];
                if (c == 0) continue;
                prod[k] = 0;
                for (size_t j = 0; j + 1 < phi.size(); ++j)
                    prod[k - (phi.size() - 1) + j] -= c * Rational(phi[j]);
            }
            for (size_t i = 0; i < d; ++i) cyclo_[i] = prod[i];
            break;
        }
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw eval_error("division by zero");
    Scalar r = *this;
    switch (field_.kind) {
        case FieldKind::Rationals: r.rat_ = Rational(1) / rat_; break;
        case FieldKind::RationalFunctionsQ:
            r.content_ = Rational(1) / content_;
            r.num_ = den_;
            r.den_ = num_;
            r.canonicalize_ratfun();
            break;
        case FieldKind::Cyclotomic: {
            // extended Euclid in Q[x] on (Phi_N, this), tracking the Bezout
            // coefficient of this element only
            using QPoly = std::vector<Rational>;
            auto trim = [](QPoly& p) {
                while (!p.empty() && p.back() == 0) p.pop_back();
            };
            auto mul = [](const QPoly& a, const QPoly& b) {
                if (a.empty() || b.empty()) return QPoly{};
                QPoly out(a.size() + b.size() - 1, Rational(0));
                for (size_t i = 0; i < a.size(); ++i)
                    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
                return out;
            };
            auto sub = [&trim](QPoly a, const QPoly& b) {
                if (a.size() < b.size()) a.resize(b.size(), Rational(0));
                for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
                trim(a);
                return a;
            };
            const IntPoly& phi_i = cyclotomic_polynomial(field_.cyclotomic_order);
            QPoly r0(phi_i.begin(), phi_i.end());
            QPoly r1(cyclo_.begin(), cyclo_.end());
            trim(r1);
            QPoly s0{}, s1{Rational(1)};
            while (!r1.empty() && r1.size() > 1) {
                // quotient of r0 by r1
                QPoly rem = r0, quo(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
                                     Rational(0));
                for (size_t k = quo.size(); k-- > 0;) {
                    if (rem.size() < r1.size() + k) continue;
                    Rational c = rem[k + r1.size() - 1] / r1.back();
                    quo[k] = c;
                    for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= c * r1[j];
                    trim(rem);
                }
                QPoly s_new = sub(std::move(s0), mul(quo, s1));
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s_new);
            }
            if (r1.empty()) throw eval_error("not invertible in cyclotomic field");
            Rational inv = Rational(1) / r1[0];
            // reduce s1/r1[0] mod Phi (degree already < deg Phi by Euclid)
            r.cyclo_.assign(cyclo_.size(), Rational(0));
            for (size_t i = 0; i < s1.size() && i < r.cyclo_.size(); ++i)
                r.cyclo_[i] = s1[i] * inv;
            return r;
        }
    }
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return one(field_);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Scalar r = one(field_);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    switch (field_.kind) {
        case FieldKind::Rationals: return rat_ == o.rat_;
        case FieldKind::RationalFunctionsQ:
            return content_ == o.content_ && num_ == o.num_ && den_ == o.den_;
        case FieldKind::Cyclotomic: return cyclo_ == o.cyclo_;
    }
    return false;
}

bool Scalar::operator<(const Scalar& o) const {
    if (field_.kind != o.field_.kind) return field_.kind < o.field_.kind;
    switch (field_.kind) {
        case FieldKind::Rationals: return rat_ < o.rat_;
        case FieldKind::RationalFunctionsQ: {
            if (content_ != o.content_) return content_ < o.content_;
            if (num_ != o.num_)
                return std::lexicographical_compare(num_.begin(), num_.end(), o.num_.begin(),
                                                    o.num_.end());
            return std::lexicographical_compare(den_.begin(), den_.end(), o.den_.begin(),
                                                o.den_.end());
        }
        case FieldKind::Cyclotomic:
            return std::lexicographical_compare(cyclo_.begin(), cyclo_.end(), o.cyclo_.begin(),
                                                o.cyclo_.end());
    }
    return false;
}

Rational Scalar::evaluate_at(const Rational& q0) const {
    if (field_.kind != FieldKind::RationalFunctionsQ)
        throw config_error("evaluate_at requires the rational-function field");
    auto eval = [&](const IntPoly& p) {
        Rational v = 0;
        for (size_t i = p.size(); i-- > 0;) v = v * q0 + Rational(p[i]);
        return v;
    };
    Rational d = eval(den_);
    if (d == 0) throw eval_error("pole at q = " + rational_to_str(q0));
    if (content_ == 0) return Rational(0);
    return content_ * eval(num_) / d;
}

Rational Scalar::as_rational() const {
    switch (field_.kind) {
        case FieldKind::Rationals: return rat_;
        case FieldKind::RationalFunctionsQ:
            if (num_.size() > 1 || den_.size() > 1)
                throw config_error("scalar is not a constant");
            return content_ * (num_.empty() ? Rational(0) : Rational(num_[0])) /
                   Rational(den_[0]);
        case FieldKind::Cyclotomic:
            for (size_t i = 1; i < cyclo_.size(); ++i)
                if (cyclo_[i] != 0) throw config_error("scalar is not a constant");
            return cyclo_.empty() ? Rational(0) : cyclo_[0];
    }
    return 0;
}

std::string Scalar::to_string() const {
    switch (field_.kind) {
        case FieldKind::Rationals: return rational_to_str(rat_);
        case FieldKind::RationalFunctionsQ: {
            if (content_ == 0) return "0";
            // denominator 1: print the numerator polynomial with content
            if (den_.size() == 1 && den_[0] == 1) {
                std::vector<std::pair<long, Rational>> terms;
                for (size_t i = 0; i < num_.size(); ++i)
                    if (num_[i] != 0) terms.push_back({(long)i, content_ * Rational(num_[i])});
                return q_poly_str(std::move(terms));
            }
            // numerator a single monomial: fold it into the denominator as a
            // q-shift so 1/(q^-1 - q) prints in the familiar centered form
            size_t nonzero = 0, monpos = 0;
            for (size_t i = 0; i < num_.size(); ++i)
                if (num_[i] != 0) {
                    ++nonzero;
                    monpos = i;
                }
            if (nonzero == 1 && num_[monpos] == 1) {
                Rational c = content_;
                std::string numstr = int_to_str(boost::multiprecision::abs(
                    boost::multiprecision::numerator(c)));
                Int cden = boost::multiprecision::denominator(c);
                bool neg = c < 0;
                std::vector<std::pair<long, Rational>> dterms;
                for (size_t i = 0; i < den_.size(); ++i)
                    if (den_[i] != 0) {
                        Rational dc = Rational(den_[i]) * Rational(cden);
                        if (neg) dc = -dc;
                        dterms.push_back({(long)i - (long)monpos, dc});
                    }
                return numstr + "/(" + q_poly_str(std::move(dterms)) + ")";
            }
            std::vector<std::pair<long, Rational>> nterms, dterms;
            for (size_t i = 0; i < num_.size(); ++i)
                if (num_[i] != 0) nterms.push_back({(long)i, content_ * Rational(num_[i])});
            for (size_t i = 0; i < den_.size(); ++i)
                if (den_[i] != 0) dterms.push_back({(long)i, Rational(den_[i])});
            return "(" + q_poly_str(std::move(nterms)) + ")/(" + q_poly_str(std::move(dterms)) +
                   ")";
        }
        case FieldKind::Cyclotomic: {
            std::string s;
            bool first = true;
            for (size_t i = 0; i < cyclo_.size(); ++i) {
                const Rational& c = cyclo_[i];
                if (c == 0) continue;
                Rational a = c < 0 ? Rational(-c) : c;
                std::string term;
                if (i == 0) {
                    term = rational_to_str(a);
                } else {
                    std::string zp = i == 1 ? "z" : "z^" + std::to_string(i);
                    term = (a == 1) ? zp : rational_to_str(a) + "*" + zp;
                }
                if (first) {
                    if (c < 0) s += "-";
                    s += term;
                    first = false;
                } else {
                    s += (c < 0) ? " - " : " + ";
                    s += term;
                }
            }
            if (first) s = "0";
            return s;
        }
    }
    return "?";
}

Scalar q_int(long n) {
    if (n < 0) throw config_error("q_int requires n >= 0");
    Scalar s = Scalar::zero(FieldSpec::rational_functions_q());
    for (long j = 0; j < n; ++j) s += Scalar::q_power(-2 * j);
    return s;
}

Scalar q_factorial(long n) {
    if (n < 0) throw config_error("q_factorial requires n >= 0");
    Scalar s = Scalar::one(FieldSpec::rational_functions_q());
    for (long j = 1; j <= n; ++j) s *= q_int(j);
    return s;
}

} // namespace qd
