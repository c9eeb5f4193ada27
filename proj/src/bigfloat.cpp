#include "sptfn/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace sptfn {

namespace {
long max_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

BigReal::BigReal(long prec) {
    mpfr_init2(v_, prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::of(double v, long prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of(long v, long prec) {
    BigReal r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const BigInt& v, long prec) {
    BigReal r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const Rational& v, long prec) {
    BigReal r(prec);
    if (v.get_den() == 1)
        mpfr_set_z(r.v_, v.get_num().get_mpz_t(), MPFR_RNDN);
    else
        mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& s, long prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigReal::from_string: unparseable \"" + s + "\"");
    return r;
}

BigReal BigReal::pi(long prec) {
    BigReal r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::to_prec(long prec) const {
    BigReal r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigInt BigReal::round_to_int() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

BigInt BigReal::floor_to_int() const {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

Rational BigReal::to_rational_exact() const {
    if (!is_finite()) throw std::domain_error("to_rational_exact: non-finite value");
    if (is_zero()) return Rational(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
    Rational q(mant);
    if (e >= 0) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= Rational(p2);
    } else {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= Rational(p2);
    }
    q.canonicalize();
    return q;
}

std::string BigReal::str() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(0, 1);
    }
    // strip trailing zeros of the mantissa
    size_t last = digits.find_last_not_of('0');
    if (last != std::string::npos) digits.erase(last + 1);
    if (digits.empty()) digits = "0";
    std::string out = neg ? "-" : "";
    out += digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    long dec_exp = static_cast<long>(e) - 1;
    if (dec_exp != 0) out += "e" + std::to_string(dec_exp);
    return out;
}

#define SPTFN_BINOP(name, fn)                                        \
    BigReal name(const BigReal& a, const BigReal& b) {               \
        BigReal r(max_prec(a, b));                                   \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                    \
        return r;                                                    \
    }

SPTFN_BINOP(operator+, mpfr_add)
SPTFN_BINOP(operator-, mpfr_sub)
SPTFN_BINOP(operator*, mpfr_mul)
SPTFN_BINOP(operator/, mpfr_div)
SPTFN_BINOP(atan2, mpfr_atan2)
#undef SPTFN_BINOP

BigReal operator-(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()); }

bool operator<(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
bool operator>(const BigReal& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }

#define SPTFN_UNOP(name, fn)                       \
    BigReal name(const BigReal& a) {               \
        BigReal r(a.prec());                       \
        fn(r.raw(), a.raw(), MPFR_RNDN);           \
        return r;                                  \
    }

SPTFN_UNOP(abs, mpfr_abs)
SPTFN_UNOP(sqrt, mpfr_sqrt)
SPTFN_UNOP(cbrt, mpfr_cbrt)
SPTFN_UNOP(exp, mpfr_exp)
SPTFN_UNOP(log, mpfr_log)
SPTFN_UNOP(sinh, mpfr_sinh)
SPTFN_UNOP(cosh, mpfr_cosh)
SPTFN_UNOP(sin, mpfr_sin)
SPTFN_UNOP(cos, mpfr_cos)
SPTFN_UNOP(gamma, mpfr_gamma)
#undef SPTFN_UNOP

BigReal pow_si(const BigReal& a, long e) {
    BigReal r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigReal ldexp2(const BigReal& a, long e) {
    BigReal r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0 ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0 ? a : b; }

std::string BigComplex::str() const {
    std::string s = re.str();
    if (im.sgn() >= 0)
        s += " + " + im.str() + "i";
    else
        s += " - " + (-im).str() + "i";
    return s;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal den = b.re * b.re + b.im * b.im;
    return BigComplex((a.re * b.re + a.im * b.im) / den,
                      (a.im * b.re - a.re * b.im) / den);
}

BigComplex operator-(const BigComplex& a) { return BigComplex(-a.re, -a.im); }

BigComplex operator*(const BigReal& a, const BigComplex& b) {
    return BigComplex(a * b.re, a * b.im);
}

BigComplex operator*(const BigComplex& a, const BigReal& b) { return b * a; }

BigComplex operator/(const BigComplex& a, const BigReal& b) {
    return BigComplex(a.re / b, a.im / b);
}

BigComplex operator+(const BigComplex& a, const BigReal& b) {
    return BigComplex(a.re + b, a.im);
}

BigReal abs(const BigComplex& z) {
    BigReal r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

BigComplex sqrt(const BigComplex& z) {
    long p = z.prec();
    if (z.im.is_zero()) {
        if (z.re.sgn() >= 0) return BigComplex(sqrt(z.re), BigReal(p));
        return BigComplex(BigReal(p), sqrt(-z.re));
    }
    BigReal r = abs(z);
    if (z.re.sgn() >= 0) {
        BigReal t = sqrt(ldexp2(r + z.re, -1));
        return BigComplex(t, z.im / ldexp2(t, 1));
    }
    BigReal u = sqrt(ldexp2(r - z.re, -1));
    if (z.im.sgn() < 0) u = -u;
    return BigComplex(z.im / ldexp2(u, 1), u);
}

BigComplex exp(const BigComplex& z) {
    long p = z.prec();
    BigReal m = exp(z.re);
    BigReal c(p), s(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return BigComplex(m * c, m * s);
}

}  // namespace sptfn
