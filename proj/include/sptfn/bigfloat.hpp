#ifndef SPTFN_BIGFLOAT_HPP
#define SPTFN_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace sptfn {

using BigInt = mpz_class;
using Rational = mpq_class;

// Arbitrary-precision real scalar backed by MPFR.  Every value carries its
// own precision in bits; binary operations compute at the larger of the two
// operand precisions, rounding to nearest.  There is no global precision
// state.
class BigReal {
  public:
    explicit BigReal(long prec = 64);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal of(double v, long prec);
    static BigReal of(long v, long prec);
    static BigReal of(int v, long prec) { return of(static_cast<long>(v), prec); }
    static BigReal of(const BigInt& v, long prec);
    static BigReal of(const Rational& v, long prec);
    static BigReal from_string(const std::string& s, long prec);
    static BigReal pi(long prec);

    long prec() const { return mpfr_get_prec(v_); }
    // Same value rounded into a fresh variable of precision `prec`.
    BigReal to_prec(long prec) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    // Exponent e with |x| in [2^{e-1}, 2^e); 0 for x = 0.
    long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    BigInt round_to_int() const;
    BigInt floor_to_int() const;
    // Exact dyadic value mantissa*2^exp as a rational (finite values only).
    Rational to_rational_exact() const;
    // Decimal string with just enough digits to round-trip at this precision.
    std::string str() const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);

int cmp(const BigReal& a, const BigReal& b);
inline bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }
bool operator<(const BigReal& a, double b);
bool operator>(const BigReal& a, double b);

BigReal abs(const BigReal& a);
BigReal sqrt(const BigReal& a);
BigReal cbrt(const BigReal& a);
BigReal exp(const BigReal& a);
BigReal log(const BigReal& a);
BigReal sinh(const BigReal& a);
BigReal cosh(const BigReal& a);
BigReal sin(const BigReal& a);
BigReal cos(const BigReal& a);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal gamma(const BigReal& a);
BigReal pow_si(const BigReal& a, long e);
// a * 2^e
BigReal ldexp2(const BigReal& a, long e);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

// Complex scalar as a pair of BigReals.
class BigComplex {
  public:
    BigReal re;
    BigReal im;

    explicit BigComplex(long prec = 64) : re(prec), im(prec) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    long prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    BigComplex conj() const { return BigComplex(re, -im); }
    std::string str() const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigReal& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigReal& b);
BigComplex operator/(const BigComplex& a, const BigReal& b);
BigComplex operator+(const BigComplex& a, const BigReal& b);

// |z|, overflow-safe at any precision (hypot).
BigReal abs(const BigComplex& z);
// Principal branch square root (branch cut along the negative real axis).
BigComplex sqrt(const BigComplex& z);
// e^z
BigComplex exp(const BigComplex& z);

}  // namespace sptfn

#endif
