#include "sptfn/cmtrace.hpp"

#include "sptfn/modfun.hpp"
#include "sptfn/partitions.hpp"
#include "sptfn/version.hpp"

#include "json.hpp"

#include <stdexcept>

namespace sptfn {

namespace {

constexpr long kPrecCap = 4096;
const double kResidualLimit = 1e-6;

BigComplex g_value(const BigComplex& tau, long prec) {
    return f_eval(tau, prec) - P_eval(tau, prec);
}

void check_near_real(const BigComplex& z, long prec, const char* who) {
    BigReal tol = ldexp2(max(abs(z.re), BigReal::of(1, z.prec())), -(prec / 2));
    if (!(abs(z.im) <= tol))
        throw std::runtime_error(std::string(who) + ": trace has a non-real component");
}

// Sums fn(tau_Q) over the class representatives at escalating precision until
// the rounded target is within the residual limit.
template <typename EvalFn, typename RoundFn>
TraceResult run_trace(long n, long prec, const char* method, EvalFn eval, RoundFn round) {
    std::vector<QForm> reps = class_reps(n);
    TraceResult r;
    r.n = n;
    r.method = method;
    r.class_count = static_cast<long>(reps.size());
    for (long p = prec;; p *= 2) {
        BigComplex sum(p);
        for (const QForm& q : reps) sum = sum + eval(root(q, p), p);
        check_near_real(sum, p, method);
        r.trace_value = sum;
        r.prec_bits = p;
        round(r);
        if (r.residual < kResidualLimit) return r;
        if (p * 2 > kPrecCap)
            throw std::runtime_error(std::string(method) + ": residual " +
                                     r.residual.str() + " at the precision cap");
    }
}

}  // namespace

TraceResult spt_trace(long n, long prec, long oracle_cap) {
    if (n < 1) throw std::domain_error("spt_trace: requires n >= 1");
    auto eval = [](const BigComplex& tau, long p) { return g_value(tau, p); };
    auto round = [](TraceResult& r) {
        BigReal v = r.trace_value.re / 12;
        r.rounded = v.round_to_int();
        r.residual = abs(v - BigReal::of(r.rounded, v.prec()));
    };
    TraceResult r = run_trace(n, prec, "spt_trace", eval, round);
    if (n <= oracle_cap && r.rounded != spt_oracle_series(n))
        throw std::runtime_error("spt_trace: disagrees with the exact oracle at n = " +
                                 std::to_string(n));
    return r;
}

TraceResult s_trace(long n, long prec) {
    if (n < 1) throw std::domain_error("s_trace: requires n >= 1");
    auto eval = [](const BigComplex& tau, long p) { return f_eval(tau, p); };
    auto round = [](TraceResult& r) {
        BigReal v12 = r.trace_value.re;  // 12 s(n) = sum f(tau_Q)
        BigInt near = v12.round_to_int();
        r.rational_valued = true;
        r.rounded_rational = Rational(near, 12);
        r.rounded_rational.canonicalize();
        r.residual = abs(v12 - BigReal::of(near, v12.prec())) / 12;
    };
    return run_trace(n, prec, "s_trace", eval, round);
}

TraceResult p_trace(long n, long prec) {
    if (n < 1) throw std::domain_error("p_trace: requires n >= 1");
    auto eval = [](const BigComplex& tau, long p) { return P_eval(tau, p); };
    auto round = [n](TraceResult& r) {
        BigReal v = r.trace_value.re / (24 * n - 1);
        r.rounded = v.round_to_int();
        r.residual = abs(v - BigReal::of(r.rounded, v.prec()));
    };
    TraceResult r = run_trace(n, prec, "p_trace", eval, round);
    if (r.rounded != p_oracle(n))
        throw std::runtime_error("p_trace: disagrees with the exact recurrence at n = " +
                                 std::to_string(n));
    return r;
}

Rational rational_reconstruct(const BigReal& x, const BigInt& bound) {
    Rational target = x.to_rational_exact();
    BigInt num = target.get_num(), den = target.get_den();
    // continued-fraction convergents p_k/q_k of num/den
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    BigInt a, r;
    while (den != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        num = den;
        den = r;
    }
    if (q1 == 0) return Rational(0);
    Rational out(p1, q1);
    out.canonicalize();
    return out;
}

ClassPolynomial class_polynomial(long n, long prec, const BigInt& denominator_bound) {
    if (n < 1) throw std::domain_error("class_polynomial: requires n >= 1");
    std::vector<QForm> reps = class_reps(n);
    long h = static_cast<long>(reps.size());

    ClassPolynomial poly;
    poly.n = n;
    poly.degree = h;
    poly.prec_bits = prec;
    poly.denominator_bound = denominator_bound;
    if (poly.denominator_bound == 0) poly.denominator_bound = BigInt(24) * n - 1;

    // expand prod (x - g_k) over the complex values
    std::vector<BigComplex> coeff(h + 1, BigComplex(prec));
    coeff[0] = BigComplex(BigReal::of(1, prec), BigReal(prec));
    long used = 0;
    for (const QForm& q : reps) {
        BigComplex g = g_value(root(q, prec), prec);
        ++used;
        for (long i = used; i >= 1; --i)
            coeff[i] = (i < used ? coeff[i] : BigComplex(prec)) - g * coeff[i - 1];
        // coeff is ordered by descending power: coeff[i] multiplies x^{used-i}
    }
    // imaginary parts vanish (roots come in conjugate pairs)
    for (const BigComplex& c : coeff)
        if (!(abs(c.im) <= ldexp2(max(abs(c.re), BigReal::of(1, prec)), -(prec / 2))))
            throw std::runtime_error("class_polynomial: non-real coefficient");

    poly.float_coefficients.reserve(h + 1);
    for (long i = h; i >= 0; --i) poly.float_coefficients.push_back(coeff[i].re);

    // reconstruct ascending coefficients as rationals and verify by residual
    BigInt bound = poly.denominator_bound;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<Rational> recon;
        bool ok = true;
        BigReal tol = ldexp2(BigReal::of(1, prec), -(prec / 4));
        for (const BigReal& c : poly.float_coefficients) {
            Rational r = rational_reconstruct(c, bound);
            if (!(abs(c - BigReal::of(r, prec)) < tol)) {
                ok = false;
                break;
            }
            recon.push_back(r);
        }
        if (ok) {
            poly.coefficients = std::move(recon);
            poly.reconstructed = true;
            poly.denominator_bound = bound;
            return poly;
        }
        bound = poly.denominator_bound * poly.denominator_bound;
    }
    poly.reconstructed = false;
    return poly;
}

std::string ClassPolynomial::display() const {
    auto term_str = [](const Rational& c, long k) {
        std::string mag;
        Rational a = c >= 0 ? c : Rational(-c);
        a.canonicalize();
        if (k == 0) {
            mag = a.get_str();
        } else {
            std::string xs = (k == 1) ? "x" : "x^" + std::to_string(k);
            if (a == 1)
                mag = xs;
            else if (a.get_den() == 1)
                mag = a.get_num().get_str() + xs;
            else
                mag = a.get_str() + " " + xs;
        }
        return mag;
    };
    if (!reconstructed) {
        std::string s = "(unreconstructed)";
        return s;
    }
    std::string out;
    for (long k = degree; k >= 0; --k) {
        const Rational& c = coefficients[k];
        if (c == 0) continue;
        if (out.empty())
            out += (c < 0 ? "-" : "") + term_str(c, k);
        else
            out += (c < 0 ? " - " : " + ") + term_str(c, k);
    }
    if (out.empty()) out = "0";
    return out;
}

std::string TraceResult::to_json() const {
    nlohmann::json j;
    j["version"] = kVersion;
    j["n"] = n;
    j["method"] = method;
    j["prec_bits"] = prec_bits;
    j["class_count"] = class_count;
    j["trace_re"] = trace_value.re.str();
    j["trace_im"] = trace_value.im.str();
    if (rational_valued) {
        j["rounded"] = rounded_rational.get_str();
    } else {
        j["rounded"] = rounded.get_str();
    }
    j["residual"] = residual.str();
    return j.dump();
}

std::string ClassPolynomial::to_json() const {
    nlohmann::json j;
    j["version"] = kVersion;
    j["n"] = n;
    j["degree"] = degree;
    j["prec_bits"] = prec_bits;
    j["denominator_bound"] = denominator_bound.get_str();
    j["reconstructed"] = reconstructed;
    if (reconstructed) {
        std::vector<std::string> cs;
        for (const auto& c : coefficients) cs.push_back(c.get_str());
        j["coefficients"] = cs;
        j["polynomial"] = display();
    }
    std::vector<std::string> fs;
    for (const auto& c : float_coefficients) fs.push_back(c.str());
    j["float_coefficients"] = fs;
    return j.dump();
}

}  // namespace sptfn
