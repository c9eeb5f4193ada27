#include "sptfn/qforms.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace sptfn {

namespace {

QForm act_entries(const BigInt& alpha, const BigInt& beta, const BigInt& gamma,
                  const BigInt& delta, const QForm& q) {
    // Q(delta x - beta y, -gamma x + alpha y)
    QForm r;
    r.a = q.a * delta * delta - q.b * delta * gamma + q.c * gamma * gamma;
    r.b = -2 * q.a * beta * delta + q.b * (alpha * delta + beta * gamma) -
          2 * q.c * alpha * gamma;
    r.c = q.a * beta * beta - q.b * alpha * beta + q.c * alpha * alpha;
    return r;
}

// sqrt(d) * W_d for d | 6, determinant d.
void scaled_atkin_lehner(int d, BigInt& a, BigInt& b, BigInt& c, BigInt& dd) {
    switch (d) {
        case 1: a = 1; b = 0; c = 0; dd = 1; break;
        case 2: a = 2; b = -1; c = 6; dd = -2; break;
        case 3: a = 3; b = 1; c = 6; dd = 3; break;
        case 6: a = 0; b = -1; c = 6; dd = 0; break;
        default: throw std::domain_error("AtkinLehner: d must divide 6");
    }
}

BigInt exact_div(const BigInt& num, long den, const char* who) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), BigInt(den).get_mpz_t());
    if (r != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": non-integral image; form outside the expected stratum");
    return q;
}

void require_pos_def(const QForm& q, const char* who) {
    if (q.a <= 0 || q.disc() >= 0)
        throw std::domain_error(std::string(who) +
                                ": requires a positive definite form (a > 0, D < 0)");
}

}  // namespace

QForm act(const SL2Matrix& g, const QForm& q) {
    return act_entries(g.a, g.b, g.c, g.d, q);
}

QForm act(const AtkinLehner& w, const QForm& q) {
    BigInt a, b, c, d;
    scaled_atkin_lehner(w.d, a, b, c, d);
    QForm scaled = act_entries(a, b, c, d, q);
    QForm r;
    r.a = exact_div(scaled.a, w.d, "act(W_d)");
    r.b = exact_div(scaled.b, w.d, "act(W_d)");
    r.c = exact_div(scaled.c, w.d, "act(W_d)");
    return r;
}

BigComplex root(const QForm& q, long prec) {
    require_pos_def(q, "root");
    BigInt D = q.disc();
    BigReal sq = sqrt(BigReal::of(BigInt(-D), prec + 8));
    BigReal den = BigReal::of(BigInt(2 * q.a), prec + 8);
    return BigComplex((BigReal::of(BigInt(-q.b), prec + 8) / den).to_prec(prec),
                      (sq / den).to_prec(prec));
}

bool is_reduced(const QForm& q) {
    BigInt ab = abs(q.b);
    if (!(ab <= q.a && q.a <= q.c)) return false;
    if (q.b < 0 && (ab == q.a || q.a == q.c)) return false;
    return true;
}

EquivCertificate sl2_reduce(const QForm& q) {
    require_pos_def(q, "sl2_reduce");
    QForm cur = q;
    SL2Matrix g = sl2_identity();
    const SL2Matrix S{0, -1, 1, 0};  // [a,b,c] -> [c,-b,a]
    while (!is_reduced(cur)) {
        // translate b into (-a, a]: T^k with k = floor((b+a-1)/(2a))
        BigInt k;
        BigInt num = cur.b + cur.a - 1;
        BigInt den = 2 * cur.a;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (k != 0) {
            SL2Matrix t{1, k, 0, 1};
            cur = act(t, cur);
            g = t * g;
        }
        if (cur.a > cur.c || (cur.a == cur.c && cur.b < 0)) {
            cur = act(S, cur);
            g = S * g;
        }
    }
    return {cur, g};
}

std::optional<SL2Matrix> gamma06_equivalent(const QForm& q1, const QForm& q2) {
    require_pos_def(q1, "gamma06_equivalent");
    require_pos_def(q2, "gamma06_equivalent");
    BigInt D = q1.disc();
    if (D != q2.disc())
        throw std::invalid_argument("gamma06_equivalent: discriminants differ");
    if (D >= -4)
        throw std::domain_error("gamma06_equivalent: |D| <= 4 unsupported (extra automorphisms)");
    EquivCertificate c1 = sl2_reduce(q1);
    EquivCertificate c2 = sl2_reduce(q2);
    if (!(c1.reduced == c2.reduced)) return std::nullopt;
    // The transporter is {+-g}; both signs share the lower-left divisibility.
    SL2Matrix g = c2.transform.inverse() * c1.transform;
    if (g.c % 6 == 0) return g;
    return std::nullopt;
}

long class_count_oracle(const BigInt& D) {
    if (D >= 0) throw std::domain_error("class_count_oracle: requires D < 0");
    long count = 0;
    for (BigInt a = 1; 3 * a * a <= -D; ++a) {
        for (BigInt b = -a; b <= a; ++b) {
            BigInt num = b * b - D;
            BigInt den = 4 * a;
            BigInt c, r;
            mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) continue;
            if (c < a) continue;
            if (b < 0 && (-b == a || a == c)) continue;  // boundary convention
            ++count;
        }
    }
    return count;
}

std::vector<QForm> class_reps(long n) {
    if (n < 1) throw std::domain_error("class_reps: requires n >= 1");
    BigInt D = BigInt(1) - BigInt(24) * n;
    long h_tot = class_count_oracle(D);
    std::vector<QForm> reps;
    // bucket reps by reduced form; Gamma_0(6) tests only run within a bucket
    std::map<std::tuple<BigInt, BigInt, BigInt>, std::vector<size_t>> by_reduced;
    BigInt cap = 6 * (-D);
    for (BigInt a = 6; a <= cap; a += 6) {
        for (BigInt b = 1; b < 2 * a; b += 12) {
            BigInt num = b * b - D;
            BigInt den = 4 * a;
            BigInt c, r;
            mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) continue;
            QForm q{a, b, c};
            EquivCertificate cert = sl2_reduce(q);
            auto key = std::make_tuple(cert.reduced.a, cert.reduced.b, cert.reduced.c);
            bool fresh = true;
            for (size_t idx : by_reduced[key]) {
                if (gamma06_equivalent(reps[idx], q)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                reps.push_back(q);
                by_reduced[key].push_back(reps.size() - 1);
                if (static_cast<long>(reps.size()) == h_tot) return reps;
            }
        }
    }
    throw std::runtime_error(
        "class_reps: sweep cap reached before finding all classes (internal inconsistency)");
}

}  // namespace sptfn
