#ifndef SPTFN_QFORMS_HPP
#define SPTFN_QFORMS_HPP

#include "sptfn/bigfloat.hpp"
#include "sptfn/dedekind.hpp"

#include <optional>
#include <vector>

namespace sptfn {

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct QForm {
    BigInt a, b, c;

    BigInt disc() const { return b * b - 4 * a * c; }
    bool operator==(const QForm& o) const = default;
};

// Atkin-Lehner involution W_d on level 6, d | 6.  Stored as the integer
// matrix sqrt(d) W_d, of determinant d.
struct AtkinLehner {
    int d;
};

// gQ(x,y) = Q(delta x - beta y, -gamma x + alpha y).
QForm act(const SL2Matrix& g, const QForm& q);

// W_d action; every coefficient of the scaled-matrix image must be divisible
// by d, otherwise the input lies outside the expected stratum.
QForm act(const AtkinLehner& w, const QForm& q);

// Root of Q(tau,1) in the upper half-plane: (-b + i sqrt(|D|))/(2a).
BigComplex root(const QForm& q, long prec);

// Gauss reduction together with the transform that realizes it.
struct EquivCertificate {
    QForm reduced;
    SL2Matrix transform;  // act(transform, input) == reduced
};

// Reduce to |b| <= a <= c with b >= 0 when |b| = a or a = c.
EquivCertificate sl2_reduce(const QForm& q);
bool is_reduced(const QForm& q);

// Some g in Gamma_0(6) with act(g, q1) == q2, if one exists.  Requires equal
// negative discriminants with |D| > 4 (trivial stabilizers).
std::optional<SL2Matrix> gamma06_equivalent(const QForm& q1, const QForm& q2);

// One representative per Gamma_0(6)-class of
//   { [a,b,c] : b^2-4ac = 1-24n, 6 | a > 0, b = 1 (mod 12) },
// ordered by (a, b).
std::vector<QForm> class_reps(long n);

// Number of Gauss-reduced forms of discriminant D < 0 (primitive and
// imprimitive), by finite scan.
long class_count_oracle(const BigInt& D);

}  // namespace sptfn

#endif
