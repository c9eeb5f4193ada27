#include "sptfn/kloosterman.hpp"

#include "sptfn/dedekind.hpp"
#include "sptfn/numkernel.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sptfn {

namespace {

constexpr long kGuard = 16;

long mod_pos(long x, long c) {
    long r = x % c;
    return r < 0 ? r + c : r;
}

void check_real_accumulation(const BigComplex& acc, long prec, const char* who) {
    BigReal tol = ldexp2(BigReal::of(1, 32), -(prec / 2));
    if (!(abs(acc.im) < tol))
        throw std::runtime_error(std::string(who) +
                                 ": accumulated imaginary part exceeds tolerance");
}

}  // namespace

BigReal a_direct(long n, long c, long prec) {
    if (c < 1) throw std::domain_error("a_direct: requires c >= 1");
    long wp = prec + kGuard;
    BigComplex acc(wp);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        // phase = s(d,c)/2 - dn/c, exactly
        Rational phase = dedekind_sum(BigInt(d), BigInt(c)) / 2;
        phase -= Rational(BigInt(d) * n, BigInt(c));
        phase.canonicalize();
        acc = acc + unit_exp(phase, wp);
    }
    check_real_accumulation(acc, prec, "a_direct");
    return acc.re.to_prec(prec);
}

BigReal a_selberg(long n, long c, long prec) {
    if (c < 1) throw std::domain_error("a_selberg: requires c >= 1");
    long wp = prec + kGuard;
    long target = mod_pos(-n, c);
    BigReal acc(wp);
    long v = 0;  // (3l^2+l)/2 mod c, updated incrementally by 3l+2
    for (long l = 0; l < 2 * c; ++l) {
        if (v == target) {
            BigReal t = unit_exp(Rational(6 * l + 1, 12 * c), wp).re;
            if (l % 2 == 0)
                acc = acc + t;
            else
                acc = acc - t;
        }
        v = (v + mod_pos(3 * l + 2, c)) % c;
    }
    BigReal r = sqrt(BigReal::of(c, wp) / 3) * acc;
    return r.to_prec(prec);
}

BigReal k_classical(long m, long n, long c, long prec) {
    if (c < 1) throw std::domain_error("k_classical: requires c >= 1");
    long wp = prec + kGuard;
    BigComplex acc(wp);
    BigInt cz(c);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        BigInt dbar;
        if (c == 1) {
            dbar = 0;
        } else if (mpz_invert(dbar.get_mpz_t(), BigInt(d).get_mpz_t(), cz.get_mpz_t()) == 0) {
            continue;  // unreachable: gcd checked above
        }
        Rational phase(BigInt(m) * dbar + BigInt(n) * d, cz);
        phase.canonicalize();
        acc = acc + unit_exp(phase, wp);
    }
    check_real_accumulation(acc, prec, "k_classical");
    return acc.re.to_prec(prec);
}

BigComplex s_eta(long m, long n, long c, long prec) {
    if (c < 1) throw std::domain_error("s_eta: requires c >= 1");
    long wp = prec + kGuard;
    // m~ = m - 23/24, n~ = n - 23/24
    Rational mt(24 * m - 23, 24), nt(24 * n - 23, 24);
    BigComplex acc(wp);
    BigInt cz(c);
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        BigInt az;
        if (c == 1) {
            az = 0;
        } else {
            mpz_invert(az.get_mpz_t(), BigInt(d).get_mpz_t(), cz.get_mpz_t());
        }
        BigInt bz = (az * d - 1) / cz;
        SL2Matrix gamma{az, bz, cz, BigInt(d)};
        // conj(chi(gamma)) e((m~ a + n~ d)/c)
        Rational phase = -eta_multiplier_phase(gamma);
        phase += (mt * Rational(az) + nt * Rational(BigInt(d))) / Rational(cz);
        phase.canonicalize();
        acc = acc + unit_exp(phase, wp);
    }
    return BigComplex(acc.re.to_prec(prec), acc.im.to_prec(prec));
}

int omega_odd(long c) {
    if (c < 1) throw std::domain_error("omega_odd: requires c >= 1");
    int count = 0;
    while (c % 2 == 0) c /= 2;
    for (long p = 3; p * p <= c; p += 2) {
        if (c % p == 0) {
            ++count;
            while (c % p == 0) c /= p;
        }
    }
    if (c > 1) ++count;
    return count;
}

BigReal lehmer_bound(long c, long prec) {
    return ldexp2(sqrt(BigReal::of(c, prec)), omega_odd(c));
}

std::optional<PentagonalWitness> pentagonal_index(long m) {
    if (m < 0) return std::nullopt;
    BigInt disc = BigInt(24) * m + 1;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root != disc) return std::nullopt;
    long t = root.get_si();
    PentagonalWitness w;
    if (t % 6 == 5) {
        w.k = (t + 1) / 6;
        w.branch = PentagonalWitness::Branch::kMinus;
    } else if (t % 6 == 1) {
        w.k = (t - 1) / 6;
        w.branch = PentagonalWitness::Branch::kPlus;
    } else {
        return std::nullopt;  // 24m+1 a square forces t = +-1 mod 6
    }
    w.sign = (w.k % 2 == 0) ? 1 : -1;
    w.value = m;
    return w;
}

SummatorySeries summatory(long n, long xmax, long prec, int parallel_blocks) {
    if (xmax < 1) throw std::domain_error("summatory: requires xmax >= 1");
    SummatorySeries out;
    out.n = n;
    out.prec = prec;
    out.main_term_coeff = BigReal(prec);
    if (auto w = pentagonal_index(-n)) {
        BigReal pi = BigReal::pi(prec);
        BigReal coeff = BigReal::of(12, prec) * sqrt(BigReal::of(3, prec)) / (pi * pi);
        out.main_term_coeff = w->sign > 0 ? coeff : -coeff;
    }

    out.rows.resize(xmax);
    int nblocks = parallel_blocks;
    if (nblocks <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        nblocks = hw ? static_cast<int>(hw) : 1;
    }
    if (static_cast<long>(nblocks) > xmax) nblocks = static_cast<int>(xmax);

    auto work = [&](long lo, long hi) {
        for (long c = lo; c <= hi; ++c) {
            out.rows[c - 1].c = c;
            out.rows[c - 1].a_c = a_selberg(n, c, prec);
        }
    };
    if (nblocks <= 1) {
        work(1, xmax);
    } else {
        std::vector<std::thread> threads;
        long chunk = (xmax + nblocks - 1) / nblocks;
        for (int b = 0; b < nblocks; ++b) {
            long lo = b * chunk + 1;
            long hi = std::min<long>(xmax, (b + 1) * chunk);
            if (lo > hi) break;
            threads.emplace_back(work, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    // partial sums reduced strictly in ascending c order
    BigReal run(prec);
    for (auto& row : out.rows) {
        run = run + row.a_c / row.c;
        row.partial_sum = run;
    }
    return out;
}

std::string SummatorySeries::to_csv() const {
    std::ostringstream os;
    os << "c,A_c,partial_sum,main_term\n";
    for (const auto& row : rows) {
        BigReal mt = main_term_coeff * sqrt(BigReal::of(row.c, prec));
        os << row.c << ',' << row.a_c.str() << ',' << row.partial_sum.str() << ','
           << mt.str() << '\n';
    }
    return os.str();
}

}  // namespace sptfn
