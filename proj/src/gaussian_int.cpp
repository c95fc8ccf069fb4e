#include "slocc2mn/gaussian_int.hpp"

#include <algorithm>
#include <map>

namespace slocc {

namespace {

// Nearest integer to a/b (ties toward zero are fine for the Euclidean bound).
Integer round_quotient(const Integer& a, const Integer& b) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // fdiv gives 0 <= r < |b| for b > 0; bump when the remainder is > b/2.
    if (2 * r > abs(b)) q += sgn(b) > 0 ? 1 : -1;
    return q;
}

} // namespace

GaussianInt gi_div_round(const GaussianInt& a, const GaussianInt& b) {
    // a/b = a*conj(b)/N(b); round both coordinates.
    GaussianInt num = a * b.conj();
    Integer n = b.norm();
    return {round_quotient(num.re, n), round_quotient(num.im, n)};
}

GaussianInt gi_div_exact(const GaussianInt& a, const GaussianInt& b) {
    GaussianInt num = a * b.conj();
    Integer n = b.norm();
    Integer qr, rr, qi, ri;
    mpz_tdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_tdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    if (sgn(rr) != 0 || sgn(ri) != 0) throw DomainError("gi_div_exact: not divisible");
    return {qr, qi};
}

bool gi_divides(const GaussianInt& d, const GaussianInt& a) {
    if (d.is_zero()) return a.is_zero();
    GaussianInt num = a * d.conj();
    Integer n = d.norm();
    return mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) != 0 &&
           mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()) != 0;
}

GaussianInt gi_normalize_associate(const GaussianInt& z) {
    if (z.is_zero()) return z;
    GaussianInt u = z;
    // Multiply by i until re > 0, im >= 0.
    for (int k = 0; k < 4; ++k) {
        if (sgn(u.re) > 0 && sgn(u.im) >= 0) return u;
        u = GaussianInt(-u.im, u.re); // times i
    }
    return u; // unreachable
}

GaussianInt gi_gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt q = gi_div_round(a, b);
        GaussianInt r = a - q * b;
        a = b;
        b = r;
    }
    return gi_normalize_associate(a);
}

namespace {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Integer pollard_rho(const Integer& n) {
    // Brent's cycle-finding variant; n must be composite and odd.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEULL);
    while (true) {
        Integer y = rng.get_z_range(n - 2) + 1;
        Integer c = rng.get_z_range(n - 2) + 1;
        Integer x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1 << 16;
        std::vector<bool> composite(limit, false);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p < limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q < limit; q += p) composite[q] = true;
        }
        return out;
    }();
    return primes;
}

} // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
    std::map<Integer, int> acc;
    if (n < 0) n = -n;
    for (unsigned long p : small_primes()) {
        if (n <= 1) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            acc[Integer(p)] += 1;
            n = n / p;
        }
    }
    if (n > 1) factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

namespace {

// A Gaussian prime above the rational prime p. For p = 2 that is 1+i; for
// p ≡ 1 (mod 4), gcd(p, s+i) with s^2 ≡ -1 (mod p); p ≡ 3 (mod 4) stays prime.
GaussianInt gaussian_prime_above(const Integer& p) {
    if (p == 2) return {1, 1};
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return {p, 0};
    // Find a quadratic non-residue a, then s = a^((p-1)/4) satisfies s^2 = -1.
    Integer exp_half = (p - 1) / 2;
    Integer exp_quarter = (p - 1) / 4;
    for (Integer a = 2;; ++a) {
        Integer t;
        mpz_powm(t.get_mpz_t(), a.get_mpz_t(), exp_half.get_mpz_t(), p.get_mpz_t());
        if (t == p - 1) {
            Integer s;
            mpz_powm(s.get_mpz_t(), a.get_mpz_t(), exp_quarter.get_mpz_t(), p.get_mpz_t());
            return gi_gcd(GaussianInt(p, 0), GaussianInt(s, 1));
        }
    }
}

} // namespace

std::vector<GaussianInt> gi_divisors(const GaussianInt& z) {
    if (z.is_zero()) throw DomainError("divisors of zero");
    // Gaussian prime-power factorization of z, via the factorization of N(z).
    std::vector<std::pair<GaussianInt, int>> primes;
    GaussianInt rest = z;
    for (const auto& [p, e] : factor_integer(z.norm())) {
        (void)e;
        GaussianInt pi = gaussian_prime_above(p);
        for (GaussianInt cand : {pi, pi.conj()}) {
            cand = gi_normalize_associate(cand);
            int k = 0;
            while (gi_divides(cand, rest)) {
                rest = gi_div_exact(rest, cand);
                ++k;
            }
            if (k > 0) primes.emplace_back(cand, k);
            if (cand.norm() == p * p || p == 2) break; // inert or ramified: one prime above p
        }
    }
    std::vector<GaussianInt> divs{GaussianInt(1)};
    for (const auto& [pi, e] : primes) {
        size_t base = divs.size();
        GaussianInt pw(1);
        for (int k = 1; k <= e; ++k) {
            pw = pw * pi;
            for (size_t t = 0; t < base; ++t) divs.push_back(gi_normalize_associate(divs[t] * pw));
        }
    }
    return divs;
}

} // namespace slocc
