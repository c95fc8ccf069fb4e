#pragma once

#include <vector>

#include "slocc2mn/rational.hpp"

namespace slocc {

/// Gaussian integer a + bi with arbitrary-precision parts. Z[i] is a
/// Euclidean domain, which gives us gcds, exact division and a rational-root
/// theorem for primitive polynomials over it.
struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r) : re(r), im(0) {}  // NOLINT implicit
    GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_unit() const { return norm() == 1; }
    Integer norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }

    GaussianRational to_rational() const { return {Rational(re), Rational(im)}; }
};

/// Rounded division q = round(a/b), so that a = q*b + r with N(r) < N(b).
GaussianInt gi_div_round(const GaussianInt& a, const GaussianInt& b);

/// Exact quotient a/b; caller guarantees divisibility.
GaussianInt gi_div_exact(const GaussianInt& a, const GaussianInt& b);

bool gi_divides(const GaussianInt& d, const GaussianInt& a);

/// Euclidean gcd, normalized to the canonical associate.
GaussianInt gi_gcd(GaussianInt a, GaussianInt b);

/// Canonical associate: the unit multiple with re > 0, im >= 0 (or 0 itself).
GaussianInt gi_normalize_associate(const GaussianInt& z);

/// All divisors of z up to associates (canonical associates, unsorted).
/// z must be nonzero. Needs the factorization of N(z), so pathological
/// inputs with huge prime factors can be slow; intended range is the small
/// coefficients appearing in pencil characteristic polynomials.
std::vector<GaussianInt> gi_divisors(const GaussianInt& z);

/// Factorization of an ordinary positive integer: (prime, exponent) pairs.
/// Trial division with a Pollard-rho fallback.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

} // namespace slocc
