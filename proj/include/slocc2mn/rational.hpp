#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "slocc2mn/errors.hpp"

namespace slocc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact square root of a nonnegative rational, if the rational is a perfect
/// square (numerator and denominator both perfect integer squares).
std::optional<Rational> rational_sqrt(const Rational& q);

/// Complex number with exact rational real and imaginary parts — the scalar
/// field for all pencil arithmetic. mpq_class keeps every value in lowest
/// terms with positive denominator, so equality is plain structural equality.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}                                  // NOLINT implicit
    GaussianRational(long num, long den) : re(Rational(num, den)), im(0) { re.canonicalize(); }
    GaussianRational(Rational r) : re(std::move(r)), im(0) { re.canonicalize(); } // NOLINT implicit
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2 as an exact rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        Rational n = norm();
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Canonical textual form: "a", "a/b", "ci", "c/di", "a/b+c/di", "a/b-c/di".
    /// Unit imaginary parts print as "i"/"-i". Denominators are always positive.
    std::string str() const;
};

/// Conventional total order on scalars: by real part, then imaginary part.
/// Not a field order; used only to pick canonical orbit representatives.
bool scalar_less(const GaussianRational& a, const GaussianRational& b);

/// Exact square root in the Gaussian rationals, when one exists.
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Parses the exact scalar grammar: "a/b", "a/b+c/di", integers, and the
/// shorthands "0", "1", "i", "-i", "3i", "2+3i". Float literals are rejected.
GaussianRational parse_scalar(const std::string& text);

inline GaussianRational operator*(long k, const GaussianRational& z) { return GaussianRational(k) * z; }

} // namespace slocc
