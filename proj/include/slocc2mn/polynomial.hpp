#pragma once

#include <utility>
#include <vector>

#include "slocc2mn/rational.hpp"

namespace slocc {

/// Univariate polynomial over the Gaussian rationals, coefficients stored
/// lowest degree first. The zero polynomial is the empty list; otherwise the
/// leading coefficient is nonzero.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    ExactPolynomial(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { normalize(); }

    static ExactPolynomial constant(const GaussianRational& v) { return ExactPolynomial({v}); }
    /// x - r
    static ExactPolynomial linear_root(const GaussianRational& r) { return ExactPolynomial({-r, 1}); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& leading() const { return c_.back(); }
    GaussianRational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GaussianRational(0);
    }

    GaussianRational eval(const GaussianRational& x) const;
    ExactPolynomial derivative() const;

    ExactPolynomial operator+(const ExactPolynomial& o) const;
    ExactPolynomial operator-(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial scaled(const GaussianRational& c) const;
    bool operator==(const ExactPolynomial& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& d) const;
    /// Leading coefficient normalized to 1 (zero stays zero).
    ExactPolynomial monic() const;

    std::string str() const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Monic gcd via the Euclidean algorithm.
ExactPolynomial poly_gcd(ExactPolynomial a, ExactPolynomial b);

struct RootResult {
    std::vector<std::pair<GaussianRational, int>> roots; // (root, multiplicity)
    ExactPolynomial remainder;                           // no Gaussian-rational roots; constant when fully split
};

/// All Gaussian-rational roots with multiplicities, plus the unresolved
/// remainder. Degree 1 and 2 factors are solved in closed form (quadratics
/// only when the discriminant has an exact Gaussian-rational square root);
/// higher degrees go through a Gaussian-integer rational-root search on the
/// primitive integer form. Multiplicities plus deg(remainder) = deg(p).
RootResult find_roots(const ExactPolynomial& p);

/// As find_roots, but throws IrreducibleRemainder(d) if a factor of degree
/// d >= 1 has no representable root. Pre: p nonzero.
std::vector<std::pair<GaussianRational, int>> poly_roots_exact(const ExactPolynomial& p);

} // namespace slocc
