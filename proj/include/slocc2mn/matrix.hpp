#pragma once

#include <initializer_list>
#include <vector>

#include "slocc2mn/rational.hpp"

namespace slocc {

/// Dense matrix over the Gaussian rationals, row-major, value-semantic.
/// All operations are exact; nothing here ever rounds.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows <= 0 || cols <= 0) throw DomainError("matrix dimensions must be positive");
    }
    /// Row-major construction from nested braces, e.g. {{1,2},{3,4}}.
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> init);

    static ExactMatrix identity(int n);
    static ExactMatrix diagonal(const std::vector<GaussianRational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianRational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const GaussianRational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const GaussianRational& c) const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<GaussianRational> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination over Gaussian integers,
/// after clearing each row's denominators.
int mat_rank(const ExactMatrix& a);

/// Exact determinant of a square matrix.
GaussianRational mat_det(const ExactMatrix& a);

/// Exact inverse via Gauss–Jordan elimination. Throws SingularMatrix.
ExactMatrix mat_inverse(const ExactMatrix& a);

} // namespace slocc
