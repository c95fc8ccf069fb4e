#include "slocc2mn/matrix.hpp"

#include <sstream>

#include "slocc2mn/gaussian_int.hpp"

namespace slocc {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
    if (rows_ <= 0 || cols_ <= 0) throw DomainError("matrix dimensions must be positive");
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_) throw ShapeMismatch("ragged initializer");
        for (const auto& v : row) a_.push_back(v);
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
    ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix addition");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix subtraction");
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GaussianRational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const GaussianRational& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += aik * b;
            }
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
    ExactMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

namespace {

// Clears denominators row by row: returns Gaussian-integer rows spanning the
// same row space, so rank is unchanged.
std::vector<std::vector<GaussianInt>> to_integer_rows(const ExactMatrix& a) {
    std::vector<std::vector<GaussianInt>> rows(a.rows(), std::vector<GaussianInt>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        Integer l(1);
        for (int j = 0; j < a.cols(); ++j) {
            l = lcm(l, a.at(i, j).re.get_den());
            l = lcm(l, a.at(i, j).im.get_den());
        }
        for (int j = 0; j < a.cols(); ++j) {
            const GaussianRational& v = a.at(i, j);
            rows[i][j] = GaussianInt(v.re.get_num() * (l / v.re.get_den()),
                                     v.im.get_num() * (l / v.im.get_den()));
        }
    }
    return rows;
}

// Fraction-free elimination; returns the pivot count and, for square inputs,
// the determinant of the integer rows through `det` (Bareiss: the last pivot).
int bareiss_rank(std::vector<std::vector<GaussianInt>>& m, GaussianInt* det, int* swaps) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    GaussianInt prev(1);
    int rank = 0;
    if (swaps) *swaps = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            std::swap(m[piv], m[rank]);
            if (swaps) ++*swaps;
        }
        const GaussianInt p = m[rank][col];
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = gi_div_exact(m[i][j] * p - m[i][col] * m[rank][j], prev);
            m[i][col] = GaussianInt(0);
        }
        prev = p;
        ++rank;
    }
    if (det) *det = prev;
    return rank;
}

} // namespace

int mat_rank(const ExactMatrix& a) {
    auto rows = to_integer_rows(a);
    return bareiss_rank(rows, nullptr, nullptr);
}

GaussianRational mat_det(const ExactMatrix& a) {
    if (!a.is_square()) throw ShapeMismatch("determinant of non-square matrix");
    const int n = a.rows();
    // Track the row scalings introduced while clearing denominators.
    GaussianRational scale(1);
    auto rows = to_integer_rows(a);
    for (int i = 0; i < n; ++i) {
        // ratio of original row to integer row: 1/l_i, recover l_i from any nonzero entry
        for (int j = 0; j < n; ++j) {
            if (!a.at(i, j).is_zero()) {
                scale = scale * (a.at(i, j) / rows[i][j].to_rational());
                break;
            }
        }
    }
    GaussianInt det;
    int swaps = 0;
    int rank = bareiss_rank(rows, &det, &swaps);
    if (rank < n) return GaussianRational(0);
    GaussianRational d = det.to_rational() * scale;
    return swaps % 2 ? -d : d;
}

ExactMatrix mat_inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw ShapeMismatch("inverse of non-square matrix");
    const int n = a.rows();
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!work.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrix();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(piv, j), work.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        GaussianRational pinv = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || work.at(i, col).is_zero()) continue;
            GaussianRational f = work.at(i, col);
            for (int j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

} // namespace slocc
