#include "slocc2mn/pencil.hpp"

#include <algorithm>
#include <numeric>

#include "slocc2mn/nonlocal.hpp"

namespace slocc::pencil {

ProjectivePoint::ProjectivePoint(GaussianRational m, GaussianRational n) : mu(std::move(m)), nu(std::move(n)) {
    if (mu.is_zero() && nu.is_zero()) throw DomainError("projective point (0:0)");
    if (!nu.is_zero()) {
        mu = mu / nu;
        nu = GaussianRational(1);
    } else {
        mu = GaussianRational(1);
    }
}

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return scalar_less(a.mu, b.mu);
}

PencilState::PencilState(ExactMatrix g1, ExactMatrix g2)
    : m_dim(g1.rows()), n_dim(g1.cols()), gamma1(std::move(g1)), gamma2(std::move(g2)) {
    if (gamma1.rows() != gamma2.rows() || gamma1.cols() != gamma2.cols())
        throw ShapeMismatch("pencil slices must have identical shape");
    if (m_dim < 2 || n_dim < 2) throw DomainError("pencil state needs M, N >= 2");
}

ILOTriple::ILOTriple(ExactMatrix t_, ExactMatrix p_, ExactMatrix q_)
    : t(std::move(t_)), p(std::move(p_)), q(std::move(q_)) {
    if (t.rows() != 2 || t.cols() != 2) throw ShapeMismatch("T must be 2x2");
    if (!p.is_square() || !q.is_square()) throw ShapeMismatch("P, Q must be square");
    if (mat_rank(t) != 2) throw SingularMatrix();
    if (mat_rank(p) != p.rows()) throw SingularMatrix();
    if (mat_rank(q) != q.rows()) throw SingularMatrix();
}

ILOTriple ILOTriple::identity(int m, int n) {
    return {ExactMatrix::identity(2), ExactMatrix::identity(m), ExactMatrix::identity(n)};
}

ILOTriple ILOTriple::inverse() const { return {mat_inverse(t), mat_inverse(p), mat_inverse(q)}; }

PencilState apply_ilo(const PencilState& s, const ILOTriple& op) {
    if (op.p.rows() != s.m_dim || op.q.rows() != s.n_dim)
        throw ShapeMismatch("ILO dimensions do not match the state");
    ExactMatrix a = op.p * s.gamma1 * op.q;
    ExactMatrix b = op.p * s.gamma2 * op.q;
    return {a.scaled(op.t.at(0, 0)) + b.scaled(op.t.at(0, 1)),
            a.scaled(op.t.at(1, 0)) + b.scaled(op.t.at(1, 1))};
}

ProjectivePoint mobius_apply(const ExactMatrix& t, const ProjectivePoint& pt) {
    if (t.rows() != 2 || t.cols() != 2) throw ShapeMismatch("Moebius action needs a 2x2 matrix");
    return {t.at(1, 1) * pt.mu + t.at(1, 0) * pt.nu, t.at(0, 1) * pt.mu + t.at(0, 0) * pt.nu};
}

int PencilStructure::jordan_weight() const {
    int s = 0;
    for (const auto& g : eigen_groups) s += std::accumulate(g.blocks.begin(), g.blocks.end(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// Smith invariant factors of the pencil polynomial matrix P(x) = Gamma2 - x*Gamma1.

namespace {

using PolyMatrix = std::vector<std::vector<ExactPolynomial>>;

PolyMatrix pencil_poly_matrix(const PencilState& s) {
    PolyMatrix a(s.m_dim, std::vector<ExactPolynomial>(s.n_dim));
    for (int i = 0; i < s.m_dim; ++i)
        for (int j = 0; j < s.n_dim; ++j)
            a[i][j] = ExactPolynomial({s.gamma2.at(i, j), -s.gamma1.at(i, j)});
    return a;
}

void add_row_multiple(PolyMatrix& a, int dst, int src, const ExactPolynomial& f) {
    for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] = a[dst][j] - f * a[src][j];
}

void add_col_multiple(PolyMatrix& a, int dst, int src, const ExactPolynomial& f) {
    for (size_t i = 0; i < a.size(); ++i) a[i][dst] = a[i][dst] - f * a[i][src];
}

// Nonzero invariant factors e_1 | e_2 | ... of a polynomial matrix, monic.
std::vector<ExactPolynomial> smith_invariant_factors(PolyMatrix a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<ExactPolynomial> inv;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // minimal-degree nonzero entry of the trailing submatrix -> (t, t)
            int bi = -1, bj = -1, bdeg = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (!a[i][j].is_zero() && (bi < 0 || a[i][j].degree() < bdeg)) {
                        bi = i;
                        bj = j;
                        bdeg = a[i][j].degree();
                    }
            if (bi < 0) return inv;
            std::swap(a[t], a[bi]);
            if (bj != t)
                for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                add_row_multiple(a, i, t, a[i][t].divmod(a[t][t]).first);
                if (!a[i][t].is_zero()) clean = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                add_col_multiple(a, j, t, a[t][j].divmod(a[t][t]).first);
                if (!a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue; // smaller-degree remainders became new pivot candidates

            // pivot must divide the whole trailing submatrix
            bool divides_all = true;
            for (int i = t + 1; i < rows && divides_all; ++i)
                for (int j = t + 1; j < cols && divides_all; ++j)
                    if (!a[i][j].is_zero() && !a[i][j].divmod(a[t][t]).second.is_zero()) {
                        add_row_multiple(a, t, i, ExactPolynomial::constant(GaussianRational(-1)));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        inv.push_back(a[t][t].monic());
    }
    return inv;
}

// Nullity of the block-Toeplitz matrix with P0 on the diagonal and P1 on the
// subdiagonal, (k+1) block rows/cols: counts truncated power-series kernel
// vectors at the expansion point.
int toeplitz_nullity(const ExactMatrix& p0, const ExactMatrix& p1, int k) {
    const int m = p0.rows(), n = p0.cols();
    ExactMatrix big((k + 1) * m, (k + 1) * n);
    for (int b = 0; b <= k; ++b)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                big.at(b * m + i, b * n + j) = p0.at(i, j);
                if (b > 0) big.at(b * m + i, (b - 1) * n + j) = p1.at(i, j);
            }
    return (k + 1) * n - mat_rank(big);
}

// Jordan block-size partition at one projective eigenvalue with known
// algebraic multiplicity, by the Weyr-style chain
// w_k = nullity(T_k) - (k+1)*p; w_k - w_{k-1} counts blocks of size > k.
// Multiplicity 1 and the extreme block counts need no chain at all.
Partition weyr_partition(const PencilState& s, const ProjectivePoint& pt, int p_col_count, int mult) {
    if (mult == 1) return {1};
    // scale P0 so its entries stay Gaussian integers for integer-entry states
    Integer den = lcm(pt.mu.re.get_den(), pt.mu.im.get_den());
    GaussianRational den_scalar{Rational(den)};
    ExactMatrix p0 = s.gamma2.scaled(pt.nu * den_scalar) - s.gamma1.scaled(pt.mu * den_scalar);
    const ExactMatrix& p1 = pt.is_infinity() ? s.gamma2 : s.gamma1;

    int blocks = (s.n_dim - mat_rank(p0)) - p_col_count; // w_0
    if (blocks <= 0) throw std::logic_error("eigenvalue with no Jordan blocks");
    if (blocks == mult) return Partition(mult, 1);
    if (blocks == 1) return {mult};

    std::vector<int> ge{blocks}; // ge[k] = #blocks of size >= k+1
    int w_prev = blocks;
    for (int k = 1; k <= s.m_dim + s.n_dim; ++k) {
        int w = toeplitz_nullity(p0, p1, k) - (k + 1) * p_col_count;
        int cnt = w - w_prev;
        if (cnt <= 0) break;
        ge.push_back(cnt);
        w_prev = w;
        if (w == mult) break; // every block has size <= k+1 now
    }
    Partition part;
    for (int b = 1; b <= ge[0]; ++b) {
        int size = 0;
        while (size < static_cast<int>(ge.size()) && ge[size] >= b) ++size;
        part.push_back(size);
    }
    return part; // descending by construction
}

// det(Gamma2 - x*Gamma1) by exact evaluation at deg+1 points and Lagrange
// interpolation; identically zero for rank-deficient square pencils.
ExactPolynomial interpolated_pencil_det(const PencilState& s) {
    const int n = s.n_dim;
    std::vector<GaussianRational> xs, ys;
    for (int k = 0; k <= n; ++k) {
        GaussianRational x(static_cast<long>(k));
        xs.push_back(x);
        ys.push_back(mat_det(s.gamma2 - s.gamma1.scaled(x)));
    }
    // divided differences, then Horner over the Newton basis
    std::vector<GaussianRational> coef = ys;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    ExactPolynomial acc{coef[n]};
    for (int i = n - 1; i >= 0; --i)
        acc = acc * ExactPolynomial{-xs[i], GaussianRational(1)} + ExactPolynomial{coef[i]};
    return acc;
}

// Minimal indices from polynomial-kernel dimension chains: d_k, the nullity
// of the stacked [A; B A; ...; B] matrix, satisfies
// d_k = sum_{eps <= k} (k + 1 - eps), so d_k - d_{k-1} = #(eps <= k).
std::vector<int> minimal_indices(const ExactMatrix& a, const ExactMatrix& b, int target) {
    std::vector<int> out;
    if (target == 0) return out;
    const int m = a.rows(), n = a.cols();
    int d_prev = 0, le_prev = 0;
    for (int k = 0; k <= m + n + 1; ++k) {
        ExactMatrix big((k + 2) * m, (k + 1) * n);
        for (int bc = 0; bc <= k; ++bc)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) {
                    big.at(bc * m + i, bc * n + j) = a.at(i, j);
                    big.at((bc + 1) * m + i, bc * n + j) = b.at(i, j);
                }
        int d = (k + 1) * n - mat_rank(big);
        int le = d - d_prev;
        for (int c = 0; c < le - le_prev; ++c) out.push_back(k);
        if (static_cast<int>(out.size()) == target) return out;
        d_prev = d;
        le_prev = le;
    }
    throw std::logic_error("minimal index chain failed to converge");
}

} // namespace

namespace {

// Strictly equivalent integer-entry copy: each row of both slices scaled by
// the common denominator lcm. Eigenvalues and all invariants are unchanged,
// and every downstream rank works on Gaussian-integer entries.
PencilState clear_row_denominators(const PencilState& s) {
    ExactMatrix g1 = s.gamma1, g2 = s.gamma2;
    for (int i = 0; i < s.m_dim; ++i) {
        Integer l(1);
        for (int j = 0; j < s.n_dim; ++j) {
            l = lcm(l, g1.at(i, j).re.get_den());
            l = lcm(l, g1.at(i, j).im.get_den());
            l = lcm(l, g2.at(i, j).re.get_den());
            l = lcm(l, g2.at(i, j).im.get_den());
        }
        if (l == 1) continue;
        GaussianRational f{Rational(l)};
        for (int j = 0; j < s.n_dim; ++j) {
            g1.at(i, j) *= f;
            g2.at(i, j) *= f;
        }
    }
    return {std::move(g1), std::move(g2)};
}

} // namespace

PencilStructure pencil_structure(const PencilState& input) {
    const PencilState s = clear_row_denominators(input);
    PencilStructure ps;
    ps.m_dim = s.m_dim;
    ps.n_dim = s.n_dim;

    // Regular-part determinant. Square pencils with det != 0 avoid the Smith
    // form entirely; everything else gets the product of invariant factors.
    ExactPolynomial det_reg;
    if (s.m_dim == s.n_dim) det_reg = interpolated_pencil_det(s);
    if (!det_reg.is_zero() && s.m_dim == s.n_dim) {
        ps.normal_rank = s.n_dim;
    } else {
        auto invariants = smith_invariant_factors(pencil_poly_matrix(s));
        ps.normal_rank = static_cast<int>(invariants.size());
        det_reg = ExactPolynomial::constant(GaussianRational(1));
        for (const auto& e : invariants) det_reg = det_reg * e;
    }
    const int p = s.n_dim - ps.normal_rank;
    const int q = s.m_dim - ps.normal_rank;

    ps.col_min_indices = minimal_indices(s.gamma2, s.gamma1, p);
    ps.row_min_indices = minimal_indices(s.gamma2.transpose(), s.gamma1.transpose(), q);
    int eps_sum = std::accumulate(ps.col_min_indices.begin(), ps.col_min_indices.end(), 0);
    int eta_sum = std::accumulate(ps.row_min_indices.begin(), ps.row_min_indices.end(), 0);

    auto roots = poly_roots_exact(det_reg); // IrreducibleRemainder propagates
    const int jordan_total = s.m_dim - eps_sum - eta_sum - q;
    int finite_total = 0;
    for (const auto& [root, mult] : roots) {
        EigenGroup g;
        g.point = ProjectivePoint::value(root);
        g.blocks = weyr_partition(s, g.point, p, mult);
        if (std::accumulate(g.blocks.begin(), g.blocks.end(), 0) != mult)
            throw std::logic_error("Weyr chain disagrees with root multiplicity");
        ps.eigen_groups.push_back(std::move(g));
        finite_total += mult;
    }
    const int inf_mult = jordan_total - finite_total;
    if (inf_mult < 0) throw std::logic_error("negative multiplicity at infinity");
    if (inf_mult > 0) {
        EigenGroup g;
        g.point = ProjectivePoint::infinity();
        g.blocks = weyr_partition(s, g.point, p, inf_mult);
        if (std::accumulate(g.blocks.begin(), g.blocks.end(), 0) != inf_mult)
            throw std::logic_error("Weyr chain disagrees with infinity multiplicity");
        ps.eigen_groups.push_back(std::move(g));
    }
    std::sort(ps.eigen_groups.begin(), ps.eigen_groups.end(),
              [](const EigenGroup& a, const EigenGroup& b) { return point_less(a.point, b.point); });

    // Kronecker dimension bookkeeping must balance exactly.
    int w = ps.jordan_weight();
    if (s.m_dim != w + eps_sum + eta_sum + q || s.n_dim != w + eps_sum + eta_sum + p)
        throw std::logic_error("pencil structure bookkeeping does not balance");
    return ps;
}

bool is_true_tripartite(const PencilState& s) {
    // Qubit party factorizes iff the two slices are linearly dependent; the
    // bipartite [(1...1)] case is exactly the dependent case with full rank.
    ExactMatrix stacked_vec(2, s.m_dim * s.n_dim);
    for (int i = 0; i < s.m_dim; ++i)
        for (int j = 0; j < s.n_dim; ++j) {
            stacked_vec.at(0, i * s.n_dim + j) = s.gamma1.at(i, j);
            stacked_vec.at(1, i * s.n_dim + j) = s.gamma2.at(i, j);
        }
    if (mat_rank(stacked_vec) < 2) return false;

    // The state must genuinely occupy all M rows and N columns.
    ExactMatrix wide(s.m_dim, 2 * s.n_dim);
    ExactMatrix tall(2 * s.m_dim, s.n_dim);
    for (int i = 0; i < s.m_dim; ++i)
        for (int j = 0; j < s.n_dim; ++j) {
            wide.at(i, j) = s.gamma1.at(i, j);
            wide.at(i, s.n_dim + j) = s.gamma2.at(i, j);
            tall.at(i, j) = s.gamma1.at(i, j);
            tall.at(s.m_dim + i, j) = s.gamma2.at(i, j);
        }
    return mat_rank(wide) == s.m_dim && mat_rank(tall) == s.n_dim;
}

bool ClassLabel::operator==(const ClassLabel& o) const {
    return m_dim == o.m_dim && n_dim == o.n_dim && null_rows == o.null_rows &&
           b_rank_excess == o.b_rank_excess && segre_shape == o.segre_shape &&
           col_min_indices == o.col_min_indices && row_min_indices == o.row_min_indices &&
           eigen == o.eigen && opaque_b_index == o.opaque_b_index;
}

ClassLabel class_label(const PencilState& s) {
    if (!is_true_tripartite(s)) throw NotTrueTripartite();
    PencilStructure ps = pencil_structure(s);
    ClassLabel label;
    label.m_dim = s.m_dim;
    label.n_dim = s.n_dim;
    label.col_min_indices = ps.col_min_indices;
    label.row_min_indices = ps.row_min_indices;
    label.null_rows = static_cast<int>(ps.row_min_indices.size());
    int excess = 0;
    for (int e : ps.col_min_indices) excess += e - 1;
    for (int e : ps.row_min_indices) excess += e - 1;
    label.b_rank_excess = excess;
    std::vector<Partition> parts;
    parts.reserve(ps.eigen_groups.size());
    for (const auto& g : ps.eigen_groups) parts.push_back(g.blocks);
    label.segre_shape = SegreSymbol(std::move(parts));
    label.eigen = nonlocal::canonical_eigen_descriptor(ps.eigen_groups);
    return label;
}

// ---------------------------------------------------------------------------
// Canonical block construction.

PencilBlock jordan_block(const ProjectivePoint& point, int size) {
    PencilBlock b;
    b.rows = b.cols = size;
    for (int i = 0; i < size; ++i) {
        if (point.is_infinity()) {
            b.g2_entries.emplace_back(i, i, GaussianRational(1));
            if (i + 1 < size) b.g1_entries.emplace_back(i, i + 1, GaussianRational(1));
        } else {
            b.g1_entries.emplace_back(i, i, GaussianRational(1));
            b.g2_entries.emplace_back(i, i, point.mu);
            if (i + 1 < size) b.g2_entries.emplace_back(i, i + 1, GaussianRational(1));
        }
    }
    return b;
}

PencilBlock col_index_block(int eps) {
    PencilBlock b;
    b.rows = eps;
    b.cols = eps + 1;
    for (int i = 0; i < eps; ++i) {
        b.g1_entries.emplace_back(i, i, GaussianRational(1));
        b.g2_entries.emplace_back(i, i + 1, GaussianRational(1));
    }
    return b;
}

PencilBlock row_index_block(int eta) {
    PencilBlock b;
    b.rows = eta + 1;
    b.cols = eta;
    for (int i = 0; i < eta; ++i) {
        b.g1_entries.emplace_back(i, i, GaussianRational(1));
        b.g2_entries.emplace_back(i + 1, i, GaussianRational(1));
    }
    return b;
}

PencilState assemble_blocks(const std::vector<PencilBlock>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows;
        cols += b.cols;
    }
    ExactMatrix g1(rows, cols), g2(rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (const auto& [i, j, v] : b.g1_entries) g1.at(ro + i, co + j) = v;
        for (const auto& [i, j, v] : b.g2_entries) g2.at(ro + i, co + j) = v;
        ro += b.rows;
        co += b.cols;
    }
    return {std::move(g1), std::move(g2)};
}

PencilState reconstruct(const PencilStructure& ps) {
    std::vector<PencilBlock> blocks;
    for (const auto& g : ps.eigen_groups)
        for (int size : g.blocks) blocks.push_back(jordan_block(g.point, size));
    for (int e : ps.col_min_indices) blocks.push_back(col_index_block(e));
    for (int e : ps.row_min_indices) blocks.push_back(row_index_block(e));
    return assemble_blocks(blocks);
}

} // namespace slocc::pencil
