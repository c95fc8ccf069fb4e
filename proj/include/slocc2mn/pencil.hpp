#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "slocc2mn/counting.hpp"
#include "slocc2mn/matrix.hpp"
#include "slocc2mn/polynomial.hpp"

namespace slocc::pencil {

using counting::Partition;
using counting::SegreSymbol;

/// Point (mu : nu) on the projective line, canonically scaled so nu = 1 for
/// finite points and (1 : 0) for infinity. Pencil eigenvalues live here, so
/// a rank-deficient Gamma1 needs no special-casing.
struct ProjectivePoint {
    GaussianRational mu;
    GaussianRational nu;

    ProjectivePoint() : mu(0), nu(1) {}
    ProjectivePoint(GaussianRational m, GaussianRational n);

    static ProjectivePoint value(const GaussianRational& v) { return {v, GaussianRational(1)}; }
    static ProjectivePoint infinity() { return {GaussianRational(1), GaussianRational(0)}; }

    bool is_infinity() const { return nu.is_zero(); }
    bool operator==(const ProjectivePoint& o) const { return mu == o.mu && nu == o.nu; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    std::string str() const { return is_infinity() ? "inf" : mu.str(); }
};

/// Total order for deterministic storage: finite points by (re, im), infinity last.
bool point_less(const ProjectivePoint& a, const ProjectivePoint& b);

/// A pure 2 x M x N state as the pair of slices (Gamma1, Gamma2); the physics
/// lives in the pencil x*Gamma1 + y*Gamma2.
struct PencilState {
    int m_dim;
    int n_dim;
    ExactMatrix gamma1;
    ExactMatrix gamma2;

    PencilState(ExactMatrix g1, ExactMatrix g2);
};

/// Invertible local operators (T, P, Q) acting on qubit, M-level and N-level
/// parties. Invertibility is checked at construction.
struct ILOTriple {
    ExactMatrix t; // 2x2
    ExactMatrix p; // MxM
    ExactMatrix q; // NxN

    ILOTriple(ExactMatrix t_, ExactMatrix p_, ExactMatrix q_);
    static ILOTriple identity(int m, int n);
    ILOTriple inverse() const;
};

/// Gamma'_k = sum_j t_{kj} * P * Gamma_j * Q.
PencilState apply_ilo(const PencilState& s, const ILOTriple& op);

/// Induced fractional-linear action of T on pencil eigenvalues:
/// (mu', nu') = (t22*mu + t21*nu, t12*mu + t11*nu). For T of the reduction
/// form (t21 = 0) this is lambda' = t22*lambda / (t11 + t12*lambda).
ProjectivePoint mobius_apply(const ExactMatrix& t, const ProjectivePoint& pt);

struct EigenGroup {
    ProjectivePoint point;
    Partition blocks; // Jordan block sizes, descending
};

/// Kronecker-type invariants of the pencil: minimal indices of the singular
/// part plus the Jordan structure over every projective eigenvalue.
struct PencilStructure {
    int m_dim = 0;
    int n_dim = 0;
    int normal_rank = 0;
    std::vector<int> col_min_indices; // ascending
    std::vector<int> row_min_indices; // ascending
    std::vector<EigenGroup> eigen_groups; // sorted by point

    int jordan_weight() const; // sum of all block sizes
};

/// Exact structure extraction: normal rank and regular-part determinant via
/// Smith invariant factors over Q(i)[x], eigenvalues via poly_roots_exact,
/// Jordan partitions via Weyr-style rank chains, minimal indices via
/// polynomial-kernel rank chains. Throws IrreducibleRemainder when an
/// eigenvalue is not Gaussian-rational.
PencilStructure pencil_structure(const PencilState& s);

/// False when the qubit party factorizes (Gamma1, Gamma2 linearly dependent —
/// this includes the bipartite [(1...1)] case), or when the state does not
/// genuinely occupy all M rows / N columns.
bool is_true_tripartite(const PencilState& s);

/// Canonical continuous eigenvalue data: partitions of the three gauge points
/// (mapped to infinity, 0, 1) followed by the carriers' partitions, plus the
/// carriers' cross-ratio images, minimized over all gauge choices. Complete
/// invariant of the configuration modulo Moebius maps.
struct EigenDescriptor {
    std::vector<Partition> roles;          // size k: gauge a, b, c then carriers
    std::vector<GaussianRational> values;  // size k-3, each not in {0, 1}

    bool operator==(const EigenDescriptor& o) const { return roles == o.roles && values == o.values; }
};

/// Discrete-plus-continuous SLOCC class label. Two states are SLOCC
/// equivalent iff their labels compare equal.
struct ClassLabel {
    int m_dim = 0;
    int n_dim = 0;
    int null_rows = 0;     // i: zero rows of the canonical Gamma1 = #row minimal indices
    int b_rank_excess = 0; // j = r_B - i - (i + N - M)
    SegreSymbol segre_shape;
    std::vector<int> col_min_indices;
    std::vector<int> row_min_indices;
    std::optional<EigenDescriptor> eigen; // present when >= 3 distinct eigenvalues
    std::optional<int> opaque_b_index;    // enumerated-only labels with j > 0

    bool operator==(const ClassLabel& o) const;
    bool operator!=(const ClassLabel& o) const { return !(*this == o); }
};

/// Assembles the label from pencil_structure. Pre: is_true_tripartite(s).
ClassLabel class_label(const PencilState& s);

/// Canonical pair realizing a structure: Jordan cells per eigenvalue group
/// plus L_eps / L_eta^T staircase blocks for the minimal indices.
PencilState reconstruct(const PencilStructure& ps);

/// Pencil building blocks, shared with the catalog. Entries are kept sparse
/// so degenerate blocks (eps = 0 has no rows, eta = 0 no columns) stay legal.
struct PencilBlock {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, GaussianRational>> g1_entries;
    std::vector<std::tuple<int, int, GaussianRational>> g2_entries;
};
PencilBlock jordan_block(const ProjectivePoint& point, int size);
PencilBlock col_index_block(int eps);  // eps x (eps+1)
PencilBlock row_index_block(int eta);  // (eta+1) x eta
PencilState assemble_blocks(const std::vector<PencilBlock>& blocks);

} // namespace slocc::pencil
