#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slocc2mn/pencil.hpp"

namespace slocc::nonlocal {

using pencil::EigenDescriptor;
using pencil::EigenGroup;
using pencil::ILOTriple;
using pencil::ProjectivePoint;

/// The nonlocal parameters lambda^(1..m-2) of a diagonal family with m
/// distinct nonzero eigenvalues; extra_h marks the N = m+1 case where the
/// additional H generator acts.
struct ParamVector {
    std::vector<GaussianRational> values;
    bool extra_h = false;

    ParamVector() = default;
    ParamVector(std::vector<GaussianRational> vals, bool h);

    /// Count of distinct nonzero eigenvalues of the source family.
    int m() const { return static_cast<int>(values.size()) + 2; }
    bool operator==(const ParamVector& o) const { return values == o.values && extra_h == o.extra_h; }
    bool operator!=(const ParamVector& o) const { return !(*this == o); }

    std::string str() const; // "[4/3, 3/2]"
};

ParamVector parse_param_vector(const std::string& text, bool extra_h);

/// Cross ratio (a,b;c,d) = (a-c)(b-d) / ((a-d)(b-c)), computed homogeneously
/// so infinity needs no special-casing. For distinct points the result is a
/// scalar outside {0, 1}. cross_ratio(0, l1, l2, l(k+2)) equals lambda^(k) =
/// (l1-l(k+2))/(l1-l2) * l2/l(k+2).
GaussianRational cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b,
                             const ProjectivePoint& c, const ProjectivePoint& d);

/// Reduction of the diagonal family E = I_N, J = diag(l1..lm, 0..0) to the
/// normal form diag{0,1,lambda^(1..m-2),1..1} / diag{1..1,0..0}: returns the
/// cross-ratio parameters plus the explicit ILO triple that realizes them.
/// Pre: 2 <= m < N, eigenvalues pairwise distinct and nonzero.
std::pair<ParamVector, ILOTriple> reduce_to_normal_form(const std::vector<GaussianRational>& eigs, int n_dim);

/// A_i: transposes entries i and i+1 (1-based, 1 <= i <= m-3).
ParamVector gen_swap(const ParamVector& v, int i);
/// F: (l1/l_last, ..., l_{m-3}/l_last, 1/l_last).
ParamVector gen_f(const ParamVector& v);
/// G: componentwise 1 - l.
ParamVector gen_g(const ParamVector& v);
/// H: componentwise 1/l; only valid when extra_h is set.
ParamVector gen_h(const ParamVector& v);

/// Breadth-first closure under all applicable generators, returned in the
/// canonical vector order. Size divides m! (or (m+1)! with extra_h).
std::vector<ParamVector> orbit(const ParamVector& v);

/// The orbit member minimal under lexicographic comparison with scalars
/// ordered by (re, im).
ParamVector canonical_params(const ParamVector& v);

/// Same m, same extra_h, same canonical representative.
bool slocc_equivalent_params(const ParamVector& a, const ParamVector& b);

struct RelationReport {
    struct Check {
        std::string name;
        bool passed;
    };
    std::vector<Check> checks;
    bool all_passed() const;
    std::string str() const;
};

/// Verifies the braid-group presentation of the generator assignment
/// (A_i = sigma_i, F = sigma_{m-2}, G = sigma_{m-1}, H = sigma_m) on `trials`
/// random valid ParamVectors: sigma_i^2 = 1, distant generators commute,
/// adjacent ones braid. Pre: m >= 3.
RelationReport verify_group_relations(int m, bool extra_h, int trials, unsigned long seed = 12345);

/// Canonical continuous invariant of an eigenvalue configuration: minimum
/// over ordered gauge triples (a,b,c) of the descriptor (partition roles,
/// sorted cross-ratio images of the remaining points). For the diagonal
/// families this equals the canonical_params orbit minimum; in general it
/// also pins which Jordan structure sits on which point. Returns nullopt
/// for fewer than 3 distinct eigenvalues.
std::optional<EigenDescriptor> canonical_eigen_descriptor(const std::vector<EigenGroup>& groups);

} // namespace slocc::nonlocal
