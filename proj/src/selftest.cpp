#include "slocc2mn/selftest.hpp"

#include <sstream>

#include "slocc2mn/catalog.hpp"
#include "slocc2mn/counting.hpp"

namespace slocc::selftest {

using nonlocal::ParamVector;
using pencil::ClassLabel;
using pencil::ILOTriple;
using pencil::PencilState;
using pencil::ProjectivePoint;

const long kPublishedTable[9][9] = {
    // N =  2    3    4    5    6    7    8    9   10
    {2, 2, 1, 1, 1, 1, 1, 1, 1},          // M = 2
    {2, 6, 5, 2, 1, 1, 1, 1, 1},          // M = 3
    {1, 5, 16, 12, 6, 2, 1, 1, 1},        // M = 4
    {1, 2, 12, 34, 28, 14, 6, 2, 1},      // M = 5
    {1, 1, 6, 28, 77, 61, 34, 15, 6},     // M = 6
    {1, 1, 2, 14, 61, 157, 133, 74, 36},  // M = 7
    {1, 1, 1, 6, 34, 133, 328, 277, 165}, // M = 8
    {1, 1, 1, 2, 15, 74, 277, 655, 572},  // M = 9
    {1, 1, 1, 1, 6, 36, 165, 572, 1309},  // M = 10
};

GaussianRational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    Rational q(num, den);
    q.canonicalize();
    return {q};
}

ExactMatrix random_invertible(int n, std::mt19937_64& rng) {
    while (true) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
        if (mat_rank(m) == n) return m;
    }
}

ILOTriple random_ilo(int m, int n, std::mt19937_64& rng) {
    return {random_invertible(2, rng), random_invertible(m, rng), random_invertible(n, rng)};
}

namespace {

PropertyResult pass(const std::string& name, const std::string& detail = "") {
    return {name, true, detail};
}
PropertyResult fail(const std::string& name, const std::string& detail) { return {name, false, detail}; }

GaussianRational random_complex_rational(std::mt19937_64& rng) {
    GaussianRational z = random_rational(rng);
    if (rng() % 3 == 0) z.im = random_rational(rng).re;
    return z;
}

} // namespace

PropertyResult check_table_published() {
    const std::string name = "table matches the published 2..10 values";
    auto table = counting::build_table(10, 10);
    for (int m = 2; m <= 10; ++m)
        for (int n = 2; n <= 10; ++n) {
            Integer got = table.cells.at({m, n});
            if (got != kPublishedTable[m - 2][n - 2])
                return fail(name, "Omega(" + std::to_string(m) + "," + std::to_string(n) + ") = " +
                                      got.get_str() + ", published " +
                                      std::to_string(kPublishedTable[m - 2][n - 2]));
        }
    return pass(name, "81 cells exact");
}

PropertyResult check_growth_ratio() {
    const std::string name = "diagonal growth ratio in [1.9, 2.1] for N in {9, 10}";
    for (int n = 9; n <= 10; ++n) {
        Rational ratio(counting::omega_total(n, n), counting::omega_total(n - 1, n - 1));
        ratio.canonicalize();
        if (cmp(ratio, Rational(19, 10)) < 0 || cmp(ratio, Rational(21, 10)) > 0)
            return fail(name, "ratio at N=" + std::to_string(n) + " is " + ratio.get_str());
    }
    return pass(name);
}

PropertyResult check_segre_oracle(int max_n) {
    const std::string name = "segre_count equals brute-force enumeration";
    for (int n = 1; n <= max_n; ++n) {
        Integer counted = counting::segre_count(n);
        size_t listed = counting::segre_enumerate(n).size();
        if (counted != static_cast<long>(listed))
            return fail(name, "n=" + std::to_string(n) + ": S(n)=" + counted.get_str() +
                                  " but enumeration lists " + std::to_string(listed));
    }
    return pass(name, "n = 1.." + std::to_string(max_n));
}

PropertyResult check_f_base_cases(int bound) {
    const std::string name = "F(0,r,c) = 1 and F(-j,r,c) = 0";
    for (int r = 0; r <= bound; ++r)
        for (int c = 0; c <= bound; ++c) {
            if (counting::f_recursive(0, r, c) != 1)
                return fail(name, "F(0," + std::to_string(r) + "," + std::to_string(c) + ") != 1");
            for (int j = 1; j <= bound; ++j)
                if (counting::f_recursive(-j, r, c) != 0)
                    return fail(name, "F(-" + std::to_string(j) + ",...) != 0");
        }
    return pass(name);
}

PropertyResult check_f_symmetry_report() {
    const std::string name = "F(j,r,c) == F(j,c,r) (reported, not required)";
    int checked = 0, equal = 0;
    for (int j = 0; j <= 10; ++j)
        for (int r = 0; r <= 5; ++r)
            for (int c = 0; c <= 5; ++c) {
                ++checked;
                if (counting::f_recursive(j, r, c) == counting::f_recursive(j, c, r)) ++equal;
            }
    std::ostringstream os;
    os << equal << "/" << checked << " symmetric";
    return pass(name, os.str());
}

PropertyResult check_group_relations(const Options& opt) {
    const std::string name = "generator relations (m = 3..7, with and without H)";
    for (int m = 3; m <= 7; ++m)
        for (bool h : {false, true}) {
            auto report = nonlocal::verify_group_relations(m, h, std::min(opt.trials, 50), opt.seed);
            if (!report.all_passed())
                return fail(name, "m=" + std::to_string(m) + (h ? " with H\n" : "\n") + report.str());
        }
    return pass(name);
}

PropertyResult check_single_param_orbit(const Options& opt) {
    const std::string name = "generic single-parameter orbit is the 6-element anharmonic set";
    std::mt19937_64 rng(opt.seed);
    GaussianRational l(3);
    ParamVector v({l}, false);
    auto orb = nonlocal::orbit(v);
    std::vector<GaussianRational> expected = {l,
                                              l.inverse(),
                                              GaussianRational(1) - l,
                                              (GaussianRational(1) - l).inverse(),
                                              (l - GaussianRational(1)) / l,
                                              l / (l - GaussianRational(1))};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& o : orb) found = found || o.values[0] == e;
        if (!found) return fail(name, "missing orbit value " + e.str());
    }
    if (orb.size() != 6) return fail(name, "orbit size " + std::to_string(orb.size()));
    // FG(lambda) = 1/(1-lambda), exactly, on random parameters
    for (int t = 0; t < opt.trials; ++t) {
        GaussianRational x = random_complex_rational(rng);
        if (x.is_zero() || x.is_one()) continue;
        ParamVector w({x}, false);
        GaussianRational fg = nonlocal::gen_f(nonlocal::gen_g(w)).values[0];
        if (fg != (GaussianRational(1) - x).inverse())
            return fail(name, "FG(" + x.str() + ") != 1/(1-lambda)");
    }
    return pass(name);
}

PropertyResult check_cross_ratio_invariance(const Options& opt) {
    const std::string name = "cross ratio invariant under fractional-linear maps";
    std::mt19937_64 rng(opt.seed + 1);
    for (int t = 0; t < opt.trials; ++t) {
        // four distinct points, occasionally complex or infinite
        std::vector<ProjectivePoint> pts;
        while (pts.size() < 4) {
            ProjectivePoint cand = (rng() % 8 == 0) ? ProjectivePoint::infinity()
                                                    : ProjectivePoint::value(random_complex_rational(rng));
            bool dup = false;
            for (const auto& p : pts) dup = dup || p == cand;
            if (!dup) pts.push_back(cand);
        }
        ExactMatrix t2(2, 2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) t2.at(i, j) = random_complex_rational(rng);
        } while (mat_rank(t2) != 2);
        GaussianRational before = nonlocal::cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        GaussianRational after =
            nonlocal::cross_ratio(pencil::mobius_apply(t2, pts[0]), pencil::mobius_apply(t2, pts[1]),
                                  pencil::mobius_apply(t2, pts[2]), pencil::mobius_apply(t2, pts[3]));
        if (before != after) return fail(name, "trial " + std::to_string(t));
    }
    return pass(name);
}

PropertyResult check_reduction_correctness(const Options& opt) {
    const std::string name = "reduction reproduces the normal-form pattern entry-for-entry";
    std::mt19937_64 rng(opt.seed + 2);
    int cases = 0;
    while (cases < opt.trials) {
        int m = 2 + static_cast<int>(rng() % 5);     // 2..6
        int n = m + 1 + static_cast<int>(rng() % 3); // m+1..m+3
        std::vector<GaussianRational> eigs;
        while (static_cast<int>(eigs.size()) < m) {
            GaussianRational e = random_complex_rational(rng);
            if (e.is_zero()) continue;
            bool dup = false;
            for (const auto& x : eigs) dup = dup || x == e;
            if (!dup) eigs.push_back(e);
        }
        auto [params, op] = nonlocal::reduce_to_normal_form(eigs, n);
        // the source family: E = I_N, J = diag(eigs, 0...)
        std::vector<GaussianRational> jdiag(n, GaussianRational(0));
        for (int k = 0; k < m; ++k) jdiag[k] = eigs[k];
        PencilState family(ExactMatrix::identity(n), ExactMatrix::diagonal(jdiag));
        PencilState reduced = apply_ilo(family, op);

        std::vector<GaussianRational> e_diag(n, GaussianRational(1));
        e_diag[0] = GaussianRational(0);
        for (int k = 0; k < m - 2; ++k) e_diag[2 + k] = params.values[k];
        std::vector<GaussianRational> j_diag(n, GaussianRational(0));
        for (int k = 0; k < m; ++k) j_diag[k] = GaussianRational(1);
        if (reduced.gamma1 != ExactMatrix::diagonal(e_diag) ||
            reduced.gamma2 != ExactMatrix::diagonal(j_diag))
            return fail(name, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        // closed-form cross-ratio formula
        for (int k = 0; k < m - 2; ++k) {
            GaussianRational expect = (eigs[0] - eigs[k + 2]) / (eigs[0] - eigs[1]) * eigs[1] / eigs[k + 2];
            if (params.values[k] != expect) return fail(name, "parameter formula mismatch");
        }
        if (params.extra_h != (n == m + 1)) return fail(name, "extra_h flag wrong");
        // parameter-count bound: m-2 values, and at most N-3 for m <= N-1
        if (static_cast<int>(params.values.size()) != m - 2) return fail(name, "length != m-2");
        if (static_cast<int>(params.values.size()) > n - 3) return fail(name, "more than N-3 parameters");
        ++cases;
    }
    return pass(name, std::to_string(opt.trials) + " seeded families");
}

PropertyResult check_mobius_covariance(const Options& opt) {
    const std::string name = "pencil eigenvalues transform by the induced Moebius map";
    std::mt19937_64 rng(opt.seed + 3);
    // a state with known, varied spectrum: two Jordan cells plus simple points
    auto blocks = std::vector<pencil::PencilBlock>{
        pencil::jordan_block(ProjectivePoint::value(GaussianRational(2)), 2),
        pencil::jordan_block(ProjectivePoint::value(GaussianRational(-1, 3)), 1),
        pencil::jordan_block(ProjectivePoint::infinity(), 1),
        pencil::jordan_block(ProjectivePoint::value(GaussianRational(0)), 1),
    };
    PencilState s = pencil::assemble_blocks(blocks);
    auto base = pencil_structure(s);
    for (int t = 0; t < opt.trials; ++t) {
        ExactMatrix t2 = random_invertible(2, rng);
        ILOTriple op(t2, ExactMatrix::identity(s.m_dim), ExactMatrix::identity(s.n_dim));
        auto moved = pencil_structure(apply_ilo(s, op));
        if (moved.eigen_groups.size() != base.eigen_groups.size())
            return fail(name, "eigenvalue count changed");
        for (const auto& g : base.eigen_groups) {
            ProjectivePoint image = pencil::mobius_apply(t2, g.point);
            bool found = false;
            for (const auto& h : moved.eigen_groups)
                if (h.point == image && h.blocks == g.blocks) found = true;
            if (!found) return fail(name, "image of " + g.point.str() + " not found with same blocks");
        }
    }
    return pass(name);
}

PropertyResult check_ilo_invariance(const Options& opt) {
    const std::string name = "class labels invariant under random ILOs; catalog labels distinct";
    std::mt19937_64 rng(opt.seed + 4);
    int reps_tested = 0;
    for (int m = 2; m <= opt.max_dim; ++m) {
        for (int n = m; n <= std::min(opt.max_dim, 2 * m); ++n) {
            auto labels = catalog::enumerate_labels(m, n);
            for (size_t a = 0; a < labels.size(); ++a)
                for (size_t b = a + 1; b < labels.size(); ++b)
                    if (labels[a] == labels[b])
                        return fail(name, "duplicate labels at (" + std::to_string(m) + "," +
                                              std::to_string(n) + ")");
            for (const auto& label : labels) {
                auto rep = catalog::representative(label);
                if (!rep) continue;
                if (!is_true_tripartite(*rep)) return fail(name, "representative not true-tripartite");
                ClassLabel direct = class_label(*rep);
                if (direct != label)
                    return fail(name, "representative classifies to a different label at (" +
                                          std::to_string(m) + "," + std::to_string(n) + ")");
                ++reps_tested;
                for (int t = 0; t < opt.trials; ++t) {
                    ILOTriple op = random_ilo(m, n, rng);
                    ClassLabel moved = class_label(apply_ilo(*rep, op));
                    if (moved != label)
                        return fail(name, "label changed under ILO at (" + std::to_string(m) + "," +
                                              std::to_string(n) + ")");
                }
            }
        }
    }
    return pass(name, std::to_string(reps_tested) + " representatives x " + std::to_string(opt.trials) +
                          " ILOs");
}

PropertyResult check_nonlocality(const Options& opt) {
    const std::string name = "distinct parameter orbits give distinct labels; params survive ILOs";
    std::mt19937_64 rng(opt.seed + 5);
    // lambda = 2 and lambda = 3 sit in different orbits of the same family
    auto make_family_state = [](const GaussianRational& lambda) {
        return PencilState(
            ExactMatrix::diagonal({GaussianRational(0), GaussianRational(1), lambda, GaussianRational(1),
                                   GaussianRational(1)}),
            ExactMatrix::diagonal({GaussianRational(1), GaussianRational(1), GaussianRational(1),
                                   GaussianRational(0), GaussianRational(0)}));
    };
    PencilState two = make_family_state(GaussianRational(2));
    PencilState three = make_family_state(GaussianRational(3));
    ClassLabel label_two = class_label(two);
    ClassLabel label_three = class_label(three);
    if (label_two == label_three) return fail(name, "orbits {2,1/2,-1} and of 3 collided");
    if (!label_two.eigen || label_two.eigen->values != std::vector<GaussianRational>{GaussianRational(-1)})
        return fail(name, "canonical params of the lambda=2 class are not [-1]");
    for (int t = 0; t < opt.trials; ++t) {
        ILOTriple op = random_ilo(5, 5, rng);
        ClassLabel moved = class_label(apply_ilo(two, op));
        if (!(moved == label_two)) return fail(name, "canonical params changed under ILO");
    }
    return pass(name);
}

PropertyResult check_irreducible_detection() {
    const std::string name = "non-Gaussian-rational eigenvalues are rejected, not approximated";
    PencilState s(ExactMatrix::identity(2),
                  ExactMatrix{{GaussianRational(0), GaussianRational(1)},
                              {GaussianRational(2), GaussianRational(0)}});
    try {
        pencil_structure(s);
    } catch (const IrreducibleRemainder& e) {
        return e.degree == 2 ? pass(name) : fail(name, "degree " + std::to_string(e.degree));
    }
    return fail(name, "x^2 - 2 spectrum was not rejected");
}

std::vector<PropertyResult> run_all(const Options& opt) {
    return {
        check_table_published(),
        check_growth_ratio(),
        check_segre_oracle(),
        check_f_base_cases(),
        check_f_symmetry_report(),
        check_group_relations(opt),
        check_single_param_orbit(opt),
        check_cross_ratio_invariance(opt),
        check_reduction_correctness(opt),
        check_mobius_covariance(opt),
        check_ilo_invariance(opt),
        check_nonlocality(opt),
        check_irreducible_detection(),
    };
}

} // namespace slocc::selftest
