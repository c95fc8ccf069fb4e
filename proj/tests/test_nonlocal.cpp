#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slocc2mn/nonlocal.hpp"
#include "slocc2mn/selftest.hpp"

using namespace slocc;
using namespace slocc::nonlocal;

namespace {

GaussianRational gr(long num, long den = 1) { return {Rational(num, den)}; }

ProjectivePoint pt(long num, long den = 1) { return ProjectivePoint::value(gr(num, den)); }

ParamVector pv(std::vector<GaussianRational> vals, bool h = false) { return {std::move(vals), h}; }

} // namespace

TEST_CASE("cross_ratio examples") {
    CHECK(cross_ratio(pt(0), pt(1), pt(2), pt(3)) == gr(4, 3));
    CHECK_THROWS_AS(cross_ratio(pt(0), pt(1), pt(2), pt(2)), DegenerateConfiguration);
    // the normalization matches lambda^(k) = (l1-l_{k+2})/(l1-l2) * l2/l_{k+2}
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
        GaussianRational l1 = selftest::random_rational(rng);
        GaussianRational l2 = selftest::random_rational(rng);
        GaussianRational l3 = selftest::random_rational(rng);
        if (l1.is_zero() || l2.is_zero() || l3.is_zero()) continue;
        if (l1 == l2 || l1 == l3 || l2 == l3) continue;
        GaussianRational expected = (l1 - l3) / (l1 - l2) * (l2 / l3);
        CHECK(cross_ratio(pt(0), ProjectivePoint::value(l1), ProjectivePoint::value(l2),
                          ProjectivePoint::value(l3)) == expected);
    }
}

TEST_CASE("cross_ratio handles the point at infinity") {
    // (inf, 0; 1, x) = x
    GaussianRational x = gr(5, 7);
    CHECK(cross_ratio(ProjectivePoint::infinity(), pt(0), pt(1), ProjectivePoint::value(x)) == x);
}

TEST_CASE("cross_ratio is invariant under fractional-linear maps") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        std::vector<ProjectivePoint> pts;
        while (pts.size() < 4) {
            ProjectivePoint cand = (rng() % 9 == 0) ? ProjectivePoint::infinity()
                                                    : ProjectivePoint::value(selftest::random_rational(rng));
            bool dup = false;
            for (auto& p : pts) dup = dup || p == cand;
            if (!dup) pts.push_back(cand);
        }
        ExactMatrix t2 = selftest::random_invertible(2, rng);
        CHECK(cross_ratio(pts[0], pts[1], pts[2], pts[3]) ==
              cross_ratio(pencil::mobius_apply(t2, pts[0]), pencil::mobius_apply(t2, pts[1]),
                          pencil::mobius_apply(t2, pts[2]), pencil::mobius_apply(t2, pts[3])));
    }
}

TEST_CASE("reduce_to_normal_form examples") {
    auto [p0, op0] = reduce_to_normal_form({gr(2), gr(3)}, 5);
    CHECK(p0.values.empty());
    CHECK(!p0.extra_h);

    auto [p1, op1] = reduce_to_normal_form({gr(1), gr(2), gr(3)}, 5);
    CHECK(p1.values == std::vector<GaussianRational>{gr(4, 3)});
    CHECK(!p1.extra_h);

    auto [p2, op2] = reduce_to_normal_form({gr(1), gr(2), gr(3), gr(4)}, 5);
    CHECK(p2.values == std::vector<GaussianRational>{gr(4, 3), gr(3, 2)});
    CHECK(p2.extra_h); // N = m + 1
}

TEST_CASE("reduce_to_normal_form rejects bad families") {
    CHECK_THROWS_AS(reduce_to_normal_form({gr(2)}, 4), InvalidFamily);
    CHECK_THROWS_AS(reduce_to_normal_form({gr(2), gr(2)}, 4), InvalidFamily);
    CHECK_THROWS_AS(reduce_to_normal_form({gr(2), gr(0)}, 4), InvalidFamily);
    CHECK_THROWS_AS(reduce_to_normal_form({gr(1), gr(2), gr(3)}, 3), InvalidFamily); // m = N
}

TEST_CASE("generator examples") {
    CHECK(gen_swap(pv({gr(4, 3), gr(3, 2)}), 1).values ==
          std::vector<GaussianRational>{gr(3, 2), gr(4, 3)});
    CHECK(gen_swap(pv({gr(2), gr(3), gr(5)}), 2).values ==
          std::vector<GaussianRational>{gr(2), gr(5), gr(3)});
    CHECK_THROWS_AS(gen_swap(pv({gr(2), gr(3)}), 2), IndexOutOfRange);

    CHECK(gen_f(pv({gr(2)})).values == std::vector<GaussianRational>{gr(1, 2)});
    CHECK(gen_f(pv({gr(4, 3), gr(3, 2)})).values == std::vector<GaussianRational>{gr(8, 9), gr(2, 3)});

    CHECK(gen_g(pv({gr(2)})).values == std::vector<GaussianRational>{gr(-1)});
    CHECK(gen_g(pv({gr(4, 3), gr(3, 2)})).values ==
          std::vector<GaussianRational>{gr(-1, 3), gr(-1, 2)});

    CHECK(gen_h(pv({gr(2), gr(3)}, true)).values == std::vector<GaussianRational>{gr(1, 2), gr(1, 3)});
    CHECK_THROWS_AS(gen_h(pv({gr(4, 3)}, false)), HNotApplicable);
}

TEST_CASE("generators are involutions and preserve validity") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 100; ++t) {
        int len = 1 + static_cast<int>(rng() % 4);
        std::vector<GaussianRational> vals;
        while (static_cast<int>(vals.size()) < len) {
            GaussianRational v = selftest::random_rational(rng);
            if (v.is_zero() || v.is_one()) continue;
            bool dup = false;
            for (auto& x : vals) dup = dup || x == v;
            if (!dup) vals.push_back(v);
        }
        ParamVector v(vals, true);
        CHECK(gen_f(gen_f(v)) == v);
        CHECK(gen_g(gen_g(v)) == v);
        CHECK(gen_h(gen_h(v)) == v);
        if (len >= 2) CHECK(gen_swap(gen_swap(v, 1), 1) == v);
    }
}

TEST_CASE("orbit examples") {
    auto orb3 = orbit(pv({gr(3)}));
    CHECK(orb3.size() == 6);
    std::vector<GaussianRational> expected = {gr(3), gr(1, 3), gr(-2), gr(-1, 2), gr(3, 2), gr(2, 3)};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& o : orb3) found = found || o.values[0] == e;
        CHECK(found);
    }

    auto orb2 = orbit(pv({gr(2)}));
    CHECK(orb2.size() == 3); // the harmonic degenerate orbit {2, 1/2, -1}

    auto orb_empty = orbit(pv({}));
    CHECK(orb_empty.size() == 1);
    CHECK(orb_empty[0].values.empty());
}

TEST_CASE("orbit size divides m! (or (m+1)! with H) and generators fix the orbit setwise") {
    std::mt19937_64 rng(34);
    auto factorial = [](int k) {
        long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int t = 0; t < 12; ++t) {
        int len = 1 + static_cast<int>(rng() % 3);
        bool h = rng() % 2 == 0;
        std::vector<GaussianRational> vals;
        while (static_cast<int>(vals.size()) < len) {
            GaussianRational v = selftest::random_rational(rng);
            if (v.is_zero() || v.is_one()) continue;
            bool dup = false;
            for (auto& x : vals) dup = dup || x == v;
            if (!dup) vals.push_back(v);
        }
        ParamVector v(vals, h);
        auto orb = orbit(v);
        long orbit_size = static_cast<long>(orb.size());
        long group = factorial(v.m() + (h ? 1 : 0));
        CHECK(group % orbit_size == 0);
        // setwise closure under every generator
        auto member = [&](const ParamVector& x) {
            for (const auto& o : orb)
                if (o == x) return true;
            return false;
        };
        for (const auto& o : orb) {
            CHECK(member(gen_f(o)));
            CHECK(member(gen_g(o)));
            if (h) CHECK(member(gen_h(o)));
            for (int i = 1; i <= len - 1; ++i) CHECK(member(gen_swap(o, i)));
        }
    }
}

TEST_CASE("canonical_params examples") {
    CHECK(canonical_params(pv({gr(2)})).values == std::vector<GaussianRational>{gr(-1)});
    CHECK(canonical_params(pv({gr(3)})).values == std::vector<GaussianRational>{gr(-2)});
    std::mt19937_64 rng(35);
    for (int t = 0; t < 50; ++t) {
        GaussianRational v = selftest::random_rational(rng);
        if (v.is_zero() || v.is_one()) continue;
        ParamVector x = pv({v});
        CHECK(canonical_params(gen_g(x)) == canonical_params(x));
        CHECK(canonical_params(gen_f(x)) == canonical_params(x));
    }
}

TEST_CASE("slocc_equivalent_params") {
    CHECK(slocc_equivalent_params(pv({gr(2)}), pv({gr(1, 2)})));
    CHECK(!slocc_equivalent_params(pv({gr(2)}), pv({gr(3)})));
    CHECK(slocc_equivalent_params(pv({gr(7, 5)}), pv({gr(7, 5)})));
    // extra_h must match
    CHECK(!slocc_equivalent_params(pv({gr(2)}, true), pv({gr(2)}, false)));
}

TEST_CASE("group relations for m = 3: FGF = GFG = lambda/(lambda-1)") {
    auto report = verify_group_relations(3, false, 50);
    CHECK(report.all_passed());
    std::mt19937_64 rng(36);
    for (int t = 0; t < 50; ++t) {
        GaussianRational l = selftest::random_rational(rng);
        if (l.is_zero() || l.is_one()) continue;
        ParamVector v = pv({l});
        GaussianRational fgf = gen_f(gen_g(gen_f(v))).values[0];
        CHECK(fgf == l / (l - gr(1)));
        CHECK(gen_g(gen_f(gen_g(v))).values[0] == fgf);
    }
}

TEST_CASE("group relations hold for m up to 7") {
    for (int m = 3; m <= 7; ++m) {
        CHECK(verify_group_relations(m, false, 25).all_passed());
        CHECK(verify_group_relations(m, true, 25).all_passed());
    }
    CHECK_THROWS_AS(verify_group_relations(2, false, 5), DomainError);
}

TEST_CASE("param vector parsing") {
    ParamVector v = parse_param_vector("[4/3, 3/2]", false);
    CHECK(v.values == std::vector<GaussianRational>{gr(4, 3), gr(3, 2)});
    CHECK(parse_param_vector("[]", false).values.empty());
    CHECK(parse_param_vector("[2+3i]", false).values ==
          std::vector<GaussianRational>{GaussianRational(Rational(2), Rational(3))});
    CHECK_THROWS_AS(parse_param_vector("4/3", false), ParseError);
    CHECK_THROWS_AS(parse_param_vector("[1]", false), DomainError);    // forbidden value
    CHECK_THROWS_AS(parse_param_vector("[2, 2]", false), DomainError); // duplicate
    CHECK(v.str() == "[4/3, 3/2]");
}

TEST_CASE("canonical descriptor matches canonical_params on diagonal families") {
    // points {l1..lm} with [1] plus the degenerate 0 group, as produced by
    // the reduction of E = I, J = diag(l, 0..)
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
        int m = 3 + static_cast<int>(rng() % 3); // 3..5
        int n = m + 2;                           // degenerate group of size >= 2
        std::vector<GaussianRational> eigs;
        while (static_cast<int>(eigs.size()) < m) {
            GaussianRational e = selftest::random_rational(rng);
            if (e.is_zero()) continue;
            bool dup = false;
            for (auto& x : eigs) dup = dup || x == e;
            if (!dup) eigs.push_back(e);
        }
        std::vector<pencil::EigenGroup> groups;
        for (const auto& e : eigs) groups.push_back({ProjectivePoint::value(e), {1}});
        groups.push_back({ProjectivePoint::value(gr(0)), counting::Partition(n - m, 1)});

        auto desc = canonical_eigen_descriptor(groups);
        REQUIRE(desc.has_value());
        auto [params, op] = reduce_to_normal_form(eigs, n);
        CHECK(desc->values == canonical_params(params).values);
    }
}
