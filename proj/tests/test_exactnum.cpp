#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "slocc2mn/gaussian_int.hpp"
#include "slocc2mn/matrix.hpp"
#include "slocc2mn/polynomial.hpp"

using namespace slocc;

namespace {

GaussianRational gr(long num, long den = 1) { return {Rational(num, den)}; }

GaussianRational random_scalar(std::mt19937_64& rng, bool complex_part = true) {
    Rational re(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    re.canonicalize();
    Rational im(0);
    if (complex_part && rng() % 3 == 0) {
        im = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
        im.canonicalize();
    }
    return {re, im};
}

} // namespace

TEST_CASE("scalar parsing accepts the exact grammar") {
    CHECK(parse_scalar("0") == gr(0));
    CHECK(parse_scalar("1") == gr(1));
    CHECK(parse_scalar("i") == GaussianRational::i());
    CHECK(parse_scalar("-i") == -GaussianRational::i());
    CHECK(parse_scalar("3/4") == gr(3, 4));
    CHECK(parse_scalar("-3/4") == gr(-3, 4));
    CHECK(parse_scalar("2+3i") == GaussianRational(Rational(2), Rational(3)));
    CHECK(parse_scalar("1/2-3/4i") == GaussianRational(Rational(1, 2), Rational(-3, 4)));
    CHECK(parse_scalar("5i") == GaussianRational(Rational(0), Rational(5)));
    CHECK(parse_scalar("2/6") == gr(1, 3)); // reduced form
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("2+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("i+i"), ParseError);
}

TEST_CASE("scalar printing round-trips and stays canonical") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        GaussianRational x = random_scalar(rng);
        CHECK(parse_scalar(x.str()) == x);
    }
    CHECK(gr(4, 8).str() == "1/2");
    CHECK(GaussianRational(Rational(0), Rational(-1)).str() == "-i");
    CHECK(GaussianRational(Rational(1, 2), Rational(3, 4)).str() == "1/2+3/4i");
    CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4i");
}

TEST_CASE("arithmetic round-trips exactly") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 500; ++t) {
        GaussianRational x = random_scalar(rng);
        GaussianRational y = random_scalar(rng);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("gaussian square roots") {
    CHECK(*gaussian_sqrt(gr(9, 4)) == gr(3, 2));
    CHECK(*gaussian_sqrt(gr(-4)) == GaussianRational(Rational(0), Rational(2)));
    CHECK(*gaussian_sqrt(GaussianRational(Rational(0), Rational(2))) ==
          GaussianRational(Rational(1), Rational(1))); // (1+i)^2 = 2i
    CHECK(!gaussian_sqrt(gr(2)).has_value());
    CHECK(!gaussian_sqrt(gr(-3)).has_value());
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        GaussianRational x = random_scalar(rng);
        auto s = gaussian_sqrt(x * x);
        REQUIRE(s.has_value());
        CHECK(*s * *s == x * x);
    }
}

TEST_CASE("gaussian integer gcd and divisors") {
    CHECK(gi_gcd(GaussianInt(6), GaussianInt(4)) == GaussianInt(2));
    CHECK(gi_gcd(GaussianInt(Integer(1), Integer(1)), GaussianInt(2)) ==
          GaussianInt(Integer(1), Integer(1))); // (1+i) | 2
    auto divs = gi_divisors(GaussianInt(5));
    // 5 = (2+i)(2-i): divisors up to units are 1, 2+i, 2-i, 5
    CHECK(divs.size() == 4);
    for (const auto& d : divs) CHECK(gi_divides(d, GaussianInt(5)));
}

TEST_CASE("mat_rank examples") {
    CHECK(mat_rank(ExactMatrix::identity(5)) == 5);
    CHECK(mat_rank(ExactMatrix(3, 3)) == 0);
    CHECK(mat_rank(ExactMatrix::diagonal({gr(1), gr(1), gr(0), gr(0), gr(0)})) == 2);
}

TEST_CASE("mat_inverse examples") {
    CHECK(mat_inverse(ExactMatrix::identity(4)) == ExactMatrix::identity(4));
    CHECK(mat_inverse(ExactMatrix::diagonal({gr(2), gr(1, 3)})) ==
          ExactMatrix::diagonal({gr(1, 2), gr(3)}));
    ExactMatrix shear{{gr(1), gr(1)}, {gr(0), gr(1)}};
    ExactMatrix expected{{gr(1), gr(-1)}, {gr(0), gr(1)}};
    CHECK(mat_inverse(shear) == expected);
    CHECK_THROWS_AS(mat_inverse(ExactMatrix(2, 2)), SingularMatrix);
}

TEST_CASE("matrix properties on random inputs") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 4);
        ExactMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = random_scalar(rng);
        int r = mat_rank(a);
        if (r == n) {
            ExactMatrix inv = mat_inverse(a);
            CHECK(a * inv == ExactMatrix::identity(n));
            CHECK(inv * a == ExactMatrix::identity(n));
            CHECK(mat_inverse(inv) == a);
        } else {
            CHECK(mat_det(a).is_zero());
        }
        // rank(a*b) <= min(rank(a), rank(b))
        ExactMatrix b(n, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n + 1; ++j) b.at(i, j) = random_scalar(rng);
        CHECK(mat_rank(a * b) <= std::min(r, mat_rank(b)));
    }
}

TEST_CASE("determinant matches cofactor expansion on 3x3") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 60; ++t) {
        ExactMatrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.at(i, j) = random_scalar(rng);
        GaussianRational direct = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                                  a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                                  a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
        CHECK(mat_det(a) == direct);
    }
}

TEST_CASE("poly_roots_exact closed-form cases") {
    // x^2 - 3x + 2 = (x-1)(x-2)
    auto roots = poly_roots_exact(ExactPolynomial{gr(2), gr(-3), gr(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair(gr(1), 1));
    CHECK(roots[1] == std::pair(gr(2), 1));

    // x^2 + 1 = (x-i)(x+i)
    roots = poly_roots_exact(ExactPolynomial{gr(1), gr(0), gr(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == -GaussianRational::i());
    CHECK(roots[1].first == GaussianRational::i());

    // x^2 - 2 has no Gaussian-rational roots
    CHECK_THROWS_AS(poly_roots_exact(ExactPolynomial{gr(-2), gr(0), gr(1)}), IrreducibleRemainder);
    try {
        poly_roots_exact(ExactPolynomial{gr(-2), gr(0), gr(1)});
    } catch (const IrreducibleRemainder& e) {
        CHECK(e.degree == 2);
    }
}

TEST_CASE("find_roots splits off what it can") {
    // x^2 (x-3) (x^2-2): roots 0 (double), 3; remainder degree 2
    ExactPolynomial p = ExactPolynomial{gr(0), gr(0), gr(1)} * ExactPolynomial{gr(-3), gr(1)} *
                        ExactPolynomial{gr(-2), gr(0), gr(1)};
    auto res = find_roots(p);
    int mult_sum = 0;
    for (const auto& [root, mult] : res.roots) mult_sum += mult;
    CHECK(mult_sum == 3);
    CHECK(res.remainder.degree() == 2);
    CHECK(mult_sum + res.remainder.degree() == p.degree());
}

TEST_CASE("roots of random products are recovered with multiplicities") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 40; ++t) {
        ExactPolynomial p{gr(1 + static_cast<long>(rng() % 5))};
        std::vector<std::pair<GaussianRational, int>> planted;
        int deg = 0;
        while (deg < 5) {
            GaussianRational r = random_scalar(rng);
            int mult = 1 + static_cast<int>(rng() % 2);
            bool dup = false;
            for (auto& [pr, pm] : planted) dup = dup || pr == r;
            if (dup) continue;
            planted.emplace_back(r, mult);
            for (int k = 0; k < mult; ++k) p = p * ExactPolynomial::linear_root(r);
            deg += mult;
        }
        auto roots = poly_roots_exact(p);
        REQUIRE(roots.size() == planted.size());
        for (const auto& [r, m] : planted) {
            bool found = false;
            for (const auto& [rr, mm] : roots) found = found || (rr == r && mm == m);
            CHECK(found);
        }
        for (const auto& [r, m] : roots) CHECK(p.eval(r).is_zero());
    }
}

TEST_CASE("mixed rational and irrational factors split correctly") {
    // (x - 123/457) (x - (5+7i)/3) (x^2 - 2) (x^2 + x + 1): the last two
    // factors have no Gaussian-rational roots (disc -3 has no sqrt in Q(i))
    GaussianRational r1(Rational(123, 457));
    GaussianRational r2(Rational(5, 3), Rational(7, 3));
    ExactPolynomial p = ExactPolynomial::linear_root(r1) * ExactPolynomial::linear_root(r2) *
                        ExactPolynomial{gr(-2), gr(0), gr(1)} * ExactPolynomial{gr(1), gr(1), gr(1)};
    auto res = find_roots(p);
    REQUIRE(res.roots.size() == 2);
    CHECK(res.remainder.degree() == 4);
    bool saw1 = false, saw2 = false;
    for (const auto& [r, m] : res.roots) {
        if (r == r1 && m == 1) saw1 = true;
        if (r == r2 && m == 1) saw2 = true;
    }
    CHECK(saw1);
    CHECK(saw2);
    CHECK_THROWS_AS(poly_roots_exact(p), IrreducibleRemainder);
}

TEST_CASE("roots at 1 and -1 are not lost to the divisibility filters") {
    // p(1) = 0 and p(-1) = 0 disable the corresponding filters
    ExactPolynomial p = ExactPolynomial::linear_root(gr(1)) * ExactPolynomial::linear_root(gr(-1)) *
                        ExactPolynomial::linear_root(gr(7, 3)) * ExactPolynomial::linear_root(gr(5));
    auto roots = poly_roots_exact(p);
    REQUIRE(roots.size() == 4);
    for (const auto& [r, m] : roots) CHECK(m == 1);
}

TEST_CASE("polynomial division and gcd") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        std::vector<GaussianRational> ca(1 + rng() % 5), cb(1 + rng() % 4);
        for (auto& c : ca) c = random_scalar(rng);
        for (auto& c : cb) c = random_scalar(rng);
        ExactPolynomial a(ca), b(cb);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        ExactPolynomial g = poly_gcd(a, b);
        if (g.is_zero()) continue; // both inputs were zero
        if (!a.is_zero()) CHECK(a.divmod(g).second.is_zero());
        CHECK(b.divmod(g).second.is_zero());
    }
}
