#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "slocc2mn/counting.hpp"

using namespace slocc;
using namespace slocc::counting;

namespace {

// Independent brute-force oracle: counts partitions of n with parts <= m by
// direct recursive enumeration, no generating functions.
long brute_restricted(int n, int m) {
    if (n == 0) return 1;
    if (n < 0 || m <= 0) return 0;
    long total = 0;
    for (int first = std::min(n, m); first >= 1; --first) total += brute_restricted(n - first, first);
    return total;
}

} // namespace

TEST_CASE("partition_count examples and oracle") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(1) == 1);
    CHECK(partition_count(4) == 5); // 4, 31, 22, 211, 1111
    for (int n = 0; n <= 30; ++n) CHECK(partition_count(n) == brute_restricted(n, n));
}

TEST_CASE("segre_count examples") {
    CHECK(segre_count(0) == 1);
    CHECK(segre_count(3) == 6);
    CHECK(segre_count(4) == 14);
}

TEST_CASE("segre_enumerate is the oracle for segre_count") {
    auto one = segre_enumerate(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].groups == std::vector<Partition>{{1}});

    auto two = segre_enumerate(2);
    CHECK(two.size() == 3); // [2], [11], [(1)(1)]

    for (int n = 1; n <= 8; ++n) {
        auto symbols = segre_enumerate(n);
        CHECK(segre_count(n) == static_cast<long>(symbols.size()));
        for (const auto& s : symbols) CHECK(s.total() == n);
        for (size_t a = 0; a < symbols.size(); ++a)
            for (size_t b = a + 1; b < symbols.size(); ++b) CHECK(!(symbols[a] == symbols[b]));
    }
    CHECK_THROWS_AS(segre_enumerate(0), DomainError);
}

TEST_CASE("segre symbol canonical storage") {
    SegreSymbol s({{1, 2}, {1}, {3}});
    CHECK(s.groups[0] == Partition{3});
    CHECK(s.groups[1] == Partition{2, 1}); // sorted descending inside the group
    CHECK(s.groups[2] == Partition{1});
    CHECK(s.total() == 7);
    CHECK(SegreSymbol({{1}, {2, 1}, {3}}) == SegreSymbol({{3}, {1, 2}, {1}}));
}

TEST_CASE("restricted_partition_count examples and oracle") {
    CHECK(restricted_partition_count(0, 5) == 1);
    CHECK(restricted_partition_count(3, 2) == 2); // 2+1, 1+1+1
    CHECK(restricted_partition_count(1, 1) == 1);
    CHECK(restricted_partition_count(3, 0) == 0);
    for (int n = 0; n <= 30; ++n)
        for (int m = 0; m <= 10; ++m) CHECK(restricted_partition_count(n, m) == brute_restricted(n, m));
}

TEST_CASE("f_recursive base cases and hand values") {
    CHECK(f_recursive(0, 3, 7) == 1);
    CHECK(f_recursive(-1, 2, 3) == 0);
    CHECK(f_recursive(2, 1, 1) == 3); // f_2^(1) + f_2^(1) + F(0,1,1)
    CHECK(f_recursive(1, 1, 1) == 2);
    CHECK(f_recursive(1, 1, 2) == 2);
    CHECK(f_recursive(2, 1, 2) == 4);
    for (int r = 0; r <= 10; ++r)
        for (int c = 0; c <= 10; ++c) {
            CHECK(f_recursive(0, r, c) == 1);
            for (int j = 1; j <= 10; ++j) CHECK(f_recursive(-j, r, c) == 0);
        }
}

TEST_CASE("f_recursive against the convolution oracle") {
    // Independent route: F(j,r,c) = sum_{a+b=j} f_a^(r) * f_b^(c), evaluated
    // with the brute-force partition counter.
    for (int j = 0; j <= 8; ++j)
        for (int r = 0; r <= 5; ++r)
            for (int c = 0; c <= 5; ++c) {
                long conv = 0;
                for (int a = 0; a <= j; ++a) conv += brute_restricted(a, r) * brute_restricted(j - a, c);
                CHECK(f_recursive(j, r, c) == conv);
            }
}

TEST_CASE("omega cells") {
    CHECK(omega(3, 3, 1, 0) == 1); // S(0) * F(0,1,1)
    CHECK(omega(4, 4, 1, 1) == 2); // S(0) * F(1,1,1)
    CHECK(omega(6, 7, 0, 0) == 27); // S(5) * 1
    CHECK_THROWS_AS(omega(3, 3, 5, 0), DomainError);
    CHECK_THROWS_AS(omega(3, 3, 0, 9), DomainError);
    CHECK_THROWS_AS(omega(3, 7, 0, 0), DomainError); // N > 2M
}

TEST_CASE("omega_total reference values") {
    CHECK(omega_total(2, 2) == 2);
    CHECK(omega_total(6, 7) == 61);
    CHECK(omega_total(10, 10) == 1309);
    CHECK(omega_total(5, 4) == 12); // symmetric entry of (4,5)
    CHECK(omega_total(2, 7) == 1);  // via the N -> min(N, 2M) clamp
    CHECK_THROWS_AS(omega_total(1, 5), DomainError);
}

TEST_CASE("omega_total symmetry") {
    for (int m = 2; m <= 9; ++m)
        for (int n = m; n <= 9; ++n) CHECK(omega_total(m, n) == omega_total(n, m));
}

TEST_CASE("build_table and formatting") {
    auto t = build_table(3, 4);
    CHECK(t.cells.at({2, 2}) == 2);
    CHECK(t.cells.at({3, 4}) == 5);
    CHECK(t.cells.at({2, 4}) == 1);
    auto t2 = build_table(3, 3);
    CHECK(format_table(t2, true) == "2\t2\n2\t6\n");
    CHECK(format_table(t2, false) == "2 2\n2 6\n");
}
