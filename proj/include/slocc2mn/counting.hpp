#pragma once

#include <map>
#include <string>
#include <vector>

#include "slocc2mn/rational.hpp"

namespace slocc::counting {

/// Integer partition: weakly decreasing list of positive parts.
using Partition = std::vector<int>;

/// Fixed total order on partitions: larger sum first, then lexicographically
/// descending. Shared by SegreSymbol storage and the eigenvalue-role
/// canonicalization, so "first" always means "biggest block structure".
bool partition_before(const Partition& a, const Partition& b);

/// Multiset of integer partitions, one per distinct eigenvalue, describing
/// Jordan block sizes with the eigenvalue values abstracted away.
struct SegreSymbol {
    std::vector<Partition> groups; // canonical: sorted with partition_before

    SegreSymbol() = default;
    explicit SegreSymbol(std::vector<Partition> gs);

    int total() const;
    bool operator==(const SegreSymbol& o) const { return groups == o.groups; }
    bool operator<(const SegreSymbol& o) const;

    /// e.g. "[(2)(11)]" for {[2],[1,1]}
    std::string str() const;
};

struct CountTable {
    int max_m = 0;
    int max_n = 0;
    std::map<std::pair<int, int>, Integer> cells;
};

/// P(n): number of integer partitions of n; P(0) = 1.
Integer partition_count(int n);

/// S(n): coefficient of x^n in prod_{i>=1} (1-x^i)^(-P(i)).
Integer segre_count(int n);

/// Every Segre symbol of total weight n, canonically ordered, no duplicates.
/// Brute-force enumeration, independent of segre_count. Pre: n >= 1.
std::vector<SegreSymbol> segre_enumerate(int n);

/// f_n^(m): partitions of n with every part <= m (coefficient of x^n in
/// prod_{k=1}^m (1-x^k)^(-1)); f_0^(m) = 1, f_n^(0) = 0 for n > 0.
Integer restricted_partition_count(int n, int m);

/// F(j,r,c) = F(j,r,0) + F(j,0,c) + sum_{m=1..r} sum_{n=1..c} F(j-m-n,m,n),
/// with F(j,r,0) = f_j^(r), F(0,r,c) = 1 and F(j<0,.,.) = 0. Memoized.
Integer f_recursive(int j, int r, int c);

/// omega_{M,N}(i,j) = S(2M-N-3i-j) * F(j, i, i+(N-M)).
Integer omega(int m, int n, int i, int j);

/// Omega_{M,N}: normalizes (M,N) to (min,max), clamps N to min(N,2M), then
/// sums omega over the admissible (i,j) grid and subtracts delta_{MN}.
Integer omega_total(int m, int n);

CountTable build_table(int max_m, int max_n);

/// Renders a CountTable as TSV or aligned text (one row per M).
std::string format_table(const CountTable& t, bool tsv);

} // namespace slocc::counting
