#include "slocc2mn/counting.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace slocc::counting {

bool partition_before(const Partition& a, const Partition& b) {
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa > sb;
    return a > b; // lexicographically descending on equal sums
}

SegreSymbol::SegreSymbol(std::vector<Partition> gs) : groups(std::move(gs)) {
    for (auto& g : groups) std::sort(g.begin(), g.end(), std::greater<int>());
    std::sort(groups.begin(), groups.end(), partition_before);
}

int SegreSymbol::total() const {
    int t = 0;
    for (const auto& g : groups) t += std::accumulate(g.begin(), g.end(), 0);
    return t;
}

bool SegreSymbol::operator<(const SegreSymbol& o) const {
    return std::lexicographical_compare(groups.begin(), groups.end(), o.groups.begin(), o.groups.end(),
                                        partition_before);
}

std::string SegreSymbol::str() const {
    std::ostringstream os;
    os << "[";
    for (const auto& g : groups) {
        os << "(";
        for (size_t k = 0; k < g.size(); ++k) os << (k ? " " : "") << g[k];
        os << ")";
    }
    os << "]";
    return os.str();
}

namespace {

std::mutex cache_mu;

// Coefficients of prod_{k=1}^{m} (1-x^k)^(-1) up to degree n: the classic
// bounded-part partition table, built by prefix addition.
std::vector<Integer> restricted_series(int n, int m) {
    std::vector<Integer> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int d = k; d <= n; ++d) f[d] += f[d - k];
    return f;
}

} // namespace

Integer partition_count(int n) {
    if (n < 0) return 0;
    return restricted_series(n, n)[n];
}

Integer segre_count(int n) {
    if (n < 0) return 0;
    // prod_{i=1}^{n} (1-x^i)^(-P(i)) truncated at degree n, one factor at a
    // time via (1-x^i)^(-p) = sum_k binom(p+k-1, k) x^{ik}.
    std::vector<Integer> s(n + 1);
    s[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Integer p = partition_count(i);
        std::vector<Integer> f(n / i + 1);
        f[0] = 1;
        for (int k = 1; k * i <= n; ++k) f[k] = f[k - 1] * (p + k - 1) / k;
        std::vector<Integer> out(n + 1);
        for (int d = 0; d <= n; ++d) {
            if (sgn(s[d]) == 0) continue;
            for (int k = 0; d + k * i <= n; ++k) out[d + k * i] += s[d] * f[k];
        }
        s = std::move(out);
    }
    return s[n];
}

namespace {

// All partitions of n with parts <= maxpart, each weakly decreasing.
void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// Multisets of partitions with total n: choose a weakly "descending" chain
// with respect to the canonical partition order.
void symbols_rec(int remaining, const std::vector<Partition>& pool, size_t min_idx,
                 std::vector<Partition>& cur, std::vector<SegreSymbol>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (size_t k = min_idx; k < pool.size(); ++k) {
        int w = std::accumulate(pool[k].begin(), pool[k].end(), 0);
        if (w > remaining) continue;
        cur.push_back(pool[k]);
        symbols_rec(remaining - w, pool, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SegreSymbol> segre_enumerate(int n) {
    if (n < 1) throw DomainError("segre_enumerate requires n >= 1");
    std::vector<Partition> pool;
    for (int w = 1; w <= n; ++w)
        for (auto& p : all_partitions(w)) pool.push_back(std::move(p));
    std::sort(pool.begin(), pool.end(), partition_before);
    std::vector<SegreSymbol> out;
    std::vector<Partition> cur;
    symbols_rec(n, pool, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Integer restricted_partition_count(int n, int m) {
    if (n < 0 || m < 0) return 0;
    if (n == 0) return 1;
    if (m == 0) return 0;
    return restricted_series(n, m)[n];
}

Integer f_recursive(int j, int r, int c) {
    if (j < 0) return 0;
    if (j == 0) return 1;
    if (r < 0 || c < 0) return 0;
    static std::map<std::tuple<int, int, int>, Integer> memo;
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = memo.find({j, r, c});
        if (it != memo.end()) return it->second;
    }
    Integer v;
    if (r == 0 || c == 0) {
        v = restricted_partition_count(j, r == 0 ? c : r); // f_j^(r) resp. f_j^(c)
    } else {
        v = restricted_partition_count(j, r) + restricted_partition_count(j, c);
        for (int m = 1; m <= r; ++m)
            for (int n = 1; n <= c; ++n) v += f_recursive(j - m - n, m, n);
    }
    std::lock_guard<std::mutex> lk(cache_mu);
    memo.emplace(std::make_tuple(j, r, c), v);
    return v;
}

Integer omega(int m, int n, int i, int j) {
    if (!(2 <= m && m <= n && n <= 2 * m)) throw DomainError("omega: need 2 <= M <= N <= 2M");
    if (i < 0 || i > (2 * m - n) / 3) throw DomainError("omega: i out of range");
    if (j < 0 || j > 2 * m - n - 3 * i) throw DomainError("omega: j out of range");
    return segre_count(2 * m - n - 3 * i - j) * f_recursive(j, i, i + (n - m));
}

Integer omega_total(int m, int n) {
    if (m < 2 || n < 2) throw DomainError("omega_total: dimensions must be >= 2");
    bool diagonal = m == n;
    if (m > n) std::swap(m, n);
    // A 2 x M x N state's third local rank is at most 2M, so every N > 2M
    // cell reduces to the N = 2M case.
    n = std::min(n, 2 * m);
    Integer total = 0;
    for (int i = 0; 3 * i <= 2 * m - n; ++i)
        for (int j = 0; j <= 2 * m - n - 3 * i; ++j) total += omega(m, n, i, j);
    if (diagonal) total -= 1;
    return total;
}

CountTable build_table(int max_m, int max_n) {
    if (max_m < 2 || max_n < 2) throw DomainError("build_table: dimensions must be >= 2");
    CountTable t;
    t.max_m = max_m;
    t.max_n = max_n;
    for (int m = 2; m <= max_m; ++m)
        for (int n = 2; n <= max_n; ++n) t.cells[{m, n}] = omega_total(m, n);
    return t;
}

std::string format_table(const CountTable& t, bool tsv) {
    std::ostringstream os;
    size_t width = 1;
    for (const auto& [k, v] : t.cells) width = std::max(width, v.get_str().size());
    for (int m = 2; m <= t.max_m; ++m) {
        for (int n = 2; n <= t.max_n; ++n) {
            std::string cell = t.cells.at({m, n}).get_str();
            if (tsv) {
                os << (n > 2 ? "\t" : "") << cell;
            } else {
                if (n > 2) os << " ";
                os << std::string(width - cell.size(), ' ') << cell;
            }
        }
        os << "\n";
    }
    return os.str();
}

} // namespace slocc::counting
