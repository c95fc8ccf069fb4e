#include "slocc2mn/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slocc2mn/counting.hpp"
#include "slocc2mn/nonlocal.hpp"

namespace slocc::catalog {

using counting::Partition;
using counting::SegreSymbol;
using pencil::EigenGroup;
using pencil::PencilBlock;
using pencil::ProjectivePoint;

namespace {

// The diagonal-family shape: one group (1,1,...,1) of weight >= 2 and m >= 2
// simple groups. These get the literal normal-form pair with sample
// parameters 2, 3, 4, ...; everything else gets Jordan cells.
struct FamilyShape {
    int m = 0; // simple groups
    int t = 0; // weight of the degenerate group
};

std::optional<FamilyShape> diagonal_family_shape(const SegreSymbol& sym) {
    FamilyShape fs;
    for (const auto& g : sym.groups) {
        if (g.size() == 1 && g[0] == 1) {
            ++fs.m;
        } else if (std::all_of(g.begin(), g.end(), [](int x) { return x == 1; }) && fs.t == 0) {
            fs.t = static_cast<int>(g.size());
        } else {
            return std::nullopt;
        }
    }
    if (fs.m >= 2 && fs.t >= 2) return fs;
    return std::nullopt;
}

// Sample eigenvalue assignment realized by the representative; shared with
// the label's canonical descriptor so the two stay consistent by construction.
std::vector<EigenGroup> sample_groups(const SegreSymbol& sym) {
    std::vector<EigenGroup> groups;
    if (auto fs = diagonal_family_shape(sym)) {
        groups.push_back({ProjectivePoint::infinity(), {1}});
        groups.push_back({ProjectivePoint::value(GaussianRational(1)), {1}});
        for (int k = 1; k <= fs->m - 2; ++k)
            groups.push_back({ProjectivePoint::value(GaussianRational(1, k + 1)), {1}});
        groups.push_back({ProjectivePoint::value(GaussianRational(0)), Partition(fs->t, 1)});
        return groups;
    }
    long value = 1;
    for (const auto& g : sym.groups) groups.push_back({ProjectivePoint::value(GaussianRational(value++)), g});
    return groups;
}

// Regular-part blocks realizing the sample assignment.
std::vector<PencilBlock> regular_blocks(const SegreSymbol& sym) {
    if (auto fs = diagonal_family_shape(sym)) {
        // diag{0, 1, lambda^(1..m-2), 1...1} over diag{1...1, 0...0} with
        // lambda^(k) = k + 1.
        const int d = fs->m + fs->t;
        PencilBlock b;
        b.rows = b.cols = d;
        for (int s = 1; s < fs->m; ++s) b.g1_entries.emplace_back(s, s, GaussianRational(s));
        for (int s = fs->m; s < d; ++s) b.g1_entries.emplace_back(s, s, GaussianRational(1));
        for (int s = 0; s < fs->m; ++s) b.g2_entries.emplace_back(s, s, GaussianRational(1));
        return {b};
    }
    std::vector<PencilBlock> blocks;
    for (const auto& g : sample_groups(sym))
        for (int size : g.blocks) blocks.push_back(pencil::jordan_block(g.point, size));
    return blocks;
}

} // namespace

std::vector<ClassLabel> enumerate_labels(int m, int n) {
    if (!(2 <= m && m <= n && n <= 2 * m)) throw DomainError("enumerate_labels: need 2 <= M <= N <= 2M");
    std::vector<ClassLabel> out;
    for (int i = 0; 3 * i <= 2 * m - n; ++i) {
        for (int j = 0; j <= 2 * m - n - 3 * i; ++j) {
            const int dj = 2 * m - n - 3 * i - j;
            std::vector<SegreSymbol> symbols =
                dj == 0 ? std::vector<SegreSymbol>{SegreSymbol{}} : counting::segre_enumerate(dj);
            Integer forms = counting::f_recursive(j, i, i + (n - m));
            if (forms == 0) continue;
            if (!forms.fits_slong_p()) throw DomainError("catalog too large to enumerate");
            long nforms = forms.get_si();
            for (const auto& sym : symbols) {
                // the bipartite case: M == N, no singular part, [(1...1)]
                if (m == n && i == 0 && j == 0 && sym.groups.size() == 1 &&
                    static_cast<int>(sym.groups[0].size()) == n &&
                    std::all_of(sym.groups[0].begin(), sym.groups[0].end(), [](int x) { return x == 1; }))
                    continue;
                for (long b = 1; b <= nforms; ++b) {
                    ClassLabel label;
                    label.m_dim = m;
                    label.n_dim = n;
                    label.null_rows = i;
                    label.b_rank_excess = j;
                    label.segre_shape = sym;
                    if (j == 0) {
                        label.col_min_indices.assign(i + (n - m), 1);
                        label.row_min_indices.assign(i, 1);
                        label.eigen = nonlocal::canonical_eigen_descriptor(sample_groups(sym));
                    } else {
                        label.opaque_b_index = static_cast<int>(b);
                    }
                    out.push_back(std::move(label));
                }
            }
        }
    }
    return out;
}

std::optional<PencilState> representative(const ClassLabel& label) {
    if (label.opaque_b_index) return std::nullopt; // j > 0: construction deferred
    std::vector<PencilBlock> blocks = regular_blocks(label.segre_shape);
    for (int e : label.col_min_indices) blocks.push_back(pencil::col_index_block(e));
    for (int e : label.row_min_indices) blocks.push_back(pencil::row_index_block(e));
    return pencil::assemble_blocks(blocks);
}

CountCheck count_check(int m, int n) {
    CountCheck check;
    check.m_dim = m;
    check.n_dim = n;
    for (int i = 0; 3 * i <= 2 * m - n; ++i)
        for (int j = 0; j <= 2 * m - n - 3 * i; ++j) {
            Integer cell = counting::omega(m, n, i, j);
            if (m == n && i == 0 && j == 0) cell -= 1; // bipartite label dropped
            check.cells.push_back({i, j, cell});
            check.enumerated += cell;
        }
    check.expected = counting::omega_total(m, n);
    // cross-check against the actual enumeration
    Integer listed = static_cast<long>(enumerate_labels(m, n).size());
    if (listed != check.enumerated) check.enumerated = -1;
    return check;
}

std::string CountCheck::str() const {
    std::ostringstream os;
    os << "2 x " << m_dim << " x " << n_dim << ": ";
    for (const auto& c : cells) os << "w(" << c.i << "," << c.j << ")=" << c.count.get_str() << " ";
    os << "total " << enumerated.get_str() << " expected " << expected.get_str()
       << (ok() ? " [ok]" : " [MISMATCH]");
    return os.str();
}

} // namespace slocc::catalog
