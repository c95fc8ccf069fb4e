#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slocc2mn/pencil.hpp"

namespace slocc::catalog {

using pencil::ClassLabel;
using pencil::PencilState;

/// Every SLOCC class label of 2 x M x N, one per (i, j, Segre symbol, B-form)
/// cell, with the bipartite [(1...1)] label dropped when M == N. B-forms with
/// j > 0 are opaque indices 1..F(j,i,i+(N-M)). Pre: 2 <= M <= N <= 2M.
std::vector<ClassLabel> enumerate_labels(int m, int n);

/// Explicit representative state, when constructible: normal-form diagonal pairs
/// for simple symbols, Jordan cells otherwise, plus the initial staircase for
/// j = 0. Labels with j > 0 (opaque B-forms) return nullopt.
std::optional<PencilState> representative(const ClassLabel& label);

struct CountCheck {
    struct Cell {
        int i;
        int j;
        Integer count;
    };
    int m_dim = 0;
    int n_dim = 0;
    std::vector<Cell> cells;
    Integer enumerated = 0;
    Integer expected = 0; // omega_total
    bool ok() const { return enumerated == expected; }
    std::string str() const;
};

/// Asserts |enumerate_labels(M,N)| == omega_total(M,N), with per-cell counts.
CountCheck count_check(int m, int n);

} // namespace slocc::catalog
