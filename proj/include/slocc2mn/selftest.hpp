#pragma once

#include <random>
#include <string>
#include <vector>

#include "slocc2mn/nonlocal.hpp"
#include "slocc2mn/pencil.hpp"

namespace slocc::selftest {

struct PropertyResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct Options {
    unsigned long seed = 20130531;
    int trials = 100;   // random ILO transforms per representative
    int max_dim = 6;    // invariance suite covers 2 <= M <= N <= max_dim
};

/// Seeded random scalar with numerator in [-9, 9] and denominator in [1, 9].
GaussianRational random_rational(std::mt19937_64& rng);

/// Random invertible matrix with small rational entries (rejection sampling).
ExactMatrix random_invertible(int n, std::mt19937_64& rng);

/// Random ILO triple for a 2 x M x N state.
pencil::ILOTriple random_ilo(int m, int n, std::mt19937_64& rng);

/// Published reference values for Omega_{M,N}, M, N in 2..10.
extern const long kPublishedTable[9][9];

// Individual properties; each is deterministic for fixed options.
PropertyResult check_table_published();
PropertyResult check_growth_ratio();
PropertyResult check_segre_oracle(int max_n = 8);
PropertyResult check_f_base_cases(int bound = 10);
PropertyResult check_f_symmetry_report(); // informational: reported, never required
PropertyResult check_group_relations(const Options& opt);
PropertyResult check_single_param_orbit(const Options& opt);
PropertyResult check_cross_ratio_invariance(const Options& opt);
PropertyResult check_reduction_correctness(const Options& opt);
PropertyResult check_mobius_covariance(const Options& opt);
PropertyResult check_ilo_invariance(const Options& opt);
PropertyResult check_nonlocality(const Options& opt);
PropertyResult check_irreducible_detection();

/// The full deterministic property suite, in a fixed order.
std::vector<PropertyResult> run_all(const Options& opt);

} // namespace slocc::selftest
