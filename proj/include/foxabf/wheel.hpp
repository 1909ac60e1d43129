#pragma once

#include <cstdint>
#include <vector>

#include "foxabf/abelian_group.hpp"
#include "foxabf/matrix.hpp"

namespace foxabf {

/// Reduced Fox coloring group of the wheel closure from Fibonacci numbers:
/// Z_{L_n} + Z_{L_n} for odd n, Z_{F_n} + Z_{5 F_n} for even n.
AbelianGroup fox_closed_form(int n);

/// [[F_{2n}, F_{2n-1} - 1], [F_{2n+1} - 1, F_{2n}]]
IntMatrix fibonacci_relation_matrix(int n);

/// Replays the column reduction of fibonacci_relation_matrix(n):
/// alternately col1 -= col2 and col2 -= col1, ending at the triangular
/// matrix with diagonal L_n (odd n), or at [[2F_n, -F_n], [F_n, 2F_n]]
/// followed by col1 += 2 col2 (even n). Every matrix of the trace is returned.
std::vector<IntMatrix> reduction_trace(int n);

/// [[S_{n-1}(3), 1 - S_n(3)], [S_{n-2}(3) + 1, -S_{n-1}(3)]]
IntMatrix goeritz_matrix(int n);

/// Whether goeritz_matrix(n) and fibonacci_relation_matrix(n) present the
/// same abelian group.
bool goeritz_equivalence_check(int n);

struct BruteForceCheck {
  int modulus = 0;
  BigInt count;
  BigInt predicted;
};

struct WheelReport {
  int n = 0;
  AbelianGroup closed_form_group;
  AbelianGroup burau_group;
  /// Burau route with the middle strand dropped.
  AbelianGroup burau_group_middle;
  /// |g(-1)|, |h(-1)| for the module generators (g, h).
  std::vector<BigInt> abf_gens_at_minus_one;
  std::vector<BruteForceCheck> brute_force_checks;
  bool goeritz_ok = false;
  bool all_consistent = false;
};

/// Runs every route for the wheel W_n and compares them.
WheelReport cross_verify(int n, const std::vector<int>& brute_force_moduli,
                         std::uint64_t enumeration_cap = 10'000'000);

}  // namespace foxabf
