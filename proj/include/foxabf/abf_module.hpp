#pragma once

#include <optional>
#include <utility>

#include "foxabf/braid.hpp"
#include "foxabf/matrix.hpp"

namespace foxabf {

/// Presentation of a reduced Alexander-Burau-Fox module over Z[t^+-1].
struct ModulePresentation {
  PolyMatrix matrix;  ///< relations in rows
  /// Unit-normalized gcd of the maximal minors; 0 when they all vanish.
  LaurentPoly alexander;
  /// (g, h) with module Z[t^+-1]/(g) + Z[t^+-1]/(h), g | h. Wheel family only.
  std::optional<std::pair<LaurentPoly, LaurentPoly>> ideal_gens;
};

/// burau(b) - Id with row and column `drop_index` (1-based, default last)
/// removed.
PolyMatrix reduced_abf_matrix(const BraidWord& b, std::optional<int> drop_index = std::nullopt);

/// Unit-normalized gcd of all maximal minors; 1 for an empty matrix.
LaurentPoly maximal_minor_gcd(const PolyMatrix& m);

LaurentPoly alexander_polynomial(const BraidWord& b);

/// Presentation and Alexander polynomial of a general braid closure.
ModulePresentation abf_module(const BraidWord& b);

/// g_n = S_{k-1} for n = 2k and S_{k-1} + S_k for n = 2k + 1, at
/// z = 1 - t - t^-1. Defined for n >= 0.
LaurentPoly wheel_g(int n);

/// [[P^a_n, P^c_n], [Q^a_n, Q^c_n]] from the endpoint recursion
///   P_{n+1} = -t P_n - t^-1 Q_n - a,
///   Q_{n+1} = (1 - t) P_{n+1} + t P_n + a - c,
/// started at P_0 = Q_0 = 0 with the middle top arc set to zero.
PolyMatrix wheel_abf_matrix_recursive(int n);

/// The same matrix from Chebyshev closed forms:
///   [[-g_n (g_{n+1} + t^-1 g_{n-1}),  t^-1 g_n g_{n-1}],
///    [ t g_n g_{n+1},                -g_n (g_{n+1} + t g_{n-1})]].
PolyMatrix wheel_abf_matrix_closed(int n);

struct EuclideanReduction {
  /// (g_n, det A'_n * g_n), unit-normalized.
  std::pair<LaurentPoly, LaurentPoly> ideal_gens;
  /// det of A'_n = A_n / (-g_n), exactly (not normalized).
  LaurentPoly det_aprime;
  PolyMatrix aprime;
  /// diag(1, y) reached by column operations and one row operation.
  PolyMatrix reduced;
  /// Number of division steps in the Euclidean descent (carried out in Z[z]).
  int euclid_steps = 0;
};

/// Divides A_n by -g_n and reduces the first row to (1, 0) by column
/// operations. Throws ConsistencyError if an exact step fails.
EuclideanReduction wheel_euclidean_reduction(int n);

ModulePresentation wheel_module(int n);

}  // namespace foxabf
