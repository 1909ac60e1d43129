#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "foxabf/bigint.hpp"
#include "foxabf/matrix.hpp"

namespace foxabf {

/// Finitely generated abelian group Z^free_rank + Z_d1 + ... + Z_dk in
/// invariant-factor form: d1 | d2 | ... | dk, every di >= 2. Torsion is kept
/// smallest-first.
struct AbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  /// Group presented by a diagonal matrix with the given entries plus
  /// `extra_rank` free generators. Entries may be arbitrary integers.
  static AbelianGroup from_diagonal(std::span<const BigInt> diagonal, std::size_t extra_rank = 0);

  bool is_trivial() const noexcept { return torsion.empty() && free_rank == 0; }
  bool is_finite() const noexcept { return free_rank == 0; }
  /// Order of the group, 0 when infinite.
  BigInt order() const;
  /// Invariants hold (chain, no factor below 2).
  bool is_canonical() const;

  /// "Z_4 + Z_4", "Z + Z_5", "0". Largest factor first.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of the presentation matrix (relations in rows) via Smith normal form.
AbelianGroup snf(const IntMatrix& relations);

/// Diagonal of the Smith normal form, length min(rows, cols), entries >= 0.
std::vector<BigInt> smith_diagonal(IntMatrix m);

}  // namespace foxabf
