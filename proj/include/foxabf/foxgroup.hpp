#pragma once

#include <cstdint>
#include <optional>

#include "foxabf/abelian_group.hpp"
#include "foxabf/braid.hpp"

namespace foxabf {

/// Default bound on m^strands for brute-force coloring enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Reduced Fox coloring group of a braid closure.
struct ColoringResult {
  AbelianGroup group;
  /// Order of the group when finite, 0 otherwise (the link determinant).
  BigInt determinant;
  IntMatrix reduced_matrix;
};

/// burau(b) at t = -1 minus the identity, with row and column `drop_index`
/// (1-based, default: last strand) deleted. Relations are rows.
IntMatrix reduced_relation_matrix_int(const BraidWord& b, std::optional<int> drop_index = std::nullopt);

ColoringResult coloring_group(const BraidWord& b, std::optional<int> drop_index = std::nullopt);

/// Number of Fox m-colorings of the closure, by enumerating the colors of
/// the top endpoints and pushing them through every crossing.
/// Throws DomainError when m < 2 or m^strands exceeds `cap`.
BigInt brute_force_coloring_count(const BraidWord& b, int m, std::uint64_t cap = kDefaultEnumerationCap);

/// m^(1 + free_rank) * prod gcd(d_i, m): the m-coloring count predicted by
/// Col = Z + Col^red.
BigInt coloring_count_from_group(const AbelianGroup& g, int m);

}  // namespace foxabf
