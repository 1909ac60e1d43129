#include "foxabf/foxgroup.hpp"

#include <cstdlib>
#include <vector>

namespace foxabf {

namespace {

std::size_t resolve_drop(const BraidWord& b, std::optional<int> drop_index) {
  const int d = drop_index.value_or(b.strands());
  if (d < 1 || d > b.strands()) {
    throw DomainError("drop index " + std::to_string(d) + " out of range 1.." + std::to_string(b.strands()));
  }
  return static_cast<std::size_t>(d - 1);
}

}  // namespace

IntMatrix reduced_relation_matrix_int(const BraidWord& b, std::optional<int> drop_index) {
  const std::size_t drop = resolve_drop(b, drop_index);
  const auto n = static_cast<std::size_t>(b.strands());
  const IntMatrix relations = burau_at_minus_one(b) - IntMatrix::identity(n);
  return relations.without(drop, drop);
}

ColoringResult coloring_group(const BraidWord& b, std::optional<int> drop_index) {
  ColoringResult r;
  r.reduced_matrix = reduced_relation_matrix_int(b, drop_index);
  r.group = snf(r.reduced_matrix);
  r.determinant = r.group.order();
  return r;
}

BigInt brute_force_coloring_count(const BraidWord& b, int m, std::uint64_t cap) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  const auto s = static_cast<std::size_t>(b.strands());
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < s; ++k) {
    if (total > cap / static_cast<std::uint64_t>(m)) {
      throw DomainError("enumeration of " + std::to_string(m) + "^" + std::to_string(s) + " colorings exceeds cap " +
                        std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(m);
  }
  const long long mod = m;
  auto reduce = [mod](long long v) { return ((v % mod) + mod) % mod; };

  std::vector<long long> top(s, 0);
  std::vector<long long> arc(s);
  std::uint64_t count = 0;
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    arc = top;
    // Walk down the braid; at each crossing the overarc color b turns the
    // under-strand color a into 2b - a.
    for (int l : b.letters()) {
      const auto p = static_cast<std::size_t>(std::abs(l) - 1);
      const long long left = arc[p];
      const long long right = arc[p + 1];
      if (l > 0) {
        arc[p] = right;
        arc[p + 1] = reduce(2 * right - left);
      } else {
        arc[p] = reduce(2 * left - right);
        arc[p + 1] = left;
      }
    }
    if (arc == top) ++count;
    for (std::size_t k = 0; k < s; ++k) {
      if (++top[k] < mod) break;
      top[k] = 0;
    }
  }
  return BigInt(count);
}

BigInt coloring_count_from_group(const AbelianGroup& g, int m) {
  if (m < 2) throw DomainError("modulus must be at least 2");
  BigInt count = 1;
  for (std::size_t k = 0; k < 1 + g.free_rank; ++k) count *= m;
  for (const auto& d : g.torsion) count *= foxabf::gcd(d, BigInt(m));
  return count;
}

}  // namespace foxabf
