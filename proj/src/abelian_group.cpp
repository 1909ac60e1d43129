#include "foxabf/abelian_group.hpp"

#include <algorithm>
#include <utility>

namespace foxabf {

AbelianGroup AbelianGroup::from_diagonal(std::span<const BigInt> diagonal, std::size_t extra_rank) {
  AbelianGroup g;
  g.free_rank = extra_rank;
  std::vector<BigInt> factors;
  for (const auto& d : diagonal) {
    BigInt v = foxabf::abs(d);
    if (v == 0) {
      ++g.free_rank;
    } else if (v != 1) {
      factors.push_back(std::move(v));
    }
  }
  // Z_a + Z_b = Z_gcd + Z_lcm; one sweep over all pairs yields a divisor chain.
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const BigInt d = foxabf::gcd(factors[i], factors[j]);
      factors[j] = factors[i] / d * factors[j];
      factors[i] = d;
    }
  }
  for (auto& f : factors) {
    if (f != 1) g.torsion.push_back(std::move(f));
  }
  return g;
}

BigInt AbelianGroup::order() const {
  if (free_rank > 0) return 0;
  BigInt n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

bool AbelianGroup::is_canonical() const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2) return false;
    if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0) return false;
  }
  return true;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (auto it = torsion.rbegin(); it != torsion.rend(); ++it) append("Z_" + it->str());
  return out;
}

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;
  diag.reserve(n);

  // Moves the entry of least nonzero magnitude among the candidates to (t, t).
  auto place_pivot = [&](std::size_t t, bool whole_block) {
    bool found = false;
    BigInt best;
    std::size_t bi = t, bj = t;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (m(i, j) == 0) return;
      BigInt v = foxabf::abs(m(i, j));
      if (!found || v < best) {
        found = true;
        best = std::move(v);
        bi = i;
        bj = j;
      }
    };
    if (whole_block) {
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) consider(i, j);
    } else {
      for (std::size_t i = t; i < rows; ++i) consider(i, t);
      for (std::size_t j = t + 1; j < cols; ++j) consider(t, j);
    }
    if (!found) return false;
    m.swap_rows(t, bi);
    m.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < n; ++t) {
    if (!place_pivot(t, true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        place_pivot(t, false);
        continue;
      }
      // Pivot must divide the remaining block; otherwise fold an offending row in.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender == rows) break;
      m.add_row_multiple(t, offender, BigInt(1));
    }
    diag.push_back(foxabf::abs(m(t, t)));
  }
  diag.resize(n, BigInt(0));
  return diag;
}

AbelianGroup snf(const IntMatrix& relations) {
  const auto diag = smith_diagonal(relations);
  const std::size_t extra = relations.cols() > relations.rows() ? relations.cols() - relations.rows() : 0;
  return AbelianGroup::from_diagonal(diag, extra);
}

}  // namespace foxabf
