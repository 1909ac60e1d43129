#pragma once

// Independent oracles and generators shared by the test binaries. Nothing in
// here calls the routine it is meant to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "foxabf/braid.hpp"
#include "foxabf/laurent_poly.hpp"
#include "foxabf/matrix.hpp"

namespace testing_support {

using foxabf::BigInt;
using foxabf::BraidWord;
using foxabf::LaurentPoly;

using TermMap = std::map<int, BigInt>;

inline TermMap terms_of(const LaurentPoly& p) { return p.terms(); }

inline TermMap naive_product(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int exp_range = 4, int coeff_range = 9) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(-exp_range, exp_range);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  LaurentPoly p;
  for (int k = terms(rng); k > 0; --k) p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng) {
  LaurentPoly p;
  while (p.is_zero()) p = random_poly(rng);
  return p;
}

inline BraidWord random_braid(std::mt19937& rng, int min_strands, int max_strands, int max_length) {
  const int strands = std::uniform_int_distribution<int>(min_strands, max_strands)(rng);
  const int length = std::uniform_int_distribution<int>(0, max_length)(rng);
  std::vector<int> letters;
  if (strands > 1) {
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::bernoulli_distribution inverse(0.5);
    for (int k = 0; k < length; ++k) letters.push_back(inverse(rng) ? -gen(rng) : gen(rng));
  }
  return BraidWord(strands, std::move(letters));
}

inline BigInt iterative_fib(long n) {
  // F_{-n} = (-1)^{n+1} F_n, filled by walking the recurrence.
  BigInt a = 0, b = 1;
  for (long k = 0; k < std::labs(n); ++k) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  if (n < 0 && n % 2 == 0) return -a;
  return a;
}

// Leibniz formula over all permutations.
template <class R>
R permutation_determinant(const foxabf::Matrix<R>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// gcd of all k x k minors of an integer matrix (the k-th determinantal divisor).
inline BigInt determinantal_divisor(const foxabf::IntMatrix& m, std::size_t k) {
  BigInt g = 0;
  std::vector<bool> row_pick(m.rows(), false), col_pick(m.cols(), false);
  std::fill(row_pick.begin(), row_pick.begin() + static_cast<long>(k), true);
  do {
    std::fill(col_pick.begin(), col_pick.end(), false);
    std::fill(col_pick.begin(), col_pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (row_pick[i]) rows.push_back(i);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (col_pick[j]) cols.push_back(j);
      g = foxabf::gcd(g, permutation_determinant(m.select(rows, cols)));
    } while (std::prev_permutation(col_pick.begin(), col_pick.end()));
  } while (std::prev_permutation(row_pick.begin(), row_pick.end()));
  return g;
}

// Number of x in (Z_m)^n with A x = 0 mod m, by enumeration.
inline long count_kernel_mod(const foxabf::IntMatrix& a, int m) {
  const std::size_t n = a.cols();
  std::vector<int> x(n, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.rows() && ok; ++i) {
      BigInt s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      ok = s % m == 0;
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < n && ++x[k] == m) x[k++] = 0;
    if (k == n) break;
  }
  return count;
}

}  // namespace testing_support
