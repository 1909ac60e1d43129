#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foxabf/bigint.hpp"
#include "foxabf/error.hpp"
#include "foxabf/laurent_poly.hpp"

namespace foxabf {

/// Polynomial in the Chebyshev variable z.
using ChebPoly = LaurentPoly;

/// Fibonacci number F_n for any integer n, with F_{-k} = (-1)^{k+1} F_k.
BigInt fib(long n);

/// Lucas number L_n = F_{n-1} + F_{n+1}.
BigInt lucas(long n);

/// Second-kind Chebyshev polynomial S_n(z): S_{-1} = 0, S_0 = 1,
/// S_n = z S_{n-1} - S_{n-2}, run in both directions.
ChebPoly cheb_S(int n);

/// First-kind T_n(z) with T_0 = 2, T_1 = z, so that T_n(p + 1/p) = p^n + p^-n.
ChebPoly cheb_T(int n);

/// S_n(x0) over the integers.
BigInt cheb_S_at(int n, const BigInt& x0);

/// S_n(1 - t - t^-1) as a Laurent polynomial in t.
LaurentPoly cheb_S_subst(int n);

/// Values of a Chebyshev-type recurrence f_n = z f_{n-1} - f_{n-2} for all
/// indices in [lo, hi], memoized for one computation.
template <class R>
class ChebTable {
 public:
  /// The table of S_n evaluated at `z`.
  static ChebTable second_kind(const R& z, int lo, int hi) { return ChebTable(z, R(0), R(1), lo, hi); }
  /// The table of T_n evaluated at `z`.
  static ChebTable first_kind(const R& z, int lo, int hi) { return ChebTable(z, z, R(2), lo, hi); }

  const R& operator[](int n) const {
    if (n < lo_ || n > hi_) throw DomainError("Chebyshev index " + std::to_string(n) + " outside table");
    return values_[static_cast<std::size_t>(n - lo_)];
  }
  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }

 private:
  // f_{-1} = at_minus_one, f_0 = at_zero
  ChebTable(const R& z, const R& at_minus_one, const R& at_zero, int lo, int hi)
      : lo_(std::min(lo, -1)), hi_(std::max(hi, 0)) {
    values_.resize(static_cast<std::size_t>(hi_ - lo_ + 1));
    auto slot = [this](int n) -> R& { return values_[static_cast<std::size_t>(n - lo_)]; };
    slot(-1) = at_minus_one;
    slot(0) = at_zero;
    for (int n = 1; n <= hi_; ++n) slot(n) = z * slot(n - 1) - slot(n - 2);
    for (int n = -2; n >= lo_; --n) slot(n) = z * slot(n + 1) - slot(n + 2);
  }

  int lo_;
  int hi_;
  std::vector<R> values_;
};

/// Closed form for P_n = z P_{n-1} - P_{n-2} + c_n:
///   P_n = S_{n-1} P_1 - S_{n-2} P_0 + sum_{j=0}^{n-2} S_j c_{n-j},
/// with S_j evaluated at z. `c` holds c_2, ..., c_n (size n - 1 when n >= 2).
template <class R>
R solve_chebyshev_recurrence(const R& p0, const R& p1, std::span<const R> c, const R& z, int n) {
  if (n < 0) throw DomainError("recurrence index must be non-negative");
  if (n == 0) return p0;
  if (n == 1) return p1;
  if (c.size() != static_cast<std::size_t>(n - 1)) {
    throw DomainError("expected " + std::to_string(n - 1) + " inhomogeneous terms c_2..c_n");
  }
  const auto s = ChebTable<R>::second_kind(z, -1, n - 1);
  R out = s[n - 1] * p1 - s[n - 2] * p0;
  for (int j = 0; j <= n - 2; ++j) out += s[j] * c[static_cast<std::size_t>(n - j - 2)];
  return out;
}

/// Result of one exhaustively checked identity.
struct IdentityCheck {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Index bounds for the identity suite.
struct IdentityBounds {
  int fibonacci = 60;    ///< |m|, |n| for two-index Fibonacci/Lucas identities
  int sequence = 100;    ///< n for single-index Fibonacci identities
  int chebyshev = 40;    ///< indices for symbolic Chebyshev identities
  int recurrence = 40;   ///< largest n for the closed-form recurrence check
  int recurrence_trials = 50;
  unsigned seed = 20230301;
};

/// Exhaustively checks the Fibonacci/Lucas and Chebyshev identities behind
/// the wheel-family formulas.
IdentityReport identity_suite(const IdentityBounds& bounds);
IdentityReport identity_suite(int max_index);

}  // namespace foxabf
