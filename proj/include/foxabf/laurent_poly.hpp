#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "foxabf/bigint.hpp"

namespace foxabf {

/// Element of Z[t, t^-1].
///
/// Stored densely as a lowest exponent plus a coefficient run whose first and
/// last entries are nonzero. The zero polynomial has an empty run, so two
/// polynomials are equal exactly when their representations are equal.
///
/// The same type carries polynomials in the Chebyshev variable z; only the
/// printed variable name differs.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(BigInt(c)) {}  // NOLINT

  static LaurentPoly monomial(const BigInt& coeff, int exponent);
  /// Coefficients `coeffs[i]` belong to exponent `low + i`.
  static LaurentPoly from_coeffs(int low, std::vector<BigInt> coeffs);
  static LaurentPoly from_terms(std::initializer_list<std::pair<int, BigInt>> terms);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly t_inv() { return monomial(1, -1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Exponent range; undefined for the zero polynomial.
  int min_exp() const noexcept { return low_; }
  int max_exp() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;
  BigInt coeff(int exponent) const;
  const BigInt& lowest_coeff() const { return coeffs_.front(); }
  const BigInt& highest_coeff() const { return coeffs_.back(); }
  std::map<int, BigInt> terms() const;
  /// True for +-t^k.
  bool is_unit() const noexcept;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;

  /// Substitute t = -1.
  BigInt eval_at_minus_one() const;
  /// Substitute t = x. Requires min_exp() >= 0 unless x is +-1.
  BigInt eval(const BigInt& x) const;
  /// Substitute the variable by another Laurent polynomial (Horner).
  /// Requires min_exp() >= 0.
  LaurentPoly compose(const LaurentPoly& value) const;

  /// Canonical text: increasing exponent, explicit '*', e.g. "-t^-1+2-3*t^2".
  std::string to_string(const std::string& var = "t") const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();
  void add_scaled(const LaurentPoly& o, int sign);

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// u * a for the unit u = +-t^k making the lowest exponent 0 and the constant
/// term positive. Throws DomainError on zero.
LaurentPoly normalize_unit(const LaurentPoly& a);

/// a and b differ by a unit factor +-t^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Z[t^+-1], unit-normalized. Throws DomainError
/// when both arguments are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// q with q * b == a. Throws ConsistencyError when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Whether b divides a in Z[t^+-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// z = 1 - t - t^-1, the Chebyshev argument used throughout the wheel family.
LaurentPoly wheel_z();

}  // namespace foxabf
