#include "foxabf/laurent_poly.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "foxabf/error.hpp"

namespace foxabf {

namespace {

// Dense polynomial in Z[t], index = degree, no trailing zeros.
using DensePoly = std::vector<BigInt>;

void trim_dense(DensePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const DensePoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const DensePoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = foxabf::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

DensePoly primitive_part(DensePoly p) {
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// Some nonzero integer multiple of the remainder of a by b.
DensePoly pseudo_remainder(DensePoly a, const DensePoly& b) {
  const int db = degree(b);
  const BigInt& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const BigInt la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_dense(a);
  }
  return a;
}

// Quotient of a by b in Z[t] if the division is exact.
std::optional<DensePoly> divide_dense(DensePoly a, const DensePoly& b) {
  const int db = degree(b);
  if (a.empty()) return DensePoly{};
  if (degree(a) < db) return std::nullopt;
  DensePoly q(static_cast<std::size_t>(degree(a) - db + 1));
  const BigInt& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    BigInt quot, rem;
    boost::multiprecision::divide_qr(a.back(), lb, quot, rem);
    if (rem != 0) return std::nullopt;
    const int shift = degree(a) - db;
    q[shift] = quot;
    for (int i = 0; i <= db; ++i) a[i + shift] -= quot * b[i];
    trim_dense(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

DensePoly to_dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  DensePoly d;
  d.reserve(static_cast<std::size_t>(p.span()) + 1);
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) d.push_back(p.coeff(e));
  return d;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  auto q = divide_dense(to_dense(a), to_dense(b));
  if (!q) return std::nullopt;
  return LaurentPoly::from_coeffs(a.min_exp() - b.min_exp(), std::move(*q));
}

}  // namespace

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int exponent) {
  LaurentPoly p(coeff);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<BigInt> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, BigInt>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigInt> LaurentPoly::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

bool LaurentPoly::is_unit() const noexcept {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

BigInt LaurentPoly::eval_at_minus_one() const {
  BigInt sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    if (e % 2 == 0) {
      sum += coeffs_[i];
    } else {
      sum -= coeffs_[i];
    }
  }
  return sum;
}

BigInt LaurentPoly::eval(const BigInt& x) const {
  if (is_zero()) return 0;
  if (x == -1) return eval_at_minus_one();
  if (x == 1) {
    BigInt sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
  }
  if (low_ < 0) throw DomainError("cannot evaluate negative powers at " + x.str());
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  for (int i = 0; i < low_; ++i) acc *= x;
  return acc;
}

LaurentPoly LaurentPoly::compose(const LaurentPoly& value) const {
  if (is_zero()) return {};
  if (low_ < 0) throw DomainError("compose requires a polynomial without negative powers");
  LaurentPoly acc;
  for (int e = max_exp(); e >= 0; --e) {
    acc *= value;
    acc += LaurentPoly(coeff(e));
  }
  return acc;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (c < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const BigInt mag = foxabf::abs(c);
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  if (o.is_zero()) return;
  if (is_zero()) {
    *this = sign > 0 ? o : -o;
    return;
  }
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exp(), o.max_exp());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), BigInt(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto offset = static_cast<std::size_t>(o.low_ - lo);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[offset + i] += o.coeffs_[i];
    } else {
      coeffs_[offset + i] -= o.coeffs_[i];
    }
  }
  trim();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

LaurentPoly normalize_unit(const LaurentPoly& a) {
  if (a.is_zero()) throw DomainError("zero has no canonical associate");
  LaurentPoly p = a.shifted(-a.min_exp());
  return p.lowest_coeff() < 0 ? -p : p;
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_unit(a) == normalize_unit(b);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  DensePoly x = to_dense(a);
  DensePoly y = to_dense(b);
  const BigInt g = foxabf::gcd(content(x), content(y));
  x = primitive_part(std::move(x));
  y = primitive_part(std::move(y));
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    DensePoly r = primitive_part(pseudo_remainder(std::move(x), y));
    x = std::move(y);
    y = std::move(r);
  }
  for (auto& c : x) c *= g;
  return normalize_unit(LaurentPoly::from_coeffs(0, std::move(x)));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw ConsistencyError(b.to_string() + " does not divide " + a.to_string());
  return *q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return try_divide(a, b).has_value();
}

LaurentPoly wheel_z() { return LaurentPoly::from_terms({{-1, -1}, {0, 1}, {1, -1}}); }

}  // namespace foxabf
