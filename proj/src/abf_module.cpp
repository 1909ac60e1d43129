#include "foxabf/abf_module.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "foxabf/sequences.hpp"

namespace foxabf {

namespace {

void require_wheel_index(int n) {
  if (n < 1) throw DomainError("wheel index must be at least 1");
}

// Enumerates all k-subsets of {0, ..., n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Quotient of polynomial division in Z[z]; v must have a unit leading
// coefficient so that the division stays integral.
ChebPoly z_quotient(ChebPoly u, const ChebPoly& v) {
  if (!(v.highest_coeff() == 1 || v.highest_coeff() == -1)) {
    throw ConsistencyError("Euclidean step on " + v.to_string("z") + " needs a unit leading coefficient");
  }
  ChebPoly q;
  while (!u.is_zero() && u.max_exp() >= v.max_exp()) {
    const ChebPoly term = ChebPoly::monomial(u.highest_coeff() * v.highest_coeff(), u.max_exp() - v.max_exp());
    q += term;
    u -= term * v;
  }
  return q;
}

ChebPoly wheel_g_chebyshev(int n) {
  const int k = n / 2;
  const auto s = ChebTable<ChebPoly>::second_kind(ChebPoly::t(), k - 1, k);
  return n % 2 == 0 ? s[k - 1] : s[k - 1] + s[k];
}

}  // namespace

PolyMatrix reduced_abf_matrix(const BraidWord& b, std::optional<int> drop_index) {
  const int d = drop_index.value_or(b.strands());
  if (d < 1 || d > b.strands()) {
    throw DomainError("drop index " + std::to_string(d) + " out of range 1.." + std::to_string(b.strands()));
  }
  const auto n = static_cast<std::size_t>(b.strands());
  const PolyMatrix relations = burau(b) - PolyMatrix::identity(n);
  const auto drop = static_cast<std::size_t>(d - 1);
  return relations.without(drop, drop);
}

LaurentPoly maximal_minor_gcd(const PolyMatrix& m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  if (k == 0) return 1;
  LaurentPoly g;
  std::vector<std::size_t> all_rows(m.rows());
  std::vector<std::size_t> all_cols(m.cols());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
  auto absorb = [&g](const LaurentPoly& minor) {
    if (minor.is_zero()) return;
    g = g.is_zero() ? normalize_unit(minor) : gcd(g, minor);
  };
  if (m.rows() == m.cols()) {
    absorb(determinant(m));
  } else if (m.rows() > m.cols()) {
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) { absorb(determinant(m.select(rows, all_cols))); });
  } else {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) { absorb(determinant(m.select(all_rows, cols))); });
  }
  return g;
}

LaurentPoly alexander_polynomial(const BraidWord& b) { return maximal_minor_gcd(reduced_abf_matrix(b)); }

ModulePresentation abf_module(const BraidWord& b) {
  ModulePresentation out;
  out.matrix = reduced_abf_matrix(b);
  out.alexander = maximal_minor_gcd(out.matrix);
  return out;
}

LaurentPoly wheel_g(int n) {
  if (n < 0) throw DomainError("g_n is defined for n >= 0");
  const int k = n / 2;
  const auto s = ChebTable<LaurentPoly>::second_kind(wheel_z(), k - 1, k);
  return n % 2 == 0 ? s[k - 1] : s[k - 1] + s[k];
}

PolyMatrix wheel_abf_matrix_recursive(int n) {
  require_wheel_index(n);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::t_inv();
  const LaurentPoly one_minus_t = LaurentPoly(1) - t;
  // Coefficients of the top arcs a and c.
  LaurentPoly pa, pc, qa, qc;
  for (int step = 0; step < n; ++step) {
    LaurentPoly next_pa = -(t * pa) - t_inv * qa - LaurentPoly(1);
    LaurentPoly next_pc = -(t * pc) - t_inv * qc;
    qa = one_minus_t * next_pa + t * pa + LaurentPoly(1);
    qc = one_minus_t * next_pc + t * pc - LaurentPoly(1);
    pa = std::move(next_pa);
    pc = std::move(next_pc);
  }
  return PolyMatrix{{pa, pc}, {qa, qc}};
}

PolyMatrix wheel_abf_matrix_closed(int n) {
  require_wheel_index(n);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::t_inv();
  const LaurentPoly prev = wheel_g(n - 1);
  const LaurentPoly cur = wheel_g(n);
  const LaurentPoly next = wheel_g(n + 1);
  return PolyMatrix{{-(cur * (next + t_inv * prev)), t_inv * cur * prev},
                    {t * cur * next, -(cur * (next + t * prev))}};
}

EuclideanReduction wheel_euclidean_reduction(int n) {
  require_wheel_index(n);
  const LaurentPoly g = wheel_g(n);
  const PolyMatrix a = wheel_abf_matrix_closed(n);

  EuclideanReduction out;
  out.aprime = a.map([&g](const LaurentPoly& e) { return divide_exact(e, -g); });
  out.det_aprime = determinant(out.aprime);

  PolyMatrix m = out.aprime;
  // First row becomes (g_{n+1}, g_{n-1}).
  m.add_col_multiple(0, 1, LaurentPoly(1));
  m.scale_col(1, -LaurentPoly::t());

  // The first row lies in Z[z]; divide there (quotients like z itself are
  // balanced in t) and replay each step as a column operation over t.
  const LaurentPoly z = wheel_z();
  ChebPoly row[2] = {wheel_g_chebyshev(n + 1), wheel_g_chebyshev(n - 1)};
  auto check_row = [&] {
    if (m(0, 0) != row[0].compose(z) || m(0, 1) != row[1].compose(z)) {
      throw ConsistencyError("first row of A' left Z[z] during the Euclidean descent, n=" + std::to_string(n));
    }
  };
  check_row();
  while (!row[0].is_zero() && !row[1].is_zero()) {
    const std::size_t big = row[0].max_exp() >= row[1].max_exp() ? 0 : 1;
    const std::size_t small = 1 - big;
    const ChebPoly q = z_quotient(row[big], row[small]);
    row[big] -= q * row[small];
    m.add_col_multiple(big, small, -q.compose(z));
    ++out.euclid_steps;
    check_row();
  }
  if (m(0, 0).is_zero()) m.swap_cols(0, 1);
  const LaurentPoly pivot = m(0, 0);
  if (!pivot.is_unit()) throw ConsistencyError("first row gcd is " + pivot.to_string() + ", not a unit");
  // Inverse of +-t^k is +-t^-k.
  m.scale_col(0, LaurentPoly::monomial(pivot.lowest_coeff(), -pivot.min_exp()));
  m.add_row_multiple(1, 0, -m(1, 0));
  if (!(m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == LaurentPoly(1))) {
    throw ConsistencyError("reduction did not reach diagonal form");
  }
  if (!unit_equivalent(m(1, 1), out.det_aprime)) {
    throw ConsistencyError("reduced entry " + m(1, 1).to_string() + " differs from det A' " +
                           out.det_aprime.to_string());
  }
  out.reduced = std::move(m);
  out.ideal_gens = {normalize_unit(g), normalize_unit(out.det_aprime * g)};
  return out;
}

ModulePresentation wheel_module(int n) {
  const EuclideanReduction red = wheel_euclidean_reduction(n);
  ModulePresentation out;
  out.matrix = wheel_abf_matrix_closed(n);
  out.ideal_gens = red.ideal_gens;
  const auto& [g, h] = red.ideal_gens;
  out.alexander = normalize_unit(g * h);
  if (!divides(g, h) || !unit_equivalent(g * h, determinant(out.matrix))) {
    throw ConsistencyError("wheel module generators disagree with the presentation for n=" + std::to_string(n));
  }
  return out;
}

}  // namespace foxabf
