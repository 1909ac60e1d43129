#include "foxabf/wheel.hpp"

#include <algorithm>

#include "foxabf/abf_module.hpp"
#include "foxabf/foxgroup.hpp"
#include "foxabf/sequences.hpp"

namespace foxabf {

namespace {

void require_wheel_index(int n) {
  if (n < 1) throw DomainError("wheel index must be at least 1");
}

}  // namespace

AbelianGroup fox_closed_form(int n) {
  require_wheel_index(n);
  std::vector<BigInt> diag;
  if (n % 2 == 1) {
    const BigInt l = lucas(n);
    diag = {l, l};
  } else {
    const BigInt f = fib(n);
    diag = {f, 5 * f};
  }
  return AbelianGroup::from_diagonal(diag);
}

IntMatrix fibonacci_relation_matrix(int n) {
  require_wheel_index(n);
  const long m = 2L * n;
  return IntMatrix{{fib(m), fib(m - 1) - 1}, {fib(m + 1) - 1, fib(m)}};
}

std::vector<IntMatrix> reduction_trace(int n) {
  require_wheel_index(n);
  std::vector<IntMatrix> trace{fibonacci_relation_matrix(n)};
  // Each operation lowers the running index 2n by one; stop at n - 1 (odd)
  // or n (even).
  const int ops = n % 2 == 1 ? n + 1 : n;
  IntMatrix m = trace.front();
  for (int k = 0; k < ops; ++k) {
    if (k % 2 == 0) {
      m.add_col_multiple(0, 1, BigInt(-1));
    } else {
      m.add_col_multiple(1, 0, BigInt(-1));
    }
    trace.push_back(m);
  }
  if (n % 2 == 0) {
    m.add_col_multiple(0, 1, BigInt(2));
    trace.push_back(m);
  }
  return trace;
}

IntMatrix goeritz_matrix(int n) {
  require_wheel_index(n);
  const auto s = ChebTable<BigInt>::second_kind(3, n - 2, n);
  return IntMatrix{{s[n - 1], 1 - s[n]}, {s[n - 2] + 1, -s[n - 1]}};
}

bool goeritz_equivalence_check(int n) { return snf(goeritz_matrix(n)) == snf(fibonacci_relation_matrix(n)); }

WheelReport cross_verify(int n, const std::vector<int>& brute_force_moduli, std::uint64_t enumeration_cap) {
  require_wheel_index(n);
  WheelReport r;
  r.n = n;
  const BraidWord braid = wheel_braid(n);
  r.closed_form_group = fox_closed_form(n);
  r.burau_group = coloring_group(braid).group;
  r.burau_group_middle = coloring_group(braid, 2).group;

  const ModulePresentation module = wheel_module(n);
  std::vector<BigInt> specialized;
  for (const LaurentPoly* p : {&module.ideal_gens->first, &module.ideal_gens->second}) {
    BigInt v = foxabf::abs(p->eval_at_minus_one());
    r.abf_gens_at_minus_one.push_back(v);
    specialized.push_back(std::move(v));
  }
  const AbelianGroup abf_group = AbelianGroup::from_diagonal(specialized);

  bool brute_ok = true;
  for (int m : brute_force_moduli) {
    BruteForceCheck c;
    c.modulus = m;
    c.count = brute_force_coloring_count(braid, m, enumeration_cap);
    c.predicted = coloring_count_from_group(r.burau_group, m);
    brute_ok = brute_ok && c.count == c.predicted;
    r.brute_force_checks.push_back(std::move(c));
  }
  r.goeritz_ok = goeritz_equivalence_check(n);
  r.all_consistent = r.closed_form_group == r.burau_group && r.burau_group == r.burau_group_middle &&
                     abf_group == r.burau_group && r.goeritz_ok && brute_ok;
  return r;
}

}  // namespace foxabf
