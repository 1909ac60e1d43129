#include "foxabf/sequences.hpp"

#include <functional>
#include <random>
#include <utility>

namespace foxabf {

namespace {

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
  if (n == 0) return {0, 1};
  auto [a, b] = fib_pair(n / 2);
  BigInt c = a * (2 * b - a);
  BigInt d = a * a + b * b;
  if (n % 2 == 0) return {std::move(c), std::move(d)};
  BigInt e = c + d;
  return {std::move(d), std::move(e)};
}

int sign_pow(long k) { return k % 2 == 0 ? 1 : -1; }

// Counts cases and keeps the label of the first failing one.
class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& label) {
    ++check_.cases;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.counterexample = label();
    }
  }

  IdentityCheck finish() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

std::string pair_label(long m, long n) { return "m=" + std::to_string(m) + ", n=" + std::to_string(n); }
std::string index_label(const char* name, long n) { return std::string(name) + "=" + std::to_string(n); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  LaurentPoly p;
  for (int k = terms(rng); k > 0; --k) p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

BigInt random_int(std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-20, 20);
  return dist(rng);
}

template <class R, class Gen>
bool recurrence_trial(std::mt19937& rng, Gen&& gen, int n) {
  const R p0 = gen(rng);
  const R p1 = gen(rng);
  const R z = gen(rng);
  std::vector<R> c;
  for (int k = 2; k <= n; ++k) c.push_back(gen(rng));
  R prev = p0;
  R cur = p1;
  if (n == 0) cur = p0;
  for (int k = 2; k <= n; ++k) {
    R next = z * cur - prev + c[static_cast<std::size_t>(k - 2)];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return solve_chebyshev_recurrence<R>(p0, p1, c, z, n) == cur;
}

}  // namespace

BigInt fib(long n) {
  if (n >= 0) return fib_pair(static_cast<unsigned long>(n)).first;
  const long k = -n;
  BigInt f = fib_pair(static_cast<unsigned long>(k)).first;
  return k % 2 == 1 ? f : BigInt(-f);
}

BigInt lucas(long n) { return fib(n - 1) + fib(n + 1); }

ChebPoly cheb_S(int n) {
  const auto table = ChebTable<LaurentPoly>::second_kind(LaurentPoly::t(), n, n);
  return table[n];
}

ChebPoly cheb_T(int n) {
  const auto table = ChebTable<LaurentPoly>::first_kind(LaurentPoly::t(), n, n);
  return table[n];
}

BigInt cheb_S_at(int n, const BigInt& x0) {
  const auto table = ChebTable<BigInt>::second_kind(x0, n, n);
  return table[n];
}

LaurentPoly cheb_S_subst(int n) {
  const auto table = ChebTable<LaurentPoly>::second_kind(wheel_z(), n, n);
  return table[n];
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

IdentityReport identity_suite(int max_index) {
  if (max_index < 1) throw DomainError("max_index must be at least 1");
  IdentityBounds b;
  b.fibonacci = max_index;
  b.sequence = max_index;
  b.chebyshev = max_index;
  b.recurrence = max_index;
  return identity_suite(b);
}

IdentityReport identity_suite(const IdentityBounds& bounds) {
  if (bounds.fibonacci < 1 || bounds.sequence < 1 || bounds.chebyshev < 1 || bounds.recurrence < 1) {
    throw DomainError("identity bounds must be at least 1");
  }
  IdentityReport report;

  // Integer tables, index offset so that negative indices are addressable.
  const long fmax = 2L * std::max(bounds.fibonacci, bounds.sequence) + 2;
  std::vector<BigInt> fib_table(static_cast<std::size_t>(2 * fmax + 1));
  for (long k = -fmax; k <= fmax; ++k) fib_table[static_cast<std::size_t>(k + fmax)] = fib(k);
  auto F = [&](long k) -> const BigInt& { return fib_table.at(static_cast<std::size_t>(k + fmax)); };
  auto L = [&](long k) -> BigInt { return F(k - 1) + F(k + 1); };

  {
    CheckRecorder rec("fibonacci_lucas_product_to_sum");
    const long m_max = bounds.fibonacci;
    for (long m = -m_max; m <= m_max; ++m)
      for (long n = -m_max; n <= m_max; ++n) {
        const BigInt lhs = F(m) * L(n);
        const bool ok = lhs == F(m + n) + sign_pow(n) * F(m - n) && lhs == F(m + n) - sign_pow(m) * F(n - m);
        rec.expect(ok, [&] { return pair_label(m, n); });
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("fibonacci_double_index");
    for (long n = 1; n <= bounds.sequence; ++n)
      rec.expect(F(2 * n) == F(n) * (F(n - 1) + F(n + 1)), [&] { return index_label("n", n); });
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("fibonacci_odd_index_minus_one");
    for (long n = 1; n <= bounds.sequence; ++n) {
      const BigInt rhs = n % 2 == 0 ? F(n) * (F(n - 2) + F(n)) : F(n - 1) * (F(n - 1) + F(n + 1));
      rec.expect(F(2 * n - 1) - 1 == rhs, [&] { return index_label("n", n); });
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("chebyshev_at_3_is_even_fibonacci");
    const auto s3 = ChebTable<BigInt>::second_kind(3, -1, bounds.sequence);
    for (long n = 1; n <= bounds.sequence; ++n)
      rec.expect(s3[static_cast<int>(n - 1)] == F(2 * n), [&] { return index_label("n", n); });
    report.checks.push_back(rec.finish());
  }

  const int c = bounds.chebyshev;
  const auto S = ChebTable<LaurentPoly>::second_kind(LaurentPoly::t(), -2 * c - 2, 2 * c + 2);
  const auto T = ChebTable<LaurentPoly>::first_kind(LaurentPoly::t(), -2 * c - 2, 2 * c + 2);
  {
    CheckRecorder rec("chebyshev_TT_product_to_sum");
    for (int m = -c; m <= c; ++m)
      for (int n = -c; n <= c; ++n)
        rec.expect(T[m] * T[n] == T[m + n] + T[m - n], [&] { return pair_label(m, n); });
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("chebyshev_ST_product_to_sum");
    for (int m = -c; m <= c; ++m)
      for (int n = -c; n <= c; ++n)
        rec.expect(S[m] * T[n] == S[m + n] + S[m - n], [&] { return pair_label(m, n); });
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("chebyshev_SS_product_to_sum");
    for (int m = 0; m <= c; ++m)
      for (int n = 0; n <= c; ++n) {
        LaurentPoly sum;
        for (int i = m - n; i <= m + n; i += 2) sum += S[i];
        rec.expect(S[m] * S[n] == sum, [&] { return pair_label(m, n); });
      }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder even("chebyshev_sum_through_even");
    CheckRecorder odd("chebyshev_sum_through_odd");
    LaurentPoly prefix;  // S_0 + ... + S_{2n-1}
    for (int n = 0; n <= c; ++n) {
      const LaurentPoly through_even = prefix + S[2 * n];
      const LaurentPoly through_odd = through_even + S[2 * n + 1];
      even.expect(S[n] * (S[n] + S[n - 1]) == through_even, [&] { return index_label("n", n); });
      odd.expect(S[n] * (S[n] + S[n + 1]) == through_odd, [&] { return index_label("n", n); });
      prefix = through_odd;
    }
    report.checks.push_back(even.finish());
    report.checks.push_back(odd.finish());
  }
  {
    // sum_{j=0}^{n-2} S_j in product form.
    CheckRecorder rec("chebyshev_partial_sum_to_product");
    LaurentPoly sum;
    for (int n = 1; n <= 2 * c; ++n) {
      if (n >= 2) sum += S[n - 2];
      const int k = n / 2;
      const LaurentPoly product = n % 2 == 0 ? S[k - 1] * (S[k - 1] + S[k - 2]) : S[k - 1] * (S[k - 1] + S[k]);
      rec.expect(sum == product, [&] { return index_label("n", n); });
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("chebyshev_double_index");
    for (int k = 0; k <= c; ++k) {
      const bool even = S[2 * k] == S[k] * S[k] - S[k - 1] * S[k - 1] &&
                        S[2 * k] == (S[k] - S[k - 1]) * (S[k] + S[k - 1]);
      const bool odd = S[2 * k + 1] == S[k] * S[k + 1] - S[k - 1] * S[k] &&
                       S[2 * k + 1] == S[k] * (S[k + 1] - S[k - 1]);
      rec.expect(even && odd, [&] { return index_label("k", k); });
    }
    report.checks.push_back(rec.finish());
  }
  {
    CheckRecorder rec("chebyshev_recurrence_closed_form");
    std::mt19937 rng(bounds.seed);
    std::uniform_int_distribution<int> pick_n(0, bounds.recurrence);
    for (int trial = 0; trial < bounds.recurrence_trials; ++trial) {
      const int n = pick_n(rng);
      rec.expect(recurrence_trial<BigInt>(rng, random_int, n), [&] { return "integer trial n=" + std::to_string(n); });
      rec.expect(recurrence_trial<LaurentPoly>(rng, random_poly, n),
                 [&] { return "polynomial trial n=" + std::to_string(n); });
    }
    report.checks.push_back(rec.finish());
  }
  return report;
}

}  // namespace foxabf
