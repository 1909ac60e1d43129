#include "doctest.h"

#include "foxabf/sequences.hpp"
#include "support.hpp"

using namespace foxabf;
using namespace testing_support;

namespace {

// S_n(z) by walking the recurrence from scratch; n may be negative.
LaurentPoly walk_S(int n, const LaurentPoly& z) {
  LaurentPoly prev = 0, cur = 1;  // S_{-1}, S_0
  if (n >= 0) {
    for (int k = 0; k < n; ++k) {
      LaurentPoly next = z * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // walk down: S_{k-1} = z S_k - S_{k+1}
  LaurentPoly hi = cur, lo = prev;  // S_0, S_{-1}
  for (int k = -1; k > n; --k) {
    LaurentPoly next = z * lo - hi;
    hi = lo;
    lo = next;
  }
  return lo;
}

}  // namespace

TEST_SUITE("sequences") {

TEST_CASE("Fibonacci and Lucas against iteration") {
  for (long n = -60; n <= 400; ++n) CHECK(fib(n) == iterative_fib(n));
  CHECK(fib(-1) == 1);
  CHECK(fib(-2) == -1);
  CHECK(lucas(0) == 2);
  CHECK(lucas(5) == 11);
  CHECK(lucas(7) == 29);
  CHECK(fib(100).str() == "354224848179261915075");
}

TEST_CASE("Chebyshev polynomials") {
  const LaurentPoly z = LaurentPoly::t();
  CHECK(cheb_S(2).to_string("z") == "-1+z^2");
  CHECK(cheb_S(3).to_string("z") == "-2*z+z^3");
  CHECK(cheb_S(-1).is_zero());
  CHECK(cheb_S(-2) == LaurentPoly(-1));
  CHECK(cheb_T(0) == LaurentPoly(2));
  CHECK(cheb_T(1) == z);
  CHECK(cheb_T(2).to_string("z") == "-2+z^2");
  for (int n = -12; n <= 25; ++n) {
    CHECK(cheb_S(n) == walk_S(n, z));
    CHECK(cheb_S(-n - 2) == -cheb_S(n));
    CHECK(cheb_T(-n) == cheb_T(n));
    CHECK(cheb_T(n) == cheb_S(n) - cheb_S(n - 2));
    CHECK(cheb_S_subst(n) == walk_S(n, wheel_z()));
  }
}

TEST_CASE("S_{n-1}(3) is F_{2n}") {
  for (int n = 1; n <= 100; ++n) CHECK(cheb_S_at(n - 1, 3) == iterative_fib(2L * n));
}

TEST_CASE("T_n(p + 1/p) = p^n + p^-n") {
  // with p = t the argument is t + t^-1
  const LaurentPoly x = LaurentPoly::t() + LaurentPoly::t_inv();
  for (int n = 0; n <= 15; ++n) {
    const LaurentPoly expected = n == 0 ? LaurentPoly(2) : LaurentPoly::monomial(1, n) + LaurentPoly::monomial(1, -n);
    CHECK(cheb_T(n).compose(x) == expected);
  }
}

TEST_CASE("recurrence closed form: worked example") {
  // P_0 = P_1 = 0 and c_k = t^-1 give P_4 = t^-1 (S_0 + S_1 + S_2) at z.
  const LaurentPoly z = wheel_z();
  const std::vector<LaurentPoly> c(3, LaurentPoly::t_inv());
  const LaurentPoly p4 = solve_chebyshev_recurrence<LaurentPoly>(0, 0, c, z, 4);
  CHECK(p4 == LaurentPoly::t_inv() * (walk_S(0, z) + walk_S(1, z) + walk_S(2, z)));

  // Iterating by hand: P_2 = c, P_3 = z c + c, P_4 = z P_3 - P_2 + c.
  const LaurentPoly ti = LaurentPoly::t_inv();
  const LaurentPoly p3 = z * ti + ti;
  CHECK(p4 == z * p3 - ti + ti);
}

TEST_CASE("recurrence closed form against iteration") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> small(-30, 30);
  std::uniform_int_distribution<int> index(0, 40);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = index(rng);
    const BigInt p0 = small(rng), p1 = small(rng), z = small(rng) % 5;
    std::vector<BigInt> c;
    for (int k = 2; k <= n; ++k) c.push_back(small(rng));
    BigInt prev = p0, cur = n == 0 ? p0 : p1;
    for (int k = 2; k <= n; ++k) {
      BigInt next = z * cur - prev + c[static_cast<std::size_t>(k - 2)];
      prev = cur;
      cur = next;
    }
    CHECK(solve_chebyshev_recurrence<BigInt>(p0, p1, c, z, n) == cur);
  }
  const std::vector<BigInt> wrong(2, 1);
  CHECK_THROWS_AS(solve_chebyshev_recurrence<BigInt>(0, 1, wrong, 3, 5), DomainError);
  CHECK_THROWS_AS(solve_chebyshev_recurrence<BigInt>(0, 1, {}, 3, -1), DomainError);
}

TEST_CASE("identity suite") {
  const IdentityReport report = identity_suite(20);
  CHECK(report.all_passed());
  CHECK(report.checks.size() == 12);
  for (const auto& c : report.checks) {
    INFO(c.name);
    CHECK(c.cases > 0);
    CHECK_FALSE(c.counterexample.has_value());
  }
  CHECK_THROWS_AS(identity_suite(0), DomainError);
}

TEST_CASE("property: Fibonacci addition formula") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<long> idx(-200, 200);
  for (int trial = 0; trial < 300; ++trial) {
    const long m = idx(rng), n = idx(rng);
    CHECK(fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n));
  }
}

}  // TEST_SUITE
