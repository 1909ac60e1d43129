#include "doctest.h"

#include "foxabf/braid.hpp"
#include "foxabf/error.hpp"
#include "support.hpp"

using namespace foxabf;
using namespace testing_support;

namespace {

PolyMatrix identity(int n) { return PolyMatrix::identity(static_cast<std::size_t>(n)); }

LaurentPoly minus_t_power(int k) { return LaurentPoly::monomial(k % 2 == 0 ? 1 : -1, k); }

}  // namespace

TEST_SUITE("braid") {

TEST_CASE("parsing") {
  const BraidWord w = parse_braid("1 -2 1 -2");
  CHECK(w.strands() == 3);
  CHECK(w.letters() == std::vector<int>{1, -2, 1, -2});
  CHECK(parse_braid("1,-2, 1").letters() == std::vector<int>{1, -2, 1});
  CHECK(parse_braid("  ").strands() == 1);
  CHECK(parse_braid("").length() == 0);
  CHECK(parse_braid("1", 4).strands() == 4);
  CHECK(w.to_string() == "1 -2 1 -2");
  CHECK(parse_braid(w.to_string()) == w);
}

TEST_CASE("parse errors carry the token position") {
  try {
    parse_braid("1 0 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == 2);
    CHECK(e.offset() == 2);
  }
  try {
    parse_braid("1 -2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == 3);
  }
  CHECK_THROWS_AS(parse_braid("3", 2), ParseError);
  CHECK_THROWS_AS(parse_braid("1 2.5"), ParseError);
  CHECK_THROWS_AS(BraidWord(2, {2}), DomainError);
  CHECK_THROWS_AS(BraidWord(0, {}), DomainError);
}

TEST_CASE("JSON round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord b = random_braid(rng, 1, 7, 15);
    CHECK(braid_from_json(braid_to_json(b)) == b);
    CHECK(braid_from_json(nlohmann::json::parse(braid_to_json(b).dump())) == b);
  }
  CHECK(braid_from_json(nlohmann::json::parse(R"({"letters": [2, -1]})")).strands() == 3);
  CHECK_THROWS_AS(braid_from_json(nlohmann::json::parse("[1, 2]")), ParseError);
  CHECK_THROWS_AS(braid_from_json(nlohmann::json::parse(R"({"letters": [1, "a"]})")), ParseError);
}

TEST_CASE("word operations") {
  const BraidWord a(3, {1, -2});
  const BraidWord b(3, {2, 2});
  CHECK((a * b).letters() == std::vector<int>{1, -2, 2, 2});
  CHECK(a.inverse().letters() == std::vector<int>{2, -1});
  CHECK(a.reversed().letters() == std::vector<int>{-2, 1});
  CHECK(exponent_sum(a * b) == 2);
  CHECK(wheel_braid(2) == BraidWord(3, {1, -2, 1, -2}));
  CHECK(wheel_braid(1).length() == 2);
  CHECK_THROWS_AS(wheel_braid(0), DomainError);
  CHECK((BraidWord(2, {1}) * BraidWord(3, {2})).strands() == 3);
}

TEST_CASE("permutation and components") {
  CHECK(permutation(BraidWord(3, {1})) == std::vector<int>{1, 0, 2});
  CHECK(closure_components(BraidWord(2, {1, 1})) == 2);
  CHECK(closure_components(BraidWord(2, {1, 1, 1})) == 1);
  CHECK(closure_components(BraidWord(4, {})) == 4);
  // sigma_1 sigma_2^-1 permutes the strands cyclically.
  for (int n = 1; n <= 12; ++n) CHECK(closure_components(wheel_braid(n)) == (n % 3 == 0 ? 3 : 1));
}

TEST_CASE("generator matrices") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK(burau_generator(2, 1) == PolyMatrix{{0, 1}, {t, 1 - t}});
  const LaurentPoly ti = LaurentPoly::t_inv();
  CHECK(burau_generator(2, -1) == PolyMatrix{{1 - ti, ti}, {1, 0}});
  CHECK(burau(BraidWord(3, {})) == identity(3));
  CHECK(burau_generator(3, 2)(0, 0) == LaurentPoly(1));
}

TEST_CASE("property: Burau representation") {
  std::mt19937 rng(32);
  int cases = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const BraidWord a = random_braid(rng, 2, 6, 20);
    const int n = a.strands();
    std::vector<int> other;
    std::uniform_int_distribution<int> gen(1, n - 1);
    for (int k = std::uniform_int_distribution<int>(0, 20)(rng); k > 0; --k) other.push_back(k % 2 ? gen(rng) : -gen(rng));
    const BraidWord b(n, other);
    const PolyMatrix ba = burau(a);

    CHECK(burau(a * b) == ba * burau(b));
    CHECK(burau(a * a.inverse()) == identity(n));
    CHECK(determinant(ba) == minus_t_power(exponent_sum(a)));
    CHECK(burau_at_minus_one(a) == eval_at_minus_one(ba));

    // Row sums are 1; (t^{n-1}, ..., t, 1) is a left fixed vector.
    for (int i = 0; i < n; ++i) {
      LaurentPoly row, weighted;
      for (int j = 0; j < n; ++j) {
        row += ba(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        weighted += LaurentPoly::monomial(1, n - 1 - j) * ba(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
      }
      CHECK(row == LaurentPoly(1));
      CHECK(weighted == LaurentPoly::monomial(1, n - 1 - i));
    }
    ++cases;
  }
  CHECK(cases >= 500);
}

TEST_CASE("braid relations") {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(burau_generator(n, i) * burau_generator(n, -i) == identity(n));
      if (i + 1 < n) CHECK(burau(BraidWord(n, {i, i + 1, i})) == burau(BraidWord(n, {i + 1, i, i + 1})));
      for (int j = i + 2; j < n; ++j) CHECK(burau(BraidWord(n, {i, j})) == burau(BraidWord(n, {j, i})));
    }
  }
}

}  // TEST_SUITE
