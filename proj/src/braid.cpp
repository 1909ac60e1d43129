#include "foxabf/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace foxabf {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw DomainError("letter " + std::to_string(l) + " invalid on " + std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::reversed() const { return BraidWord(strands_, {letters_.rbegin(), letters_.rend()}); }

std::string BraidWord::to_string() const {
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(std::max(a.strands_, b.strands_), std::move(letters));
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters;
  std::size_t pos = 0;
  std::size_t token = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    ++token;
    const std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    if (tok.empty()) throw ParseError("empty token " + std::to_string(token) + " at offset " + std::to_string(start), token, start);
    std::string_view digits = tok;
    if (digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("invalid token '" + std::string(tok) + "' at token " + std::to_string(token) + " (offset " +
                           std::to_string(start) + ")",
                       token, start);
    }
    if (value == 0) {
      throw ParseError("letter 0 is not a braid generator at token " + std::to_string(token) + " (offset " +
                           std::to_string(start) + ")",
                       token, start);
    }
    letters.push_back(value);
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_space();
      if (pos == text.size()) throw ParseError("trailing separator at offset " + std::to_string(pos), token + 1, pos);
    }
  }
  int needed = 1;
  for (int l : letters) needed = std::max(needed, std::abs(l) + 1);
  if (strands && *strands < needed) {
    throw ParseError("braid uses " + std::to_string(needed) + " strands but only " + std::to_string(*strands) +
                         " were given",
                     0, 0);
  }
  if (strands && *strands < 1) throw ParseError("strand count must be positive", 0, 0);
  return BraidWord(strands.value_or(needed), std::move(letters));
}

BraidWord braid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("letters") || !j["letters"].is_array()) {
    throw ParseError("braid JSON must be an object with a \"letters\" array", 0, 0);
  }
  std::vector<int> letters;
  std::size_t token = 0;
  for (const auto& v : j["letters"]) {
    ++token;
    if (!v.is_number_integer()) throw ParseError("non-integer letter at token " + std::to_string(token), token, 0);
    const auto l = v.get<long long>();
    if (l == 0 || l > 1'000'000 || l < -1'000'000) {
      throw ParseError("invalid letter at token " + std::to_string(token), token, 0);
    }
    letters.push_back(static_cast<int>(l));
  }
  int needed = 1;
  for (int l : letters) needed = std::max(needed, std::abs(l) + 1);
  int strands = needed;
  if (j.contains("strands")) {
    if (!j["strands"].is_number_integer()) throw ParseError("\"strands\" must be an integer", 0, 0);
    strands = j["strands"].get<int>();
    if (strands < needed) throw ParseError("\"strands\" is smaller than the letters require", 0, 0);
  }
  return BraidWord(strands, std::move(letters));
}

nlohmann::json braid_to_json(const BraidWord& b) {
  return nlohmann::json{{"strands", b.strands()}, {"letters", b.letters()}};
}

BraidWord wheel_braid(int n) {
  if (n < 1) throw DomainError("wheel index must be at least 1");
  std::vector<int> letters;
  letters.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    letters.push_back(1);
    letters.push_back(-2);
  }
  return BraidWord(3, std::move(letters));
}

namespace {

// m <- m * B(letter), touching only the two affected columns.
template <class R>
void apply_generator(Matrix<R>& m, int letter, const R& t, const R& t_inv) {
  const auto p = static_cast<std::size_t>(std::abs(letter) - 1);
  const std::size_t q = p + 1;
  const R one(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    R a = m(i, p);
    R b = m(i, q);
    if (letter > 0) {
      m(i, p) = t * b;
      m(i, q) = a + (one - t) * b;
    } else {
      m(i, p) = (one - t_inv) * a + b;
      m(i, q) = t_inv * a;
    }
  }
}

}  // namespace

PolyMatrix burau_generator(int strands, int letter) {
  return burau(BraidWord(strands, {letter}));
}

PolyMatrix burau(const BraidWord& b) {
  auto m = PolyMatrix::identity(static_cast<std::size_t>(b.strands()));
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::t_inv();
  for (int l : b.letters()) apply_generator(m, l, t, t_inv);
  return m;
}

IntMatrix burau_at_minus_one(const BraidWord& b) {
  auto m = IntMatrix::identity(static_cast<std::size_t>(b.strands()));
  const BigInt minus_one = -1;
  for (int l : b.letters()) apply_generator(m, l, minus_one, minus_one);
  return m;
}

std::vector<int> permutation(const BraidWord& b) {
  // at[k]: which starting strand currently occupies position k
  std::vector<int> at(static_cast<std::size_t>(b.strands()));
  for (std::size_t k = 0; k < at.size(); ++k) at[k] = static_cast<int>(k);
  for (int l : b.letters()) {
    const auto p = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[p], at[p + 1]);
  }
  std::vector<int> perm(at.size());
  for (std::size_t k = 0; k < at.size(); ++k) perm[static_cast<std::size_t>(at[k])] = static_cast<int>(k);
  return perm;
}

int closure_components(const BraidWord& b) {
  const auto perm = permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
  }
  return cycles;
}

int exponent_sum(const BraidWord& b) {
  int sum = 0;
  for (int l : b.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

}  // namespace foxabf
