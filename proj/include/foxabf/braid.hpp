#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "foxabf/matrix.hpp"

namespace foxabf {

/// Word in the braid group B_strands. Letter i > 0 is sigma_i, i < 0 is
/// sigma_|i|^-1; every |i| lies in [1, strands - 1]. The empty word is the
/// identity braid. Words are kept exactly as given (no free reduction).
class BraidWord {
 public:
  /// Throws DomainError when strands < 1 or a letter is out of range.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  BraidWord inverse() const;
  /// Same letters read backwards.
  BraidWord reversed() const;
  /// "1 -2 1 -2"
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Parses whitespace- or comma-separated nonzero integers. Strands default
/// to max|letter| + 1 (1 for the empty word). Throws ParseError.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// {"strands": n, "letters": [...]}; "strands" may be omitted.
BraidWord braid_from_json(const nlohmann::json& j);
nlohmann::json braid_to_json(const BraidWord& b);

/// (sigma_1 sigma_2^-1)^n on three strands, whose closure is the Tait
/// diagram of the wheel graph W_n.
BraidWord wheel_braid(int n);

/// Unreduced Burau matrix of a single generator on `strands` strands:
/// sigma_i acts on (a, b) in positions i, i+1 as (b, t a + (1 - t) b).
PolyMatrix burau_generator(int strands, int letter);

/// Product of generator matrices in word order. Identity word -> Id_n.
PolyMatrix burau(const BraidWord& b);

/// burau(b) at t = -1, computed over the integers directly.
IntMatrix burau_at_minus_one(const BraidWord& b);

/// perm[k] is the 0-based bottom position of the strand starting at k.
std::vector<int> permutation(const BraidWord& b);

/// Number of link components of the closure (cycles of the permutation).
int closure_components(const BraidWord& b);

int exponent_sum(const BraidWord& b);

}  // namespace foxabf
