#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "foxabf/abelian_group.hpp"
#include "foxabf/abf_module.hpp"
#include "foxabf/foxgroup.hpp"
#include "foxabf/matrix.hpp"
#include "foxabf/wheel.hpp"

namespace foxabf::cli {

using nlohmann::json;

// --- serialization (output.cpp) ---

json group_json(const AbelianGroup& g);
json matrix_json(const IntMatrix& m);
json matrix_json(const PolyMatrix& m);
json wheel_report_json(const WheelReport& r);

/// {"command", "inputs", "results"[, "consistency"]}
json document(const std::string& command, json inputs, json results, std::optional<bool> consistency = std::nullopt);
std::string dump(const json& doc);

struct TableRow {
  int n = 0;
  AbelianGroup group;
  LaurentPoly g;
  LaurentPoly h;
  LaurentPoly alexander;
};

TableRow table_row(int n);
json table_json(const std::vector<TableRow>& rows);
std::string render_table(const std::vector<TableRow>& rows, const std::string& format);

// --- verification suites (verify.cpp) ---

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

struct VerifyOptions {
  int max_n = 20;
  int max_index = 40;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Deliberately corrupt one comparison (negative test of the exit path).
  bool inject_fault = false;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);
json suites_json(const std::vector<SuiteResult>& suites);

}  // namespace foxabf::cli
