#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"

#include "foxabf/braid.hpp"
#include "foxabf/cli.hpp"
#include "foxabf/error.hpp"
#include "internal.hpp"

namespace foxabf::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::uint64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("FOXABF_BRUTE_FORCE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  const std::string_view text(raw);
  std::uint64_t cap = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || end != text.data() + text.size() || cap == 0) {
    throw UsageError("FOXABF_BRUTE_FORCE_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return cap;
}

BraidWord read_braid(const std::string& text, std::optional<int> strands) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return parse_braid(text, strands);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON braid: ") + e.what(), 0, e.byte);
  }
  if (strands) {
    if (j.contains("strands") && j["strands"] != *strands) throw UsageError("--strands conflicts with the JSON braid");
    j["strands"] = *strands;
  }
  return braid_from_json(j);
}

std::string rows_text(const PolyMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += "]\n";
  }
  return out;
}

struct Options {
  std::string braid;
  std::optional<int> strands;
  std::string format = "text";
  int n = 0;
  std::vector<int> moduli{2, 3, 4, 5, 7};
  VerifyOptions verify;
  int from = 2;
  int to = 7;
};

int cmd_colorgroup(const Options& o, std::ostream& out) {
  const BraidWord b = read_braid(o.braid, o.strands);
  const ColoringResult r = coloring_group(b);
  if (o.format == "json") {
    out << dump(document("colorgroup", {{"braid", braid_to_json(b)}},
                         {{"group", group_json(r.group)},
                          {"determinant", r.determinant.str()},
                          {"reduced_matrix", matrix_json(r.reduced_matrix)},
                          {"components", closure_components(b)}}));
  } else {
    out << "group: " << r.group.to_string() << "\ndeterminant: " << r.determinant.str() << '\n';
  }
  return kOk;
}

int cmd_abf(const Options& o, std::ostream& out) {
  const BraidWord b = read_braid(o.braid, o.strands);
  const ModulePresentation m = abf_module(b);
  if (o.format == "json") {
    out << dump(document("abf", {{"braid", braid_to_json(b)}},
                         {{"matrix", matrix_json(m.matrix)}, {"alexander", m.alexander.to_string()}}));
  } else {
    out << "matrix:\n" << rows_text(m.matrix) << "alexander: " << m.alexander.to_string() << '\n';
  }
  return kOk;
}

int cmd_wheel(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw UsageError("wheel index must be at least 1");
  for (int m : o.moduli)
    if (m < 2) throw UsageError("moduli must be at least 2");
  const WheelReport r = cross_verify(o.n, o.moduli, o.verify.enumeration_cap);
  const auto [g, h] = *wheel_module(o.n).ideal_gens;
  if (o.format == "json") {
    json results = wheel_report_json(r);
    results["ideal_gens"] = {g.to_string(), h.to_string()};
    out << dump(document("wheel", {{"n", o.n}, {"moduli", o.moduli}}, std::move(results), r.all_consistent));
  } else {
    out << "wheel n=" << r.n << '\n'
        << "closed form:          " << r.closed_form_group.to_string() << '\n'
        << "burau (drop last):    " << r.burau_group.to_string() << '\n'
        << "burau (drop middle):  " << r.burau_group_middle.to_string() << '\n'
        << "ideal generators:     g = " << g.to_string() << ", h = " << h.to_string() << '\n'
        << "at t=-1:              " << r.abf_gens_at_minus_one[0].str() << ", " << r.abf_gens_at_minus_one[1].str()
        << '\n';
    for (const auto& c : r.brute_force_checks) {
      out << "brute force m=" << c.modulus << ":      count " << c.count.str() << ", predicted " << c.predicted.str()
          << '\n';
    }
    out << "goeritz:              " << (r.goeritz_ok ? "ok" : "MISMATCH") << '\n'
        << "consistent:           " << (r.all_consistent ? "yes" : "NO") << '\n';
  }
  if (!r.all_consistent) {
    err << "foxabf: routes disagree for wheel n=" << o.n << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto suites = run_verify(o.verify);
  const bool ok = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
  if (o.format == "json") {
    out << dump(document("verify", {{"max_n", o.verify.max_n}, {"max_index", o.verify.max_index}},
                         {{"suites", suites_json(suites)}}, ok));
  } else {
    for (const auto& s : suites) {
      out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.cases << " cases)";
      if (s.counterexample) out << ": " << *s.counterexample;
      out << '\n';
    }
  }
  if (!ok) {
    const auto bad = std::find_if(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.passed; });
    err << "foxabf: " << bad->name << " failed at " << bad->counterexample.value_or("?") << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.from < 1 || o.from > o.to) throw UsageError("table range needs 1 <= from <= to");
  std::vector<TableRow> rows;
  for (int n = o.from; n <= o.to; ++n) rows.push_back(table_row(n));
  out << render_table(rows, o.format);
  return kOk;
}

void add_braid_args(CLI::App* sub, Options& o) {
  sub->add_option("braid", o.braid, "braid word, e.g. \"1 -2 1 -2\", or a JSON object")->required();
  sub->add_option("--strands", o.strands, "number of strands (default: max|letter| + 1)")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fox coloring groups and ABF modules of braid closures", "foxabf"};
  app.require_subcommand(1);
  Options o;
  const auto text_json = CLI::IsMember({"text", "json"});

  auto* colorgroup = app.add_subcommand("colorgroup", "reduced Fox coloring group of a braid closure");
  add_braid_args(colorgroup, o);
  colorgroup->add_option("--format", o.format)->check(text_json);

  auto* abf = app.add_subcommand("abf", "reduced ABF presentation and Alexander polynomial");
  add_braid_args(abf, o);
  abf->add_option("--format", o.format)->check(text_json);

  auto* wheel = app.add_subcommand("wheel", "cross-verify every route for the wheel closure D(W_n)");
  wheel->add_option("n", o.n, "wheel index")->required();
  wheel->add_option("--moduli", o.moduli, "brute-force moduli, comma separated")->delimiter(',');
  wheel->add_option("--format", o.format)->check(text_json);

  auto* verify = app.add_subcommand("verify", "run the identity and cross-route suites");
  verify->add_option("--max-n", o.verify.max_n, "largest wheel index")->capture_default_str();
  verify->add_option("--max-index", o.verify.max_index, "bound for the identity suites")->capture_default_str();
  verify->add_option("--format", o.format)->check(text_json);
  verify->add_flag("--inject-fault", o.verify.inject_fault)->group("");

  auto* table = app.add_subcommand("table", "wheel groups, module generators and Alexander polynomials");
  table->add_option("--from", o.from)->capture_default_str();
  table->add_option("--to", o.to)->capture_default_str();
  table->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv", "markdown"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    o.verify.enumeration_cap = enumeration_cap_from_env();
    if (colorgroup->parsed()) return cmd_colorgroup(o, out);
    if (abf->parsed()) return cmd_abf(o, out);
    if (wheel->parsed()) return cmd_wheel(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_table(o, out);
  } catch (const ParseError& e) {
    err << "foxabf: parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConsistencyError& e) {
    err << "foxabf: consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "foxabf: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace foxabf::cli
