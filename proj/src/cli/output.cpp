#include <sstream>

#include "internal.hpp"

namespace foxabf::cli {

json group_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.str());
  return {{"torsion", torsion}, {"free_rank", g.free_rank}, {"display", g.to_string()}};
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json wheel_report_json(const WheelReport& r) {
  json gens = json::array();
  for (const auto& v : r.abf_gens_at_minus_one) gens.push_back(v.str());
  json brute = json::array();
  for (const auto& c : r.brute_force_checks) {
    brute.push_back({{"modulus", c.modulus}, {"count", c.count.str()}, {"predicted", c.predicted.str()}});
  }
  return {
      {"n", r.n},
      {"closed_form_group", group_json(r.closed_form_group)},
      {"burau_group", group_json(r.burau_group)},
      {"burau_group_middle", group_json(r.burau_group_middle)},
      {"abf_gens_at_minus_one", gens},
      {"brute_force_checks", brute},
      {"goeritz_ok", r.goeritz_ok},
      {"all_consistent", r.all_consistent},
  };
}

json document(const std::string& command, json inputs, json results, std::optional<bool> consistency) {
  json doc = {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}};
  if (consistency) doc["consistency"] = *consistency;
  return doc;
}

// nlohmann::json keeps object keys sorted, so this is deterministic.
std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

TableRow table_row(int n) {
  TableRow row;
  row.n = n;
  row.group = fox_closed_form(n);
  const ModulePresentation module = wheel_module(n);
  row.g = module.ideal_gens->first;
  row.h = module.ideal_gens->second;
  row.alexander = module.alexander;
  return row;
}

json table_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"group", group_json(r.group)},
                   {"ideal_gens", {r.g.to_string(), r.h.to_string()}},
                   {"alexander", r.alexander.to_string()}});
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "json") return dump(document("table", {{"from", rows.front().n}, {"to", rows.back().n}}, table_json(rows)));
  if (format == "csv") {
    os << "n,group,g,h,alexander\n";
    for (const auto& r : rows) {
      os << r.n << ',' << csv_field(r.group.to_string()) << ',' << r.g.to_string() << ',' << r.h.to_string() << ','
         << r.alexander.to_string() << '\n';
    }
  } else if (format == "markdown") {
    os << "| n | group | g | h | alexander |\n|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      os << "| " << r.n << " | " << r.group.to_string() << " | " << r.g.to_string() << " | " << r.h.to_string()
         << " | " << r.alexander.to_string() << " |\n";
    }
  } else {
    for (const auto& r : rows) {
      os << "n=" << r.n << "  " << r.group.to_string() << "  g=" << r.g.to_string() << "  h=" << r.h.to_string()
         << "  alexander=" << r.alexander.to_string() << '\n';
    }
  }
  return os.str();
}

}  // namespace foxabf::cli
