#include <fstream>
#include <sstream>

#include "acs/cli/suites.hpp"

namespace acs::cli {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Plain CSV: no quoting, since no field in these tables contains a comma.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') throw ParseError("CRLF line ending in CSV");
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::string golden_path(const std::string& dir, const std::string& file) { return dir + "/" + file; }

std::string render_csv(const Json& table) {
  std::string out;
  auto field = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const auto& cols = table.at("columns");
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + field(cols[i]);
  out += '\n';
  for (const auto& row : table.at("rows")) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + field(row[i]);
    out += '\n';
  }
  return out;
}

Json table_mod31() {
  Json rows = Json::array();
  for (const auto& [m, n] : mod31_table()) rows.push_back({m, n});
  return {{"table", "mod31"}, {"columns", {"m", "n"}}, {"rows", rows}};
}

Json table_pontrjagin_omega(int d) {
  if (d != 4 && d != 6) throw UsageError("pontrjagin-omega needs --dim 4 or 6");
  Json rows = Json::array();
  for (int k = 1; k <= KOClass::top_power(d); ++k) {
    const CohClass p = pontrjagin_total(KOClass::omega(d).pow(static_cast<unsigned>(k)));
    for (int i = 1; 2 * i <= d; ++i) rows.push_back({k, i, to_json(p.integer_coeff(2 * i))});
  }
  return {{"table", "pontrjagin-omega"}, {"dim", d}, {"columns", {"k", "i", "coefficient"}}, {"rows", rows}};
}

Json table_divisor_targets(long m_max) {
  if (m_max < 0) throw UsageError("--m-max must be nonnegative");
  Json rows = Json::array();
  for (long m = -m_max; m <= m_max; ++m) {
    const BigInt num = BigInt(4) * m * m - BigInt(10) * m;
    if (num % 28 != 0) continue;
    rows.push_back({m, to_json(BigInt(num / 28)), to_json(cp4_divisor_target(m))});
  }
  return {{"table", "divisor-targets"}, {"dim", 4}, {"columns", {"m", "n", "target"}}, {"rows", rows}};
}

Json table_chern_series_cp5() {
  constexpr int d = 5;
  Json rows = Json::array();
  for (int i = 1; i <= d; ++i) {
    const CohClass c = total_chern(KClass::line(d).pow(static_cast<unsigned>(i)));
    Json row = {i};
    for (int j = 1; j <= d; ++j) row.push_back(to_json(c.integer_coeff(j)));
    rows.push_back(row);
  }
  return {{"table", "chern-series-cp5"}, {"columns", {"i", "c1", "c2", "c3", "c4", "c5"}}, {"rows", rows}};
}

}  // namespace acs::cli
