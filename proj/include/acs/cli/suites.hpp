#pragma once

#include <functional>
#include <string>
#include <vector>

#include "acs/cli/commands.hpp"

namespace acs::cli {

struct Check {
  std::string name;
  bool passed = false;
  Json detail;  // counterexample or evidence; null when there is nothing to add
};

using Suite = std::vector<Check>;

Suite suite_ktheory();
Suite suite_chernvec(std::uint64_t seed);
Suite suite_cp4(const std::string& golden_dir);
Suite suite_cp5(const std::string& golden_dir);
Suite suite_cp6(const std::string& golden_dir);

const std::vector<std::string>& suite_names();
Suite run_suite(const std::string& name, const VerifyOptions& options);

// Golden files: CSV with a header row, LF endings.
std::string read_text_file(const std::string& path);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::string golden_path(const std::string& dir, const std::string& file);

// Tables shared between `table` and the golden comparisons.
Json table_mod31();
Json table_pontrjagin_omega(int d);
Json table_divisor_targets(long m_max);
Json table_chern_series_cp5();

}  // namespace acs::cli
