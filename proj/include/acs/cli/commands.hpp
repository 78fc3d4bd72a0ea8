#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "acs/errors.hpp"
#include "acs/homotopy.hpp"
#include "json.hpp"

namespace acs::cli {

using Json = nlohmann::json;

enum class Status { ok, violation, error };

struct CommandResult {
  Status status = Status::ok;
  Json payload;
  double elapsed_ms = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// 0 ok, 2 violation, 1 error.
int exit_code(Status s);
const char* status_name(Status s);

/// Integers within the 53-bit safe range become JSON numbers, others strings.
Json to_json(const BigInt& x);
Json to_json(const BigRational& x);
Json to_json(const std::vector<BigInt>& xs);

CommandResult cmd_realizable(int d, const std::vector<BigInt>& c);
CommandResult cmd_acs(int d, const BigInt& m, const BigInt& n, const std::optional<BigInt>& q,
                      const SearchWindow& window);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::string golden_dir = ACS_GOLDEN_DIR;
};

/// suite: ktheory, chernvec, cp4, cp5, cp6 or all.
CommandResult cmd_verify(const std::string& suite, const VerifyOptions& options = {});

struct TableOptions {
  int dim = 6;
  long m_max = 34;
};

/// name: mod31, pontrjagin-omega, divisor-targets. The payload has
/// "columns" and "rows"; render_csv turns it into CSV text.
CommandResult cmd_table(const std::string& name, const TableOptions& options = {});
std::string render_csv(const Json& table);

/// Full command line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acs::cli
