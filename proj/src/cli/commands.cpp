#include "acs/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "acs/cli/suites.hpp"

namespace acs::cli {

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::violation: return 2;
    case Status::error: return 1;
  }
  return 1;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::error: return "error";
  }
  return "error";
}

Json to_json(const BigInt& x) {
  if (fits_int53(x)) return x.get_si();
  return x.get_str();
}

Json to_json(const BigRational& x) {
  if (x.is_integer()) return to_json(x.num());
  return x.str();
}

Json to_json(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

namespace {

Json solution_json(const ACSSolution& s) {
  Json out = {{"a", to_json(s.a)}, {"chern", to_json(s.full_chern.c)}, {"decomposition", to_json(s.decomposition.a)}};
  if (s.c) out["c"] = to_json(*s.c);
  return out;
}

bool by_a_then_c(const ACSSolution& x, const ACSSolution& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.c.value_or(0) < y.c.value_or(0);
}

Json window_json(const SearchWindow& w) { return {{"a_max", w.a_max}, {"c_max", w.c_max}}; }

}  // namespace

CommandResult cmd_realizable(int d, const std::vector<BigInt>& c) {
  if (d < 1 || d > 8) throw UsageError("--dim must be between 1 and 8");
  if (static_cast<int>(c.size()) != d)
    throw UsageError("expected " + std::to_string(d) + " Chern coefficients, got " + std::to_string(c.size()));
  const ChernVector v(d, c);
  const auto dec = realizable(v);
  Json payload = {{"dim", d}, {"chern", to_json(c)}, {"realizable", dec.has_value()}};
  if (dec) payload["decomposition"] = to_json(dec->a);
  return {Status::ok, payload};
}

CommandResult cmd_acs(int d, const BigInt& m, const BigInt& n, const std::optional<BigInt>& q,
                      const SearchWindow& window) {
  if (d != 4 && d != 5 && d != 6) throw UsageError("--dim must be 4, 5 or 6");
  if (d != 6 && q) throw UsageError("--q is only used with --dim 6");
  if (d == 6 && !q) throw UsageError("--dim 6 needs --q");
  if (window.a_max < 1 || window.c_max < 0) throw UsageError("search window must be positive");
  const HtpyCP x = validate_params(d, m, n, q);
  Json payload = {{"dim", d}, {"m", to_json(m)}, {"n", to_json(n)}};

  if (d == 4) {
    auto sols = acs_search_cp4(x);
    std::sort(sols.begin(), sols.end(), by_a_then_c);
    Json list = Json::array(), as = Json::array();
    for (const auto& s : sols) {
      list.push_back(solution_json(s));
      as.push_back(to_json(s.a));
    }
    payload["divisor_target"] = to_json(cp4_divisor_target(m));
    payload["a"] = as;
    payload["solutions"] = list;
    return {Status::ok, payload};
  }

  if (d == 5) {
    const Cp5Structure st = cp5_structure(x);
    const auto& e = st.e.coeffs();
    payload["e"] = to_json(std::vector<BigInt>(e.begin() + 1, e.end()));
    payload["real_reduction"] = to_json(st.report.real_reduction.coeffs());
    payload["tangent"] = to_json(st.report.tangent.coeffs());
    payload["c5"] = to_json(st.report.c5);
    payload["checks"] = {{"real_reduction_equals_tangent", st.report.reduction_matches},
                         {"c5_equals_euler", st.report.euler_matches}};
    payload["passed"] = st.report.passed();
    return {st.report.passed() ? Status::ok : Status::error, payload};
  }

  payload["q"] = to_json(*q);
  payload["window"] = window_json(window);
  auto direct = acs_direct_cp6(x, window);
  std::sort(direct.begin(), direct.end(), by_a_then_c);
  Json list = Json::array(), criterion = Json::array();
  for (const auto& s : direct) list.push_back(solution_json(s));
  bool agree = true;
  std::size_t matched = 0;
  for (long a = -window.a_max; a <= window.a_max; ++a) {
    if (a == 0) continue;
    for (long c = -window.c_max; c <= window.c_max; ++c) {
      if (!cp6_criterion(x, a, c)) continue;
      criterion.push_back({a, c});
      const bool found = std::any_of(direct.begin(), direct.end(),
                                     [&](const ACSSolution& s) { return s.a == a && *s.c == c; });
      agree = agree && found;
      matched += found ? 1 : 0;
    }
  }
  agree = agree && matched == direct.size();
  payload["exists"] = !direct.empty();
  payload["m_divisible_by_3"] = cp6_exists(x);
  payload["solutions"] = list;
  payload["criterion_solutions"] = criterion;
  payload["criterion_agrees"] = agree;
  return {agree ? Status::ok : Status::error, payload};
}

CommandResult cmd_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    names = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  Json suites = Json::object();
  bool all_passed = true;
  for (const auto& name : names) {
    Json checks = Json::array();
    bool passed = true;
    for (const auto& c : run_suite(name, options)) {
      Json entry = {{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.is_null()) entry["detail"] = c.detail;
      checks.push_back(entry);
      passed = passed && c.passed;
    }
    suites[name] = {{"checks", checks}, {"passed", passed}};
    all_passed = all_passed && passed;
  }
  return {all_passed ? Status::ok : Status::error, {{"suites", suites}, {"passed", all_passed}}};
}

CommandResult cmd_table(const std::string& name, const TableOptions& options) {
  if (name == "mod31") return {Status::ok, table_mod31()};
  if (name == "pontrjagin-omega") return {Status::ok, table_pontrjagin_omega(options.dim)};
  if (name == "divisor-targets") {
    if (options.dim != 4) throw UsageError("divisor-targets needs --dim 4");
    return {Status::ok, table_divisor_targets(options.m_max)};
  }
  throw UsageError("unknown table '" + name + "'");
}

namespace {

BigInt parse_int_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const ParseError&) {
    throw UsageError(flag + ": not an integer: " + text);
  }
}

void emit(const CommandResult& r, bool csv, std::ostream& out, std::ostream& err) {
  if (csv) {
    out << render_csv(r.payload);
  } else {
    Json doc = {{"status", status_name(r.status)}, {"result", r.payload}};
    out << doc.dump(2) << '\n';
  }
  err << "elapsed_ms " << static_cast<long long>(r.elapsed_ms) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"acscp: exact computations for almost complex structures on homotopy CP^4, CP^5, CP^6"};
  app.require_subcommand(1);

  int dim = 0;
  std::string m_text = "0", n_text = "0", q_text;
  long a_max = 200, c_max = 200, m_max = 34;
  bool csv = false, json = false;
  std::uint64_t seed = 1;
  std::string golden = ACS_GOLDEN_DIR;
  std::vector<std::string> chern_text;
  std::string suite, table;

  auto* realizable_cmd = app.add_subcommand("realizable", "Is (c_1..c_d) the Chern vector of a class on CP^d?");
  realizable_cmd->add_option("--dim", dim, "d")->required();
  realizable_cmd->add_option("chern", chern_text, "c_1 .. c_d");

  auto* acs_cmd = app.add_subcommand("acs", "Almost complex structures on a homotopy CP^d");
  acs_cmd->add_option("--dim", dim, "4, 5 or 6")->required();
  acs_cmd->add_option("--m", m_text, "m");
  acs_cmd->add_option("--n", n_text, "n");
  acs_cmd->add_option("--q", q_text, "q (d = 6)");
  acs_cmd->add_option("--a-max", a_max, "window for a");
  acs_cmd->add_option("--c-max", c_max, "window for c");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "ktheory, chernvec, cp4, cp5, cp6 or all")->required();
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");
  verify_cmd->add_option("--golden", golden, "golden file directory");

  auto* table_cmd = app.add_subcommand("table", "Print a table");
  table_cmd->add_option("name", table, "mod31, pontrjagin-omega or divisor-targets")->required();
  table_cmd->add_option("--dim", dim, "dimension");
  table_cmd->add_option("--m-max", m_max, "range for m");
  table_cmd->add_flag("--csv", csv, "CSV output");
  table_cmd->add_flag("--json", json, "JSON output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 64;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  bool as_csv = false;
  try {
    if (*realizable_cmd) {
      std::vector<BigInt> c;
      for (const auto& t : chern_text) c.push_back(parse_int_arg("chern", t));
      result = cmd_realizable(dim, c);
    } else if (*acs_cmd) {
      std::optional<BigInt> q;
      if (!q_text.empty()) q = parse_int_arg("--q", q_text);
      result = cmd_acs(dim, parse_int_arg("--m", m_text), parse_int_arg("--n", n_text), q, SearchWindow{a_max, c_max});
    } else if (*verify_cmd) {
      result = cmd_verify(suite, VerifyOptions{seed, golden});
    } else {
      if (csv && json) throw UsageError("--csv and --json are exclusive");
      TableOptions opts;
      opts.dim = dim != 0 ? dim : table == "divisor-targets" ? 4 : 6;
      opts.m_max = m_max;
      result = cmd_table(table, opts);
      as_csv = csv;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 64;
  } catch (const UnsupportedDimension& e) {
    err << "usage error: " << e.what() << '\n';
    return 64;
  } catch (const ConstraintViolated& e) {
    result = {Status::violation, {{"error", e.what()}}};
  } catch (const Error& e) {
    result = {Status::error, {{"error", e.what()}}};
    as_csv = false;
  }
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(result, as_csv && result.status == Status::ok, out, err);
  return exit_code(result.status);
}

}  // namespace acs::cli
