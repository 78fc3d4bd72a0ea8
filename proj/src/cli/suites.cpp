#include <algorithm>
#include <random>
#include <set>

#include "acs/cli/suites.hpp"
#include "acs/divisors.hpp"

namespace acs::cli {

namespace {

Check check(std::string name, bool passed, Json detail = nullptr) {
  return {std::move(name), passed, std::move(detail)};
}

Check golden_bytes(const std::string& name, const Json& table, const std::string& path) {
  const std::string computed = render_csv(table);
  const std::string expected = read_text_file(path);
  if (computed == expected) return check(name, true);
  return check(name, false, {{"golden", path}, {"computed", computed}, {"expected", expected}});
}

std::vector<std::vector<std::string>> golden_rows(const std::string& dir, const std::string& file) {
  auto rows = parse_csv(read_text_file(golden_path(dir, file)));
  if (rows.empty()) throw ParseError("empty golden file " + file);
  rows.erase(rows.begin());
  return rows;
}

KOClass ko(int d, std::vector<long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  c.resize(static_cast<std::size_t>(KOClass::top_power(d)) + 1);
  return KOClass(d, std::move(c));
}

Json ko_json(const KOClass& x) { return to_json(x.coeffs()); }

// Valid CP^6 triples with |m| <= m_max, |n| <= n_max.
std::vector<HtpyCP> cp6_triples(long m_max, long n_max) {
  std::vector<HtpyCP> out;
  for (long m = -m_max; m <= m_max; ++m) {
    for (long n = -n_max; n <= n_max; ++n) {
      const BigInt num = BigInt(-32) * m * m * m + BigInt(252) * m * m - BigInt(301) * m + BigInt(672) * m * n -
                         BigInt(1152) * n;
      if (num % 1488 != 0) continue;
      out.push_back(validate_params(6, m, n, BigInt(num / 1488)));
    }
  }
  return out;
}

using PairSet = std::set<std::pair<BigInt, BigInt>>;

PairSet direct_pairs(const HtpyCP& x, const SearchWindow& w) {
  PairSet out;
  for (const auto& s : acs_direct_cp6(x, w)) out.emplace(s.a, *s.c);
  return out;
}

PairSet criterion_pairs(const HtpyCP& x, const SearchWindow& w) {
  PairSet out;
  for (long a = -w.a_max; a <= w.a_max; ++a) {
    if (a == 0) continue;
    for (long c = -w.c_max; c <= w.c_max; ++c)
      if (cp6_criterion(x, a, c)) out.emplace(a, c);
  }
  return out;
}

Json pairs_json(const PairSet& s, std::size_t limit) {
  Json out = Json::array();
  for (const auto& [a, c] : s) {
    if (out.size() == limit) break;
    out.push_back({to_json(a), to_json(c)});
  }
  return out;
}

Json poly_diff(const MPolyZ& computed, const MPolyZ& expected) {
  return {{"computed", computed.str()}, {"expected", expected.str()}, {"computed_minus_expected", (computed - expected).str()}};
}

void symbolic_checks(Suite& out, int d, const std::string& dir, const std::string& file) {
  const SymbolicNumerators s = symbolic_numerators(d);
  const auto rows = golden_rows(dir, file);
  Json dens = Json::array(), mults = Json::array();
  bool dens_ok = rows.size() == s.f.size(), mults_ok = dens_ok;
  for (std::size_t i = 0; i < s.f.size(); ++i) {
    dens.push_back(to_json(s.denominators[i]));
    mults.push_back(to_json(s.multiples[i]));
    if (i < rows.size()) {
      dens_ok = dens_ok && s.denominators[i] == parse_bigint(rows[i][1]);
      mults_ok = mults_ok && s.multiples[i] == parse_bigint(rows[i][2]);
    }
  }
  out.push_back(check("denominators", dens_ok, {{"computed", dens}}));
  out.push_back(check("reference_multiples", mults_ok, {{"computed", mults}}));

  Json rows_checked = Json::array();
  bool numerators_ok = true;
  for (std::size_t i = 0; i < rows.size() && i < s.f.size(); ++i) {
    if (rows[i].size() < 4 || rows[i][3].empty()) continue;
    const MPolyZ expected = MPolyZ::parse(rows[i][3]);
    if (s.f[i] != expected) {
      numerators_ok = false;
      rows_checked.push_back({{"row", i + 1}, {"diff", poly_diff(s.f[i], expected)}});
    } else {
      rows_checked.push_back({{"row", i + 1}, {"match", true}});
    }
  }
  out.push_back(check("numerators_match_display", numerators_ok, rows_checked));

  MPolyZ expected_ref;
  for (const auto& r : golden_rows(dir, "symbolic_reference.csv"))
    if (std::stoi(r[0]) == d) expected_ref = MPolyZ::parse(r[1]);
  out.push_back(check("reference_polynomial", s.reference == expected_ref,
                      s.reference == expected_ref ? Json(s.reference.str()) : poly_diff(s.reference, expected_ref)));

  const bool all_div = std::all_of(s.remainder_divisible.begin(), s.remainder_divisible.end(), [](bool b) { return b; });
  out.push_back(check("remainders_divisible_by_a", all_div));
}

}  // namespace

Suite suite_ktheory() {
  Suite out;
  bool cr = true, rc = true;
  Json bad = Json::array();
  for (int d : {4, 5, 6}) {
    for (int i = 0; i <= d; ++i) {
      const KClass x = KClass::line(d).pow(static_cast<unsigned>(i));
      if (complexify(real_reduce(x)) != x + conjugate(x)) {
        cr = false;
        bad.push_back({{"dim", d}, {"L_power", i}});
      }
    }
    for (int j = 0; j <= KOClass::top_power(d); ++j) {
      const KOClass w = KOClass::omega(d).pow(static_cast<unsigned>(j));
      if (real_reduce(complexify(w)) != BigInt(2) * w) {
        rc = false;
        bad.push_back({{"dim", d}, {"omega_power", j}});
      }
    }
  }
  out.push_back(check("c_after_r_is_1_plus_t", cr, cr ? Json(nullptr) : bad));
  out.push_back(check("r_after_c_is_2", rc, rc ? Json(nullptr) : bad));

  bool psi2 = true, psi4sq = true;
  for (int d : {4, 5, 6}) {
    const KOClass w = KOClass::omega(d);
    psi2 = psi2 && adams_ko(2, w) == w * w + BigInt(4) * w;
    psi4sq = psi4sq && adams_ko(4, w) == adams_ko(2, adams_ko(2, w));
  }
  out.push_back(check("psi2_omega", psi2));
  const KOClass psi4 = adams_ko(4, KOClass::omega(5));
  out.push_back(check("psi4_omega_cp5", psi4 == ko(5, {0, 16, 20}), ko_json(psi4)));
  out.push_back(check("psi4_is_psi2_squared", psi4sq));

  constexpr int d5 = 5;
  const KClass mu1 = KClass::hopf_power(d5, 1) - KClass::hopf_power(d5, -1);
  const KClass mu2 = KClass::hopf_power(d5, 2) - KClass::hopf_power(d5, -2);
  const KClass two_l5 = BigInt(2) * KClass::line(d5).pow(5);
  const bool kills = real_reduce(mu1).is_zero() && real_reduce(mu2).is_zero() && real_reduce(two_l5).is_zero();
  out.push_back(check("r_kills_kernel_cp5", kills,
                      {{"mu1", ko_json(real_reduce(mu1))}, {"mu2", ko_json(real_reduce(mu2))},
                       {"2L5", ko_json(real_reduce(two_l5))}}));

  bool hits = true;
  for (int d : {4, 5, 6}) {
    const KClass l = KClass::line(d);
    const std::vector<KClass> pre = {l, l.pow(2) - BigInt(2) * l, l.pow(3) - BigInt(3) * l.pow(2) + BigInt(6) * l};
    for (int j = 1; j <= KOClass::top_power(d); ++j)
      hits = hits && real_reduce(pre[static_cast<std::size_t>(j - 1)]) == KOClass::omega(d).pow(static_cast<unsigned>(j));
  }
  hits = hits && real_reduce(KClass::line(d5).pow(5)) == KOClass::omega(d5).pow(3);
  out.push_back(check("r_hits_omega_powers", hits));
  return out;
}

Suite suite_chernvec(std::uint64_t seed) {
  Suite out;
  bool basis = true;
  Json bad = nullptr;
  for (int d = 1; d <= 8 && basis; ++d) {
    const RatMatrix w = w_matrix(d);
    for (long m = -30; m <= 30; ++m) {
      const RatVector closed = closed_form_w(m, d);
      const RatVector b = moment_vector(m, d);
      const RatVector solved = solve_exact(w, b);
      CohClass sum(d);
      for (int k = 0; k <= d; ++k) sum = sum + closed[static_cast<std::size_t>(k)] * q_vector(k, d);
      const bool integral = std::all_of(closed.begin(), closed.end(), [](const BigRational& x) { return x.is_integer(); });
      if (!integral || closed != solved || sum != q_vector(m, d)) {
        basis = false;
        bad = {{"dim", d}, {"m", m}};
        break;
      }
    }
  }
  out.push_back(check("chern_character_basis", basis, bad));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-6, 6);
  bool round = true;
  Json counter = nullptr;
  for (int d = 2; d <= 6 && round; ++d) {
    for (int trial = 0; trial < 1000; ++trial) {
      Decomposition a;
      for (int k = 0; k < d; ++k) a.a.emplace_back(dist(rng));
      const auto back = realizable(chern_from_multiplicities(a));
      if (!back || *back != a) {
        round = false;
        counter = {{"dim", d}, {"a", to_json(a.a)}};
        break;
      }
    }
  }
  out.push_back(check("realizability_roundtrip", round, counter.is_null() ? Json{{"seed", seed}} : counter));
  out.push_back(check("rejects_0_1_0_0", !realizable(ChernVector(4, {0, 1, 0, 0}))));

  bool d2 = true;
  for (long c1 = -20; c1 <= 20; ++c1)
    for (long c2 = -20; c2 <= 20; ++c2) d2 = d2 && realizable(ChernVector(2, {c1, c2})).has_value();
  out.push_back(check("every_pair_realizable_d2", d2));
  return out;
}

Suite suite_cp4(const std::string& golden_dir) {
  Suite out;
  bool agree = true;
  Json detail = Json::array();
  for (long m : {-22L, -8L, 0L, 6L, 14L, 20L, 28L, 34L}) {
    const HtpyCP x = validate_params(4, m, BigInt((4 * m * m - 10 * m) / 28));
    const BigInt target = cp4_divisor_target(m);
    std::set<BigInt> by_divisor, by_scan;
    for (const auto& s : acs_search_cp4(x)) by_divisor.insert(s.a);
    for (const auto& s : acs_direct_cp4(x, BigInt(abs(target)).get_si())) by_scan.insert(s.a);
    agree = agree && by_divisor == by_scan;
    detail.push_back({{"m", m}, {"target", to_json(target)}, {"count", by_divisor.size()}, {"agree", by_divisor == by_scan}});
  }
  out.push_back(check("divisor_criterion_equals_direct", agree, detail));

  const HtpyCP standard = validate_params(4, 0, 0);
  std::set<BigInt> as;
  bool has_five = false;
  for (const auto& s : acs_search_cp4(standard)) {
    as.insert(s.a);
    if (s.a == 5) has_five = s.full_chern == ChernVector(4, {5, 10, 10, 5});
  }
  const std::set<BigInt> expected = {-25, -5, -1, 1, 5, 25};
  out.push_back(check("standard_cp4", as == expected && has_five));

  symbolic_checks(out, 4, golden_dir, "cp4_symbolic.csv");
  const MPolyZ f = symbolic_numerators(4).reference;
  const MPolyZ f7 = reduce_mod(f, 7);
  bool vanishes = f7 == MPolyZ::parse("3m^2 + 3m");
  for (long r : {0L, 6L}) vanishes = vanishes && reduce_mod(f, 7, {{}, {{Var::m, r}}}).is_zero();
  out.push_back(check("reference_vanishes_mod_7", vanishes, f7.str()));
  return out;
}

Suite suite_cp5(const std::string& golden_dir) {
  Suite out;
  const Cp5Symbolic s = symbolic_verify_cp5();
  out.push_back(check("K_vanishes", s.k_vanishes, s.k_combination.str()));
  out.push_back(check("mn_cancellation", s.mn_from_k5 == 320 && s.mn_from_mk3 == -320,
                      {to_json(s.mn_from_k5), to_json(s.mn_from_mk3)}));
  out.push_back(check("c5_is_6_plus_6K", s.c5_matches, s.c5.str()));

  bool series = s.l2_power_series.size() == 6;
  for (const auto& r : golden_rows(golden_dir, "cp5_l2_power.csv")) {
    const auto deg = static_cast<std::size_t>(std::stoul(r[0]));
    series = series && deg < s.l2_power_series.size() && s.l2_power_series[deg] == MPolyZ::parse(r[1]);
  }
  out.push_back(check("L2_power_series", series));
  out.push_back(golden_bytes("chern_series", table_chern_series_cp5(), golden_path(golden_dir, "chern_series_cp5.csv")));

  bool grid = true;
  Json counter = nullptr;
  for (long m = -40; m <= 40 && grid; m += 2) {
    for (long n = -20; n <= 20; ++n) {
      const Cp5Structure st = cp5_structure(validate_params(5, m, n));
      if (!st.report.passed()) {
        grid = false;
        counter = {{"m", m}, {"n", n}, {"real_reduction", ko_json(st.report.real_reduction)},
                   {"tangent", ko_json(st.report.tangent)}, {"c5", to_json(st.report.c5)}};
        break;
      }
    }
  }
  out.push_back(check("structure_grid", grid, counter));

  const Cp5Structure ex = cp5_structure(validate_params(5, 2, 0));
  const bool example = ex.e == KClass(5, {0, 6, 24, 0, 86, -62}) && ex.report.real_reduction == ko(5, {0, 54, 196}) &&
                       ex.report.c5 == 6;
  out.push_back(check("example_m2_n0", example));
  return out;
}

Suite suite_cp6(const std::string& golden_dir) {
  Suite out;
  out.push_back(golden_bytes("mod31_table", table_mod31(), golden_path(golden_dir, "mod31.csv")));
  out.push_back(golden_bytes("pontrjagin_omega", table_pontrjagin_omega(6), golden_path(golden_dir, "pontrjagin_omega_d6.csv")));

  const auto triples = cp6_triples(96, 40);
  bool two_routes = true, mod16 = true;
  for (const auto& x : triples) {
    try {
      (void)pontrjagin_of_X(x);
    } catch (const InternalCheckFailure&) {
      two_routes = false;
    }
    mod16 = mod16 && x.m() % 16 == 0;
  }
  out.push_back(check("pontrjagin_two_routes", two_routes, {{"triples", triples.size()}}));
  out.push_back(check("m_divisible_by_16", mod16, {{"triples", triples.size()}}));

  const HtpyCP standard = validate_params(6, 0, 0, BigInt(0));
  const PairSet std_pairs = direct_pairs(standard, {40, 40});
  const auto full = complete_chern_vector(standard, 7, BigInt(35));
  const bool standard_ok = std_pairs.count({1, 1}) && std_pairs.count({7, 35}) && full &&
                           *full == ChernVector(6, {7, 21, 35, 35, 21, 7});
  out.push_back(check("standard_cp6", standard_ok));

  symbolic_checks(out, 6, golden_dir, "cp6_symbolic.csv");

  const SearchWindow window{200, 200};
  bool agree = true, empty_off3 = true;
  Json agree_detail = Json::array(), off3_detail = Json::array();
  for (const auto& x : cp6_triples(48, 40)) {
    const PairSet direct = direct_pairs(x, window);
    if (x.m() % 3 == 0) {
      const PairSet crit = criterion_pairs(x, window);
      Json only_direct = Json::array(), only_crit = Json::array();
      for (const auto& p : direct)
        if (!crit.count(p) && only_direct.size() < 3) only_direct.push_back({to_json(p.first), to_json(p.second)});
      for (const auto& p : crit)
        if (!direct.count(p) && only_crit.size() < 3) only_crit.push_back({to_json(p.first), to_json(p.second)});
      agree = agree && direct == crit;
      agree_detail.push_back({{"triple", x.str()}, {"direct", direct.size()}, {"criterion", crit.size()},
                              {"agree", direct == crit}, {"only_direct", only_direct}, {"only_criterion", only_crit}});
    } else {
      empty_off3 = empty_off3 && direct.empty();
      off3_detail.push_back({{"triple", x.str()}, {"direct", direct.size()}, {"first", pairs_json(direct, 3)}});
    }
  }
  out.push_back(check("criterion_equals_direct_m_0_mod_3", agree, agree_detail));
  out.push_back(check("no_structures_m_not_0_mod_3", empty_off3, off3_detail));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ktheory", "chernvec", "cp4", "cp5", "cp6"};
  return names;
}

Suite run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "ktheory") return suite_ktheory();
  if (name == "chernvec") return suite_chernvec(options.seed);
  if (name == "cp4") return suite_cp4(options.golden_dir);
  if (name == "cp5") return suite_cp5(options.golden_dir);
  if (name == "cp6") return suite_cp6(options.golden_dir);
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace acs::cli
