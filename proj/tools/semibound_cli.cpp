// semibound: rational-point upper bounds from numerical-semigroup data.
//
// Subcommands: apery (Apéry table), gm (Geil-Matsumoto / Lewittes report),
// kummer (full bound slate for a Kummer cover), sweep (Lewittes-minus-GM
// grid over interval semigroups), verify (randomized formula-vs-brute-force
// cross-check). Output formats: plain, csv, json.
//
// Exit codes: 0 success, 1 verify found discrepancies, 2 invalid input,
// 3 overflow or resource limit.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semibound/gm_bounds.hpp"
#include "semibound/interval.hpp"
#include "semibound/kummer.hpp"
#include "semibound/oracle.hpp"
#include "semibound/verify.hpp"

namespace {

using nlohmann::json;
using namespace semibound;

enum class Format { Plain, Csv, Json };

struct SweepRow {
  int64_t t, q, lewittes, gm;
};

std::vector<int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<int64_t> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string("cannot parse ") + what + " entry '" +
                            item + "'");
    }
  }
  if (out.empty())
    throw ValidationError(std::string("empty list for ") + what);
  return out;
}

std::pair<int64_t, int64_t> parse_q_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int64_t v = std::stoll(text);
      return {v, v};
    }
    int64_t lo = std::stoll(text.substr(0, colon));
    int64_t hi = std::stoll(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw ValidationError("cannot parse q range '" + text + "' (use LO:HI or N)");
  }
}

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ValidationError("unknown format '" + name + "'");
}

GMMethod parse_method(const std::string& name) {
  if (name == "auto") return GMMethod::Auto;
  if (name == "general") return GMMethod::General;
  if (name == "two-generator") return GMMethod::TwoGenerator;
  if (name == "interval-sum") return GMMethod::IntervalSum;
  if (name == "interval-closed") return GMMethod::IntervalClosed;
  if (name == "oracle") return GMMethod::Oracle;
  throw ValidationError("unknown method '" + name + "'");
}

std::string join(const std::vector<int64_t>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int64_t resource_cap_from_env() {
  if (const char* raw = std::getenv("SEMIBOUND_RESOURCE_CAP")) {
    try {
      int64_t cap = std::stoll(raw);
      if (cap < 1) throw std::invalid_argument(raw);
      return cap;
    } catch (const std::exception&) {
      throw ValidationError("SEMIBOUND_RESOURCE_CAP must be a positive integer");
    }
  }
  return kDefaultResourceCap;
}

// --- apery -----------------------------------------------------------------

int cmd_apery(const std::string& gens, int64_t n, Format format) {
  NumericalSemigroup s = make_semigroup(parse_int_list(gens, "--gens"));
  AperyTable table = s.apery_set(n);
  switch (format) {
    case Format::Plain:
      std::cout << join(table.least(), ' ') << "\n";
      break;
    case Format::Csv:
      std::cout << "residue,least\n";
      for (int64_t i = 0; i < table.modulus(); ++i)
        std::cout << i << "," << table.least(i) << "\n";
      break;
    case Format::Json:
      std::cout << json{{"n", table.modulus()}, {"w", table.least()}}.dump()
                << "\n";
      break;
  }
  return 0;
}

// --- gm --------------------------------------------------------------------

int cmd_gm(const std::string& gens, int64_t q, const std::string& method,
           Format format) {
  NumericalSemigroup s = make_semigroup(parse_int_list(gens, "--gens"));
  BoundReport report =
      bound_report(s, GMQuery{q, parse_method(method), resource_cap_from_env()});
  switch (format) {
    case Format::Plain:
      std::cout << "gm=" << report.gm << " lewittes=" << report.lewittes
                << " equal=" << (report.equal ? "true" : "false")
                << " method=" << to_string(report.method_used)
                << " genus=" << report.genus << "\n";
      break;
    case Format::Csv:
      std::cout << "gm,lewittes,equal,method,genus\n"
                << report.gm << "," << report.lewittes << ","
                << (report.equal ? "true" : "false") << ","
                << to_string(report.method_used) << "," << report.genus << "\n";
      break;
    case Format::Json:
      std::cout << json{{"gm", report.gm},
                        {"lewittes", report.lewittes},
                        {"equal", report.equal},
                        {"method", std::string(to_string(report.method_used))},
                        {"genus", report.genus}}
                       .dump()
                << "\n";
      break;
  }
  return 0;
}

// --- kummer ------------------------------------------------------------------

struct KummerRow {
  KummerData data;
  CurveBoundReport report;
};

json kummer_row_json(const KummerRow& row) {
  return json{{"q", row.data.q},
              {"m", row.data.m},
              {"lambdas", row.data.lambdas},
              {"s", row.data.place_index},
              {"generators", row.report.semigroup.generators()},
              {"genus", row.report.genus},
              {"gm", row.report.gm},
              {"lewittes", row.report.lewittes},
              {"hws", row.report.hws},
              {"ihara", row.report.ihara},
              {"yl", row.report.yl},
              {"yl_lower", row.report.yl_detail.lower},
              {"yl_if_coprime", row.report.yl_detail.upper_if_coprime},
              {"yl_if_noncoprime", row.report.yl_detail.upper_if_noncoprime}};
}

void print_kummer_rows(const std::vector<KummerRow>& rows, Format format) {
  switch (format) {
    case Format::Plain:
      for (const KummerRow& row : rows) {
        std::cout << "q=" << row.data.q << " m=" << row.data.m << " lambdas="
                  << join(row.data.lambdas, ',') << " s=" << row.data.place_index
                  << " S=<" << join(row.report.semigroup.generators(), ',')
                  << "> genus=" << row.report.genus << " gm=" << row.report.gm
                  << " lewittes=" << row.report.lewittes
                  << " hws=" << row.report.hws << " ihara=" << row.report.ihara
                  << " yl=" << row.report.yl << " yl_branch="
                  << (row.report.yl_detail.coprime_branch ? "coprime" : "noncoprime")
                  << "\n";
      }
      break;
    case Format::Csv:
      std::cout << "q,m,lambdas,s,generators,genus,gm,lewittes,hws,ihara,yl,"
                   "yl_branch\n";
      for (const KummerRow& row : rows) {
        std::cout << row.data.q << "," << row.data.m << ","
                  << join(row.data.lambdas, ';') << "," << row.data.place_index
                  << "," << join(row.report.semigroup.generators(), ';') << ","
                  << row.report.genus << "," << row.report.gm << ","
                  << row.report.lewittes << "," << row.report.hws << ","
                  << row.report.ihara << "," << row.report.yl << ","
                  << (row.report.yl_detail.coprime_branch ? "coprime" : "noncoprime")
                  << "\n";
      }
      break;
    case Format::Json: {
      json rows_json = json::array();
      for (const KummerRow& row : rows) rows_json.push_back(kummer_row_json(row));
      std::cout << json{{"rows", rows_json}}.dump() << "\n";
      break;
    }
  }
}

// Built-in benchmark parameter sets: three-root and four-root covers with
// lambda_1 = 1 and the place above x = a_1.
const std::vector<std::vector<int64_t>> kThreeRootBatch = {
    {37, 27, 3, 3}, {37, 32, 7, 28}, {37, 34, 3, 3}, {41, 24, 3, 3},
    {41, 35, 7, 31}, {41, 40, 4, 4}, {79, 50, 9, 45},
};
const std::vector<std::vector<int64_t>> kFourRootBatch = {
    {13, 10, 5, 8, 8},
    {13, 11, 3, 6, 6},
};

int cmd_kummer(std::optional<int64_t> q, std::optional<int64_t> m,
               const std::string& lambdas, int64_t s,
               std::optional<int64_t> characteristic, bool table2, bool table3,
               Format format) {
  std::vector<KummerRow> rows;
  auto add_row = [&](int64_t row_q, int64_t row_m, std::vector<int64_t> row_lambdas,
                     int64_t row_s) {
    if (characteristic) {
      if (*characteristic < 2)
        throw ValidationError("--char must be >= 2");
      if (row_m % *characteristic == 0)
        throw ValidationError("the characteristic must not divide m");
    }
    KummerData data = make_kummer(row_q, row_m, std::move(row_lambdas), row_s);
    rows.push_back(KummerRow{data, curve_report(data)});
  };

  if (table2 || table3) {
    auto add_batch = [&](const std::vector<std::vector<int64_t>>& batch) {
      for (const auto& params : batch) {
        std::vector<int64_t> row_lambdas{1};
        row_lambdas.insert(row_lambdas.end(), params.begin() + 2, params.end());
        add_row(params[0], params[1], std::move(row_lambdas), 1);
      }
    };
    if (table2) add_batch(kThreeRootBatch);
    if (table3) add_batch(kFourRootBatch);
  } else {
    if (!q || !m)
      throw ValidationError("kummer needs --q and --m (or --table2/--table3)");
    add_row(*q, *m, parse_int_list(lambdas, "--lambdas"), s);
  }
  print_kummer_rows(rows, format);
  return 0;
}

// --- sweep -------------------------------------------------------------------

int cmd_sweep(int64_t n, const std::string& t_list, const std::string& q_range,
              Format format) {
  std::vector<int64_t> ts = parse_int_list(t_list, "--t");
  auto [q_lo, q_hi] = parse_q_range(q_range);
  if (q_lo < 1 || q_hi < q_lo)
    throw ValidationError("q range must satisfy 1 <= lo <= hi");

  std::vector<SweepRow> rows;
  for (int64_t t : ts) {
    NumericalSemigroup s = interval_to_semigroup(make_interval(n, t));
    for (int64_t q = q_lo; q <= q_hi; ++q) {
      BoundReport report = bound_report(s, GMQuery{q, GMMethod::Auto});
      rows.push_back(SweepRow{t, q, report.lewittes, report.gm});
    }
  }

  switch (format) {
    case Format::Plain: {
      std::cout << std::setw(4) << "t" << std::setw(5) << "q" << std::setw(10)
                << "lewittes" << std::setw(10) << "gm" << std::setw(7) << "diff"
                << "\n";
      for (const SweepRow& row : rows)
        std::cout << std::setw(4) << row.t << std::setw(5) << row.q
                  << std::setw(10) << row.lewittes << std::setw(10) << row.gm
                  << std::setw(7) << row.lewittes - row.gm << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "t,q,lewittes,gm,diff\n";
      for (const SweepRow& row : rows)
        std::cout << row.t << "," << row.q << "," << row.lewittes << ","
                  << row.gm << "," << row.lewittes - row.gm << "\n";
      break;
    case Format::Json: {
      json rows_json = json::array();
      for (const SweepRow& row : rows)
        rows_json.push_back(json{{"t", row.t},
                                 {"q", row.q},
                                 {"lewittes", row.lewittes},
                                 {"gm", row.gm},
                                 {"diff", row.lewittes - row.gm}});
      std::cout << json{{"n", n}, {"rows", rows_json}}.dump() << "\n";
      break;
    }
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(int64_t max_mult, int64_t max_q, int64_t trials, uint64_t seed,
               Format format) {
  VerifyConfig config;
  config.max_multiplicity = max_mult;
  config.max_q = max_q;
  config.trials = trials;
  config.seed = seed;
  config.resource_cap = resource_cap_from_env();
  std::vector<Discrepancy> found = run_verification(config);

  switch (format) {
    case Format::Plain:
      std::cout << found.size() << " discrepancies\n";
      for (const Discrepancy& d : found)
        std::cout << "gens=<" << join(d.generators, ',') << "> q=" << d.q
                  << " formula=" << d.formula << " expected=" << d.expected
                  << " actual=" << d.actual << "\n";
      break;
    case Format::Csv:
      std::cout << "generators,q,formula,expected,actual\n";
      for (const Discrepancy& d : found)
        std::cout << join(d.generators, ';') << "," << d.q << "," << d.formula
                  << "," << d.expected << "," << d.actual << "\n";
      break;
    case Format::Json: {
      json rows_json = json::array();
      for (const Discrepancy& d : found)
        rows_json.push_back(json{{"generators", d.generators},
                                 {"q", d.q},
                                 {"formula", d.formula},
                                 {"expected", d.expected},
                                 {"actual", d.actual}});
      std::cout << json{{"trials", trials}, {"discrepancies", rows_json}}.dump()
                << "\n";
      break;
    }
  }
  return found.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational-point upper bounds from numerical-semigroup data"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  auto add_format = [&format_name](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format: plain, csv, json")
        ->capture_default_str();
  };

  // apery
  auto* apery = app.add_subcommand("apery", "Apéry table of n in <gens>");
  std::string apery_gens;
  int64_t apery_n = 0;
  apery->add_option("--gens", apery_gens, "Comma-separated generators")->required();
  apery->add_option("--n", apery_n, "Nonzero element of the semigroup")->required();
  add_format(apery);

  // gm
  auto* gm = app.add_subcommand("gm", "Geil-Matsumoto and Lewittes bounds");
  std::string gm_gens, gm_method = "auto";
  int64_t gm_q = 0;
  gm->add_option("--gens", gm_gens, "Comma-separated generators")->required();
  gm->add_option("--q", gm_q, "Bound parameter q >= 1")->required();
  gm->add_option("--method", gm_method,
                 "auto, general, two-generator, interval-sum, interval-closed, oracle")
      ->capture_default_str();
  add_format(gm);

  // kummer
  auto* kummer = app.add_subcommand(
      "kummer", "Bound slate for y^m = prod (x - a_k)^{lambda_k}");
  std::optional<int64_t> kummer_q, kummer_m, kummer_char;
  std::string kummer_lambdas;
  int64_t kummer_s = 1;
  bool kummer_table2 = false, kummer_table3 = false;
  kummer->add_option("--q", kummer_q, "Field size");
  kummer->add_option("--m", kummer_m, "Covering degree");
  kummer->add_option("--lambdas", kummer_lambdas, "Comma-separated exponents");
  kummer->add_option("--s", kummer_s, "Index of the totally ramified place (0..r)")
      ->capture_default_str();
  kummer->add_option("--char", kummer_char,
                     "Field characteristic; enables the char-divides-m check");
  kummer->add_flag("--table2", kummer_table2,
                   "Run the built-in three-root benchmark rows");
  kummer->add_flag("--table3", kummer_table3,
                   "Run the built-in four-root benchmark rows");
  add_format(kummer);

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "Lewittes minus GM over interval semigroups <n..n+t>");
  int64_t sweep_n = 0;
  std::string sweep_t, sweep_q;
  sweep->add_option("--n", sweep_n, "Smallest generator")->required();
  sweep->add_option("--t", sweep_t, "Comma-separated t values")->required();
  sweep->add_option("--q", sweep_q, "q range LO:HI (or a single q)")->required();
  add_format(sweep);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Randomized formulas-vs-brute-force cross-check");
  int64_t verify_mult = 12, verify_q = 30, verify_trials = 500;
  uint64_t verify_seed = 42;
  verify->add_option("--max-mult", verify_mult, "Largest multiplicity to sample")
      ->capture_default_str();
  verify->add_option("--max-q", verify_q, "Largest q to sample")->capture_default_str();
  verify->add_option("--trials", verify_trials, "Number of random instances")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad flags exit 2
  }

  try {
    Format format = parse_format(format_name);
    if (apery->parsed()) return cmd_apery(apery_gens, apery_n, format);
    if (gm->parsed()) return cmd_gm(gm_gens, gm_q, gm_method, format);
    if (kummer->parsed())
      return cmd_kummer(kummer_q, kummer_m, kummer_lambdas, kummer_s,
                        kummer_char, kummer_table2, kummer_table3, format);
    if (sweep->parsed()) return cmd_sweep(sweep_n, sweep_t, sweep_q, format);
    if (verify->parsed())
      return cmd_verify(verify_mult, verify_q, verify_trials, verify_seed, format);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
