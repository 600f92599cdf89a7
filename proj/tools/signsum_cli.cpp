// signsum: command-line harness for signed vector sums, zonotope circumradii
// and Minkowski-sum bounds.
//
// Exit codes: 0 all checks passed, 2 usage or input error, 3 a mathematical
// invariant was violated.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "signsum/bounds.hpp"
#include "signsum/io.hpp"
#include "signsum/optimizer.hpp"
#include "signsum/verify.hpp"
#include "signsum/zonotope.hpp"

namespace {

using namespace signsum;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct Output {
  std::string out_path;
  std::string format = "json";
};

struct CommandResult {
  int code = kExitOk;
  std::string text;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& command, const std::map<std::string, std::string>& params,
              std::uint64_t seed, const Output& out) {
  json outputs = json::array();
  if (!out.out_path.empty()) outputs.push_back(out.out_path);
  return {{"command", command},
          {"parameters", params},
          {"seed", seed},
          {"outputs", outputs},
          {"timestamp", utc_timestamp()}};
}

void emit(const Output& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out.out_path, text);
  }
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.out_path, "Output file (stdout if omitted)");
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

// signed-sum ---------------------------------------------------------------

struct SignedSumArgs {
  std::string input;
  std::string method = "sweep";
};

CommandResult run_signed_sum(const SignedSumArgs& a, const Output& out) {
  const GeneratorSet g = generators_from_json(read_json_file(a.input));
  const bool planar = g.dimension() == 2;
  if (a.method != "brute" && !planar) throw InputError("sweep method needs planar generators");

  SignedSumResult primary =
      a.method == "brute" ? max_signed_sum_brute(g) : max_signed_sum_sweep(g);
  CommandResult res;
  json j{{"command", "signed-sum"}, {"method", a.method}, {"n", g.size()}};
  if (a.method == "both") {
    const SignedSumResult brute = max_signed_sum_brute(g);
    const bool agree = std::abs(primary.value - brute.value) <= 1e-12 * (1.0 + brute.value);
    j["brute"] = to_json(brute);
    j["agreement"] = agree;
    if (!agree) {
      std::cerr << "oracle disagreement: sweep " << format_number(primary.value) << " vs brute "
                << format_number(brute.value) << "\n";
      res.code = kExitViolation;
    }
  }
  // The lower bound is planar; in higher dimension it can fail (orthonormal frames).
  std::vector<BoundReport> reports;
  j["result"] = to_json(primary);
  j["lower_bound"] = nullptr;
  j["equality"] = nullptr;
  j["report"] = nullptr;
  if (planar) {
    const double bound = signed_sum_lower_bound(g);
    const BoundReport report = make_report(primary.value, bound, "max signed sum >= bound");
    if (!report.holds()) {
      std::cerr << "lower bound violated: " << to_json(report).dump() << "\n";
      res.code = kExitViolation;
    }
    reports.push_back(report);
    j["lower_bound"] = bound;
    j["equality"] = equality_case_check(g, 1e-9);
    j["report"] = to_json(report);
  }
  j["manifest"] = manifest("signed-sum", {{"input", a.input}, {"method", a.method}}, 0, out);
  res.text = out.format == "csv" ? reports_to_csv(reports) : j.dump(2) + "\n";
  return res;
}

// c-table ------------------------------------------------------------------

CommandResult run_c_table(int n_max, const Output& out) {
  if (n_max < 1) throw InputError("--n-max must be >= 1");
  const double limit = 2.0 / std::numbers::pi;
  CommandResult res;
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "n,c_2nn,ratio,gap_to_2_over_pi\n";
    for (int n = 1; n <= n_max; ++n) {
      const double ratio = zonoid_disc_ratio(n);
      csv << n << ',' << format_number(c_exact_2nn(n).value) << ',' << format_number(ratio) << ','
          << format_number(ratio - limit) << '\n';
    }
    res.text = csv.str();
  } else {
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
      const double ratio = zonoid_disc_ratio(n);
      rows.push_back({{"n", n},
                      {"c_2nn", c_exact_2nn(n).value},
                      {"ratio", ratio},
                      {"gap_to_2_over_pi", ratio - limit}});
    }
    json j{{"command", "c-table"}, {"rows", rows}};
    j["manifest"] = manifest("c-table", {{"n-max", std::to_string(n_max)}}, 0, out);
    res.text = j.dump(2) + "\n";
  }
  return res;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int count = 100;
  std::uint64_t seed = 1;
  std::string fixtures = SIGNSUM_FIXTURE_DIR;
};

CommandResult run_verify(const VerifyArgs& a, const Output& out) {
  const auto results = run_verification(a.suite, a.count, a.seed, a.fixtures);
  CommandResult res;
  json suites = json::array();
  std::vector<BoundReport> fixtures;
  std::size_t violations = 0;
  for (const auto& r : results) {
    suites.push_back(to_json(r));
    fixtures.insert(fixtures.end(), r.fixture_reports.begin(), r.fixture_reports.end());
    violations += r.violations.size();
    for (const auto& v : r.violations) {
      std::cerr << "violation [" << r.suite << "] " << v.check;
      if (!v.detail.empty()) std::cerr << " (" << v.detail << ")";
      std::cerr << "\n  instance: " << v.instance.dump() << "\n";
    }
  }
  if (violations > 0) res.code = kExitViolation;
  if (out.format == "csv") {
    res.text = reports_to_csv(fixtures);
  } else {
    json j{{"command", "verify"}, {"suites", suites}, {"violations", violations}};
    j["manifest"] = manifest("verify",
                             {{"suite", a.suite},
                              {"count", std::to_string(a.count)},
                              {"seed", std::to_string(a.seed)},
                              {"fixtures", a.fixtures}},
                             a.seed, out);
    res.text = j.dump(2) + "\n";
  }
  return res;
}

// optimize -----------------------------------------------------------------

struct OptimizeArgs {
  int d = 2;
  int n = 3;
  int k = 0;
  std::string settings_path;
  OptimizerSettings settings;
};

CommandResult run_optimize(OptimizeArgs a, const Output& out) {
  if (!a.settings_path.empty()) {
    a.settings = settings_from_json(read_json_file(a.settings_path), a.settings);
  }
  if (a.k == 0) a.k = a.n;
  const ConfigurationEstimate e = estimate_c(a.d, a.n, a.k, a.settings);
  const SandwichReport s = sandwich_check(e);
  CommandResult res;
  if (!s.holds) {
    std::cerr << "sandwich violated: value " << format_number(e.best_value) << "\n";
    res.code = kExitViolation;
  }
  if (out.format == "csv") {
    std::vector<BoundReport> reports;
    if (s.lower_applies) reports.push_back(s.lower);
    reports.push_back(s.upper);
    res.text = reports_to_csv(reports);
  } else {
    json j{{"command", "optimize"},
           {"estimate", to_json(e)},
           {"settings", to_json(a.settings)},
           {"sandwich",
            {{"lower", to_json(s.lower)},
             {"upper", to_json(s.upper)},
             {"lower_applies", s.lower_applies},
             {"holds", s.holds}}}};
    j["manifest"] = manifest("optimize",
                             {{"d", std::to_string(a.d)},
                              {"n", std::to_string(a.n)},
                              {"k", std::to_string(a.k)},
                              {"restarts", std::to_string(a.settings.restarts)},
                              {"seed", std::to_string(a.settings.seed)},
                              {"max-iters", std::to_string(a.settings.max_iters)},
                              {"tol", format_number(a.settings.tol)}},
                             a.settings.seed, out);
    res.text = j.dump(2) + "\n";
  }
  return res;
}

int run(const std::vector<std::string>& args);

// replay -------------------------------------------------------------------

CommandResult run_replay(const std::string& input, const Output& out) {
  const json report = read_json_file(input);
  const json& m = report.contains("manifest") ? report.at("manifest") : report;
  if (!m.contains("command") || !m.contains("parameters")) {
    throw InputError("no run manifest in " + input);
  }
  std::vector<std::string> args{"signsum", m.at("command").get<std::string>()};
  for (const auto& [key, value] : m.at("parameters").items()) {
    args.push_back("--" + key);
    args.push_back(value.get<std::string>());
  }
  if (!out.out_path.empty()) {
    args.push_back("--out");
    args.push_back(out.out_path);
  }
  args.push_back("--format");
  args.push_back(out.format);
  return {run(args), ""};
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Signed vector sums, zonotope circumradii and Minkowski-sum bounds"};
  app.require_subcommand(1);

  Output out;
  SignedSumArgs ss;
  auto* cmd_ss = app.add_subcommand("signed-sum", "Largest signed sum of a generator set");
  cmd_ss->add_option("--input", ss.input, "GeneratorSet JSON")->required();
  cmd_ss->add_option("--method", ss.method, "sweep, brute or both")
      ->check(CLI::IsMember({"sweep", "brute", "both"}));
  add_output_flags(cmd_ss, out);

  int n_max = 20;
  Output table_out{"", "csv"};
  auto* cmd_table = app.add_subcommand("c-table", "Table of c(2,n,n) and the zonoid ratio");
  cmd_table->add_option("--n-max", n_max, "Largest n")->required();
  add_output_flags(cmd_table, table_out);

  VerifyArgs va;
  auto* cmd_verify = app.add_subcommand("verify", "Run verification suites");
  cmd_verify->add_option("--suite", va.suite, "dowker, zonotope, minkowski, remark or all")
      ->check(CLI::IsMember({"dowker", "zonotope", "minkowski", "remark", "all"}));
  cmd_verify->add_option("--count", va.count, "Random instances per suite")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--seed", va.seed, "Random seed");
  cmd_verify->add_option("--fixtures", va.fixtures, "Fixture directory");
  add_output_flags(cmd_verify, out);

  OptimizeArgs oa;
  auto* cmd_opt = app.add_subcommand("optimize", "Estimate c(d,n,k) by multi-start search");
  cmd_opt->add_option("--d", oa.d, "Dimension (2 or 3)");
  cmd_opt->add_option("--n", oa.n, "Number of unit vectors")->required();
  cmd_opt->add_option("--k", oa.k, "Subset size (defaults to n)");
  cmd_opt->add_option("--restarts", oa.settings.restarts, "Random restarts");
  cmd_opt->add_option("--seed", oa.settings.seed, "Random seed");
  cmd_opt->add_option("--max-iters", oa.settings.max_iters, "Sweeps per restart");
  cmd_opt->add_option("--tol", oa.settings.tol, "Smallest line-search bracket");
  cmd_opt->add_option("--settings", oa.settings_path, "OptimizerSettings JSON");
  add_output_flags(cmd_opt, out);

  std::string replay_input;
  auto* cmd_replay = app.add_subcommand("replay", "Re-run the manifest stored in a report");
  cmd_replay->add_option("--input", replay_input, "Report or manifest JSON")->required();
  add_output_flags(cmd_replay, out);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CommandResult res;
    const Output* target = &out;
    if (cmd_ss->parsed()) {
      res = run_signed_sum(ss, out);
    } else if (cmd_table->parsed()) {
      res = run_c_table(n_max, table_out);
      target = &table_out;
    } else if (cmd_verify->parsed()) {
      res = run_verify(va, out);
    } else if (cmd_opt->parsed()) {
      res = run_optimize(oa, out);
    } else {
      return run_replay(replay_input, out).code;
    }
    emit(*target, res.text);
    return res.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const OptimizerError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: bad JSON content: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(std::vector<std::string>(argv, argv + argc)); }
