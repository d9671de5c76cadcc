// Copyright 2026 The ghzsdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzsdc/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ghzsdc/adversary.h"
#include "ghzsdc/analysis.h"
#include "ghzsdc/channel.h"
#include "ghzsdc/errors.h"
#include "ghzsdc/measurement.h"
#include "ghzsdc/protocol.h"
#include "ghzsdc/serialize.h"
#include "spec_text.h"

namespace ghzsdc::cli {
namespace {

using nlohmann::json;

struct Options {
  unsigned n = 3;
  double c = kDefaultControlProbability;
  std::string message;
  std::string attack = "no_attack";
  std::optional<std::uint64_t> rounds;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Number of parties / qubits");
  cmd->add_option("--c", o.c, "Control-mode probability");
  cmd->add_option("--message", o.message, "Message bits, e.g. 1011");
  cmd->add_option("--attack", o.attack, "Attack spec (JSON, shorthand, or @file)");
  cmd->add_option("--rounds", o.rounds, "Round cap (run) or Monte Carlo rounds per row (sweep)");
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--out", o.out, "Output file");
  cmd->add_option("--format", o.format, "json or csv");
}

std::string read_spec(const std::string& spec) {
  if (spec.empty() || spec.front() != '@') {
    return spec;
  }
  std::ifstream in(spec.substr(1));
  if (!in) {
    throw UsageError("cannot read attack spec file " + spec.substr(1));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw UsageError("cannot open output file " + path);
  }
  f << contents;
  if (!f) {
    throw UsageError("failed writing " + path);
  }
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? sep : "") + parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// run

int cmd_run(const Options& o, std::ostream& out) {
  if (o.message.empty()) {
    throw UsageError("run needs --message");
  }
  if (!o.format.empty() && o.format != "json") {
    throw UsageError("run writes JSON transcripts only");
  }
  SessionConfig config;
  config.n_parties = o.n;
  config.control_probability = o.c;
  config.message_bits = bits_from_string(o.message);
  config.seed = o.seed;
  config.attack = parse_attack_spec(read_spec(o.attack));
  config.max_rounds = o.rounds.value_or(0);

  const Transcript t = run_session(config);
  const std::string path = o.out.empty() ? "transcript.json" : o.out;
  write_file(path, to_json(t).dump(2) + "\n");

  std::vector<std::string> decoded;
  for (const auto& bits : t.decoded_message) {
    decoded.push_back(bits_to_string(bits));
  }
  out << "run: n=" << config.n_parties << " rounds=" << t.rounds.size() << " attack=" << describe(config.attack);
  if (t.aborted) {
    out << " ABORTED at round " << *t.abort_round << " (" << t.untransmitted_bits << " bits untransmitted)";
  } else if (!t.completed()) {
    out << " INCOMPLETE after round cap (" << t.untransmitted_bits << " bits untransmitted)";
  } else {
    out << " completed";
  }
  out << " decoded=[" << join(decoded, ",") << "] -> " << path << "\n";
  if (t.aborted) {
    return kAborted;
  }
  return t.completed() ? kSuccess : kIncomplete;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<double> read_grid(const json& j, const AttackFamily& family, unsigned n) {
  if (!j.contains("grid")) {
    return family.default_grid(n);
  }
  const json& g = j.at("grid");
  std::vector<double> grid;
  if (g.is_array()) {
    for (const auto& v : g) {
      if (!v.is_number()) {
        throw UsageError("grid entries must be numbers");
      }
      grid.push_back(v.get<double>());
    }
  } else if (g.is_object() && g.contains("start") && g.contains("stop") && g.contains("step")) {
    const double start = g.at("start").get<double>();
    const double stop = g.at("stop").get<double>();
    const double step = g.at("step").get<double>();
    if (!(step > 0.0)) {
      throw UsageError("grid step must be positive");
    }
    for (long k = 0;; ++k) {
      const double v = start + static_cast<double>(k) * step;
      if (v > stop + 1e-9 * step) {
        break;
      }
      grid.push_back(std::min(v, stop));
    }
  } else {
    throw UsageError("grid must be a list or {start, stop, step}");
  }
  return grid;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (!o.rounds) {
    throw UsageError("sweep needs --rounds (Monte Carlo rounds per row; 0 skips the column)");
  }
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "json") {
    throw UsageError("--format must be csv or json");
  }
  const json j = detail::spec_text_to_json(read_spec(o.attack), "family");
  if (j.is_discarded() || !j.is_object()) {
    throw UsageError("sweep attack spec must be a JSON object or shorthand family[:key=value,...]");
  }
  std::string name;
  if (j.contains("family") && j.at("family").is_string()) {
    name = j.at("family").get<std::string>();
  } else if (j.contains("variant") && j.at("variant").is_string()) {
    name = j.at("variant").get<std::string>();
  } else {
    throw UsageError("sweep attack spec needs a 'family'");
  }
  AttackFamily family;
  if (name == "no_attack" || name == "none") {
    family.kind = AttackFamily::Kind::kNoAttack;
  } else if (name == "ghz_pauli") {
    family.kind = AttackFamily::Kind::kGhzPauli;
  } else if (name == "depolarize") {
    family.kind = AttackFamily::Kind::kDepolarize;
  } else if (name == "intercept_resend") {
    family.kind = AttackFamily::Kind::kInterceptResend;
  } else {
    throw UsageError("unknown sweep family '" + name +
                     "' (expected no_attack, ghz_pauli, depolarize, intercept_resend)");
  }
  if (j.contains("qubits")) {
    family.qubits = j.at("qubits").get<std::vector<unsigned>>();
  }
  if (j.contains("basis")) {
    family.basis = parse_basis(j.at("basis").get<std::string>());
  }
  const std::vector<double> grid = read_grid(j, family, o.n);
  if (grid.empty()) {
    throw UsageError("sweep grid is empty");
  }

  const auto rows = sweep(family, grid, o.n, o.seed, *o.rounds);
  const std::string path = o.out.empty() ? (format == "csv" ? "sweep.csv" : "sweep.json") : o.out;
  write_file(path, format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows).dump(2) + "\n");
  const auto satisfied = std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.bound_satisfied; });
  out << "sweep: family=" << family.name() << " n=" << o.n << " rows=" << rows.size()
      << " bound_satisfied=" << satisfied << "/" << rows.size() << " -> " << path << "\n";
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

Check check_bx_table(unsigned n, std::uint64_t index, int expected_product, std::ostream& out) {
  const OutcomeTable table = measure_all_density(DensityOperator::from_pure(ghz_basis_state(n, index)), Basis::kX);
  const double expected_p = std::ldexp(1.0, -static_cast<int>(n - 1));
  out << "Bx outcomes of " << ghz_basis_label(n, index) << ":\n  ";
  for (unsigned k = 0; k < n; ++k) {
    out << "q" << k << "  ";
  }
  out << "product  probability\n";
  bool pass = true;
  std::size_t rows = 0;
  for (std::uint64_t i = 0; i < table.probabilities.size(); ++i) {
    const double p = table.probabilities[i];
    if (p < 1e-12) {
      continue;
    }
    ++rows;
    out << "  ";
    for (int v : outcomes_from_index(i, n)) {
      out << std::setw(2) << std::showpos << v << std::noshowpos << "  ";
    }
    out << std::setw(7) << std::showpos << outcome_product(i) << std::noshowpos << "  " << p << "\n";
    pass = pass && outcome_product(i) == expected_product && std::abs(p - expected_p) <= 1e-12;
  }
  pass = pass && rows == (std::size_t{1} << (n - 1));
  return {"bx_table_" + std::to_string(index), pass,
          std::to_string(rows) + " tuples, all with product " + (expected_product > 0 ? "+1" : "-1")};
}

int cmd_verify(const Options& o, std::ostream& out) {
  const unsigned n = o.n;
  if (n < 2 || n > kMaxDensityQubits) {
    throw UsageError("verify supports 2 <= n <= " + std::to_string(kMaxDensityQubits));
  }
  std::vector<Check> checks;
  checks.push_back(check_bx_table(n, 0, +1, out));
  checks.push_back(check_bx_table(n, 1, -1, out));

  {
    const auto basis = ghz_basis(n);
    double gram_err = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        gram_err = std::max(gram_err, std::abs(inner_product(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)));
      }
    }
    checks.push_back({"basis_orthonormal", gram_err <= 1e-12, "max |Gram - I| = " + std::to_string(gram_err)});
  }
  if (n == 3) {
    const char* expected[8] = {"(|000>+|111>)/sqrt2", "(|000>-|111>)/sqrt2", "(|100>+|011>)/sqrt2",
                               "(|100>-|011>)/sqrt2", "(|010>+|101>)/sqrt2", "(|010>-|101>)/sqrt2",
                               "(|001>+|110>)/sqrt2", "(|001>-|110>)/sqrt2"};
    bool pass = true;
    for (std::uint64_t i = 0; i < 8; ++i) {
      pass = pass && ghz_basis_label(3, i) == expected[i];
    }
    checks.push_back({"basis_order", pass, "phi_0..phi_7 in reference order"});
  }
  {
    const double at_zero = entropy_bound(0.0, n);
    const double uniform_gamma = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
    const double at_uniform = entropy_bound(uniform_gamma, n);
    const double at_one = entropy_bound(1.0, n);
    const bool pass = at_zero == 0.0 && std::abs(at_uniform - n) <= 1e-12 &&
                      std::abs(at_one - std::log2(std::ldexp(1.0, static_cast<int>(n)) - 1.0)) <= 1e-12;
    std::ostringstream d;
    d << "S(0)=" << at_zero << " S(" << uniform_gamma << ")=" << at_uniform << " S(1)=" << at_one;
    checks.push_back({"entropy_bound_endpoints", pass, d.str()});
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double g = k / 99.0;
      worst = std::max(worst, std::abs(entropy_bound(g, n) - entropy_bound_check(g, n)));
    }
    checks.push_back({"entropy_bound_spectral", worst <= 1e-10, "max deviation " + std::to_string(worst)});
  }

  bool all = true;
  json report = json::array();
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    all = all && c.pass;
    report.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  if (!o.out.empty()) {
    write_file(o.out, json{{"n", n}, {"checks", report}, {"all_pass", all}}.dump(2) + "\n");
  }
  return all ? kSuccess : kUsageError;
}

// ---------------------------------------------------------------------------
// bases

int cmd_bases(const Options& o, std::ostream& out) {
  if (o.n < 2 || o.n > kMaxQubits) {
    throw UsageError("bases supports 2 <= n <= " + std::to_string(kMaxQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << o.n;
  for (std::uint64_t i = 0; i < dim; ++i) {
    out << "phi_" << i << " = " << ghz_basis_label(o.n, i) << "\n";
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GHZ-state multi-party secure direct communication simulator", "ghzsdc"};
  app.require_subcommand(1);
  Options o;
  CLI::App* run = app.add_subcommand("run", "Run a protocol session and write its transcript");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep an attack family and write gamma/d/S rows");
  CLI::App* verify = app.add_subcommand("verify", "Regenerate the reference outcome tables and checks");
  CLI::App* bases = app.add_subcommand("bases", "Print the GHZ-type basis");
  for (CLI::App* cmd : {run, sweep_cmd, verify, bases}) {
    add_common(cmd, o);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (run->parsed()) {
      return cmd_run(o, out);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(o, out);
    }
    if (verify->parsed()) {
      return cmd_verify(o, out);
    }
    return cmd_bases(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed spec: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace ghzsdc::cli
