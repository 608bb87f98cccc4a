// Copyright 2026 The blindlab Authors
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

#include "blindlab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "blindlab/report.hpp"

namespace blindlab {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultSimulateBudget = 20;
constexpr int kDefaultReductionBudget = 12;
constexpr std::uint64_t kDefaultSamples = 100000;
constexpr std::size_t kMaxTruthTableBits = 16;

Json config_json(const ExperimentConfig& c) {
  Json j = Json::object();
  j["command"] = c.command;
  j["circuits"] = c.circuits;
  j["scheme"] = c.scheme;
  j["server"] = c.server;
  j["family"] = c.family;
  j["xs"] = c.xs;
  j["epsilon"] = c.epsilon;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["budget_n"] = c.budget_n ? Json(*c.budget_n) : Json(nullptr);
  j["budget_coins"] = c.budget_coins;
  j["samples"] = c.samples ? Json(*c.samples) : Json(nullptr);
  j["format"] = c.format;
  j["mode"] = c.mode;
  j["m"] = c.m;
  j["truth_table"] = c.truth_table;
  j["s"] = c.s ? Json(*c.s) : Json(nullptr);
  j["x"] = c.x;
  j["random"] = c.random_count;
  j["max_n"] = c.max_n;
  j["max_gates"] = c.max_gates;
  return j;
}

std::uint64_t require_seed(const ExperimentConfig& c, const std::string& why) {
  if (!c.seed) throw UsageError(c.command + " " + why + " needs --seed");
  return *c.seed;
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read circuit file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_circuit(buf.str());
  } catch (const CircuitParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  }
}

void check_qubits(const Circuit& c, int budget, const std::string& name) {
  if (c.n_qubits() > budget) {
    throw BudgetExceeded(name + " has " + std::to_string(c.n_qubits()) + " qubits; the limit is " +
                         std::to_string(budget) + " (raise --budget-n)");
  }
}

/// Within 5 binomial standard deviations; a zero or one probability demands an exact count.
bool within_five_sigma(std::uint64_t hits, std::uint64_t n, double p) {
  const double freq = static_cast<double>(hits) / static_cast<double>(n);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
  return std::abs(freq - p) <= 5 * sigma + 1e-12;
}

Json sample_summary(std::uint64_t hits, std::uint64_t n, double p) {
  return Json{{"runs", n},
              {"accepts", hits},
              {"frequency", static_cast<double>(hits) / static_cast<double>(n)},
              {"within_5_sigma", within_five_sigma(hits, n, p)}};
}

struct Outcome {
  Json result = Json::object();
  std::vector<CsvRow> rows;
  bool pass = true;
};

// ---------------------------------------------------------------- simulate

Outcome cmd_simulate(const ExperimentConfig& c) {
  if (c.circuits.size() != 1) throw UsageError("simulate takes exactly one --circuit");
  const Circuit circuit = load_circuit(c.circuits.front());
  const int budget = c.budget_n.value_or(kDefaultSimulateBudget);
  check_qubits(circuit, budget, "circuit");
  const SimulationLimits limits{budget, std::max(26, budget)};
  const std::string mode = c.mode.empty() ? "dqc1" : c.mode;

  BinaryDistribution d;
  if (mode == "dqc1") {
    d = dqc1_distribution(circuit, limits);
  } else if (mode == "pure") {
    d = BinaryDistribution::from_p1(acceptance_probability(circuit, limits));
  } else if (mode == "iqp") {
    const auto form = is_iqp_form(circuit);
    if (!form) throw UsageError("circuit is not of the form H-layer, diagonal gates, H-layer");
    d = iqp_marginal_distribution(*form, c.m, limits);
  } else {
    throw UsageError("simulate --mode must be dqc1, pure or iqp");
  }

  Outcome o;
  o.result["n_qubits"] = circuit.n_qubits();
  o.result["mode"] = mode;
  if (mode == "iqp") o.result["m"] = c.m;
  o.result["distribution"] = to_json(d);
  o.rows.push_back({c.circuits.front(), mode + ":p1", true, d.p1().to_string()});
  if (c.samples) {
    std::mt19937_64 rng(require_seed(c, "with --samples"));
    std::uint64_t ones = 0;
    for (std::uint64_t i = 0; i < *c.samples; ++i) ones += static_cast<std::uint64_t>(sample_outcome(d, rng));
    o.result["samples"] = sample_summary(ones, *c.samples, d.p1().to_double());
  }
  return o;
}

// ---------------------------------------------------------------- reduce

Outcome cmd_reduce(const ExperimentConfig& c) {
  if (c.circuits.size() != 1) throw UsageError("reduce takes exactly one --circuit");
  const Circuit v = load_circuit(c.circuits.front());
  check_qubits(v, c.budget_n.value_or(kDefaultReductionBudget), "circuit");
  const auto dqc1 = build_dqc1_reduction(v);
  const auto iqp = build_iqp_reduction(v);
  Outcome o;
  o.result["source"] = serialize_circuit(v);
  o.result["w_circuit"] = serialize_circuit(dqc1.w_circuit);
  o.result["dqc1_circuit"] = serialize_circuit(dqc1.dqc1_circuit);
  o.result["dqc1_qubits"] = dqc1.dqc1_circuit.n_qubits();
  o.result["ancilla_count"] = dqc1.ancilla_count;
  o.result["iqp_circuit"] = serialize_circuit(iqp.iqp.to_circuit());
  o.result["iqp_qubits"] = iqp.iqp.n_qubits;
  o.result["s"] = iqp.s;
  o.result["postselect_count"] = iqp.postselect_count;
  o.rows.push_back({c.circuits.front(), "s", true, std::to_string(iqp.s)});
  return o;
}

// ---------------------------------------------------------------- verify-reductions

Outcome cmd_verify(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, Circuit>> corpus;
  for (const auto& path : c.circuits) corpus.emplace_back(path, load_circuit(path));
  if (c.random_count > 0) {
    std::mt19937_64 rng(require_seed(c, "with --random"));
    if (c.max_n < 1 || c.max_gates < 0) throw UsageError("--max-n must be positive and --max-gates non-negative");
    std::uniform_int_distribution<int> pick_n(1, c.max_n), pick_g(0, c.max_gates);
    for (int i = 0; i < c.random_count; ++i) {
      const int n = pick_n(rng);
      corpus.emplace_back("random-" + std::to_string(i), random_circuit(rng, n, pick_g(rng)));
    }
  }
  if (corpus.empty()) throw UsageError("verify-reductions needs --circuit PATH or --random N");

  const int budget = c.budget_n.value_or(kDefaultReductionBudget);
  const SimulationLimits limits{budget + 4, std::max(26, budget + 4)};
  Outcome o;
  Json reports = Json::array();
  for (const auto& [name, v] : corpus) {
    check_qubits(v, budget, name);
    const auto r = verify_reductions(v, limits);
    const bool zv = r.p_v.is_zero(), zd = r.ptilde_actual.is_zero(), zi = r.iqp_actual.is_zero();
    const bool zero_chain = zv == zd && zd == zi;
    Json j = to_json(r);
    j["name"] = name;
    j["circuit"] = serialize_circuit(v);
    j["zero_chain_ok"] = zero_chain;
    reports.push_back(std::move(j));
    o.pass = o.pass && r.all_ok() && zero_chain;
    o.rows.push_back({name, "w", r.w_ok, r.p_w.to_string()});
    o.rows.push_back({name, "dqc1", r.dqc1_ok, r.ptilde_actual.to_string()});
    o.rows.push_back({name, "iqp", r.iqp_ok, r.iqp_actual.to_string()});
    o.rows.push_back({name, "state_identity", r.state_identity_ok,
                      r.global_phase ? std::to_string(*r.global_phase) : std::string("none")});
    o.rows.push_back({name, "zero_chain", zero_chain, zv ? "zero" : "positive"});
  }
  o.result["reports"] = std::move(reports);
  o.result["all_ok"] = o.pass;
  return o;
}

// ---------------------------------------------------------------- protocol setup

struct ProtocolSetup {
  std::unique_ptr<Scheme> scheme;
  std::shared_ptr<const CircuitFamily> family;
  std::unique_ptr<ServerModel> server;
  std::vector<BitString> xs;
  Rational epsilon;
  ProtocolLimits limits;
};

ProtocolSetup make_setup(const ExperimentConfig& c) {
  if (c.scheme.empty()) {
    std::string names;
    for (const auto& n : scheme_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError(c.command + " needs --scheme (one of " + names + ")");
  }
  ProtocolSetup p;
  p.scheme = make_scheme(c.scheme);
  p.family = make_family(c.family.empty() ? p.scheme->manifest().default_family : c.family);
  p.limits.max_coin_bits = c.budget_coins;
  p.limits.simulation.max_dqc1_qubits = c.budget_n.value_or(kDefaultSimulateBudget);
  p.limits.simulation.max_statevector_qubits = std::max(26, p.limits.simulation.max_dqc1_qubits);
  p.server = make_server(c.server, p.family, p.limits.simulation);
  if (c.xs.empty()) {
    p.xs = p.family->default_parameters();
  } else {
    for (const auto& x : c.xs) p.xs.push_back(BitString::from_string(x));
  }
  p.epsilon = parse_rational(c.epsilon);
  return p;
}

struct AuditResult {
  Json json;
  std::vector<CsvRow> rows;
  bool correctness = false, blindness = false, fail_probability = false;
  bool pass() const { return correctness && blindness && fail_probability; }
};

AuditResult audit(const ProtocolSetup& p) {
  AuditResult a;
  const auto correctness = check_correctness(*p.scheme, *p.server, *p.family, p.xs, p.epsilon, p.limits);
  const auto blindness = check_blindness_pairs(*p.scheme, p.xs, p.limits);
  a.correctness = correctness.pass();
  a.blindness = std::all_of(blindness.begin(), blindness.end(), [](const auto& r) { return r.pass(); });
  a.fail_probability = correctness.max_fail_probability < Rational(1, 2);

  Json jb = Json::array();
  for (const auto& r : blindness) {
    jb.push_back(to_json(r));
    a.rows.push_back({r.x1.to_string() + "|" + r.x2.to_string(), "blindness", r.pass(),
                      std::to_string(r.only_x1.size() + r.only_x2.size()) + " unmatched"});
  }
  for (const auto& e : correctness.entries) {
    a.rows.push_back({e.x.to_string() + "/" + e.key.to_string(), "correctness", e.check.pass,
                      e.check.residuals[1].to_string()});
  }
  a.json["correctness"] = to_json(correctness);
  a.json["blindness"] = std::move(jb);
  a.json["correctness_pass"] = a.correctness;
  a.json["blindness_pass"] = a.blindness;
  a.json["fail_probability_ok"] = a.fail_probability;
  return a;
}

Json setup_json(const ProtocolSetup& p) {
  Json xs = Json::array();
  for (const auto& x : p.xs) xs.push_back(x.to_string());
  return Json{{"scheme", to_json(p.scheme->manifest())},
              {"server", p.server->name()},
              {"family", p.family->name()},
              {"xs", xs},
              {"epsilon", to_string(p.epsilon)}};
}

// ---------------------------------------------------------------- scheme-audit

Outcome cmd_audit(const ExperimentConfig& c) {
  const auto p = make_setup(c);
  auto a = audit(p);
  Outcome o;
  o.result = setup_json(p);
  o.result["audit"] = std::move(a.json);
  o.rows = std::move(a.rows);
  o.pass = a.pass();
  return o;
}

// ---------------------------------------------------------------- extract

Outcome cmd_extract(const ExperimentConfig& c) {
  const auto p = make_setup(c);
  std::mt19937_64 rng(require_seed(c, "advice sampling"));
  const ResponseMode mode = parse_response_mode(c.mode.empty() ? "single" : c.mode);
  const std::uint64_t samples = c.samples.value_or(kDefaultSamples);

  auto a = audit(p);
  const bool audits_pass = a.pass();

  Outcome o;
  o.result = setup_json(p);
  o.result["mode"] = to_string(mode);
  o.result["audits_pass"] = audits_pass;
  o.result["audit"] = std::move(a.json);

  std::map<std::size_t, Advice> advice;
  std::map<std::string, BinaryDistribution> ideal_cache;
  Json per_x = Json::array();
  std::vector<BitString> xs = p.xs;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& x : xs) {
    auto ait = advice.find(x.size());
    if (ait == advice.end()) ait = advice.emplace(x.size(), make_advice(*p.scheme, *p.server, x.size(), mode, rng)).first;
    const Advice& adv = ait->second;

    const Circuit circuit = p.family->circuit(x);
    const std::string key = serialize_circuit(circuit);
    auto cit = ideal_cache.find(key);
    if (cit == ideal_cache.end()) cit = ideal_cache.emplace(key, dqc1_distribution(circuit, p.limits.simulation)).first;
    const ExactProbability& p1 = cit->second.p1();

    const auto outcome = extract_decide(*p.scheme, adv, x, p.limits);
    const auto bounds = check_extraction_bounds(outcome, p1, p.epsilon);
    const bool decision_ok = outcome.accept == !p1.is_zero();

    Json j = to_json(outcome);
    j["x"] = x.to_string();
    put_exact(j, "p1", p1);
    j["bounds"] = to_json(bounds);
    j["decision_matches_p1"] = decision_ok;
    bool sample_ok = true;
    if (samples > 0) {
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < samples; ++i) hits += extract_run_once(*p.scheme, adv, x, rng) ? 1 : 0;
      sample_ok = within_five_sigma(hits, samples, outcome.p_acc.to_double());
      j["sampled"] = sample_summary(hits, samples, outcome.p_acc.to_double());
    }
    per_x.push_back(std::move(j));

    o.rows.push_back({x.to_string(), "decision", decision_ok, outcome.accept ? "accept" : "reject"});
    o.rows.push_back({x.to_string(), "bounds", bounds.ok, outcome.p_acc.to_string()});
    if (samples > 0) o.rows.push_back({x.to_string(), "sampled", sample_ok, std::to_string(samples)});
    o.pass = o.pass && decision_ok && sample_ok && (!audits_pass || bounds.ok);
  }
  Json jadv = Json::object();
  for (const auto& [s, adv] : advice) jadv[std::to_string(s)] = to_json(adv);
  o.result["advice"] = std::move(jadv);
  o.result["outcomes"] = std::move(per_x);
  return o;
}

// ---------------------------------------------------------------- all-demo

Outcome cmd_all_demo(const ExperimentConfig& c) {
  std::optional<std::mt19937_64> rng;
  if (c.seed) rng.emplace(*c.seed);
  TruthTable f;
  if (!c.truth_table.empty()) {
    f = TruthTable::parse(c.truth_table);
  } else {
    if (!c.s) throw UsageError("all-demo needs --truth-table STRING or --s BITS with --seed");
    if (*c.s < 0 || static_cast<std::size_t>(*c.s) > kMaxTruthTableBits) {
      throw BudgetExceeded("--s must lie in [0, " + std::to_string(kMaxTruthTableBits) + "]");
    }
    if (!rng) throw UsageError("all-demo with a random truth table needs --seed");
    f = TruthTable::random(*rng, static_cast<std::size_t>(*c.s));
  }
  if (c.samples && !rng) throw UsageError("all-demo with --samples needs --seed");

  std::vector<BitString> xs;
  if (!c.x.empty()) {
    xs.push_back(BitString::from_string(c.x));
  } else {
    for (std::uint64_t i = 0; i < f.values.size(); ++i) xs.push_back(BitString::from_index(i, f.s));
  }

  Outcome o;
  const RealSqrt2 unit = RealSqrt2(1).shifted_down(static_cast<unsigned>(f.s));
  Json outcomes = Json::array();
  for (const auto& x : xs) {
    const auto r = all_demo(f, x, kMaxTruthTableBits);
    const bool want = r.fx == TruthValue::one;
    const bool ok = r.accept == want && r.p_acc.value() == (want ? unit : RealSqrt2());
    Json j = to_json(r);
    j["ok"] = ok;
    if (c.samples) {
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < *c.samples; ++i) hits += all_demo_run_once(f, x, *rng) ? 1 : 0;
      j["sampled"] = sample_summary(hits, *c.samples, r.p_acc.to_double());
    }
    outcomes.push_back(std::move(j));
    o.rows.push_back({x.to_string(), "decision", ok, r.accept ? "accept" : "reject"});
    o.pass = o.pass && ok;
  }
  o.result["s"] = f.s;
  o.result["truth_table"] = f.to_string();
  o.result["outcomes"] = std::move(outcomes);
  return o;
}

void validate(const ExperimentConfig& c) {
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  if (c.budget_n && *c.budget_n <= 0) throw UsageError("--budget-n must be positive");
  if (c.budget_coins <= 0) throw UsageError("--budget-coins must be positive");
  if (c.samples && *c.samples == 0) throw UsageError("--samples must be positive");
  const Rational eps = parse_rational(c.epsilon);
  if (eps < 0 || eps >= 1) throw UsageError("--epsilon must lie in [0, 1)");
}

}  // namespace

int dispatch(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    Outcome o;
    if (c.command == "simulate") o = cmd_simulate(c);
    else if (c.command == "reduce") o = cmd_reduce(c);
    else if (c.command == "verify-reductions") o = cmd_verify(c);
    else if (c.command == "scheme-audit") o = cmd_audit(c);
    else if (c.command == "extract") o = cmd_extract(c);
    else if (c.command == "all-demo") o = cmd_all_demo(c);
    else throw UsageError("unknown command '" + c.command + "'");

    std::string text;
    if (c.format == "csv") {
      text = dump_csv(o.rows);
    } else {
      Json report = Json::object();
      report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
      report["command"] = c.command;
      report["config"] = config_json(c);
      report["result"] = std::move(o.result);
      report["pass"] = o.pass;
      text = dump_json(report);
    }
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!(f << text)) {
        err << "error: cannot write report to '" << c.out << "'\n";
        return kExitUsage;
      }
    }
    return o.pass ? kExitPass : kExitCheckFailed;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

namespace {

template <class T>
void from_config(const Json& cfg, const char* key, const CLI::App* sub, const char* flag, T& target) {
  if (!cfg.contains(key) || sub->count(flag) > 0) return;
  const Json& v = cfg.at(key);
  if constexpr (std::is_same_v<T, std::string>) {
    target = v.is_string() ? v.get<std::string>() : v.dump();
  } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
    target.clear();
    if (v.is_array()) {
      for (const auto& e : v) target.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    } else {
      std::stringstream ss(v.get<std::string>());
      for (std::string part; std::getline(ss, part, ',');) target.push_back(part);
    }
  } else {
    target = v.get<typename T::value_type>();
  }
}

std::optional<int> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be an integer");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"blindlab: exact laboratory for blind delegation of one-clean-qubit and IQP sampling"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  ExperimentConfig c;
  std::string config_path;
  std::optional<int> budget_coins;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"simulate", "One-clean-qubit, pure or IQP output distribution of a circuit file"},
      {"reduce", "Emit the W, one-clean-qubit and postselected IQP compilations of a circuit"},
      {"verify-reductions", "Check both reduction identities exactly on circuit files or a random corpus"},
      {"scheme-audit", "Exhaustive correctness and blindness audit of a delegation scheme"},
      {"extract", "Run the advice-based decider built from a scheme"},
      {"all-demo", "Decide an arbitrary truth table with a sampled-advice decider"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--circuit", c.circuits, "Circuit file (repeatable for verify-reductions)");
    sub->add_option("--scheme", c.scheme, "leaky | constant | otp | otp-parity | flagged-otp-parity");
    sub->add_option("--server", c.server, "honest | honest-padded:R | fixed:Q");
    sub->add_option("--family", c.family, "basic10 | parity-flip | parity-flip-t | degenerate");
    sub->add_option("--xs", c.xs, "Comma-separated parameter bit strings")->delimiter(',');
    sub->add_option("--epsilon", c.epsilon, "Multiplicative error, a rational in [0, 1)");
    sub->add_option("--seed", c.seed, "RNG seed");
    sub->add_option("--budget-n", c.budget_n, "Qubit bound for exact simulation");
    sub->add_option("--budget-coins", budget_coins, "Coin-bit bound for key enumeration");
    sub->add_option("--samples", c.samples, "Number of sampled runs");
    sub->add_option("--out", c.out, "Report path (default: stdout)");
    sub->add_option("--format", c.format, "json | csv");
    sub->add_option("--mode", c.mode, "simulate: dqc1 | pure | iqp; extract: single | poly");
    sub->add_option("--m", c.m, "Number of measured qubits for IQP mode");
    sub->add_option("--config", config_path, "JSON experiment descriptor; flags take precedence");
    sub->add_option("--truth-table", c.truth_table, "String over {0,1,*} of length 2^s");
    sub->add_option("--s", c.s, "Truth-table width for a random table");
    sub->add_option("--x", c.x, "Single input for all-demo");
    sub->add_option("--random", c.random_count, "Random corpus size for verify-reductions");
    sub->add_option("--max-n", c.max_n, "Largest qubit count in the random corpus");
    sub->add_option("--max-gates", c.max_gates, "Largest gate count in the random corpus");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  try {
    bool coins_from_config = false;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot read config file '" + config_path + "'");
      Json cfg;
      try {
        cfg = Json::parse(in);
      } catch (const Json::exception& e) {
        throw UsageError("config '" + config_path + "' is not valid JSON: " + e.what());
      }
      if (!cfg.is_object()) throw UsageError("config '" + config_path + "' must be a JSON object");
      try {
        from_config(cfg, "circuits", sub, "--circuit", c.circuits);
        from_config(cfg, "scheme", sub, "--scheme", c.scheme);
        from_config(cfg, "server", sub, "--server", c.server);
        from_config(cfg, "family", sub, "--family", c.family);
        from_config(cfg, "xs", sub, "--xs", c.xs);
        from_config(cfg, "epsilon", sub, "--epsilon", c.epsilon);
        from_config(cfg, "seed", sub, "--seed", c.seed);
        from_config(cfg, "budget_n", sub, "--budget-n", c.budget_n);
        from_config(cfg, "samples", sub, "--samples", c.samples);
        from_config(cfg, "mode", sub, "--mode", c.mode);
        from_config(cfg, "truth_table", sub, "--truth-table", c.truth_table);
        from_config(cfg, "s", sub, "--s", c.s);
        from_config(cfg, "x", sub, "--x", c.x);
        from_config(cfg, "out", sub, "--out", c.out);
        from_config(cfg, "format", sub, "--format", c.format);
        if (cfg.contains("budget_coins") && sub->count("--budget-coins") == 0) {
          budget_coins = cfg.at("budget_coins").get<int>();
          coins_from_config = true;
        }
      } catch (const Json::exception& e) {
        throw UsageError("config '" + config_path + "': " + e.what());
      }
    }
    if (!c.budget_n) c.budget_n = env_int("BLINDLAB_BUDGET_N");
    if (!budget_coins && !coins_from_config) budget_coins = env_int("BLINDLAB_BUDGET_COINS");
    if (budget_coins) c.budget_coins = *budget_coins;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return dispatch(c, out, err);
}

}  // namespace blindlab
