#include "mmaoi/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mmaoi/errors.hpp"
#include "mmaoi/index_solver.hpp"
#include "mmaoi/loss_surface.hpp"
#include "mmaoi/oracle.hpp"
#include "mmaoi/simulator.hpp"
#include "mmaoi/verification.hpp"

namespace mmaoi::cli {

namespace {

using nlohmann::json;

// Distinguishes "all checks ran and one failed" from validation errors.
struct CheckFailed {};

struct SurfaceOpts {
  std::string path;
  std::string gen;
  int d1 = 0;
  int d2 = 0;
  std::string boundary = "strict";
};

struct ConfigOpts {
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;
  int tau_max = 50;

  SystemConfig config() const { return SystemConfig{t1, t2, tau_max}; }
};

void add_surface_options(CLI::App* cmd, SurfaceOpts& s) {
  auto* path = cmd->add_option("--surface", s.path, "Loss surface file (.csv or .json)");
  auto* gen = cmd->add_option(
      "--gen", s.gen,
      "Synthetic surface NAME[:p1,p2,...]: constant:c | aoi_sum | aoi_weighted:w1,w2 | "
      "monotone_power:p1,p2 | nonmono_nonsep[:w1,w2,r1,r2,cross,amp,period]");
  path->excludes(gen);
  cmd->add_option("--d1", s.d1, "Generated grid size in delta1 (default: required domain)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--d2", s.d2, "Generated grid size in delta2 (default: required domain)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--boundary", s.boundary, "Out-of-grid behavior for the solver")
      ->check(CLI::IsMember({"strict", "clamp"}))
      ->capture_default_str();
}

void add_config_options(CLI::App* cmd, ConfigOpts& c) {
  cmd->add_option("--t1", c.t1, "Transmission time of modality 1 (slots)")->capture_default_str();
  cmd->add_option("--t2", c.t2, "Transmission time of modality 2 (slots)")->capture_default_str();
  cmd->add_option("--tau-max", c.tau_max, "Cap on consecutive transmissions")
      ->capture_default_str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad integer '") + item + "' in " + what);
    }
  }
  if (out.empty()) throw ConfigError(std::string(what) + " is empty");
  return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "index" && item != "rr" && item != "rand") {
      throw ConfigError("unknown policy '" + item + "' (expected index, rr or rand)");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw ConfigError("policy list is empty");
  return out;
}

BoundaryPolicy boundary_of(const SurfaceOpts& s) {
  return s.boundary == "clamp" ? BoundaryPolicy::Clamp : BoundaryPolicy::Strict;
}

struct ResolvedSurface {
  LossSurface surface;
  std::string source;
};

ResolvedSurface resolve_surface(const SurfaceOpts& s, const Domain& need) {
  if (s.path.empty() == s.gen.empty()) throw ConfigError("give exactly one of --surface or --gen");
  if (!s.path.empty()) return {load_surface(s.path, boundary_of(s)), s.path};
  const int d1 = s.d1 > 0 ? s.d1 : static_cast<int>(need.d1);
  const int d2 = s.d2 > 0 ? s.d2 : static_cast<int>(need.d2);
  const auto spec = parse_surface_spec(s.gen, d1, d2);
  return {generate_surface(spec, boundary_of(s)), "gen:" + format_surface_spec(spec)};
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

json surface_json(const ResolvedSurface& r) {
  return json{{"source", r.source},
              {"d1_max", r.surface.d1_max()},
              {"d2_max", r.surface.d2_max()},
              {"bound_m", r.surface.bound()},
              {"hash", hex64(r.surface.fingerprint())}};
}

json config_json(const SystemConfig& c) {
  return json{{"t1", c.t1}, {"t2", c.t2}, {"tau_max", c.tau_max}};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << content;
  if (!f) throw ConfigError("write failed for '" + path + "'");
}

// Emits `content` to --out when set, else to stdout.
void emit(const std::string& out_path, const std::string& content, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    write_file(out_path, content);
  }
}

json flags_json(const CLI::App* cmd) {
  json flags = json::object();
  for (const auto* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    flags[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
  }
  return flags;
}

/// Run manifest: everything needed to rerun the command (`args`) plus provenance.
void write_manifest(const std::string& path, const std::vector<std::string>& args,
                    const CLI::App* cmd, std::optional<std::uint64_t> surface_hash,
                    const std::vector<std::uint64_t>& seeds) {
  json m;
  m["tool"] = kToolName;
  m["version"] = kVersion;
  m["subcommand"] = args.front();
  m["args"] = args;
  m["flags"] = flags_json(cmd);
  m["surface_hash"] = surface_hash ? json(hex64(*surface_hash)) : json(nullptr);
  m["timestamp"] = utc_timestamp();
  m["seeds"] = seeds;
  write_file(path, m.dump(2) + "\n");
}

json index_json(const IndexTable& table) {
  json j;
  for (Modality m : {Modality::M1, Modality::M2}) {
    json gamma = json::array();
    json witness = json::array();
    for (const auto& e : table.entries(m)) {
      gamma.push_back(e.gamma);
      witness.push_back(e.witness);
    }
    const std::string suffix = std::to_string(static_cast<int>(m));
    j["gamma" + suffix] = std::move(gamma);
    j["k" + suffix] = std::move(witness);
  }
  return j;
}

json solution_json(const ThresholdSolution& s) {
  return json{{"l_opt", s.l_opt},
              {"policy", s.policy},
              {"iterations", s.iterations},
              {"residual", s.residual},
              {"bracket", {s.bracket_lo, s.bracket_hi}},
              {"saturated", {{"tau1", s.saturated1}, {"tau2", s.saturated2}}}};
}

// ---------------------------------------------------------------------------

struct SolveCmd {
  SurfaceOpts surface;
  ConfigOpts config;
  double tol = kDefaultTol;
  std::string out;
};

int do_solve(const SolveCmd& o, const std::vector<std::string>& args, const CLI::App* cmd,
             std::ostream& out) {
  const auto config = o.config.config();
  config.validate();
  const auto resolved = resolve_surface(o.surface, required_domain(config));
  const SchedulingProblem problem(resolved.surface, config);
  const auto sol = problem.solve(o.tol);

  json report;
  report["config"] = config_json(config);
  report["surface"] = surface_json(resolved);
  report["tol"] = o.tol;
  report["index"] = index_json(problem.index());
  report.update(solution_json(sol));
  report["cycle_length"] = cycle_length(config, sol.policy);
  emit(o.out, report.dump(2) + "\n", out);
  if (!o.out.empty()) {
    write_manifest(o.out + ".manifest.json", args, cmd, resolved.surface.fingerprint(), {});
  }
  return kSuccess;
}

struct SimulateCmd {
  SurfaceOpts surface;
  ConfigOpts config;
  double tol = kDefaultTol;
  std::string policy;
  std::uint64_t seed = 0;
  std::int64_t horizon = 0;
  std::int64_t warmup = 0;
  std::string out;
};

int do_simulate(const SimulateCmd& o, const std::vector<std::string>& args, const CLI::App* cmd,
                std::ostream& out) {
  const auto config = o.config.config();
  config.validate();
  const auto resolved = resolve_surface(o.surface, required_domain(config));

  PolicyKind policy = RoundRobin{};
  if (o.policy == "index") {
    const SchedulingProblem problem(resolved.surface, config);
    policy = IndexThreshold{problem.solve(o.tol).policy};
  } else if (o.policy == "rand") {
    policy = UniformRandom{o.seed};
  }
  SimOptions options;
  options.warmup = o.warmup;
  options.record_slots = !o.out.empty();
  options.record_transmissions = !o.out.empty();
  const auto trace = run(resolved.surface, config, policy, o.horizon, options);

  const std::string summary = json(trace.summary).dump(2) + "\n";
  if (o.out.empty()) {
    out << summary;
    return kSuccess;
  }
  {
    std::ostringstream slots;
    write_slots_csv(slots, trace);
    write_file(o.out + ".slots.csv", slots.str());
  }
  {
    std::ostringstream tx;
    write_transmissions_csv(tx, trace);
    write_file(o.out + ".tx.csv", tx.str());
  }
  write_file(o.out + ".summary.json", summary);
  std::vector<std::uint64_t> seeds;
  if (o.policy == "rand") seeds.push_back(o.seed);
  write_manifest(o.out + ".manifest.json", args, cmd, resolved.surface.fingerprint(), seeds);
  return kSuccess;
}

struct SweepCmd {
  SurfaceOpts surface;
  std::string t1_list = "2,4,6,8,10";
  std::string t2_list = "2,4,6,8,10";
  int tau_max = 50;
  double tol = kDefaultTol;
  std::string policies = "index,rr,rand";
  std::string seeds = "1,2,3,4,5";
  std::int64_t horizon = 100000;
  int jobs = 1;
  std::string out;
};

struct SweepCell {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;
  std::optional<StationaryPolicy> taus;
  Comparison comparison;
};

int do_sweep(const SweepCmd& o, const std::vector<std::string>& args, const CLI::App* cmd,
             std::ostream& out) {
  auto t1s = parse_int_list(o.t1_list, "--t1-list");
  auto t2s = parse_int_list(o.t2_list, "--t2-list");
  for (auto* v : {&t1s, &t2s}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  const auto names = parse_name_list(o.policies);
  std::vector<std::uint64_t> seeds;
  for (auto s : parse_int_list(o.seeds, "--seeds")) {
    if (s < 0) throw ConfigError("seeds must be non-negative");
    seeds.push_back(static_cast<std::uint64_t>(s));
  }
  if (o.jobs < 1) throw ConfigError("--jobs must be >= 1");

  std::vector<SweepCell> cells;
  Domain need{1, 1};
  for (auto t1 : t1s) {
    for (auto t2 : t2s) {
      const SystemConfig c{t1, t2, o.tau_max};
      c.validate();
      const auto d = required_domain(c);
      need = {std::max(need.d1, d.d1), std::max(need.d2, d.d2)};
      cells.push_back({t1, t2, std::nullopt, {}});
    }
  }
  const auto resolved = resolve_surface(o.surface, need);
  const bool with_index = std::find(names.begin(), names.end(), "index") != names.end();

  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        auto& cell = cells[i];
        const SystemConfig config{cell.t1, cell.t2, o.tau_max};
        if (with_index) cell.taus = SchedulingProblem(resolved.surface, config).solve(o.tol).policy;
        std::vector<PolicyKind> kinds;
        for (const auto& n : names) {
          if (n == "index") {
            kinds.emplace_back(IndexThreshold{*cell.taus});
          } else if (n == "rr") {
            kinds.emplace_back(RoundRobin{});
          } else {
            kinds.emplace_back(UniformRandom{});
          }
        }
        cell.comparison = compare_policies(resolved.surface, config, kinds, o.horizon, seeds);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(o.jobs), cells.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::ostringstream csv;
  csv << "t1,t2,policy,avg_loss,tau1,tau2,clamp_count,reduction_vs_rr_pct,reduction_vs_rand_pct\n";
  for (const auto& cell : cells) {
    for (const auto& r : cell.comparison.results) {
      csv << cell.t1 << ',' << cell.t2 << ',' << r.policy << ',' << format_double(r.avg_loss)
          << ',';
      if (r.policy == "index") {
        csv << cell.taus->tau1 << ',' << cell.taus->tau2;
      } else {
        csv << ',';
      }
      csv << ',' << r.clamp_count;
      for (const char* baseline : {"rr", "rand"}) {
        csv << ',';
        if (r.policy != "index") continue;
        for (const auto& [name, pct] : cell.comparison.reductions_pct) {
          if (name == baseline) csv << format_double(pct);
        }
      }
      csv << '\n';
    }
  }
  emit(o.out, csv.str(), out);
  if (!o.out.empty()) {
    write_manifest(o.out + ".manifest.json", args, cmd, resolved.surface.fingerprint(), seeds);
  }
  return kSuccess;
}

struct VerifyCmd {
  SurfaceOpts surface;
  ConfigOpts config;
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  double perturb = 0.0;
  std::string out;
};

int do_verify(const VerifyCmd& o, const std::vector<std::string>& args, const CLI::App* cmd,
              std::ostream& out, std::ostream& err) {
  const auto config = o.config.config();
  config.validate();
  const auto resolved = resolve_surface(o.surface, required_domain(config));
  const SchedulingProblem problem(resolved.surface, config);
  VerifyOptions options;
  options.solver_tol = o.tol;
  options.seed = o.seed;
  options.perturb = o.perturb;
  const auto report = verify_instance(problem, options);

  json j;
  j["config"] = config_json(config);
  j["surface"] = surface_json(resolved);
  j["solution"] = solution_json(report.solution);
  j["perturb"] = o.perturb;
  j["oracle"] = json{{"best_policy", report.oracle.best_policy},
                     {"best_avg_cost", report.oracle.best_avg_cost},
                     {"ties", report.oracle.ties}};
  j["bellman"] = report.bellman;
  j["checks"] = report.checks;
  j["pass"] = report.passed;
  emit(o.out, j.dump(2) + "\n", out);
  if (!o.out.empty()) {
    write_manifest(o.out + ".manifest.json", args, cmd, resolved.surface.fingerprint(), {o.seed});
  }
  if (!report.passed) {
    for (const auto& c : report.checks) {
      if (!c.passed) err << "check failed: " << c.name << ": " << c.detail << '\n';
    }
    throw CheckFailed{};
  }
  return kSuccess;
}

struct GenCmd {
  std::string gen;
  int d1 = 0;
  int d2 = 0;
  bool fit = false;
  ConfigOpts config;
  std::string out;
  std::string format;
};

int do_gen_surface(const GenCmd& o, const std::vector<std::string>& args, const CLI::App* cmd,
                   std::ostream& out) {
  std::int64_t d1 = o.d1;
  std::int64_t d2 = o.d2;
  if (o.fit) {
    const auto config = o.config.config();
    config.validate();
    const auto need = required_domain(config);
    d1 = std::max(d1, need.d1);
    d2 = std::max(d2, need.d2);
  }
  if (d1 < 1 || d2 < 1) throw BadSpec("give --d1 and --d2, or --fit-config");
  if (d1 > std::numeric_limits<int>::max() || d2 > std::numeric_limits<int>::max()) {
    throw BadSpec("domain too large");
  }
  const auto spec = parse_surface_spec(o.gen, static_cast<int>(d1), static_cast<int>(d2));
  const auto surface = generate_surface(spec);

  std::string format = o.format;
  if (format.empty()) {
    format = o.out.size() >= 5 && o.out.compare(o.out.size() - 5, 5, ".json") == 0 ? "json" : "csv";
  }
  std::ostringstream os;
  if (format == "json") {
    write_surface_json(os, surface);
  } else {
    write_surface_csv(os, surface);
  }
  emit(o.out, os.str(), out);
  if (!o.out.empty()) write_manifest(o.out + ".manifest.json", args, cmd, surface.fingerprint(), {});
  return kSuccess;
}

std::vector<std::string> replay_args(const std::string& manifest_path, const std::string& new_out) {
  std::ifstream in(manifest_path);
  if (!in) throw ConfigError("cannot open manifest '" + manifest_path + "'");
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid manifest: ") + e.what());
  }
  if (!m.contains("args") || !m["args"].is_array() || m["args"].empty()) {
    throw ConfigError("manifest has no args");
  }
  auto args = m["args"].get<std::vector<std::string>>();
  if (args.front() == "replay") throw ConfigError("manifest records a replay");
  if (m.value("version", std::string()) != kVersion) {
    throw ConfigError("manifest was written by version " + m.value("version", std::string("?")) +
                      ", this is " + kVersion);
  }
  if (!new_out.empty()) {
    bool replaced = false;
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--out" && i + 1 < args.size()) {
        args[i + 1] = new_out;
        replaced = true;
      } else if (args[i].rfind("--out=", 0) == 0) {
        args[i] = "--out=" + new_out;
        replaced = true;
      }
    }
    if (!replaced) {
      args.push_back("--out");
      args.push_back(new_out);
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal two-modality transmission scheduling under AoI-dependent inference error",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SolveCmd solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute index tables, threshold and optimal policy");
  add_surface_options(solve_cmd, solve.surface);
  add_config_options(solve_cmd, solve.config);
  solve_cmd->add_option("--tol", solve.tol, "Bisection tolerance")->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "Write the JSON report here (default stdout)");

  SimulateCmd sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate one policy and write its trace");
  add_surface_options(sim_cmd, sim.surface);
  add_config_options(sim_cmd, sim.config);
  sim_cmd->add_option("--tol", sim.tol, "Bisection tolerance for the index policy")
      ->capture_default_str();
  sim_cmd->add_option("--policy", sim.policy, "index | rr | rand")
      ->required()
      ->check(CLI::IsMember({"index", "rr", "rand"}));
  sim_cmd->add_option("--seed", sim.seed, "Seed of the uniform random policy")->capture_default_str();
  sim_cmd->add_option("--horizon", sim.horizon, "Accounted slots")->required();
  sim_cmd->add_option("--warmup", sim.warmup, "Slots simulated before accounting")
      ->capture_default_str();
  sim_cmd->add_option("--out", sim.out,
                      "Output prefix: PREFIX.slots.csv, PREFIX.tx.csv, PREFIX.summary.json "
                      "(default: summary to stdout)");

  SweepCmd sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare policies over a grid of (T1, T2)");
  add_surface_options(sweep_cmd, sweep.surface);
  sweep_cmd->add_option("--t1-list", sweep.t1_list, "Comma-separated T1 values")
      ->capture_default_str();
  sweep_cmd->add_option("--t2-list", sweep.t2_list, "Comma-separated T2 values")
      ->capture_default_str();
  sweep_cmd->add_option("--tau-max", sweep.tau_max, "Cap on consecutive transmissions")
      ->capture_default_str();
  sweep_cmd->add_option("--tol", sweep.tol, "Bisection tolerance")->capture_default_str();
  sweep_cmd->add_option("--policies", sweep.policies, "Subset of index,rr,rand")
      ->capture_default_str();
  sweep_cmd->add_option("--seeds", sweep.seeds, "Seeds averaged for the random policy")
      ->capture_default_str();
  sweep_cmd->add_option("--horizon", sweep.horizon, "Slots per simulation")->capture_default_str();
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Write the CSV here (default stdout)");

  VerifyCmd verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify the solver on one instance");
  add_surface_options(verify_cmd, verify.surface);
  add_config_options(verify_cmd, verify.config);
  verify_cmd->add_option("--tol", verify.tol, "Bisection tolerance")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random-beta checks")
      ->capture_default_str();
  verify_cmd->add_option("--inject-perturb", verify.perturb,
                         "Add this to l_opt before certifying (should then fail)");
  verify_cmd->add_option("--out", verify.out, "Write the JSON report here (default stdout)");

  GenCmd gen;
  auto* gen_cmd = app.add_subcommand("gen-surface", "Write a synthetic loss surface");
  gen_cmd->add_option("--gen", gen.gen, "Generator spec NAME[:p1,p2,...]")->required();
  gen_cmd->add_option("--d1", gen.d1, "Grid size in delta1")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--d2", gen.d2, "Grid size in delta2")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--fit-config", gen.fit, "Grow the grid to cover --t1/--t2/--tau-max");
  add_config_options(gen_cmd, gen.config);
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");
  gen_cmd->add_option("--format", gen.format, "csv | json (default from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string manifest_path;
  std::string replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "Rerun a command from its run manifest");
  replay_cmd->add_option("--manifest", manifest_path, "Manifest JSON")->required();
  replay_cmd->add_option("--out", replay_out, "Override the recorded --out");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationError;
  }

  try {
    if (*solve_cmd) return do_solve(solve, args, solve_cmd, out);
    if (*sim_cmd) return do_simulate(sim, args, sim_cmd, out);
    if (*sweep_cmd) return do_sweep(sweep, args, sweep_cmd, out);
    if (*verify_cmd) return do_verify(verify, args, verify_cmd, out, err);
    if (*gen_cmd) return do_gen_surface(gen, args, gen_cmd, out);
    if (*replay_cmd) return run(replay_args(manifest_path, replay_out), out, err);
  } catch (const CheckFailed&) {
    return kCheckFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace mmaoi::cli
