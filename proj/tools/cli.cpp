#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wefhouse/envy_graph.hpp"
#include "wefhouse/error.hpp"
#include "wefhouse/generator.hpp"
#include "wefhouse/oracle.hpp"
#include "wefhouse/serialize.hpp"
#include "wefhouse/special_cases.hpp"
#include "wefhouse/wef_solver.hpp"

namespace wefhouse::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string allocation;
  std::string mode = "auto";
  std::string query = "wef";
  std::string structure = "general";
  std::string epsilon = "0";
  std::string weights = "uniform:1:3";
  std::string utilities = "uniform:0:3";
  std::string output;
  std::string format = "json";
  std::size_t n = 2;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t cap = 0;  // 0: library default
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const Options& opt) {
  if (opt.input.empty()) throw Error(ErrorCode::Io, "--input is required");
  return parse_instance(read_file(opt.input));
}

Allocation load_allocation(const Options& opt, const Instance& inst) {
  if (opt.allocation.empty()) throw Error(ErrorCode::Io, "--allocation is required");
  Allocation a = allocation_from_json(parse_json(read_file(opt.allocation)));
  validate_allocation(inst, a);
  return a;
}

json subsidy_json(const SubsidyVector& p) {
  json out = json::array();
  for (const auto& x : p.payments()) out.push_back(rational_to_json(x));
  return out;
}

json witness_json(const Instance& inst, const PositiveCycle& cycle) {
  json labels = json::array();
  for (AgentIndex i : cycle.cycle) labels.push_back(inst.agent_labels()[i]);
  return json{{"cycle", cycle.cycle}, {"cycle_labels", labels}, {"weight", rational_to_json(cycle.weight)}};
}

json base_report(const std::string& command) {
  return json{{"command", command}, {"decision", "not-found"}, {"allocation", nullptr},
              {"subsidy", nullptr}, {"witness", nullptr}};
}

int emit(std::ostream& out, json& report, int code, const Stopwatch& clock) {
  report["timing_ms"] = clock.elapsed_ms();
  out << report.dump(2) << "\n";
  return code;
}

// Fills allocation, subsidy and wefable fields for an allocation we already hold.
void describe_allocation(json& report, const Instance& inst, const Allocation& a) {
  report["allocation"] = allocation_to_json(a);
  const auto analysis = max_path_weights(build_envy_graph(inst, a));
  if (const auto* cycle = std::get_if<PositiveCycle>(&analysis)) {
    report["wefable"] = false;
    report["witness"] = witness_json(inst, *cycle);
  } else {
    report["wefable"] = true;
    report["subsidy"] = subsidy_json(min_subsidy(inst, a));
  }
}

int cmd_solve(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt);
  Stopwatch clock;
  const WefSolution solution = solve_wef(inst);
  json report = base_report("solve");
  report["trace"] = json{{"outer_iterations", solution.stats.outer_iterations},
                         {"prune_steps", solution.stats.prune_steps},
                         {"pruned_assignments", solution.stats.pruned_assignments},
                         {"violators_removed", solution.stats.violators_removed},
                         {"violator_assignments", solution.stats.violator_assignments}};
  if (!solution.allocation) return emit(out, report, kNotFound, clock);
  report["decision"] = "found";
  report["allocation"] = allocation_to_json(*solution.allocation);
  report["subsidy"] = subsidy_json(SubsidyVector::zeros(inst.agent_count()));
  return emit(out, report, kFound, clock);
}

int cmd_check_wefable(const Options& opt, std::ostream& out, const std::string& command) {
  const Instance inst = load_instance(opt);
  const Allocation a = load_allocation(opt, inst);
  Stopwatch clock;
  json report = base_report(command);
  describe_allocation(report, inst, a);
  const bool wefable = report["wefable"].get<bool>();
  report["decision"] = wefable ? "found" : "not-found";
  return emit(out, report, wefable ? kFound : kNotFound, clock);
}

bool is_normalized_pair(const Instance& inst) {
  if (inst.agent_count() != 2) return false;
  for (AgentIndex i = 0; i < 2; ++i) {
    Rational total;
    for (const auto& v : inst.utility_row(i)) total += v;
    if (total != Rational(1)) return false;
  }
  return true;
}

std::string pick_mode(const Instance& inst, const std::string& requested) {
  if (requested != "auto") return requested;
  if (has_identical_utilities(inst)) return "identical";
  if (detect_two_types(inst)) return "two-type";
  if (inst.agent_count() == inst.house_count() && bivalued_epsilon(inst)) return "bivalued";
  if (is_normalized_pair(inst)) return "normalized";
  if (has_equal_weights(inst)) return "unweighted";
  throw Error(ErrorCode::ModeMismatch,
              "instance matches none of: identical, two-type, bivalued, normalized, unweighted");
}

int cmd_special(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt);
  Stopwatch clock;
  const std::string mode = pick_mode(inst, opt.mode);
  json report = base_report("special");
  report["mode"] = mode;

  if (mode == "identical") {
    if (!has_identical_utilities(inst)) {
      throw Error(ErrorCode::ModeMismatch, "mode 'identical' needs every agent to share one utility row");
    }
    const Outcome outcome = solve_identical(inst);
    report["decision"] = "found";
    report["allocation"] = allocation_to_json(outcome.allocation);
    report["subsidy"] = subsidy_json(outcome.subsidy);
    report["wefable"] = true;
    return emit(out, report, kFound, clock);
  }
  if (mode == "two-type") {
    const auto part = detect_two_types(inst);
    if (!part) throw Error(ErrorCode::ModeMismatch, "mode 'two-type' needs exactly two (weight, utility) types");
    report["partition"] = json{{"large", part->large}, {"small", part->small}};
    const auto allocation = solve_two_types(inst, *part);
    if (!allocation) return emit(out, report, kNotFound, clock);
    report["decision"] = "found";
    describe_allocation(report, inst, *allocation);
    return emit(out, report, kFound, clock);
  }
  if (mode == "bivalued") {
    if (inst.agent_count() != inst.house_count()) {
      throw Error(ErrorCode::ModeMismatch, "mode 'bivalued' needs m = n");
    }
    if (!bivalued_epsilon(inst)) {
      throw Error(ErrorCode::ModeMismatch, "mode 'bivalued' needs utilities in {eps, 1} with 0 <= eps < 1");
    }
    BivaluedLimits limits;
    if (opt.cap > 0) limits.max_candidates = limits.max_matchings = opt.cap;
    const BivaluedResult result = solve_bivalued(inst, limits);
    report["epsilon"] = rational_to_json(result.epsilon);
    report["matchings_examined"] = result.matchings_examined;
    report["candidates_examined"] = result.candidates_examined;
    switch (result.status) {
      case BivaluedResult::Status::Found:
        report["decision"] = "found";
        describe_allocation(report, inst, *result.allocation);
        return emit(out, report, kFound, clock);
      case BivaluedResult::Status::NoWefable:
        return emit(out, report, kNotFound, clock);
      case BivaluedResult::Status::Inconclusive:
        report["decision"] = "inconclusive";
        return emit(out, report, kCapExceeded, clock);
    }
  }
  if (mode == "normalized") {
    if (!is_normalized_pair(inst)) {
      throw Error(ErrorCode::ModeMismatch, "mode 'normalized' needs two agents whose utilities each sum to 1");
    }
    report["decision"] = "found";
    describe_allocation(report, inst, solve_normalized_pair(inst));
    return emit(out, report, kFound, clock);
  }
  if (mode == "unweighted") {
    if (!has_equal_weights(inst)) throw Error(ErrorCode::ModeMismatch, "mode 'unweighted' needs equal weights");
    report["decision"] = "found";
    describe_allocation(report, inst, unweighted_efable(inst));
    return emit(out, report, kFound, clock);
  }
  throw Error(ErrorCode::ModeMismatch, "unknown mode '" + mode + "'");
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const Instance inst = load_instance(opt);
  Stopwatch clock;
  oracle::Limits limits;
  if (opt.cap > 0) limits.max_allocations = opt.cap;
  json report = base_report("oracle");
  report["query"] = opt.query;

  std::optional<Allocation> found;
  if (opt.query == "wef") {
    found = oracle::oracle_wef_exists(inst, limits);
  } else if (opt.query == "wefable") {
    found = oracle::oracle_wefable_exists(inst, limits);
  } else if (opt.query == "permutation-resistant") {
    const Allocation a = load_allocation(opt, inst);
    if (oracle::oracle_permutation_resistant(inst, a, limits)) found = a;
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown oracle query '" + opt.query + "'");
  }
  if (!found) return emit(out, report, kNotFound, clock);
  report["decision"] = "found";
  report["allocation"] = allocation_to_json(*found);
  return emit(out, report, kFound, clock);
}

int cmd_generate(const Options& opt, std::ostream& out) {
  GeneratorConfig config;
  config.n = opt.n;
  config.m = opt.m;
  config.seed = opt.seed;
  config.weights = opt.weights;
  config.utilities = opt.utilities;
  config.structure = parse_structure(opt.structure);
  config.epsilon = Rational::parse(opt.epsilon);
  const std::string text = serialize_instance(generate_instance(config));
  if (opt.output.empty()) {
    out << text;
    return kFound;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write '" + opt.output + "'");
  file << text;
  out << json{{"command", "generate"},
              {"output", opt.output},
              {"generator", std::string(kGeneratorAlgorithm)},
              {"seed", opt.seed},
              {"structure", opt.structure}}
             .dump(2)
      << "\n";
  return kFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted envy-free house allocation toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json"}));
  };
  auto* solve = app.add_subcommand("solve", "Decide and compute a weighted envy-free allocation");
  solve->add_option("--input", opt.input, "Instance JSON")->required();
  add_format(solve);

  auto* check = app.add_subcommand("check-wefable", "Check whether an allocation is weighted envy-freeable");
  check->add_option("--input", opt.input, "Instance JSON")->required();
  check->add_option("--allocation", opt.allocation, "Allocation JSON")->required();
  add_format(check);

  auto* subsidy = app.add_subcommand("subsidy", "Minimum envy-eliminating subsidy for an allocation");
  subsidy->add_option("--input", opt.input, "Instance JSON")->required();
  subsidy->add_option("--allocation", opt.allocation, "Allocation JSON")->required();
  add_format(subsidy);

  auto* special = app.add_subcommand("special", "Solvers for identical, two-type, bi-valued and normalised cases");
  special->add_option("--input", opt.input, "Instance JSON")->required();
  special->add_option("--mode", opt.mode, "auto|identical|two-type|bivalued|normalized|unweighted")
      ->check(CLI::IsMember({"auto", "identical", "two-type", "bivalued", "normalized", "unweighted"}));
  special->add_option("--cap", opt.cap, "Candidate cap for the bi-valued scan");
  add_format(special);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth for small instances");
  oracle_cmd->add_option("--input", opt.input, "Instance JSON")->required();
  oracle_cmd->add_option("--query", opt.query, "wef|wefable|permutation-resistant")
      ->check(CLI::IsMember({"wef", "wefable", "permutation-resistant"}));
  oracle_cmd->add_option("--allocation", opt.allocation, "Allocation JSON (permutation-resistant)");
  oracle_cmd->add_option("--cap", opt.cap, "Maximum number of allocations to enumerate");
  add_format(oracle_cmd);

  auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("--n", opt.n, "Number of agents")->required();
  generate->add_option("--m", opt.m, "Number of houses (default n)");
  generate->add_option("--seed", opt.seed, "PRNG seed");
  generate->add_option("--structure", opt.structure, "general|identical|two-type|bivalued|normalized");
  generate->add_option("--epsilon", opt.epsilon, "Low value for bivalued instances");
  generate->add_option("--weights", opt.weights, "Weight distribution, uniform:<lo>:<hi>");
  generate->add_option("--utilities", opt.utilities, "Utility distribution, uniform:<lo>:<hi>");
  generate->add_option("--output", opt.output, "Output path (default stdout)");
  add_format(generate);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "solve") return cmd_solve(opt, out);
    if (command == "check-wefable") return cmd_check_wefable(opt, out, command);
    if (command == "subsidy") return cmd_check_wefable(opt, out, command);
    if (command == "special") return cmd_special(opt, out);
    if (command == "oracle") return cmd_oracle(opt, out);
    if (command == "generate") return cmd_generate(opt, out);
  } catch (const Error& e) {
    const bool capped = e.code() == ErrorCode::CapExceeded;
    json report{{"command", command},
                {"decision", capped ? "inconclusive" : "error"},
                {"error", json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
    out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return capped ? kCapExceeded : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace wefhouse::cli
