#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "demo.hpp"
#include "extcrystal/affine_a.hpp"
#include "extcrystal/explore.hpp"
#include "extcrystal/export.hpp"
#include "extcrystal/text_format.hpp"
#include "extcrystal/verify.hpp"

namespace {

using namespace extcrystal;
using Ext = ExtElement<Multisegment>;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, 10);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  }
  return value;
}

SlotWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("window must look like a..b, got '" + text + "'");
  const SlotWindow w{parse_int(text.substr(0, dots), "window bound"),
                     parse_int(text.substr(dots + 2), "window bound")};
  if (w.empty()) throw UsageError("window '" + text + "' is empty");
  return w;
}

struct Globals {
  std::optional<int> n;
  std::string format = "text";
};

int rank_of(const Globals& g) {
  if (!g.n) throw UsageError("--n is required");
  checked_rank(*g.n);
  return *g.n;
}

void validate_ext(const MultisegmentCrystal& base, const Ext& c) {
  for (const auto& [k, m] : c.slots()) base.validate(m);
}

struct ApplyArgs {
  std::string op;
  std::string target;
  std::vector<std::string> rest;
};

int cmd_apply(const Globals& g, const ApplyArgs& a) {
  const int n = rank_of(g);
  const MultisegmentCrystal base(n);
  const ExtCrystal<MultisegmentCrystal> crystal{base};
  const AffineA model(n);

  auto want_args = [&](std::size_t count) {
    if (a.rest.size() != count) {
      throw UsageError("op '" + a.op + "' takes " + std::to_string(count) + " extra argument(s)");
    }
  };
  auto index_i = [&] {
    const auto i = parse_int(a.rest[0], "index i");
    if (i < 1 || i > n) throw UsageError("index i=" + a.rest[0] + " outside 1.." + std::to_string(n));
    return static_cast<int>(i);
  };
  auto ext_target = [&] {
    Ext c = parse_ext(a.target);
    validate_ext(base, c);
    return c;
  };
  auto weight_target = [&] {
    HLWeight lambda = parse_weight(a.target);
    model.validate(lambda);
    return lambda;
  };

  std::optional<Ext> ext_out;
  std::optional<HLWeight> weight_out;
  std::optional<Multisegment> ms_out;

  const std::string& op = a.op;
  if (op == "F" || op == "E" || op == "Fstar" || op == "Estar") {
    want_args(2);
    const int i = index_i();
    const SlotIndex k = parse_int(a.rest[1], "slot k");
    const Ext c = ext_target();
    if (op == "F") ext_out = crystal.F(c, i, k);
    if (op == "E") ext_out = crystal.E(c, i, k);
    if (op == "Fstar") ext_out = crystal.F_star(c, i, k);
    if (op == "Estar") ext_out = crystal.E_star(c, i, k);
  } else if (op == "Fhl" || op == "Ehl") {
    want_args(2);
    const int i = index_i();
    const SlotIndex k = parse_int(a.rest[1], "slot k");
    const HLWeight lambda = weight_target();
    weight_out = op == "Fhl" ? model.F_hl(lambda, i, k) : model.E_hl(lambda, i, k);
  } else if (op == "shift") {
    want_args(1);
    const SlotIndex t = parse_int(a.rest[0], "shift t");
    ext_out = shift(ext_target(), t);
  } else if (op == "starflip") {
    want_args(0);
    ext_out = crystal.star_flip(ext_target());
  } else if (op == "gamma") {
    want_args(0);
    weight_out = model.gamma(ext_target());
  } else if (op == "gammainv") {
    want_args(0);
    ext_out = model.gamma_inv(weight_target());
  } else if (op == "star") {
    want_args(0);
    const Multisegment m = parse_multisegment(a.target);
    base.validate(m);
    ms_out = base.star(m);
  } else {
    throw UsageError("unknown op '" + op +
                     "' (expected F, E, Fstar, Estar, Fhl, Ehl, shift, starflip, gamma, "
                     "gammainv, star)");
  }

  if (g.format == "json") {
    nlohmann::json j{{"op", op}};
    if (ext_out) j["result"] = {{"text", format_ext(*ext_out)}, {"slots", slots_to_json(*ext_out)}};
    if (weight_out) {
      j["result"] = {{"text", format_weight(*weight_out)},
                     {"weight", weight_to_json(*weight_out)}};
    }
    if (ms_out) j["result"] = {{"text", format_multisegment(*ms_out)}};
    std::cout << j.dump(2) << "\n";
  } else if (g.format == "text") {
    if (ext_out) std::cout << format_ext(*ext_out) << "\n";
    if (weight_out) std::cout << format_weight(*weight_out) << "\n";
    if (ms_out) std::cout << format_multisegment(*ms_out) << "\n";
  } else {
    throw UsageError("apply supports --format text|json");
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::string> window;
  std::optional<int> ht;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<std::size_t> cases;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  VerifyConfig cfg;
  cfg.n = rank_of(g);
  if (a.window) cfg.window = parse_window(*a.window);
  if (a.ht) cfg.max_height = *a.ht;
  if (cfg.max_height < 0) throw UsageError("--ht must be non-negative");
  cfg.seed = a.seed;
  cfg.jobs = a.jobs;
  if (a.cases) cfg.random_cases = *a.cases;

  std::vector<std::string> names;
  if (a.suite == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), a.suite) == known.end()) {
      throw UsageError("unknown suite '" + a.suite + "'");
    }
    names.push_back(a.suite);
  }

  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& name : names) {
    const auto report = run_suite(name, cfg);
    ok = ok && report.passed();
    if (g.format == "json") {
      nlohmann::json r{{"suite", name}, {"cases", report.cases}, {"passed", report.passed()}};
      if (report.counterexample) r["counterexample"] = *report.counterexample;
      reports.push_back(r);
      continue;
    }
    std::cout << name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.cases
              << " cases)\n";
    if (report.counterexample) std::cout << "  counterexample: " << *report.counterexample << "\n";
  }
  if (g.format == "json") std::cout << reports.dump(2) << "\n";
  return ok ? kExitOk : kExitFailed;
}

struct GraphArgs {
  std::string seed;
  std::string window = "0..0";
  int ht = 3;
  std::optional<std::string> output;
};

std::string graph_text(const CrystalGraph<Multisegment>& graph) {
  std::ostringstream out;
  out << "nodes " << graph.nodes.size() << "\n";
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    out << id << " " << format_ext(graph.nodes[id]) << "\n";
  }
  out << "edges " << graph.edges.size() << "\n";
  for (const auto& e : graph.edges) {
    out << e.src << " -> " << e.dst << " (" << e.color.i << "," << e.color.k << ")\n";
  }
  return out.str();
}

int cmd_graph(const Globals& g, const GraphArgs& a) {
  const int n = rank_of(g);
  if (a.ht < 0) throw UsageError("--ht must be non-negative");
  const MultisegmentCrystal base(n);
  const ExtCrystal<MultisegmentCrystal> crystal{base};
  const Ext seed = parse_ext(a.seed);
  validate_ext(base, seed);
  const auto graph = explore(crystal, seed, parse_window(a.window), a.ht);

  std::string body;
  if (g.format == "dot") {
    body = graph_to_dot(graph);
  } else if (g.format == "json") {
    body = graph_to_json(graph).dump(2) + "\n";
  } else {
    body = graph_text(graph);
  }
  if (!a.output || *a.output == "-") {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream file(*a.output, std::ios::binary);
  if (!file) throw IoError("cannot open '" + *a.output + "' for writing");
  file << body;
  file.close();
  if (!file) throw IoError("failed writing '" + *a.output + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended crystals of type A: operators, signature rules and verification sweeps",
               "extcrystal"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::optional<std::string> format;
  app.add_option("--n", g.n, "rank n of A_n");
  app.add_option("--format", format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "apply one operator to an element");
  apply->add_option("op", apply_args.op,
                    "F, E, Fstar, Estar, Fhl, Ehl, shift, starflip, gamma, gammainv or star")
      ->required();
  apply->add_option("target", apply_args.target, "element text (\"\" is the highest vector)")
      ->required();
  apply->add_option("args", apply_args.rest, "i k, or t for shift");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_args.suite, "suite name or 'all'")->required();
  verify->add_option("--window", verify_args.window, "slot window a..b");
  verify->add_option("--ht", verify_args.ht, "height bound");
  verify->add_option("--seed", verify_args.seed, "seed for randomized suites");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")
      ->envname("EXTCRYSTAL_JOBS")
      ->check(CLI::PositiveNumber);
  verify->add_option("--cases", verify_args.cases, "case count for randomized suites");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "export the crystal graph around a seed element");
  graph->add_option("seed", graph_args.seed, "seed element text (\"\" is the highest vector)")
      ->required();
  graph->add_option("--window", graph_args.window, "slot window a..b")->capture_default_str();
  graph->add_option("--ht", graph_args.ht, "height bound")->capture_default_str();
  graph->add_option("-o,--output", graph_args.output, "output file (default stdout)");

  auto* demo = app.add_subcommand("demo-n3", "replay the rank-3 signature example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*demo) return tools::run_demo_n3(std::cout) ? kExitOk : kExitFailed;
    if (*graph) {
      g.format = format.value_or("dot");
      return cmd_graph(g, graph_args);
    }
    g.format = format.value_or("text");
    if (*apply) return cmd_apply(g, apply_args);
    return cmd_verify(g, verify_args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }
}
