#include "posetkit/cli.hpp"

#include <algorithm>
#include <ostream>
#include <typeinfo>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetkit/core.hpp"
#include "posetkit/decomposition.hpp"
#include "posetkit/duality.hpp"
#include "posetkit/generate.hpp"
#include "posetkit/io.hpp"
#include "posetkit/lazy.hpp"
#include "posetkit/recognition.hpp"
#include "posetkit/verify.hpp"
#include "posetkit/witness.hpp"

namespace posetkit::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {
    "analyze", "witness", "kwitness", "dilworth", "mirsky",   "components",
    "recognize", "omega", "layers",   "verify",   "generate", "export-dot"};

struct Options {
  std::string command;
  std::string input;
  std::string method = "direct";
  std::size_t k = 1;
  std::size_t n = 0;
  bool n_set = false;
  std::string pattern;
  std::string family;
  std::size_t prefix = 10;
  std::uint64_t seed = 0;
  bool json_errors = false;
  std::string view;
  std::string from;
  std::string model = "random-order";
  std::size_t dims = 2;
  std::size_t rows = 2;
  std::size_t cols = 2;
  double prob = 0.5;
  std::size_t threads = 0;
  bool skip_checks = false;
};

json to_json(const AntichainPartition& part) { return part.parts; }

json to_json(const std::optional<PatternEmbedding>& e) {
  if (!e) return nullptr;
  return json{{"pattern", to_string(e->pattern)}, {"elements", e->elements}};
}

Poset require_input(const Options& o) {
  if (o.input.empty()) throw BadParamsError("command '" + o.command + "' needs an input file");
  return load_poset(o.input);
}

json cmd_analyze(const Poset& p) {
  json j;
  j["elements"] = p.size();
  j["relations"] = p.relation_size();
  j["covers"] = hasse(p).size();
  j["height"] = p.empty() ? json(nullptr) : json(height(p));
  j["width"] = p.empty() ? 0 : width(p);
  j["components"] = inc_components(p).components.size();
  j["three_plus_one_free"] = !find_pattern(p, Pattern::kThreePlusOne);
  j["two_plus_two_free"] = !find_pattern(p, Pattern::kTwoPlusTwo);
  j["semiorder"] = is_semiorder(p);
  auto profile = inc_degree_profile(p);
  j["max_inc_degree"] = profile.max;
  j["mean_inc_degree"] = profile.mean;
  return j;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Poset p = require_input(o);
  WitnessMethod method;
  if (o.method == "direct") {
    method = WitnessMethod::kDirect;
  } else if (o.method == "decomposed") {
    method = WitnessMethod::kDecomposed;
  } else {
    throw BadParamsError("unknown method '" + o.method + "'");
  }
  const Witness w = ak_witness(p, method);
  out << json{{"chain", w.chain}, {"partition", to_json(w.partition)}}.dump() << "\n";
  return validate_witness(p, w).ok() ? kOk : kValidationFailure;
}

int cmd_kwitness(const Options& o, std::ostream& out) {
  const Poset p = require_input(o);
  auto kw = k_witness_search(p, o.k, SearchBudget::from_environment());
  if (!kw) {
    out << json{{"k", o.k}, {"found", false}}.dump() << "\n";
    return kValidationFailure;
  }
  out << json{{"k", o.k}, {"found", true}, {"chains", kw->chains},
              {"partition", to_json(kw->partition)}}
             .dump()
      << "\n";
  return validate_k_witness(p, *kw, o.k).ok() ? kOk : kValidationFailure;
}

Poset family_prefix(const Options& o) {
  PrefixOptions opts;
  opts.check_consistency = !o.skip_checks;
  return prefix(builtin_family(parse_family(o.family)), o.prefix, opts);
}

int cmd_omega(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw BadParamsError("omega needs --family");
  const Family family = parse_family(o.family);
  auto cert = builtin_certificate(family);
  if (!cert) {
    throw BadParamsError(std::string("family '") + to_string(family) +
                         "' has no omega+1 certificate");
  }
  PrefixOptions opts;
  opts.check_consistency = !o.skip_checks;
  const SplitReport r = verify_omega_split(builtin_family(family), *cert, o.prefix, opts);
  out << json{{"family", to_string(family)},
              {"prefix", r.prefix_size},
              {"lower_size", r.lower.size()},
              {"upper", r.upper},
              {"crossing_inc_edges", r.crossing_inc_edges},
              {"domination_violations", r.domination_violations}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_layers(const Options& o, std::ostream& out) {
  const Poset p = o.input.empty() ? family_prefix(o) : require_input(o);
  if (p.empty()) throw EmptyPosetError();
  const GraphKind kind =
      o.view == "comp" ? GraphKind::kComparability : GraphKind::kIncomparability;
  if (!o.view.empty() && o.view != "inc" && o.view != "comp") {
    throw BadParamsError("layers supports --view inc|comp");
  }
  const std::string start = o.from.empty() ? p.label(p.canonical_order().front()) : o.from;
  const BfsLayers layers = bfs_layers(graph_view(p, kind), start);
  out << json{{"start", start}, {"layers", layers.layers}, {"unreachable", layers.unreachable}}
             .dump()
      << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.n_set) throw BadParamsError("verify needs --n");
  const VerifySummary s =
      verify_exhaustive(o.n, o.k, o.threads, SearchBudget::from_environment());
  if (o.json_errors) {
    json failures = json::array();
    for (const auto& f : s.failures) {
      failures.push_back({{"index", f.poset_index}, {"poset", json::parse(f.poset)},
                          {"check", f.check}, {"detail", f.detail}});
    }
    out << json{{"n", s.n}, {"k", s.k}, {"checked", s.checked}, {"failures", failures}}.dump()
        << "\n";
  } else {
    for (const auto& f : s.failures) {
      out << "FAIL #" << f.poset_index << " " << f.check << ": " << f.detail << " " << f.poset
          << "\n";
    }
    out << s.checked << " posets checked, " << s.failures.size() << " failures\n";
  }
  return s.failures.empty() ? kOk : kValidationFailure;
}

int dispatch(const Options& o, std::ostream& out) {
  const std::string& c = o.command;
  if (c == "analyze") {
    out << cmd_analyze(require_input(o)).dump() << "\n";
  } else if (c == "witness") {
    return cmd_witness(o, out);
  } else if (c == "kwitness") {
    return cmd_kwitness(o, out);
  } else if (c == "dilworth") {
    const auto d = dilworth(require_input(o));
    out << json{{"width", d.antichain.size()}, {"chains", d.chains}, {"antichain", d.antichain}}
               .dump()
        << "\n";
  } else if (c == "mirsky") {
    const Poset p = require_input(o);
    out << json{{"height", height(p)},
                {"levels", to_json(mirsky_levels(p))},
                {"maximum_chain", maximum_chain(p)}}
               .dump()
        << "\n";
  } else if (c == "components") {
    out << json{{"components", inc_components(require_input(o)).components}}.dump() << "\n";
  } else if (c == "recognize") {
    const Poset p = require_input(o);
    json j;
    if (!o.pattern.empty()) {
      j["embedding"] = to_json(find_pattern(p, parse_pattern(o.pattern)));
    } else {
      j["three_plus_one"] = to_json(find_pattern(p, Pattern::kThreePlusOne));
      j["two_plus_two"] = to_json(find_pattern(p, Pattern::kTwoPlusTwo));
      j["semiorder"] = is_semiorder(p);
      auto profile = inc_degree_profile(p);
      json degrees = json::object();
      for (std::size_t i = 0; i < p.size(); ++i) degrees[p.label(i)] = profile.degree[i];
      j["inc_degree"] = {{"max", profile.max}, {"mean", profile.mean}, {"degrees", degrees}};
    }
    out << j.dump() << "\n";
  } else if (c == "omega") {
    return cmd_omega(o, out);
  } else if (c == "layers") {
    return cmd_layers(o, out);
  } else if (c == "verify") {
    return cmd_verify(o, out);
  } else if (c == "generate") {
    GenerateParams g;
    g.model = o.model;
    g.n = o.n_set ? o.n : 8;
    g.dims = o.dims;
    g.rows = o.rows;
    g.cols = o.cols;
    g.prob = o.prob;
    g.seed = o.seed;
    out << emit_document(generate(g)) << "\n";
  } else if (c == "export-dot") {
    out << to_dot(require_input(o), parse_dot_view(o.view.empty() ? "hasse" : o.view));
  }
  return kOk;
}

std::string error_name(const std::exception& e) {
  if (dynamic_cast<const CycleError*>(&e)) return "CycleError";
  if (dynamic_cast<const DuplicateLabelError*>(&e)) return "DuplicateLabelError";
  if (dynamic_cast<const UnknownElementError*>(&e)) return "UnknownElement";
  if (dynamic_cast<const LabelCollisionError*>(&e)) return "LabelCollision";
  if (dynamic_cast<const EmptyPosetError*>(&e)) return "EmptyPoset";
  if (dynamic_cast<const UnknownFamilyError*>(&e)) return "UnknownFamily";
  if (dynamic_cast<const BadParamsError*>(&e)) return "BadParams";
  if (dynamic_cast<const OracleInconsistencyError*>(&e)) return "OracleInconsistency";
  if (dynamic_cast<const CertificateViolationError*>(&e)) return "CertificateViolation";
  if (dynamic_cast<const BudgetExceededError*>(&e)) return "BudgetExceeded";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  return "InternalError";
}

void report_error(const std::exception& e, bool as_json, std::ostream& err) {
  if (as_json) {
    json j{{"error", error_name(e)}, {"message", e.what()}};
    if (auto* cyc = dynamic_cast<const CycleError*>(&e)) j["cycle"] = cyc->cycle();
    err << j.dump() << "\n";
  } else {
    err << "posetkit: " << error_name(e) << ": " << e.what() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"posetkit: chain/antichain duality toolkit for finite and lazy posets", "posetkit"};
  app.add_option("command", o.command, "Subcommand")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("input", o.input, "Poset document (JSON)");
  app.add_option("--method", o.method, "Witness route: direct | decomposed");
  app.add_option("--k", o.k, "Number of chains for kwitness / verify")->check(CLI::Range(1, 64));
  app.add_option_function<std::size_t>(
      "--n", [&](const std::size_t& v) { o.n = v; o.n_set = true; },
      "Poset size for verify / generate");
  app.add_option("--pattern", o.pattern, "3p1 | 2p2");
  app.add_option("--family", o.family, "ladder | ladder-top | omega1 | z");
  app.add_option("--prefix", o.prefix, "Prefix length for lazy families");
  app.add_option("--seed", o.seed, "Generator seed");
  app.add_flag("--json", o.json_errors, "Machine-readable errors (and verify output)");
  app.add_option("--view", o.view, "export-dot: hasse | inc | comp; layers: inc | comp");
  app.add_option("--from", o.from, "Start vertex for layers");
  app.add_option("--model", o.model, "random-order | unit-semiorder | grid | bipartite | random-dag");
  app.add_option("--dims", o.dims, "Linear orders intersected by random-order");
  app.add_option("--rows", o.rows, "Grid rows");
  app.add_option("--cols", o.cols, "Grid columns");
  app.add_option("--prob", o.prob, "Edge probability for bipartite / random-dag");
  app.add_option("--threads", o.threads, "Workers for verify (0 = all cores)");
  app.add_flag("--skip-oracle-checks", o.skip_checks, "Trust lazy oracles without checking");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const bool as_json = std::find(args.begin(), args.end(), "--json") != args.end();
    if (as_json) {
      err << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    } else {
      err << "posetkit: " << e.what() << "\n" << app.help();
    }
    return kInputError;
  }

  try {
    return dispatch(o, out);
  } catch (const BudgetExceededError& e) {
    report_error(e, o.json_errors, err);
    return kBudgetExceeded;
  } catch (const InputError& e) {
    report_error(e, o.json_errors, err);
    return kInputError;
  } catch (const std::exception& e) {
    report_error(e, o.json_errors, err);
    return kValidationFailure;
  }
}

}  // namespace posetkit::cli
