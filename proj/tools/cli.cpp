#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempsep/core_fpt.hpp"
#include "tempsep/dpcg.hpp"
#include "tempsep/exact.hpp"
#include "tempsep/expansion.hpp"
#include "tempsep/generators.hpp"
#include "tempsep/instance.hpp"
#include "tempsep/io.hpp"
#include "tempsep/max_flow.hpp"
#include "tempsep/pathfinding.hpp"
#include "tempsep/preprocessing.hpp"
#include "tempsep/tau4.hpp"

namespace tempsep::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

PathModel parse_model(const std::string& name) {
  if (name == "strict") return PathModel::Strict;
  if (name == "nonstrict") return PathModel::NonStrict;
  throw std::runtime_error("unknown model '" + name + "'");
}

std::vector<VertexId> parse_vertex_list(const std::string& text) {
  std::vector<VertexId> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(static_cast<VertexId>(std::stol(token)));
  }
  return out;
}

// Terminal/budget resolution: explicit flags win over the instance's
// query line.
struct QueryFlags {
  std::optional<VertexId> s, z;
  std::optional<Length> k;

  Query resolve(const std::optional<Query>& from_file) const {
    Query q;
    if (from_file) q = *from_file;
    if (s) q.s = *s;
    if (z) q.z = *z;
    if (k) q.k = *k;
    if (!from_file && (!s || !z)) {
      throw std::runtime_error(
          "no query line in the instance; pass --source and --sink");
    }
    return q;
  }
};

void add_query_flags(CLI::App* cmd, QueryFlags& flags) {
  cmd->add_option("-s,--source", flags.s, "Source vertex (overrides the q line)");
  cmd->add_option("-z,--sink", flags.z, "Sink vertex (overrides the q line)");
  cmd->add_option("-k,--budget", flags.k, "Separator budget (overrides the q line)");
}

std::string format_witness(const TemporalPath& path) {
  std::ostringstream out;
  out << "witness";
  for (const auto& st : path.steps) {
    out << ' ' << st.from << ' ' << st.to << ' ' << st.t;
  }
  return out.str();
}

int emit_solution(std::ostream& out, const std::string& algo, Length budget,
                  const SeparatorResult& result, double wall_ms, bool as_json,
                  std::optional<std::uint64_t> seed = std::nullopt) {
  if (as_json) {
    json j;
    j["algo"] = algo;
    j["decision"] = result.feasible ? "yes" : "no";
    j["k"] = budget;
    j["separator"] = result.feasible ? json(result.separator) : json(nullptr);
    if (result.witness) {
      json steps = json::array();
      for (const auto& st : result.witness->steps) {
        steps.push_back({st.from, st.to, st.t});
      }
      j["witness"] = steps;
    } else {
      j["witness"] = nullptr;
    }
    j["wall_ms"] = wall_ms;
    if (seed) j["seed"] = *seed;
    out << j.dump() << '\n';
  } else {
    out << "algo " << algo << '\n';
    out << "k " << budget << '\n';
    if (result.feasible) {
      out << "YES " << result.separator.size();
      for (VertexId v : result.separator) out << ' ' << v;
      out << '\n';
    } else {
      out << "NO\n";
      if (result.witness) out << format_witness(*result.witness) << '\n';
    }
    out << "wall_ms " << wall_ms << '\n';
  }
  return result.feasible ? 0 : 1;
}

bool verify_separator(const TemporalGraph& g, VertexId s, VertexId z, PathModel model,
                      const std::vector<VertexId>& separator) {
  for (VertexId v : separator) {
    if (v == s || v == z || v < 0 || v >= g.num_vertices()) return false;
  }
  if (model == PathModel::Strict) {
    return strict_earliest_arrival(g, s, separator)[static_cast<std::size_t>(z)] ==
           kInfiniteTime;
  }
  return !nonstrict_reachable(g, s, separator)[static_cast<std::size_t>(z)];
}

struct SolveConfig {
  std::string path;
  std::string model_name = "strict";
  std::string algo = "auto";
  QueryFlags query;
  bool as_json = false;
  bool emit_dpcg = false;
  int threads = 0;  // 0: use TEMPSEP_THREADS or 1
  std::size_t max_core = 16;
};

int cmd_solve(const SolveConfig& cfg, std::ostream& out, std::ostream& err) {
  std::istringstream stream(read_input(cfg.path));
  auto file = parse_temporal_instance(stream);
  const Query q = cfg.query.resolve(file.query);
  const PathModel model = parse_model(cfg.model_name);
  SeparatorInstance inst(file.graph, q.s, q.z, q.k, model);

  int threads = cfg.threads;
  if (threads <= 0) {
    const char* env = std::getenv("TEMPSEP_THREADS");
    threads = env ? std::atoi(env) : 1;
    if (threads <= 0) threads = 1;
  }

  std::string algo = cfg.algo;
  if (algo == "auto") {
    if (model == PathModel::Strict) {
      algo = normalize_time_labels(inst.graph).tau() <= 4 ? "tau4" : "branch";
    } else {
      auto core = inst.graph.temporal_core();
      std::size_t core_with_terminals = core.size();
      for (VertexId t : {inst.s, inst.z}) {
        if (!std::binary_search(core.begin(), core.end(), t)) ++core_with_terminals;
      }
      algo = core_with_terminals <= cfg.max_core ? "core-fpt" : "branch";
    }
  }

  const auto start = Clock::now();
  SeparatorResult result;
  if (algo == "tau4") {
    result = solve_strict_tau4(inst);
    if (cfg.emit_dpcg) {
      // Rebuild the reduced pipeline to dump the path cover graph.
      auto normalized = normalize_time_labels(inst.graph);
      if (normalized.tau() < 4) normalized = normalized.with_tau(4);
      auto reduced = reduce_instance(
          SeparatorInstance(normalized, inst.s, inst.z, inst.k, PathModel::Strict));
      if (reduced.kind == ReduceOutcome::Kind::Reduced) {
        auto d = build_dpcg(reduced.instance->graph, inst.s, inst.z);
        out << "dpcg " << d.digraph.arcs.size() << '\n';
        for (const auto& [a, b] : d.digraph.arcs) {
          auto fmt = [&](VertexId v) -> std::string {
            if (v == inst.s) return "s";
            if (v == inst.z) return "z";
            auto [i, j] = d.classes.of(v);
            return std::to_string(v) + ":(" + std::to_string(i) + "," + std::to_string(j) +
                   ")";
          };
          out << fmt(a) << " -> " << fmt(b) << '\n';
        }
      } else {
        out << "dpcg decided-before-construction\n";
      }
    }
  } else if (algo == "core-fpt") {
    CoreFptOptions options;
    options.max_core = cfg.max_core;
    options.threads = threads;
    result = solve_core_fpt(inst, options);
  } else if (algo == "branch") {
    result = model == PathModel::Strict ? branch_solve_strict(inst)
                                        : branch_solve_nonstrict(inst);
  } else if (algo == "brute") {
    result = brute_force_decide(inst);
  } else {
    throw std::runtime_error("unknown algorithm '" + algo + "'");
  }
  const double wall = ms_since(start);

  if (result.feasible &&
      !verify_separator(inst.graph, inst.s, inst.z, model, result.separator)) {
    err << "internal error: reported separator failed re-verification\n";
    return 2;
  }
  return emit_solution(out, algo, inst.k, result, wall, cfg.as_json);
}

int cmd_reduce(const std::string& path, const QueryFlags& flags, std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_temporal_instance(stream);
  const Query q = flags.resolve(file.query);
  auto outcome =
      reduce_instance(SeparatorInstance(file.graph, q.s, q.z, q.k, PathModel::Strict));
  switch (outcome.kind) {
    case ReduceOutcome::Kind::DecidedYes: {
      out << "DECIDED yes";
      for (VertexId v : outcome.separator) out << ' ' << v;
      out << '\n';
      return 0;
    }
    case ReduceOutcome::Kind::DecidedNo:
      out << "DECIDED no\n";
      if (outcome.witness) out << format_witness(*outcome.witness) << '\n';
      return 1;
    case ReduceOutcome::Kind::Reduced: {
      out << "REDUCED " << outcome.instance->k << '\n';
      Query reduced_query{outcome.instance->s, outcome.instance->z, outcome.instance->k};
      serialize_temporal(out, outcome.instance->graph, reduced_query);
      return 0;
    }
  }
  return 2;
}

int cmd_normalize(const std::string& path, std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_temporal_instance(stream);
  serialize_temporal(out, normalize_time_labels(file.graph), file.query);
  return 0;
}

int cmd_ssstp(const std::string& path, VertexId source, std::optional<VertexId> sink,
              const std::string& model, std::ostream& out) {
  std::istringstream stream(read_input(path));
  if (model == "traversal") {
    auto d = parse_directed_traversal(stream);
    auto times = ssstp_traversal(d, source);
    for (VertexId v = 0; v < d.n; ++v) {
      out << v << ' ';
      if (times[static_cast<std::size_t>(v)] == kUnreachable) {
        out << "inf";
      } else {
        out << times[static_cast<std::size_t>(v)];
      }
      out << '\n';
    }
    return 0;
  }
  if (model != "strict") throw std::runtime_error("unknown ssstp model '" + model + "'");
  auto g = load_temporal_graph(stream);
  DistanceTable table = sink ? ssstp(g, source, *sink) : ssstp(g, source);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << v << ' ';
    if (table.reachable(v)) {
      out << table[v];
    } else {
      out << "inf";
    }
    out << '\n';
  }
  return 0;
}

int cmd_expansion(const std::string& path, VertexId source, std::optional<VertexId> sink,
                  std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto g = load_temporal_graph(stream);
  auto h = sink ? build_expansion(g, source, *sink) : build_expansion(g, source);
  auto kind_name = [](ExpansionArcKind kind) {
    switch (kind) {
      case ExpansionArcKind::Transit: return "transit";
      case ExpansionArcKind::SourceArc: return "source";
      case ExpansionArcKind::SinkArc: return "sink";
      case ExpansionArcKind::Column: return "column";
    }
    return "?";
  };
  for (const auto& a : h.arcs()) {
    out << a.from << ' ' << a.to << ' ' << a.weight << ' ' << kind_name(a.kind) << '\n';
  }
  return 0;
}

int cmd_core(const std::string& path, std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto g = load_temporal_graph(stream);
  auto core = g.temporal_core();
  for (std::size_t i = 0; i < core.size(); ++i) {
    out << core[i] << (i + 1 == core.size() ? '\n' : ' ');
  }
  if (core.empty()) out << '\n';
  return 0;
}

int cmd_verify(const std::string& path, const QueryFlags& flags, const std::string& model,
               const std::string& separator_text, std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_temporal_instance(stream);
  Query q;
  if (file.query) {
    q = *file.query;
  }
  if (flags.s) q.s = *flags.s;
  if (flags.z) q.z = *flags.z;
  if (!file.query && (!flags.s || !flags.z)) {
    throw std::runtime_error("no query line in the instance; pass --source and --sink");
  }
  auto separator = parse_vertex_list(separator_text);
  const bool valid =
      verify_separator(file.graph, q.s, q.z, parse_model(model), separator);
  out << (valid ? "VALID" : "INVALID") << '\n';
  return valid ? 0 : 1;
}

int cmd_oracle_lbs(const std::string& path, std::optional<Length> budget,
                   std::optional<Length> length, const QueryFlags& flags,
                   std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_static_instance(stream);
  VertexId s = flags.s ? *flags.s : (file.query ? file.query->s : -1);
  VertexId z = flags.z ? *flags.z : (file.query ? file.query->z : -1);
  Length k = budget ? *budget : (file.query ? file.query->k : -1);
  Length l = length ? *length : (file.query && file.query->l >= 0 ? file.query->l : -1);
  if (s < 0 || z < 0 || k < 0 || l < 0) {
    throw std::runtime_error("oracle-lbs needs source, sink, budget, and length");
  }
  auto result = brute_force_lbs(file.graph, s, z, k, l);
  switch (result.status) {
    case LbsStatus::Found:
      out << "YES " << result.separator.size();
      for (VertexId v : result.separator) out << ' ' << v;
      out << '\n';
      return 0;
    case LbsStatus::ExceedsBudget:
      out << "NO\n";
      return 1;
    case LbsStatus::Inseparable:
      out << "INSEPARABLE\n";
      return 1;
  }
  return 2;
}

struct GenerateCommon {
  std::uint64_t seed = 1;
  bool with_optimum = false;
};

int cmd_generate_vc(const std::string& path, Length budget, bool with_optimum,
                    std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_static_instance(stream);
  auto inst = gen_from_vertex_cover({file.graph, budget});
  if (with_optimum) {
    // vc by subset enumeration; the generated optimum is n + vc.
    const VertexId n = file.graph.num_vertices();
    if (n > 20) throw std::runtime_error("--with-optimum limited to n <= 20");
    auto edges = file.graph.edge_list();
    Length best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool covers = true;
      for (const auto& [u, v] : edges) {
        if (!(mask & (1u << u)) && !(mask & (1u << v))) {
          covers = false;
          break;
        }
      }
      if (covers) best = std::min<Length>(best, std::popcount(mask));
    }
    out << "# optimum " << (n + best) << '\n';
  }
  serialize_temporal(out, inst.graph, Query{inst.s, inst.z, inst.k});
  return 0;
}

int cmd_generate_lbs_stack(const std::string& path, const QueryFlags& flags,
                           std::optional<Length> length, bool with_optimum,
                           std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto file = parse_static_instance(stream);
  VertexId s = flags.s ? *flags.s : (file.query ? file.query->s : -1);
  VertexId z = flags.z ? *flags.z : (file.query ? file.query->z : -1);
  Length k = flags.k ? *flags.k : (file.query ? file.query->k : -1);
  Length l = length ? *length : (file.query && file.query->l >= 0 ? file.query->l : -1);
  if (s < 0 || z < 0 || k < 0 || l < 1) {
    throw std::runtime_error("lbs-stack needs source, sink, budget, and length");
  }
  auto inst = gen_lbs_stack(file.graph, s, z, k, l);
  if (with_optimum) {
    auto oracle = brute_force_lbs(file.graph, s, z, file.graph.num_vertices(), l);
    if (oracle.status == LbsStatus::Found) {
      out << "# optimum " << oracle.separator.size() << '\n';
    } else {
      out << "# optimum inseparable\n";
    }
  }
  serialize_temporal(out, inst.graph, Query{inst.s, inst.z, inst.k});
  return 0;
}

int cmd_generate_planar(const std::string& path, bool stack, bool with_optimum,
                        std::ostream& out) {
  std::istringstream stream(read_input(path));
  auto source = parse_planar_lbc(stream);
  auto generated = gen_planar_lbs(source);
  out << "# k' " << generated.k_prime << '\n';
  out << "# l' " << generated.l_prime << '\n';
  if (with_optimum) {
    auto oracle = brute_force_lbs(generated.graph, generated.s, generated.z, generated.k,
                                  generated.l_prime);
    if (oracle.status == LbsStatus::Found) {
      out << "# optimum " << oracle.separator.size() << '\n';
    } else {
      out << "# optimum above-budget\n";
    }
  }
  if (stack) {
    auto inst = gen_lbs_stack(generated.graph, generated.s, generated.z, generated.k,
                              generated.l_prime);
    serialize_temporal(out, inst.graph, Query{inst.s, inst.z, inst.k});
  } else {
    StaticQuery q{generated.s, generated.z, generated.k, generated.l_prime};
    serialize_static(out, generated.graph, q);
  }
  return 0;
}

int cmd_generate_random(VertexId n, TimeLabel tau, double probability, std::uint64_t seed,
                        bool forbid_pair, VertexId fa, VertexId fb,
                        std::optional<std::string> query, std::ostream& out) {
  RandomTemporalOptions options;
  options.edge_probability = probability;
  options.seed = seed;
  options.forbid_pair = forbid_pair;
  options.forbidden_a = fa;
  options.forbidden_b = fb;
  auto g = gen_random_temporal(n, tau, options);
  out << "# seed " << seed << '\n';
  std::optional<Query> q;
  if (query) {
    auto parts = parse_vertex_list(*query);
    if (parts.size() != 3) throw std::runtime_error("--query expects 's,z,k'");
    q = Query{parts[0], parts[1], static_cast<Length>(parts[2])};
  }
  serialize_temporal(out, g, q);
  return 0;
}

Length parse_scale(const std::string& text) {
  if (text.empty()) throw std::runtime_error("empty scale");
  Length multiplier = 1;
  std::string digits = text;
  switch (text.back()) {
    case 'K':
    case 'k':
      multiplier = 1000;
      digits.pop_back();
      break;
    case 'M':
    case 'm':
      multiplier = 1000000;
      digits.pop_back();
      break;
    default:
      break;
  }
  return static_cast<Length>(std::stoll(digits)) * multiplier;
}

int cmd_bench(const std::string& target, const std::string& scales, std::ostream& out) {
  if (target != "ssstp") throw std::runtime_error("unknown bench target '" + target + "'");
  std::vector<Length> sizes;
  {
    std::istringstream ss(scales);
    std::string token;
    while (std::getline(ss, token, ',')) sizes.push_back(parse_scale(token));
  }
  if (sizes.empty()) throw std::runtime_error("no scales given");

  // Synthetic layered chain: edge i joins (i, i+1) at label i+1, so the
  // single strict path from vertex 0 has length |E|.
  auto build_chain = [](Length m) {
    std::vector<TimeEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (Length i = 0; i < m; ++i) {
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), i + 1});
    }
    return TemporalGraph(static_cast<VertexId>(m + 1), std::move(edges), m);
  };
  {
    // Warm allocator and page cache once, untimed.
    auto g = build_chain(std::min<Length>(sizes.front(), 100000));
    auto table = ssstp(g, 0);
    (void)table;
  }
  std::vector<double> timings;
  for (Length m : sizes) {
    auto g = build_chain(m);
    const auto start = Clock::now();
    auto table = ssstp(g, 0);
    const double wall = ms_since(start);
    if (table[static_cast<VertexId>(m)] != m) {
      throw std::runtime_error("self-check failed: unexpected chain distance");
    }
    timings.push_back(wall);
    out << "scale " << m << " wall_ms " << wall << '\n';
  }
  for (std::size_t i = 1; i < timings.size(); ++i) {
    out << "ratio " << (timings[i] / std::max(timings[i - 1], 1e-9)) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal (s,z)-separator toolkit"};
  app.require_subcommand(1);

  // solve
  SolveConfig solve_cfg;
  auto* solve = app.add_subcommand("solve", "Decide a separation instance");
  solve->add_option("instance", solve_cfg.path, "Instance file, or - for stdin")->required();
  solve->add_option("--model", solve_cfg.model_name, "strict|nonstrict")->required();
  solve->add_option("--algo", solve_cfg.algo, "auto|tau4|core-fpt|branch|brute");
  add_query_flags(solve, solve_cfg.query);
  solve->add_flag("--json", solve_cfg.as_json, "Machine-readable output");
  solve->add_flag("--emit-dpcg", solve_cfg.emit_dpcg, "Dump the path cover graph (tau4)");
  solve->add_option("--threads", solve_cfg.threads,
                    "Worker threads (default: TEMPSEP_THREADS or 1)");
  solve->add_option("--max-core", solve_cfg.max_core, "Core size limit for core-fpt");

  // reduce
  std::string reduce_path;
  QueryFlags reduce_query;
  auto* reduce = app.add_subcommand("reduce", "Strict-model preprocessing");
  reduce->add_option("instance", reduce_path)->required();
  add_query_flags(reduce, reduce_query);

  // normalize
  std::string normalize_path;
  auto* normalize = app.add_subcommand("normalize", "Compress time labels");
  normalize->add_option("instance", normalize_path)->required();

  // ssstp
  std::string ssstp_path;
  VertexId ssstp_source = 0;
  std::optional<VertexId> ssstp_sink;
  std::string ssstp_model = "strict";
  auto* ssstp_cmd = app.add_subcommand("ssstp", "Single-source shortest strict paths");
  ssstp_cmd->add_option("instance", ssstp_path)->required();
  ssstp_cmd->add_option("-s,--source", ssstp_source)->required();
  ssstp_cmd->add_option("-z,--sink", ssstp_sink, "Designated sink column");
  ssstp_cmd->add_option("--model", ssstp_model, "strict|traversal");

  // expansion
  std::string expansion_path;
  VertexId expansion_source = 0;
  std::optional<VertexId> expansion_sink;
  auto* expansion_cmd = app.add_subcommand("expansion", "Dump the strict static expansion");
  expansion_cmd->add_option("instance", expansion_path)->required();
  expansion_cmd->add_option("-s,--source", expansion_source)->required();
  expansion_cmd->add_option("-z,--sink", expansion_sink);

  // core
  std::string core_path;
  auto* core_cmd = app.add_subcommand("core", "Print the temporal core");
  core_cmd->add_option("instance", core_path)->required();

  // verify
  std::string verify_path, verify_model = "strict", verify_separator;
  QueryFlags verify_query;
  auto* verify = app.add_subcommand("verify", "Check a separator");
  verify->add_option("instance", verify_path)->required();
  verify->add_option("--separator", verify_separator, "Comma-separated vertex list")
      ->required();
  verify->add_option("--model", verify_model, "strict|nonstrict")->required();
  add_query_flags(verify, verify_query);

  // oracle-lbs
  std::string lbs_path;
  std::optional<Length> lbs_budget, lbs_length;
  QueryFlags lbs_query;
  auto* oracle_lbs = app.add_subcommand("oracle-lbs", "Length-bounded separator oracle");
  oracle_lbs->add_option("instance", lbs_path)->required();
  oracle_lbs->add_option("-l,--length", lbs_length, "Path length bound");
  oracle_lbs->add_option("-k,--budget", lbs_budget);
  oracle_lbs->add_option("-s,--source", lbs_query.s);
  oracle_lbs->add_option("-z,--sink", lbs_query.z);

  // generate with one subcommand per family
  auto* generate = app.add_subcommand("generate", "Instance generators");
  generate->require_subcommand(1);

  std::string vc_path;
  Length vc_budget = 0;
  bool vc_optimum = false;
  auto* gen_vc = generate->add_subcommand("vc", "Vertex Cover reduction (non-strict, tau=2)");
  gen_vc->add_option("graph", vc_path, "Static graph file")->required();
  gen_vc->add_option("-k,--budget", vc_budget, "Vertex cover budget")->required();
  gen_vc->add_flag("--with-optimum", vc_optimum);

  std::string stack_path;
  QueryFlags stack_query;
  std::optional<Length> stack_length;
  bool stack_optimum = false;
  auto* gen_stack = generate->add_subcommand("lbs-stack", "Layer-stacking LBS reduction");
  gen_stack->add_option("graph", stack_path, "Static graph file")->required();
  add_query_flags(gen_stack, stack_query);
  gen_stack->add_option("-l,--length", stack_length, "Path length bound");
  gen_stack->add_flag("--with-optimum", stack_optimum);

  std::string planar_path;
  bool planar_stack = false, planar_optimum = false;
  auto* gen_planar =
      generate->add_subcommand("planar-lbs", "Planar grid-gadget LBS construction");
  gen_planar->add_option("instance", planar_path, "Planar LBC file")->required();
  gen_planar->add_flag("--stack", planar_stack,
                       "Compose with lbs-stack into a strict temporal instance");
  gen_planar->add_flag("--with-optimum", planar_optimum);

  VertexId rnd_n = 6;
  TimeLabel rnd_tau = 3;
  double rnd_p = 0.2;
  std::uint64_t rnd_seed = 1;
  std::vector<VertexId> rnd_forbid;
  std::optional<std::string> rnd_query;
  auto* gen_random = generate->add_subcommand("random", "Seeded random temporal graph");
  gen_random->add_option("-n,--vertices", rnd_n)->required();
  gen_random->add_option("--tau", rnd_tau)->required();
  gen_random->add_option("-p,--probability", rnd_p)->required();
  gen_random->add_option("--seed", rnd_seed);
  gen_random->add_option("--forbid-pair", rnd_forbid, "Two vertices never joined")
      ->expected(2);
  gen_random->add_option("--query", rnd_query, "Append a query line 's,z,k'");

  // bench
  std::string bench_target, bench_scales = "1M,2M";
  auto* bench = app.add_subcommand("bench", "Scaling harness");
  bench->add_option("target", bench_target, "ssstp")->required();
  bench->add_option("--scale", bench_scales, "Comma-separated edge counts (K/M suffixes)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve) return cmd_solve(solve_cfg, out, err);
    if (*reduce) return cmd_reduce(reduce_path, reduce_query, out);
    if (*normalize) return cmd_normalize(normalize_path, out);
    if (*ssstp_cmd) return cmd_ssstp(ssstp_path, ssstp_source, ssstp_sink, ssstp_model, out);
    if (*expansion_cmd) return cmd_expansion(expansion_path, expansion_source, expansion_sink, out);
    if (*core_cmd) return cmd_core(core_path, out);
    if (*verify) return cmd_verify(verify_path, verify_query, verify_model, verify_separator, out);
    if (*oracle_lbs) return cmd_oracle_lbs(lbs_path, lbs_budget, lbs_length, lbs_query, out);
    if (*gen_vc) return cmd_generate_vc(vc_path, vc_budget, vc_optimum, out);
    if (*gen_stack) {
      return cmd_generate_lbs_stack(stack_path, stack_query, stack_length, stack_optimum, out);
    }
    if (*gen_planar) return cmd_generate_planar(planar_path, planar_stack, planar_optimum, out);
    if (*gen_random) {
      return cmd_generate_random(rnd_n, rnd_tau, rnd_p, rnd_seed, rnd_forbid.size() == 2,
                                 rnd_forbid.size() == 2 ? rnd_forbid[0] : 0,
                                 rnd_forbid.size() == 2 ? rnd_forbid[1] : 1, rnd_query, out);
    }
    if (*bench) return cmd_bench(bench_target, bench_scales, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace tempsep::cli
