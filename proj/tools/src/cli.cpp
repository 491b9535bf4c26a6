#include "growth/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "growth/basic_schedules.hpp"
#include "growth/bounds.hpp"
#include "growth/composite_schedules.hpp"
#include "growth/kernels.hpp"
#include "growth/oracle.hpp"
#include "growth/schedule_io.hpp"
#include "growth/zero_excess.hpp"

namespace growth::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out(out), err(err) {}

  /// Whole contents of `path`, or of stdin for "-" (read once, then cached).
  const std::string& read(const std::string& path) {
    if (path == "-") {
      if (!stdin_) {
        std::ostringstream buf;
        buf << in_.rdbuf();
        stdin_ = buf.str();
      }
      return *stdin_;
    }
    auto [it, fresh] = files_.try_emplace(path);
    if (fresh) {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot read file '" + path + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      it->second = buf.str();
    }
    return it->second;
  }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
  std::map<std::string, std::string> files_;

 public:
  std::ostream& out;
  std::ostream& err;
};

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j, const std::string& where) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph::from_edges(n, edges);
  } catch (const json::exception& e) {
    throw UsageError(where + ": malformed embedded target: " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(where + ": " + e.what());
  }
}

/// Edge-list text, or the "target" member of a document written by `grow`.
Graph load_graph(Io& io, const std::string& path) {
  const std::string& text = io.read(path);
  if (looks_like_json(text)) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(source_name(path) + ": " + e.what());
    }
    if (!doc.contains("target")) throw UsageError(source_name(path) + ": document has no \"target\" member");
    return graph_from_json(doc["target"], source_name(path));
  }
  try {
    return parse_graph(text);
  } catch (const GraphError& e) {
    throw UsageError(source_name(path) + ": " + e.what());
  }
}

Schedule load_schedule(Io& io, const std::string& path) {
  try {
    return parse_schedule(io.read(path));
  } catch (const ScheduleError& e) {
    throw UsageError(source_name(path) + ": " + e.what());
  }
}

Coloring load_coloring(Io& io, const std::string& path, int n) {
  json doc;
  try {
    doc = json::parse(io.read(path));
  } catch (const json::parse_error& e) {
    throw UsageError(source_name(path) + ": " + e.what());
  }
  Coloring c;
  c.colors.assign(n, -1);
  auto set = [&](long long v, const json& color) {
    if (v < 0 || v >= n) throw UsageError(source_name(path) + ": vertex " + std::to_string(v) + " out of range");
    if (!color.is_number_integer() || color.get<long long>() < 0)
      throw UsageError(source_name(path) + ": color of vertex " + std::to_string(v) + " must be a non-negative integer");
    c.colors[v] = color.get<int>();
  };
  if (doc.is_array()) {
    for (std::size_t v = 0; v < doc.size(); ++v) set(static_cast<long long>(v), doc[v]);
  } else if (doc.is_object()) {
    for (const auto& [key, color] : doc.items()) {
      long long v = -1;
      try {
        std::size_t used = 0;
        v = std::stoll(key, &used);
        if (used != key.size()) v = -1;
      } catch (const std::exception&) {
      }
      if (v < 0) throw UsageError(source_name(path) + ": key '" + key + "' is not a vertex id");
      set(v, color);
    }
  } else {
    throw UsageError(source_name(path) + ": expected an object or array of colors");
  }
  for (int v = 0; v < n; ++v) {
    if (c.colors[v] < 0) throw UsageError(source_name(path) + ": vertex " + std::to_string(v) + " has no color");
    c.num_colors = std::max(c.num_colors, c.colors[v] + 1);
  }
  return c;
}

std::string metrics_text(const Metrics& m) {
  return "Metrics{slots:" + std::to_string(m.slots) + ", excess:" + std::to_string(m.excess_edges) +
         ", max_lifetime:" + std::to_string(m.max_excess_lifetime) + "}";
}

json metrics_json(const Metrics& m) {
  return {{"slots", m.slots}, {"excess", m.excess_edges}, {"max_lifetime", m.max_excess_lifetime}};
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  int n = 8;
  int rows = 4;
  int cols = 4;
  int delta = 3;
  std::uint64_t seed = 0;
  std::string input = "-";
  bool dot = false;
};

int cmd_gen(Io& io, const GenArgs& a) {
  Graph g;
  const std::string& f = a.family;
  if (f == "path") g = path_graph(a.n);
  else if (f == "star") g = star_graph(a.n);
  else if (f == "cycle") g = cycle_graph(a.n);
  else if (f == "complete") g = complete_graph(a.n);
  else if (f == "tree") g = random_tree(a.n, a.seed);
  else if (f == "grid") g = grid_graph(a.rows, a.cols);
  else if (f == "petersen") g = petersen_graph();
  else if (f == "binomial") g = binomial_tree(a.delta);
  else if (f == "gfull") g = g_full(a.delta);
  else if (f == "gbipart") g = g_bipart(a.delta);
  else if (f == "gadget") g = hardness_gadget(load_graph(io, a.input));
  io.out << (a.dot ? emit_dot(g) : emit_graph(g));
  return kOk;
}

// ---------------------------------------------------------------- grow

struct GrowArgs {
  std::string algo;
  std::string target = "-";
  std::string coloring;
  int ell = 0;
  bool pretty = false;
};

int cmd_grow(Io& io, const GrowArgs& a) {
  const Graph target = load_graph(io, a.target);
  std::optional<Coloring> coloring;
  if (!a.coloring.empty()) coloring = load_coloring(io, a.coloring, target.num_vertices());
  SynthesisOptions opts{a.ell, coloring ? &*coloring : nullptr};
  std::optional<Schedule> s;
  try {
    s = synthesize(a.algo, target, opts);
  } catch (const std::invalid_argument& e) {
    throw DomainFailure(e.what());
  }
  if (!s) {
    io.out << "NONE\n";
    return kDomainFailure;
  }
  Metrics m;
  try {
    m = validate(*s, target);
  } catch (const ScheduleError& e) {
    throw DomainFailure(std::string("internal: synthesized schedule is invalid: ") + e.what());
  }
  json doc = json::parse(emit_schedule(*s));
  doc["target"] = graph_json(target);
  doc["metrics"] = metrics_json(m);
  io.out << doc.dump(a.pretty ? 2 : -1) << '\n';
  io.err << a.algo << ": " << metrics_text(m) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string schedule = "-";
  std::string target = "-";
  bool properties = false;
};

int cmd_validate(Io& io, const ValidateArgs& a) {
  const Schedule s = load_schedule(io, a.schedule);
  const Graph target = load_graph(io, a.target);
  try {
    const Metrics m = validate(s, target);
    io.out << metrics_text(m) << '\n';
    if (a.properties && s.d == 2) {
      const PropertyReport rep = check_properties(simulate(s), target);
      io.out << "properties: " << rep.violations.size() << " violations\n";
      for (const std::string& v : rep.violations) io.out << "  " << v << '\n';
      if (!rep.ok()) return kDomainFailure;
    }
  } catch (const ScheduleError& e) {
    if (e.code() == ScheduleErrorCode::kMalformed) throw UsageError(e.what());
    io.out << "INVALID " << e.what() << '\n';
    return kDomainFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string target = "-";
  int d = 2;
  int restarts = 32;
  std::uint64_t seed = 0;
};

int cmd_bounds(Io& io, const BoundsArgs& a) {
  const Graph g = load_graph(io, a.target);
  SlotBound b;
  try {
    b = slot_lower_bound_details(g, a.d);
  } catch (const GraphError& e) {
    throw DomainFailure(e.what());
  }
  json doc = {{"slot_lower_bound", b.value}, {"exact", b.exact}, {"d", a.d},
              {"terms", {{"log", b.log_term}}}};
  if (a.d == 1) {
    doc["terms"]["diameter"] = b.diameter_term;
    doc["terms"]["max_degree"] = b.degree_term;
  } else {
    doc["terms"]["clique_minus_one"] = b.clique_term;
    doc["terms"]["chromatic_minus_one"] = b.chromatic_term;
  }
  const int n = g.num_vertices();
  if (n >= 1 && (n & (n - 1)) == 0) {
    const EdgeDifferenceResult ed = min_edge_difference(g, a.restarts, a.seed);
    doc["edge_difference"] = {{"value", ed.value}, {"exact", ed.exact}, {"witness", ed.witness},
                              {"certified_excess_lower_bound", ed.exact}};
  }
  io.out << doc.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string mode;
  std::string target = "-";
  int d = 2;
  int k = 1;
  int n = 4;
  int cap = kOracleDefaultCap;
  bool all = false;
};

int cmd_oracle(Io& io, const OracleArgs& a) {
  try {
    if (a.mode == "enum") {
      const auto graphs = a.all ? all_graphs(a.n, a.cap) : connected_graphs(a.n, a.cap);
      json list = json::array();
      for (const Graph& g : graphs) list.push_back(graph_json(g)["edges"]);
      io.out << json{{"n", a.n}, {"connected", !a.all}, {"count", graphs.size()}, {"graphs", list}}.dump()
             << '\n';
      return kOk;
    }
    const Graph g = load_graph(io, a.target);
    std::optional<OracleResult> r;
    try {
      r = a.mode == "minslots" ? min_slots_zero_excess(g, a.d, a.cap)
                               : min_excess_with_budget(g, a.k, a.d, a.cap);
    } catch (const CapExceeded&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw DomainFailure(e.what());
    }
    if (!r) {
      io.out << json{{"result", nullptr}}.dump() << '\n';
      return kDomainFailure;
    }
    json doc = {{"result", a.mode == "minslots" ? json(r->slots) : json(r->excess)},
                {"slots", r->slots},
                {"excess", r->excess},
                {"witness", json::parse(emit_schedule(r->witness))}};
    io.out << doc.dump() << '\n';
    return kOk;
  } catch (const CapExceeded& e) {
    throw UsageError(std::string(e.what()) + " (raise --cap, at most " + std::to_string(kOracleHardCap) + ")");
  }
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string algo;
  std::string family;
  int n_min = 16;
  int n_max = 1024;
  int factor = 2;
  int count = 1;
  std::uint64_t seed = 0;
  int threads = 0;
  bool deterministic = false;
};

Graph family_graph(const std::string& family, int n, std::uint64_t seed) {
  if (family == "path") return path_graph(n);
  if (family == "star") return star_graph(n);
  if (family == "grid") {
    const int side = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))));
    return grid_graph(side, side);
  }
  return random_tree(n, seed);
}

int cmd_sweep(Io& io, SweepArgs a) {
  if (a.family.empty()) a.family = a.algo == "path" || a.algo == "star" ? a.algo : "tree";
  struct Job {
    int n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (long long n = a.n_min; n <= a.n_max; n *= a.factor)
    for (int i = 0; i < a.count; ++i) jobs.push_back({static_cast<int>(n), a.seed + static_cast<std::uint64_t>(i)});

  std::vector<SweepRow> rows(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      const Graph g = family_graph(a.family, jobs[i].n, jobs[i].seed);
      SweepRow& row = rows[i];
      row.algo = a.algo;
      row.n = g.num_vertices();
      row.seed = jobs[i].seed;
      try {
        const auto start = std::chrono::steady_clock::now();
        auto s = synthesize(a.algo, g);
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!s) {
          row.slots = -1;
          row.max_lifetime = -1;
          continue;
        }
        const Metrics m = validate(*s, g);
        row.slots = m.slots;
        row.excess = m.excess_edges;
        row.max_lifetime = m.max_excess_lifetime;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  int threads = a.threads > 0 ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < jobs.size(); ++i)
    if (!errors[i].empty())
      throw DomainFailure("n=" + std::to_string(jobs[i].n) + " seed=" + std::to_string(jobs[i].seed) + ": " +
                          errors[i]);
  io.out << "algo,n,seed,slots,excess,max_lifetime,wall_ms\n";
  for (const SweepRow& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", a.deterministic ? 0.0 : r.wall_ms);
    io.out << r.algo << ',' << r.n << ',' << r.seed << ',' << r.slots << ',' << r.excess << ','
           << r.max_lifetime << ',' << ms << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- dot

struct DotArgs {
  std::string schedule = "-";
  std::string target;
  std::string out_dir = ".";
};

int cmd_dot(Io& io, const DotArgs& a) {
  const Schedule s = load_schedule(io, a.schedule);
  Trace trace;
  try {
    trace = simulate(s);
  } catch (const ScheduleError& e) {
    io.out << "INVALID " << e.what() << '\n';
    return kDomainFailure;
  }
  // Final edges; everything else is excess and drawn dashed while alive.
  std::set<Edge> keep;
  if (!a.target.empty()) {
    const Graph target = load_graph(io, a.target);
    keep.insert(target.edges().begin(), target.edges().end());
  } else {
    const Graph& last = trace.instances.back();
    keep.insert(last.edges().begin(), last.edges().end());
  }
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec) throw UsageError("cannot create directory '" + a.out_dir + "': " + ec.message());
  for (std::size_t t = 0; t < trace.instances.size(); ++t) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.dot", t);
    const auto path = std::filesystem::path(a.out_dir) / name;
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write file '" + path.string() + "'");
    f << "graph {\n  label=\"slot " << t << "\";\n";
    for (Vertex v = 0; v < static_cast<Vertex>(trace.birth_slot.size()); ++v)
      if (trace.present(v, static_cast<int>(t))) f << "  " << v << ";\n";
    for (const Edge& e : trace.instances[t].edges()) {
      f << "  " << e.u << " -- " << e.v;
      if (!keep.count(e)) f << " [style=dashed]";
      f << ";\n";
    }
    f << "}\n";
    io.out << path.string() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
  std::string mode;
  std::string input = "-";
};

TwoSatFormula parse_dimacs(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  TwoSatFormula f;
  bool header = false;
  std::vector<int> pending;
  auto fail = [&](const std::string& what) {
    throw UsageError(where + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      long long vars = -1, clauses = -1;
      if (header || !(ls >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 || vars > (1 << 24))
        fail("malformed \"p cnf\" header");
      f.num_vars = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) fail("clause before \"p cnf\" header");
    ls.clear();
    ls.str(line);
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.empty() || pending.size() > 2) fail("clauses must have one or two literals");
        auto to_lit = [](int x) { return x > 0 ? Literal::pos(x - 1) : Literal::neg(-x - 1); };
        if (pending.size() == 1) f.add_unit(to_lit(pending[0]));
        else f.add_clause(to_lit(pending[0]), to_lit(pending[1]));
        pending.clear();
      } else {
        if (std::llabs(lit) > f.num_vars) fail("literal " + std::to_string(lit) + " out of range");
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) fail("expected integer literals");
  }
  if (!header) fail("missing \"p cnf\" header");
  if (!pending.empty()) fail("last clause is not terminated by 0");
  return f;
}

int cmd_kernel(Io& io, const KernelArgs& a) {
  if (a.mode == "match") {
    const Matching m = max_matching(load_graph(io, a.input));
    json pairs = json::array();
    for (const Edge& e : m.pairs) pairs.push_back({e.u, e.v});
    io.out << json{{"size", m.size()}, {"perfect", m.is_perfect()}, {"pairs", pairs}}.dump() << '\n';
    return kOk;
  }
  const TwoSatFormula f = parse_dimacs(io.read(a.input), source_name(a.input));
  const auto sol = two_sat(f);
  if (!sol) {
    io.out << "s UNSATISFIABLE\n";
    return kDomainFailure;
  }
  io.out << "s SATISFIABLE\nv";
  for (int x = 0; x < f.num_vars; ++x) io.out << ' ' << ((*sol)[x] ? x + 1 : -(x + 1));
  io.out << " 0\n";
  return kOk;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{
      "clique", "iclique", "path", "star", "trim", "star4", "clique3",
      "elim",   "elim+L",  "fast", "tree", "colored", "planar"};
  return names;
}

std::optional<Schedule> synthesize(const std::string& algo, const Graph& target,
                                   const SynthesisOptions& options) {
  const int n = target.num_vertices();
  if (algo == "clique") return clique_schedule(target);
  if (algo == "iclique") return improved_clique_schedule(target);
  if (algo == "path") {
    if (!(target == path_graph(n))) throw GraphError("algo path needs the labeled path 0-1-...-(n-1)");
    return path_schedule(n);
  }
  if (algo == "star") {
    if (!(target == star_graph(n))) throw GraphError("algo star needs the star centered at 0");
    return star_schedule(n);
  }
  if (algo == "trim") return trimming_schedule(target);
  if (algo == "star4") return star_spanning_schedule(target);
  if (algo == "clique3") return clique_maintaining_schedule(target);
  if (algo == "elim") return elimination_schedule(target);
  if (algo == "elim+L") return constant_excess_schedule(target, options.ell);
  if (algo == "fast") return fast_growth(target);
  if (algo == "tree") return tree_schedule(target);
  if (algo == "colored")
    return colored_schedule(target, options.coloring ? *options.coloring : degeneracy_coloring(target));
  if (algo == "planar") return planar_schedule(target);
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize, simulate, validate and bound graph growth schedules.", "growth"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a graph as an edge list");
  gen_cmd->add_option("family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"path", "star", "cycle", "complete", "tree", "grid", "petersen", "binomial",
                             "gfull", "gbipart", "gadget"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count")->check(CLI::Range(1, 1 << 24));
  gen_cmd->add_option("--rows", gen.rows, "Grid rows")->check(CLI::Range(1, 1 << 12));
  gen_cmd->add_option("--cols", gen.cols, "Grid columns")->check(CLI::Range(1, 1 << 12));
  gen_cmd->add_option("--delta", gen.delta, "Level count")->check(CLI::Range(0, 20));
  gen_cmd->add_option("--seed", gen.seed, "Random tree seed");
  gen_cmd->add_option("--input", gen.input, "Base graph for gadget ('-' for stdin)");
  gen_cmd->add_flag("--dot", gen.dot, "Emit DOT instead of an edge list");

  GrowArgs grow;
  auto* grow_cmd = app.add_subcommand("grow", "Synthesize a schedule for a target graph");
  grow_cmd->add_option("--algo", grow.algo, "Algorithm")->required()->check(CLI::IsMember(algorithm_names()));
  grow_cmd->add_option("--target", grow.target, "Target edge list ('-' for stdin)");
  grow_cmd->add_option("--ell", grow.ell, "Excess budget for elim+L")->check(CLI::Range(0, kDefaultExcessCap));
  grow_cmd->add_option("--coloring", grow.coloring, "JSON coloring for colored (vertex -> color)");
  grow_cmd->add_flag("--pretty", grow.pretty, "Indent the JSON output");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Check a schedule against a target");
  val_cmd->add_option("--schedule", val.schedule, "Schedule JSON ('-' for stdin)");
  val_cmd->add_option("--target", val.target,
                      "Target edge list, or a grow document carrying one ('-' for stdin)");
  val_cmd->add_flag("--properties", val.properties, "Also run the d = 2 property checks");

  BoundsArgs bnd;
  auto* bnd_cmd = app.add_subcommand("bounds", "Slot and excess lower bounds");
  bnd_cmd->add_option("--target", bnd.target, "Target edge list ('-' for stdin)");
  bnd_cmd->add_option("--d", bnd.d, "Edge-activation distance")->check(CLI::Range(1, 1 << 20));
  bnd_cmd->add_option("--restarts", bnd.restarts, "Local search restarts (n > 8)")->check(CLI::Range(1, 10000));
  bnd_cmd->add_option("--seed", bnd.seed, "Local search seed");

  OracleArgs orc;
  auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive search on small instances");
  orc_cmd->add_option("mode", orc.mode, "minslots, minexcess or enum")
      ->required()
      ->check(CLI::IsMember({"minslots", "minexcess", "enum"}));
  orc_cmd->add_option("--target", orc.target, "Target edge list ('-' for stdin)");
  orc_cmd->add_option("--d", orc.d, "Edge-activation distance")->check(CLI::Range(1, 1 << 20));
  orc_cmd->add_option("--k", orc.k, "Slot budget (minexcess)")->check(CLI::Range(0, kOracleHardCap));
  orc_cmd->add_option("--n", orc.n, "Vertex count (enum)")->check(CLI::Range(1, 11));
  orc_cmd->add_option("--cap", orc.cap, "Size cap override")->check(CLI::Range(1, kOracleHardCap));
  orc_cmd->add_flag("--all", orc.all, "enum: include disconnected graphs");

  SweepArgs swp;
  auto* swp_cmd = app.add_subcommand("sweep", "Batch experiment, CSV output");
  swp_cmd->add_option("--algo", swp.algo, "Algorithm")->required()->check(CLI::IsMember(algorithm_names()));
  swp_cmd->add_option("--family", swp.family, "tree, path, star or grid (default by algo)")
      ->check(CLI::IsMember({"tree", "path", "star", "grid"}));
  swp_cmd->add_option("--n-min", swp.n_min, "Smallest size")->check(CLI::Range(1, 1 << 24));
  swp_cmd->add_option("--n-max", swp.n_max, "Largest size")->check(CLI::Range(1, 1 << 24));
  swp_cmd->add_option("--factor", swp.factor, "Size multiplier")->check(CLI::Range(2, 1 << 10));
  swp_cmd->add_option("--count", swp.count, "Instances per size")->check(CLI::Range(1, 1 << 16));
  swp_cmd->add_option("--seed", swp.seed, "Base seed");
  swp_cmd->add_option("--threads", swp.threads, "Worker threads (0 = hardware)")->check(CLI::Range(0, 1024));
  swp_cmd->add_flag("--deterministic", swp.deterministic, "Report wall_ms as 0 for byte-stable output");

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("dot", "Write one DOT frame per slot of a trace");
  dot_cmd->add_option("--schedule", dot.schedule, "Schedule JSON ('-' for stdin)");
  dot_cmd->add_option("--target", dot.target, "Target for excess styling (default: final instance)");
  dot_cmd->add_option("--out-dir", dot.out_dir, "Directory for frame_NNNN.dot files");

  KernelArgs ker;
  auto* ker_cmd = app.add_subcommand("kernel", "Debug access to matching and 2-SAT");
  ker_cmd->add_option("mode", ker.mode, "match or 2sat")->required()->check(CLI::IsMember({"match", "2sat"}));
  ker_cmd->add_option("--input", ker.input, "Edge list (match) or DIMACS CNF (2sat)");

  std::vector<std::string> storage{"growth"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Io io(in, out, err);
  try {
    if (*gen_cmd) return cmd_gen(io, gen);
    if (*grow_cmd) return cmd_grow(io, grow);
    if (*val_cmd) return cmd_validate(io, val);
    if (*bnd_cmd) return cmd_bounds(io, bnd);
    if (*orc_cmd) return cmd_oracle(io, orc);
    if (*swp_cmd) return cmd_sweep(io, swp);
    if (*dot_cmd) return cmd_dot(io, dot);
    if (*ker_cmd) return cmd_kernel(io, ker);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainFailure& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsageError;
}

}  // namespace growth::cli
