// Command-line front end: exact invariants, spectra, bound reports, the
// extremal family and exhaustive verification sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "tough/bounds.hpp"
#include "tough/exact.hpp"
#include "tough/extremal.hpp"
#include "tough/graph_io.hpp"
#include "tough/report.hpp"
#include "tough/spectra.hpp"
#include "tough/sweep.hpp"

namespace {

using namespace tough;

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string file;
  std::string format = "graph6";
  bool table = false;
  bool csv = false;
  double tol = 1e-7;
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const InputOptions& opt) {
  if (opt.file.empty() || opt.file == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(opt.file);
  if (!in) throw UsageError("cannot open " + opt.file);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<NamedGraph> load_graphs(const InputOptions& opt) {
  const std::string text = read_all(opt);
  std::vector<NamedGraph> out;
  if (opt.format == "edges") {
    Graph g = parse_edge_list(text);
    out.push_back({write_graph6(g), std::move(g)});
    return out;
  }
  std::istringstream lines(text);
  Graph6LineStream stream(lines);
  while (auto e = stream.next()) {
    if (!e->graph) throw UsageError("line " + std::to_string(e->index) + ": " + e->error);
    out.push_back({e->text, std::move(*e->graph)});
  }
  if (out.empty()) throw UsageError("no graphs on input");
  return out;
}

std::string join_members(VertexSet s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::string join_reals(const std::vector<double>& xs) {
  std::ostringstream os;
  os << std::setprecision(10);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

void emit(const InputOptions& opt, const NamedGraph& g, Json body, const std::string& table) {
  if (opt.table) {
    std::cout << g.id << '\t' << table << '\n';
    return;
  }
  Json j;
  j["graph6"] = g.id;
  for (auto& [k, v] : body.items()) j[k] = v;
  std::cout << j.dump() << '\n';
}

int run_tough(const InputOptions& opt) {
  for (const auto& g : load_graphs(opt)) {
    const auto c = toughness(g.graph);
    emit(opt, g, to_json(c),
         "tau=" + c.to_string() +
             (c.infinite ? "" : " cut=" + join_members(c.cut) + " omega=" + std::to_string(c.omega)));
  }
  return kExitClean;
}

int run_alpha(const InputOptions& opt) {
  for (const auto& g : load_graphs(opt)) {
    const auto c = independence_number(g.graph);
    emit(opt, g, to_json(c),
         "alpha=" + std::to_string(c.alpha) + " witness=" + join_members(c.witness));
  }
  return kExitClean;
}

int run_kappa(const InputOptions& opt) {
  for (const auto& g : load_graphs(opt)) {
    const auto c = vertex_connectivity(g.graph);
    emit(opt, g, to_json(c),
         "kappa=" + std::to_string(c.kappa) +
             (c.separator ? " separator=" + join_members(*c.separator) : ""));
  }
  return kExitClean;
}

int run_spectra(const InputOptions& opt) {
  for (const auto& g : load_graphs(opt)) {
    const auto s = spectral_summary(g.graph);
    std::ostringstream t;
    t << std::setprecision(10) << "A: " << join_reals(s.adjacency)
      << " | L: " << join_reals(s.laplacian) << " | NL: " << join_reals(s.normalized)
      << " | xi=" << s.xi;
    if (s.lambda) t << " lambda=" << *s.lambda;
    emit(opt, g, to_json(s), t.str());
  }
  return kExitClean;
}

int run_bounds(const InputOptions& opt) {
  const Tolerances tol{opt.tol, opt.tol};
  if (opt.csv) std::cout << bound_report_csv_header() << '\n';
  for (const auto& g : load_graphs(opt)) {
    const auto r = make_bound_report(g.graph, tol);
    if (opt.csv) {
      std::cout << to_csv_row(r) << '\n';
    } else if (opt.table) {
      std::cout << std::setprecision(10) << r.graph_id << "\ttau=" << r.tau.to_string()
                << " thm11=(" << r.thm11.inv_max_degree << ", " << r.thm11.degree_term << ", "
                << r.thm11.spectral_term << ") eq11=" << r.gu_haemers.eq11
                << " eq12=" << r.gu_haemers.eq12 << " equality=(" << r.equality_eq11 << ", "
                << r.equality_eq12 << ")\n";
    } else {
      std::cout << to_json(r).dump() << '\n';
    }
  }
  return kExitClean;
}

int run_extremal(const InputOptions& opt, const std::string& h_graph6, int n) {
  const Tolerances tol{opt.tol, opt.tol};
  std::vector<NamedGraph> graphs;
  if (!h_graph6.empty()) {
    if (n < 0) throw UsageError("--h-graph6 requires --n");
    Graph g = build_extremal(parse_graph6(h_graph6), n);
    graphs.push_back({write_graph6(g), std::move(g)});
  } else {
    graphs = load_graphs(opt);
  }
  for (const auto& g : graphs) {
    const auto witness = detect_join_form(g.graph, tol.equality);
    const auto verdict = equality_case_verdict(g.graph, tol);
    Json j;
    j["witness"] = witness ? to_json(*witness) : Json(nullptr);
    j["verdict"] = to_json(verdict);
    std::string table = "structural=" + std::to_string(verdict.structural) +
                        " eq11=" + std::to_string(verdict.eq11_holds) +
                        " eq12=" + std::to_string(verdict.eq12_holds) +
                        " consistent=" + std::to_string(verdict.consistent);
    if (witness) {
      table += " delta=" + std::to_string(witness->delta) +
               " independent=" + join_members(witness->independent_part);
    }
    emit(opt, g, std::move(j), table);
  }
  return kExitClean;
}

int run_gen(int n, bool connected) {
  LabeledGraphStream stream(n, connected);
  while (auto e = stream.next()) std::cout << e->text << '\n';
  return kExitClean;
}

int run_verify(const InputOptions& opt, int n, bool all_graphs, const std::string& checks,
               int jobs, bool strict) {
  SweepConfig config;
  config.tol = {opt.tol, opt.tol};
  config.jobs = jobs;
  config.strict = strict;
  if (!checks.empty() && checks != "all") {
    config.checks.clear();
    std::istringstream parts(checks);
    std::string name;
    while (std::getline(parts, name, ',')) {
      const auto c = parse_check(name);
      if (!c) throw UsageError("unknown check '" + name + "'");
      config.checks.insert(*c);
    }
  }
  std::ifstream file;
  if (n > 0) {
    config.generated = GeneratedCorpus{n, !all_graphs};
    config.corpus_id = (all_graphs ? "labeled-n" : "labeled-connected-n") + std::to_string(n);
  } else if (!opt.file.empty() && opt.file != "-") {
    file.open(opt.file);
    if (!file) throw UsageError("cannot open " + opt.file);
    config.input = &file;
    config.corpus_id = opt.file;
  } else {
    config.input = &std::cin;
    config.corpus_id = "stdin";
  }
  const auto report = sweep(config);
  write_sweep_records(std::cout, report);
  for (const auto& p : report.parse_errors) {
    std::cerr << "line " << p.line << ": " << p.message << '\n';
  }
  std::cerr << sweep_summary(report).dump() << '\n';
  if (report.aborted) return kExitUsage;
  return report.clean() ? kExitClean : kExitViolations;
}

void add_input_options(CLI::App* cmd, InputOptions& opt, bool allow_csv = false) {
  cmd->add_option("--file", opt.file, "Input file (default: standard input)");
  cmd->add_option("--format", opt.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edges"}));
  auto* table = cmd->add_flag("--table", opt.table, "Human-readable output");
  auto* json = cmd->add_flag("--json", "JSON-lines output (default)");
  table->excludes(json);
  if (allow_csv) cmd->add_flag("--csv", opt.csv, "CSV output")->excludes(table)->excludes(json);
  cmd->add_option("--tol", opt.tol, "Slack and equality tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toughness, spectra and spectral toughness bounds for small graphs"};
  app.require_subcommand(1);

  InputOptions opt;
  auto* tough_cmd = app.add_subcommand("tough", "Exact toughness with an optimal cut");
  auto* alpha_cmd = app.add_subcommand("alpha", "Independence number with a witness");
  auto* kappa_cmd = app.add_subcommand("kappa", "Vertex connectivity with a separator");
  auto* spectra_cmd = app.add_subcommand("spectra", "Adjacency, Laplacian, normalized spectra");
  auto* bounds_cmd = app.add_subcommand("bounds", "Every toughness bound against exact tau");
  for (auto* cmd : {tough_cmd, alpha_cmd, kappa_cmd, spectra_cmd}) add_input_options(cmd, opt);
  add_input_options(bounds_cmd, opt, true);

  auto* extremal_cmd = app.add_subcommand("extremal", "Build or detect H v (n-delta)K1");
  add_input_options(extremal_cmd, opt);
  std::string h_graph6;
  int extremal_n = -1;
  extremal_cmd->add_option("--h-graph6", h_graph6, "Build from H given in graph6");
  extremal_cmd->add_option("--n", extremal_n, "Total order of the built graph");

  auto* gen_cmd = app.add_subcommand("gen", "Emit every labelled graph on n vertices as graph6");
  int gen_n = 0;
  bool gen_connected = false;
  gen_cmd->add_option("--n", gen_n, "Order")->required()->check(CLI::Range(1, 7));
  gen_cmd->add_flag("--connected", gen_connected, "Connected graphs only");

  auto* verify_cmd = app.add_subcommand("verify", "Sweep a corpus against every inequality");
  add_input_options(verify_cmd, opt);
  int verify_n = 0;
  bool verify_all = false;
  std::string checks = "all";
  int jobs = 1;
  bool strict = false;
  verify_cmd->add_option("--n", verify_n, "Generate the labelled corpus on n vertices")
      ->check(CLI::Range(1, 7));
  verify_cmd->add_flag("--all-graphs", verify_all, "With --n: include disconnected graphs");
  verify_cmd->add_option("--checks", checks, "Comma-separated checks, or 'all'");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_flag("--strict", strict, "Abort on the first malformed corpus line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (*tough_cmd) return run_tough(opt);
    if (*alpha_cmd) return run_alpha(opt);
    if (*kappa_cmd) return run_kappa(opt);
    if (*spectra_cmd) return run_spectra(opt);
    if (*bounds_cmd) return run_bounds(opt);
    if (*extremal_cmd) return run_extremal(opt, h_graph6, extremal_n);
    if (*gen_cmd) return run_gen(gen_n, gen_connected);
    if (*verify_cmd) return run_verify(opt, verify_n, verify_all, checks, jobs, strict);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
