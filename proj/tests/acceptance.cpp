// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tough/bounds.hpp"
#include "tough/exact.hpp"
#include "tough/extremal.hpp"
#include "tough/graph_io.hpp"
#include "tough/spectra.hpp"
#include "tough/sweep.hpp"

namespace {

using namespace tough;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct SweepTotals {
  std::size_t graphs = 0;
  std::map<std::string, int> violations;  // by check name
  std::map<std::string, int> tags;
  double seconds = 0.0;

  int tag(const std::string& name) const {
    const auto it = tags.find(name);
    return it == tags.end() ? 0 : it->second;
  }
  int violation_count() const {
    int total = 0;
    for (const auto& [name, count] : violations) total += count;
    return total;
  }
  std::string violation_summary() const {
    std::string out;
    for (const auto& [name, count] : violations) {
      out += (out.empty() ? "" : ", ") + name + "=" + std::to_string(count);
    }
    return out.empty() ? "none" : out;
  }
};

SweepTotals sweep_orders(std::set<Check> checks, int max_n, bool connected_only) {
  SweepTotals totals;
  for (int n = 1; n <= max_n; ++n) {
    SweepConfig config;
    config.checks = checks;
    config.generated = GeneratedCorpus{n, connected_only};
    const auto report = sweep(config);
    totals.graphs += report.graphs_checked;
    totals.seconds += report.wall_time;
    for (const auto& v : report.violations) ++totals.violations[v.check];
    for (const auto& i : report.interesting) ++totals.tags[i.tag];
  }
  return totals;
}

// Runs `body` on every labelled graph on 1..max_n vertices.
void for_each_graph(int max_n, bool connected_only, const std::function<void(const Graph&)>& body) {
  for (int n = 1; n <= max_n; ++n) {
    LabeledGraphStream stream(n, connected_only);
    while (auto e = stream.next()) body(*e->graph);
  }
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

// Connected labelled graphs on 1..6 vertices: 1 + 1 + 4 + 38 + 728 + 26704.
constexpr std::size_t kConnectedUpTo6 = 27476;

Outcome criterion_thm11() {
  const auto t = sweep_orders({Check::kThm11}, 6, true);
  const bool ok = t.violation_count() == 0 && t.graphs == kConnectedUpTo6 && t.seconds < 600.0;
  return {ok, std::to_string(t.graphs) + " graphs, violations: " + t.violation_summary() +
                  fmt(", %.2fs", t.seconds) + ", tight=" + std::to_string(t.tag("thm11-tight"))};
}

Outcome criterion_gu_haemers() {
  const auto t = sweep_orders({Check::kEq11, Check::kEq12}, 6, true);
  const bool ok = t.violation_count() == 0 && t.graphs == kConnectedUpTo6;
  return {ok, std::to_string(t.graphs) + " graphs, violations: " + t.violation_summary() +
                  ", eq11 equalities=" + std::to_string(t.tag("eq11-equality")) +
                  ", eq12 equalities=" + std::to_string(t.tag("eq12-equality"))};
}

Outcome criterion_iff() {
  const auto t = sweep_orders({Check::kIffExtremal}, 6, true);
  const bool ok = t.violation_count() == 0 && t.graphs == kConnectedUpTo6;
  return {ok, std::to_string(t.graphs) + " graphs, mismatches: " + t.violation_summary() +
                  ", extremal joins=" + std::to_string(t.tag("extremal-join"))};
}

Outcome criterion_petersen() {
  const Graph pet = Graph::petersen();
  const auto s = spectral_summary(pet);
  const auto terms = thm11_terms(pet, s);
  const auto reg = regular_bounds(pet, s);
  const double d = 3.0;
  const double closed_form = d / *s.lambda - 1.0;

  const auto start = Clock::now();
  const auto brute = oracle::toughness(pet);
  const auto exact = toughness(pet);
  const double elapsed = seconds_since(start);

  const bool spectral_ok = !terms.xi_anomaly && std::abs(terms.spectral_term - 0.5) <= 1e-9 &&
                           std::abs(closed_form - 0.5) <= 1e-9 && reg &&
                           std::abs(reg->brouwer - terms.spectral_term) <= 1e-9;
  const bool tau_ok = brute && brute->first * 3 == brute->second * 4 &&
                      exact.tau() == Ratio{4, 3} && elapsed < 1.0;
  return {spectral_ok && tau_ok,
          fmt("spectral term %.12f, d/lambda-1 %.12f", terms.spectral_term, closed_form) +
              ", tau=" + exact.to_string() + fmt(" in %.4fs", elapsed)};
}

Outcome criterion_oracles() {
  int graphs = 0, tau_bad = 0, alpha_bad = 0, kappa_bad = 0;
  for_each_graph(6, true, [&](const Graph& g) {
    ++graphs;
    const auto t = toughness(g);
    const auto bt = oracle::toughness(g);
    if (t.infinite != !bt.has_value() ||
        (bt && static_cast<long>(t.cut_size) * bt->second != static_cast<long>(bt->first) * t.omega)) {
      ++tau_bad;
    }
    if (independence_number(g).alpha != oracle::alpha(g)) ++alpha_bad;
    if (vertex_connectivity(g).kappa != oracle::kappa(g)) ++kappa_bad;
  });
  const bool ok = tau_bad == 0 && alpha_bad == 0 && kappa_bad == 0 &&
                  graphs == static_cast<int>(kConnectedUpTo6);
  return {ok, std::to_string(graphs) + " graphs, mismatches tau=" + std::to_string(tau_bad) +
                  " alpha=" + std::to_string(alpha_bad) + " kappa=" + std::to_string(kappa_bad)};
}

Outcome criterion_mixing() {
  const double slack = 1e-7;
  long pairs = 0;
  int graphs = 0, failures = 0;
  for_each_graph(5, false, [&](const Graph& g) {
    // The mixing inequalities are stated for graphs with at least one edge.
    if (g.size() == 0) return;
    ++graphs;
    const auto s = spectral_summary(g);
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t xm = 0; xm < limit; ++xm) {
      for (std::uint64_t ym = 0; ym < limit; ++ym) {
        const auto gap = mixing_gap(g, VertexSet(xm), VertexSet(ym), s);
        ++pairs;
        if (!(gap.lhs <= gap.rhs + slack) || !(gap.single_lhs <= gap.single_rhs + slack)) {
          ++failures;
        }
      }
    }
  });
  const Graph pet = Graph::petersen();
  const auto i = independence_number(pet).witness;
  const auto gap = mixing_gap(pet, i, i, spectral_summary(pet));
  const bool petersen_ok = i.size() == 4 && std::abs(gap.single_lhs - 4.8) <= 1e-8 &&
                           std::abs(gap.single_rhs - 4.8) <= 1e-8;
  return {failures == 0 && petersen_ok,
          std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " (X,Y) pairs, " +
              std::to_string(failures) + " failures" +
              fmt(", Petersen %.10f vs %.10f", gap.single_lhs, gap.single_rhs)};
}

Outcome criterion_join_spectrum() {
  std::vector<Graph> graphs;
  for_each_graph(4, false, [&](const Graph& g) { graphs.push_back(g); });
  std::vector<std::vector<double>> spectra;
  for (const auto& g : graphs) spectra.push_back(laplacian_spectrum(g));

  long pairs = 0;
  int failures = 0;
  double worst = 0.0;
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      const auto closed = join_laplacian_spectrum(spectra[a], spectra[b], graphs[a].order(),
                                                  graphs[b].order());
      const auto numeric = laplacian_spectrum(join(graphs[a], graphs[b]));
      ++pairs;
      if (closed.size() != numeric.size()) {
        ++failures;
        continue;
      }
      double diff = 0.0;
      for (std::size_t k = 0; k < closed.size(); ++k) {
        diff = std::max(diff, std::abs(closed[k] - numeric[k]));
      }
      worst = std::max(worst, diff);
      if (diff > 1e-8) ++failures;
    }
  }
  return {failures == 0, std::to_string(pairs) + " pairs, " + std::to_string(failures) +
                             " failures" + fmt(", max deviation %.3g", worst)};
}

Outcome criterion_independence() {
  const auto t = sweep_orders({Check::kAlphaBounds}, 6, false);

  const Graph pet = Graph::petersen();
  const auto s = spectral_summary(pet);
  const auto alpha = independence_number(pet);
  const auto b = independence_upper_bounds(pet, s);
  const bool petersen_ok = alpha.alpha == 4 && std::abs(b.by_laplacian - 4.0) <= 1e-7 &&
                           semiregular_equality_check(pet, alpha.witness, s);
  return {t.violation_count() == 0 && petersen_ok,
          std::to_string(t.graphs) + " graphs, violations: " + t.violation_summary() +
              ", equality cases=" + std::to_string(t.tag("alpha-laplacian-equality")) +
              ", Petersen semiregular=" + (petersen_ok ? "yes" : "no")};
}

Outcome criterion_corollary() {
  const auto t = sweep_orders({Check::kCorollary}, 6, true);
  const bool ok = t.violation_count() == 0 && t.graphs == kConnectedUpTo6;
  return {ok, std::to_string(t.graphs) + " graphs, violations: " + t.violation_summary() +
                  ", equalities=" + std::to_string(t.tag("corollary-equality")) +
                  ", extremal joins=" + std::to_string(t.tag("extremal-join"))};
}

ComponentPartition partition_from_sizes(const std::vector<int>& sizes) {
  ComponentPartition p;
  int next = 0;
  for (int s : sizes) {
    VertexSet block;
    for (int i = 0; i < s; ++i) block.insert(next++);
    p.blocks.push_back(block);
  }
  return p;
}

bool split_ok(const std::vector<int>& sizes, int& checked) {
  const int omega = static_cast<int>(sizes.size());
  ++checked;
  const auto p = partition_from_sizes(sizes);
  const auto split = balanced_component_split(p, omega);
  VertexSet all;
  for (const auto& b : p.blocks) all |= b;
  return split.r.size() >= omega && split.t.size() >= omega && !split.r.intersects(split.t) &&
         (split.r | split.t) == all;
}

bool valid_split_input(const std::vector<int>& sizes) {
  const int omega = static_cast<int>(sizes.size());
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  return omega >= 2 && total >= 2 * omega + 1 && total - sizes.back() >= omega;
}

// Every ascending size sequence with the given total, fed to `visit`.
void ascending_sequences(int remaining, int min_part, std::vector<int>& prefix,
                         const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    prefix.push_back(part);
    ascending_sequences(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

Outcome criterion_subset_split() {
  std::mt19937_64 rng(20240917);
  int subset_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = std::uniform_int_distribution<int>(1, 20)(rng);
    std::vector<int> sizes(p, 1);
    // Spread the remaining p - 1 units of the 2p - 1 budget at random.
    const int extra = std::uniform_int_distribution<int>(0, p - 1)(rng);
    for (int k = 0; k < extra; ++k) ++sizes[std::uniform_int_distribution<int>(0, p - 1)(rng)];
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int target = std::uniform_int_distribution<int>(0, total)(rng);
    const auto chosen = subset_with_sum(sizes, target);
    int sum = 0;
    for (int i : chosen) sum += sizes[i];
    const bool distinct = std::adjacent_find(chosen.begin(), chosen.end(),
                                             std::greater_equal<int>()) == chosen.end();
    if (sum != target || !distinct) ++subset_bad;
  }

  int checked = 0, split_bad = 0;
  for (int total = 1; total <= 24; ++total) {
    std::vector<int> prefix;
    ascending_sequences(total, 1, prefix, [&](const std::vector<int>& sizes) {
      if (valid_split_input(sizes) && !split_ok(sizes, checked)) ++split_bad;
    });
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int omega = std::uniform_int_distribution<int>(2, 12)(rng);
    std::vector<int> sizes(omega);
    for (int& s : sizes) s = std::uniform_int_distribution<int>(1, 5)(rng);
    std::sort(sizes.begin(), sizes.end());
    if (valid_split_input(sizes) && !split_ok(sizes, checked)) ++split_bad;
  }
  return {subset_bad == 0 && split_bad == 0,
          "1000 subset-sum instances, " + std::to_string(subset_bad) + " wrong; " +
              std::to_string(checked) + " balanced splits, " + std::to_string(split_bad) +
              " unbalanced"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 toughness lower bounds (max degree, degree, normalized spectrum), n<=6",
       criterion_thm11},
      {"AC2 Laplacian toughness bounds, n<=6", criterion_gu_haemers},
      {"AC3 Laplacian-bound equality iff join form, n<=6", criterion_iff},
      {"AC4 Petersen: spectral term = d/lambda-1 = 0.5, tau = 4/3", criterion_petersen},
      {"AC5 pruned tau, branch-and-bound alpha, flow kappa vs exhaustive, n<=6",
       criterion_oracles},
      {"AC6 expander mixing inequalities, all graphs n<=5, all (X,Y)", criterion_mixing},
      {"AC7 join Laplacian spectrum closed form, n_G,n_H<=4", criterion_join_spectrum},
      {"AC8 independence upper bounds and semiregular equality, n<=6", criterion_independence},
      {"AC9 algebraic connectivity cap and its equality cases, n<=6", criterion_corollary},
      {"AC10 subset-sum and balanced component split properties", criterion_subset_split},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
