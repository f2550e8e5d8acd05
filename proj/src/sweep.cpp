#include "tough/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "tough/extremal.hpp"

namespace tough {

const char* to_string(Check c) {
  switch (c) {
    case Check::kThm11: return "thm11";
    case Check::kEq11: return "eq11";
    case Check::kEq12: return "eq12";
    case Check::kCorollary: return "corollary";
    case Check::kRegular: return "regular";
    case Check::kAlphaBounds: return "alpha-bounds";
    case Check::kMixing: return "mixing";
    case Check::kCutPartition: return "lemma28";
    case Check::kIffExtremal: return "iff-extremal";
  }
  return "unknown";
}

std::set<Check> all_checks() {
  return {Check::kThm11,       Check::kEq11,   Check::kEq12,
          Check::kCorollary,   Check::kRegular, Check::kAlphaBounds,
          Check::kMixing,      Check::kCutPartition, Check::kIffExtremal};
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : all_checks()) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

namespace {

class GraphChecker {
 public:
  GraphChecker(const Graph& g, const std::string& id, const SweepConfig& config, SweepReport& out)
      : g_(g), id_(id), config_(config), tol_(config.tol), out_(out) {}

  void run() {
    const int n = g_.order();
    if (n < 2) return;
    const bool connected = is_connected(g_);
    spectra_ = spectral_summary(g_);

    if (connected) {
      tau_ = toughness(g_);
      if (tau_->infinite) {
        note("complete");
      } else {
        report_ = make_bound_report(g_, *spectra_, *tau_, tol_);
        if (enabled(Check::kThm11)) check_thm11();
        if (enabled(Check::kEq11)) check_gu_haemers("eq11", report_->gu_haemers.eq11);
        if (enabled(Check::kEq12)) check_gu_haemers("eq12", report_->gu_haemers.eq12);
        if (enabled(Check::kCorollary) || enabled(Check::kIffExtremal)) {
          verdict_ = equality_case_verdict(g_, *report_);
          if (verdict_->structural) note("extremal-join");
        }
        if (enabled(Check::kCorollary)) check_corollary();
        if (enabled(Check::kRegular)) check_regular();
        if (enabled(Check::kIffExtremal)) check_iff();
        if (enabled(Check::kCutPartition) && n <= kCutPartitionMaxOrder) check_cut_partitions();
      }
    }
    if (g_.size() >= 1) {
      if (enabled(Check::kAlphaBounds)) check_alpha();
      if (enabled(Check::kMixing) && n <= kMixingMaxOrder) check_mixing();
    }
  }

 private:
  bool enabled(Check c) const { return config_.checks.contains(c); }

  void fail(const std::string& check, double lhs, double rhs) {
    out_.violations.push_back({id_, check, lhs, rhs});
  }
  void note(const std::string& tag) { out_.interesting.push_back({id_, tag}); }

  // lhs <= rhs within the slack tolerance.
  void expect_le(const std::string& check, double lhs, double rhs) {
    if (!(lhs <= rhs + tol_.slack)) fail(check, lhs, rhs);
  }
  bool equal(double a, double b) const { return std::abs(a - b) <= tol_.equality; }

  void check_thm11() {
    const double tau = tau_->value();
    const auto& t = report_->thm11;
    expect_le("thm11-inv-Delta", t.inv_max_degree, tau);
    expect_le("thm11-degree", t.degree_term, tau);
    if (t.xi_anomaly) {
      note("xi-anomaly");
    } else {
      expect_le("thm11-spectral", t.spectral_term, tau);
    }
    if (equal(t.max(), tau)) note("thm11-tight");
  }

  void check_gu_haemers(const std::string& name, double value) {
    expect_le(name, value, tau_->value());
    if (equal(value, tau_->value())) note(name + "-equality");
  }

  void check_corollary() {
    const double fiedler = spectra_->algebraic_connectivity();
    const double cap = *report_->corollary_cap;
    expect_le("corollary", fiedler, cap);
    const bool tight = equal(fiedler, cap);
    if (tight) note("corollary-equality");
    if (tight != verdict_->structural) fail("corollary-iff", tight, verdict_->structural);
  }

  void check_regular() {
    if (!report_->regular) return;
    const double tau = tau_->value();
    const auto& r = *report_->regular;
    expect_le("regular-brouwer", r.brouwer, tau);
    // Strict inequalities: τ > bound, allowing the same slack.
    if (!(tau > r.brouwer_strict - tol_.slack)) fail("regular-brouwer-strict", r.brouwer_strict, tau);
    if (!(tau > r.alon - tol_.slack)) fail("regular-alon", r.alon, tau);
    if (equal(r.brouwer, tau)) note("brouwer-equality");
  }

  void check_iff() {
    if (!verdict_->consistent) {
      if (verdict_->eq11_holds != verdict_->structural) {
        fail("iff-extremal-eq11", verdict_->eq11_holds, verdict_->structural);
      }
      if (verdict_->eq12_holds != verdict_->structural) {
        fail("iff-extremal-eq12", verdict_->eq12_holds, verdict_->structural);
      }
    }
  }

  void check_cut_partitions() {
    const int n = g_.order();
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
      const VertexSet cut(mask);
      const auto parts = components(g_, cut);
      const int omega = parts.count();
      if (omega < 2) continue;
      for (std::uint64_t group = 1; group + 1 < (std::uint64_t{1} << omega); ++group) {
        VertexSet x;
        for (int i = 0; i < omega; ++i) {
          if ((group >> i) & 1) x |= parts.blocks[i];
        }
        const VertexSet y = g_.vertices() - cut - x;
        if (x.size() > y.size()) continue;
        const auto b = cut_partition_bounds_check(g_, cut, x, y, *spectra_);
        expect_le("cut-partition-size-x", x.size(), b.size_x_cap);
        expect_le("cut-partition-size-s", b.size_s_floor, cut.size());
        const bool tight = std::abs(x.size() - b.size_x_cap) <= 1e-9 ||
                           std::abs(cut.size() - b.size_s_floor) <= 1e-9;
        if (tight && x.size() != y.size()) fail("cut-partition-balance", x.size(), y.size());
      }
    }
  }

  void check_alpha() {
    const auto alpha = independence_number(g_);
    const auto b = independence_upper_bounds(g_, *spectra_);
    expect_le("alpha-degree", alpha.alpha, b.by_degrees);
    expect_le("alpha-normalized", alpha.alpha, b.by_normalized);
    expect_le("alpha-laplacian", alpha.alpha, b.by_laplacian);
    if (equal(alpha.alpha, b.by_laplacian)) {
      note("alpha-laplacian-equality");
      if (!semiregular_equality_check(g_, alpha.witness, *spectra_)) {
        fail("alpha-laplacian-semiregular", alpha.alpha, b.by_laplacian);
      }
    }
  }

  void check_mixing() {
    const std::uint64_t limit = std::uint64_t{1} << g_.order();
    for (std::uint64_t xm = 0; xm < limit; ++xm) {
      const VertexSet x(xm);
      for (std::uint64_t ym = 0; ym < limit; ++ym) {
        const auto gap = mixing_gap(g_, x, VertexSet(ym), *spectra_);
        if (!(gap.lhs <= gap.rhs + tol_.slack)) {
          fail("mixing", gap.lhs, gap.rhs);
          return;
        }
        if (ym == 0 && !(gap.single_lhs <= gap.single_rhs + tol_.slack)) {
          fail("mixing-single", gap.single_lhs, gap.single_rhs);
          return;
        }
      }
    }
  }

  const Graph& g_;
  const std::string& id_;
  const SweepConfig& config_;
  Tolerances tol_;
  SweepReport& out_;
  std::optional<SpectralSummary> spectra_;
  std::optional<ToughnessCertificate> tau_;
  std::optional<BoundReport> report_;
  std::optional<EqualityVerdict> verdict_;
};

void evaluate_guarded(const Graph& g, const std::string& id, const SweepConfig& config,
                      SweepReport& out) {
  try {
    evaluate_graph(g, id, config, out);
  } catch (const std::exception& e) {
    out.violations.push_back({id, std::string("internal-error: ") + e.what(), 0.0, 0.0});
  }
  ++out.graphs_checked;
}

void merge_into(SweepReport& total, SweepReport&& part) {
  total.graphs_checked += part.graphs_checked;
  std::move(part.violations.begin(), part.violations.end(), std::back_inserter(total.violations));
  std::move(part.interesting.begin(), part.interesting.end(),
            std::back_inserter(total.interesting));
}

// Runs `work(chunk, report)` for chunk = 0..chunks-1 across `jobs` threads.
template <typename Work>
void run_chunks(std::size_t chunks, int jobs, SweepReport& total, Work work) {
  std::atomic<std::size_t> next{0};
  std::mutex merge_lock;
  auto worker = [&] {
    SweepReport local;
    for (std::size_t c = next++; c < chunks; c = next++) work(c, local);
    std::lock_guard lock(merge_lock);
    merge_into(total, std::move(local));
  };
  const int threads = std::max(1, jobs);
  std::vector<std::jthread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
}

}  // namespace

void evaluate_graph(const Graph& g, const std::string& graph6, const SweepConfig& config,
                    SweepReport& out) {
  GraphChecker(g, graph6, config, out).run();
}

SweepReport sweep(const SweepConfig& config) {
  if (config.checks.empty()) throw PreconditionError("sweep needs at least one check");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.corpus_id = config.corpus_id;

  if (config.generated) {
    const auto [n, connected_only] = *config.generated;
    const std::uint64_t masks = LabeledGraphStream(n, connected_only).mask_count();
    constexpr std::uint64_t kChunk = 1024;
    const std::size_t chunks = (masks + kChunk - 1) / kChunk;
    run_chunks(chunks, config.jobs, report, [&](std::size_t c, SweepReport& local) {
      LabeledGraphStream stream(n, connected_only, c * kChunk, (c + 1) * kChunk);
      while (auto e = stream.next()) evaluate_guarded(*e->graph, e->text, config, local);
    });
  } else {
    if (config.input == nullptr) throw PreconditionError("sweep needs a corpus source");
    Graph6LineStream stream(*config.input);
    std::vector<CorpusEntry> entries;
    while (auto e = stream.next()) {
      if (!e->graph) {
        report.parse_errors.push_back({e->index, e->text, e->error});
        if (config.strict) {
          report.aborted = true;
          break;
        }
        continue;
      }
      entries.push_back(std::move(*e));
    }
    if (!report.aborted) {
      constexpr std::size_t kChunk = 64;
      const std::size_t chunks = (entries.size() + kChunk - 1) / kChunk;
      run_chunks(chunks, config.jobs, report, [&](std::size_t c, SweepReport& local) {
        const std::size_t end = std::min(entries.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
          evaluate_guarded(*entries[i].graph, entries[i].text, config, local);
        }
      });
    }
  }

  std::sort(report.violations.begin(), report.violations.end());
  std::sort(report.interesting.begin(), report.interesting.end());
  std::sort(report.parse_errors.begin(), report.parse_errors.end());
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_sweep_records(std::ostream& out, const SweepReport& report) {
  for (const auto& p : report.parse_errors) {
    Json j;
    j["type"] = "parse_error";
    j["line"] = p.line;
    j["text"] = p.text;
    j["message"] = p.message;
    out << j.dump() << '\n';
  }
  for (const auto& v : report.violations) {
    Json j;
    j["type"] = "violation";
    j["graph6"] = v.graph6;
    j["check"] = v.check;
    j["lhs"] = json_real(v.lhs);
    j["rhs"] = json_real(v.rhs);
    out << j.dump() << '\n';
  }
  for (const auto& i : report.interesting) {
    Json j;
    j["type"] = "interesting";
    j["graph6"] = i.graph6;
    j["tag"] = i.tag;
    out << j.dump() << '\n';
  }
}

Json sweep_summary(const SweepReport& report) {
  Json j;
  j["corpus"] = report.corpus_id;
  j["graphs_checked"] = report.graphs_checked;
  j["violations"] = report.violations.size();
  j["interesting"] = report.interesting.size();
  j["parse_errors"] = report.parse_errors.size();
  j["aborted"] = report.aborted;
  j["wall_time_s"] = report.wall_time;
  return j;
}

}  // namespace tough
