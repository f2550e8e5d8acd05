#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tough/bounds.hpp"
#include "tough/graph_io.hpp"
#include "tough/report.hpp"

namespace tough {

enum class Check {
  kThm11,
  kEq11,
  kEq12,
  kCorollary,
  kRegular,
  kAlphaBounds,
  kMixing,
  kCutPartition,
  kIffExtremal,
};

const char* to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
std::set<Check> all_checks();

/// Largest order for which the subset-pair mixing check runs.
inline constexpr int kMixingMaxOrder = 6;
/// Largest order for which every cut set is grouped for the cut-partition check.
inline constexpr int kCutPartitionMaxOrder = 12;

struct GeneratedCorpus {
  int n = 0;
  bool connected_only = true;
};

struct SweepConfig {
  std::set<Check> checks = all_checks();
  Tolerances tol;
  int jobs = 1;
  bool strict = false;
  std::string corpus_id;
  /// Exactly one of these is used: a generated labelled corpus, or graph6 lines.
  std::optional<GeneratedCorpus> generated;
  std::istream* input = nullptr;
};

/// A check failure; each check asserts lhs <= rhs within tolerance, or for
/// boolean checks reports the two disagreeing flags as 0/1.
struct Violation {
  std::string graph6;
  std::string check;
  double lhs = 0.0;
  double rhs = 0.0;

  auto operator<=>(const Violation&) const = default;
};

struct Interesting {
  std::string graph6;
  std::string tag;

  auto operator<=>(const Interesting&) const = default;
};

struct CorpusDiagnostic {
  std::size_t line = 0;
  std::string text;
  std::string message;

  auto operator<=>(const CorpusDiagnostic&) const = default;
};

struct SweepReport {
  std::string corpus_id;
  std::size_t graphs_checked = 0;
  std::vector<Violation> violations;
  std::vector<Interesting> interesting;
  std::vector<CorpusDiagnostic> parse_errors;
  double wall_time = 0.0;
  bool aborted = false;  ///< strict mode stopped at a parse error

  bool clean() const { return violations.empty(); }
};

/// Runs every enabled check on one graph, appending to `out`.
void evaluate_graph(const Graph& g, const std::string& graph6, const SweepConfig& config,
                    SweepReport& out);

/// Evaluates the corpus across config.jobs workers. Records are sorted before
/// return, so the report does not depend on scheduling.
SweepReport sweep(const SweepConfig& config);

/// JSON-lines body: parse errors, violations, then interesting records.
void write_sweep_records(std::ostream& out, const SweepReport& report);
Json sweep_summary(const SweepReport& report);

}  // namespace tough
