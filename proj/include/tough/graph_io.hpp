#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tough/graph.hpp"

namespace tough {

/// Largest order representable in short-form graph6.
inline constexpr int kGraph6MaxOrder = 62;

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kInvalidCharacter,
    kTruncated,
    kTrailingData,
    kNonzeroPadding,
    kOversize,
    kMalformedToken,
    kEndpointOutOfRange,
    kSelfLoop,
  };

  ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(ParseError::Kind kind);

/// Decodes one short-form graph6 record. Surrounding whitespace is ignored.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// "n" followed by whitespace-separated endpoint pairs; duplicates collapse.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Number of vertex pairs on n labelled vertices, i.e. edge-mask width.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edges are the set bits of `mask` in graph6 pair order
/// (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_mask(int n, std::uint64_t mask);

/// One corpus item. `graph` is empty when the record failed to parse.
struct CorpusEntry {
  std::size_t index = 0;  ///< 1-based line number, or edge mask for generated corpora
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/// Single-consumer pull stream of graphs.
class CorpusStream {
 public:
  virtual ~CorpusStream() = default;
  virtual std::optional<CorpusEntry> next() = 0;
};

/// Every labelled graph on n vertices (1 <= n <= 7) in increasing edge-mask
/// order, optionally restricted to connected graphs and to masks in [begin, end).
class LabeledGraphStream final : public CorpusStream {
 public:
  LabeledGraphStream(int n, bool connected_only);
  LabeledGraphStream(int n, bool connected_only, std::uint64_t begin, std::uint64_t end);

  std::optional<CorpusEntry> next() override;

  std::uint64_t mask_count() const { return std::uint64_t{1} << pair_count(n_); }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

/// Stream for a file or pipe of graph6 lines. Blank lines are skipped; bad
/// lines are yielded with `error` set so a consumer can report and continue.
class Graph6LineStream final : public CorpusStream {
 public:
  explicit Graph6LineStream(std::istream& in) : in_(in) {}
  std::optional<CorpusEntry> next() override;

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

inline constexpr int kMaxEnumerationOrder = 7;

std::unique_ptr<CorpusStream> enumerate_labeled_connected(int n);
std::unique_ptr<CorpusStream> enumerate_labeled(int n);

}  // namespace tough
