#include "tough/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace tough {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

const char* to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kEmpty: return "empty";
    case ParseError::Kind::kInvalidCharacter: return "invalid-character";
    case ParseError::Kind::kTruncated: return "truncated";
    case ParseError::Kind::kTrailingData: return "trailing-data";
    case ParseError::Kind::kNonzeroPadding: return "nonzero-padding";
    case ParseError::Kind::kOversize: return "oversize";
    case ParseError::Kind::kMalformedToken: return "malformed-token";
    case ParseError::Kind::kEndpointOutOfRange: return "endpoint-out-of-range";
    case ParseError::Kind::kSelfLoop: return "self-loop";
  }
  return "unknown";
}

Graph parse_graph6(std::string_view line) {
  using K = ParseError::Kind;
  line = trim(line);
  if (line.empty()) throw ParseError(K::kEmpty, "graph6: empty record");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError(K::kInvalidCharacter,
                       "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                           " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kBias;
  if (n > kGraph6MaxOrder) {
    throw ParseError(K::kOversize, "graph6: long-form header (n > 62) is not supported");
  }
  const int pairs = pair_count(n);
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  const std::string_view payload = line.substr(1);
  if (payload.size() < need) {
    throw ParseError(K::kTruncated, "graph6: expected " + std::to_string(need) +
                                        " payload bytes, got " + std::to_string(payload.size()));
  }
  if (payload.size() > need) {
    throw ParseError(K::kTrailingData, "graph6: " + std::to_string(payload.size() - need) +
                                           " unexpected trailing bytes");
  }

  std::vector<VertexSet> rows(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(payload[k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = static_cast<unsigned char>(payload.back()) - kBias;
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError(K::kNonzeroPadding, "graph6: padding bits must be zero");
    }
  }
  return Graph::from_rows(std::move(rows));
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw PreconditionError("graph6 short form holds at most 62 vertices, got " +
                            std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  using K = ParseError::Kind;
  std::vector<long> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    long value = 0;
    const auto* first = text.data() + pos;
    const auto* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError(K::kMalformedToken,
                       "edge list: malformed token '" + std::string(first, last) + "'");
    }
    tokens.push_back(value);
    pos = end;
  }
  if (tokens.empty()) throw ParseError(K::kEmpty, "edge list: missing vertex count");
  const long n = tokens.front();
  if (n < 0) throw ParseError(K::kMalformedToken, "edge list: negative vertex count");
  if (n > kMaxVertices) {
    throw ParseError(K::kOversize, "edge list: vertex count " + std::to_string(n) +
                                       " exceeds " + std::to_string(kMaxVertices));
  }
  if (tokens.size() % 2 == 0) {
    throw ParseError(K::kMalformedToken, "edge list: dangling endpoint without a partner");
  }
  std::vector<VertexSet> rows(n);
  for (std::size_t t = 1; t < tokens.size(); t += 2) {
    const long u = tokens[t];
    const long v = tokens[t + 1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(K::kEndpointOutOfRange, "edge list: edge " + std::to_string(u) + " " +
                                                   std::to_string(v) + " out of range");
    }
    if (u == v) throw ParseError(K::kSelfLoop, "edge list: self-loop at " + std::to_string(u));
    rows[u].insert(static_cast<int>(v));
    rows[v].insert(static_cast<int>(u));
  }
  return Graph::from_rows(std::move(rows));
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edge_list()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<VertexSet> rows(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

LabeledGraphStream::LabeledGraphStream(int n, bool connected_only)
    : LabeledGraphStream(n, connected_only, 0, ~std::uint64_t{0}) {}

LabeledGraphStream::LabeledGraphStream(int n, bool connected_only, std::uint64_t begin,
                                       std::uint64_t end)
    : n_(n), connected_only_(connected_only), cursor_(begin), end_(end) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw PreconditionError("labelled enumeration supports 1 <= n <= 7, got " +
                            std::to_string(n));
  }
  if (end_ > mask_count()) end_ = mask_count();
}

std::optional<CorpusEntry> LabeledGraphStream::next() {
  while (cursor_ < end_) {
    const std::uint64_t mask = cursor_++;
    Graph g = graph_from_mask(n_, mask);
    if (connected_only_ && !is_connected(g)) continue;
    CorpusEntry e;
    e.index = mask;
    e.text = write_graph6(g);
    e.graph = std::move(g);
    return e;
  }
  return std::nullopt;
}

std::optional<CorpusEntry> Graph6LineStream::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    const auto body = trim(line);
    if (body.empty()) continue;
    CorpusEntry e;
    e.index = line_;
    e.text = std::string(body);
    try {
      e.graph = parse_graph6(body);
    } catch (const ParseError& err) {
      e.error = err.what();
    }
    return e;
  }
  return std::nullopt;
}

std::unique_ptr<CorpusStream> enumerate_labeled_connected(int n) {
  return std::make_unique<LabeledGraphStream>(n, true);
}

std::unique_ptr<CorpusStream> enumerate_labeled(int n) {
  return std::make_unique<LabeledGraphStream>(n, false);
}

}  // namespace tough
