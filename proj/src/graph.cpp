#include "tough/graph.hpp"

#include <algorithm>
#include <string>

namespace tough {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::vector<int> ComponentPartition::sizes() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(n, VertexSet{});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  int twice = 0;
  for (auto r : rows_) twice += r.size();
  edges_ = twice / 2;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::full(n);
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw PreconditionError("adjacency row exceeds vertex range");
    if (rows[v].contains(v)) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    for (int u : rows[v]) {
      if (!rows[u].contains(v)) throw PreconditionError("adjacency is not symmetric");
    }
    twice += rows[v].size();
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.edges_ = twice / 2;
  return g;
}

Graph Graph::complete(int n) {
  check_order(n);
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = VertexSet::full(n) - VertexSet::of({v});
  return from_rows(std::move(rows));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph Graph::star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

Graph Graph::petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < order(); ++u) {
    for (int v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> label(order(), -1);
  int next = 0;
  for (int v : keep) label[v] = next++;
  std::vector<VertexSet> rows(next);
  for (int v : keep) {
    for (int u : rows_[v] & keep) rows[label[v]].insert(label[u]);
  }
  return from_rows(std::move(rows));
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("degree profile of the empty graph");
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
  p.min_degree = *lo;
  p.max_degree = *hi;
  return p;
}

int volume(const Graph& g, VertexSet x) {
  int total = 0;
  for (int v : x) total += g.degree(v);
  return total;
}

long edge_boundary(const Graph& g, VertexSet x, VertexSet y) {
  long total = 0;
  for (int v : x) total += (g.neighbors(v) & y).size();
  return total;
}

int edges_within(const Graph& g, VertexSet x) {
  return static_cast<int>(edge_boundary(g, x, x) / 2);
}

bool is_independent(const Graph& g, VertexSet x) {
  for (int v : x) {
    if (g.neighbors(v).intersects(x)) return false;
  }
  return true;
}

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::of({start});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

ComponentPartition components(const Graph& g, VertexSet removed) {
  VertexSet rest = g.vertices() - removed;
  if (rest.empty()) throw PreconditionError("removing every vertex leaves no components");
  ComponentPartition p;
  while (!rest.empty()) {
    VertexSet block = reach(g, rest.first(), rest);
    p.blocks.push_back(block);
    rest -= block;
  }
  std::stable_sort(p.blocks.begin(), p.blocks.end(), [](VertexSet a, VertexSet b) {
    return a.size() < b.size();
  });
  return p;
}

int count_components(const Graph& g, VertexSet removed) {
  VertexSet rest = g.vertices() - removed;
  int count = 0;
  while (!rest.empty()) {
    rest -= reach(g, rest.first(), rest);
    ++count;
  }
  return count;
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  if (a + b > kMaxVertices) throw PreconditionError("join exceeds vertex budget");
  std::vector<VertexSet> rows(a + b);
  const VertexSet left = VertexSet::full(a);
  const VertexSet right = VertexSet::full(a + b) - left;
  for (int v = 0; v < a; ++v) rows[v] = g.neighbors(v) | right;
  for (int v = 0; v < b; ++v) rows[a + v] = VertexSet(h.neighbors(v).bits() << a) | left;
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  if (a + b > kMaxVertices) throw PreconditionError("union exceeds vertex budget");
  std::vector<VertexSet> rows(a + b);
  for (int v = 0; v < a; ++v) rows[v] = g.neighbors(v);
  for (int v = 0; v < b; ++v) rows[a + v] = VertexSet(h.neighbors(v).bits() << a);
  return Graph::from_rows(std::move(rows));
}

bool is_connected(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("connectivity of the empty graph");
  return reach(g, 0, g.vertices()) == g.vertices();
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

}  // namespace tough
