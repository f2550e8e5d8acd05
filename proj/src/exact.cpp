#include "tough/exact.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace tough {

std::string Ratio::to_string() const {
  const Ratio r = reduced();
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

double ToughnessCertificate::value() const {
  return infinite ? std::numeric_limits<double>::infinity() : tau().value();
}

std::string ToughnessCertificate::to_string() const {
  return infinite ? "inf" : tau().to_string();
}

ToughnessCertificate toughness(const Graph& g) {
  const int n = g.order();
  if (n < 1 || !is_connected(g)) {
    throw PreconditionError("toughness is defined for connected graphs only");
  }
  ToughnessCertificate best;
  if (is_complete(g)) {
    best.infinite = true;
    return best;
  }
  if (n > 62) throw PreconditionError("toughness search supports at most 62 vertices");

  // A non-complete connected graph has a cut of size at most n - 2.
  bool found = false;
  for (int s = 1; s <= n - 2; ++s) {
    // ω <= n - s, so no cut of size >= s can beat s / (n - s).
    if (found && !(Ratio{s, n - s} < best.tau())) break;
    const std::uint64_t last = std::uint64_t{1} << n;
    for (std::uint64_t mask = (std::uint64_t{1} << s) - 1; mask < last;
         mask = next_combination(mask)) {
      const VertexSet cut(mask);
      const int omega = count_components(g, cut);
      if (omega < 2) continue;
      const Ratio r{s, omega};
      if (!found || r < best.tau()) {
        found = true;
        best.cut = cut;
        best.cut_size = s;
        best.omega = omega;
      }
    }
  }
  return best;
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  IndependenceCertificate run() {
    best_ = {};
    expand(g_.vertices(), VertexSet{});
    return best_;
  }

 private:
  // Greedy clique cover of P; each clique contributes at most one vertex.
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      const int v = p.first();
      VertexSet clique_candidates = g_.neighbors(v) & p;
      p.erase(v);
      while (!clique_candidates.empty()) {
        const int u = clique_candidates.first();
        p.erase(u);
        clique_candidates &= g_.neighbors(u);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet p, VertexSet chosen) {
    // Vertices isolated within P are always taken.
    for (int v : p) {
      if (!g_.neighbors(v).intersects(p)) {
        chosen.insert(v);
        p.erase(v);
      }
    }
    if (p.empty()) {
      if (chosen.size() > best_.alpha) {
        best_.alpha = chosen.size();
        best_.witness = chosen;
      }
      return;
    }
    if (chosen.size() + clique_cover_bound(p) <= best_.alpha) return;

    int pivot = p.first();
    int pivot_degree = -1;
    for (int v : p) {
      const int d = (g_.neighbors(v) & p).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    VertexSet with = chosen;
    with.insert(pivot);
    expand(p - g_.neighbors(pivot) - VertexSet::of({pivot}), with);
    expand(p - VertexSet::of({pivot}), chosen);
  }

  const Graph& g_;
  IndependenceCertificate best_;
};

// Unit-capacity flow network on split vertices: v_in = 2v, v_out = 2v + 1.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : n_(g.order()), s_(s), t_(t) {
    head_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) {
      const int cap = (v == s || v == t) ? n_ : 1;
      add_edge(2 * v, 2 * v + 1, cap);
    }
    for (auto [u, v] : g.edge_list()) {
      add_edge(2 * u + 1, 2 * v, n_);
      add_edge(2 * v + 1, 2 * u, n_);
    }
  }

  int max_flow() {
    const int source = 2 * s_ + 1;
    const int sink = 2 * t_;
    int flow = 0;
    std::vector<int> via(2 * n_);
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source);
      via[source] = -2;
      while (!q.empty() && via[sink] == -1) {
        const int x = q.front();
        q.pop();
        for (int e = head_[x]; e != -1; e = next_[e]) {
          if (cap_[e] > 0 && via[to_[e]] == -1) {
            via[to_[e]] = e;
            q.push(to_[e]);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int x = sink; x != source; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

  // Vertices whose in-node is residually reachable from s but out-node is not.
  VertexSet min_separator() const {
    std::vector<char> seen(2 * n_, 0);
    std::vector<int> stack{2 * s_ + 1};
    seen[2 * s_ + 1] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int e = head_[x]; e != -1; e = next_[e]) {
        if (cap_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
      }
    }
    VertexSet sep;
    for (int v = 0; v < n_; ++v) {
      if (v != s_ && v != t_ && seen[2 * v] && !seen[2 * v + 1]) sep.insert(v);
    }
    return sep;
  }

 private:
  void add_edge(int from, int to, int cap) {
    for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  int n_;
  int s_;
  int t_;
  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

}  // namespace

IndependenceCertificate independence_number(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("independence number of the empty graph");
  return IndependentSetSearch(g).run();
}

std::pair<int, VertexSet> local_connectivity(const Graph& g, int s, int t) {
  if (s == t || g.adjacent(s, t)) {
    throw PreconditionError("local connectivity needs distinct non-adjacent endpoints");
  }
  SplitFlow flow(g, s, t);
  const int k = flow.max_flow();
  return {k, flow.min_separator()};
}

ConnectivityCertificate vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 1 || !is_connected(g)) {
    throw PreconditionError("vertex connectivity is defined for connected graphs only");
  }
  if (is_complete(g)) return {n - 1, std::nullopt};

  // A minimum separator either misses the pivot, and then splits it from some
  // non-neighbour, or contains it, and then splits two of its neighbours.
  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  }
  ConnectivityCertificate best{n, std::nullopt};
  auto consider = [&](int s, int t) {
    auto [k, sep] = local_connectivity(g, s, t);
    if (k < best.kappa) best = {k, sep};
  };
  for (int w : g.vertices() - g.neighbors(pivot) - VertexSet::of({pivot})) consider(pivot, w);
  const VertexSet nbrs = g.neighbors(pivot);
  for (int x : nbrs) {
    for (int y : nbrs - g.neighbors(x)) {
      if (x < y) consider(x, y);
    }
  }
  return best;
}

std::vector<int> subset_with_sum(const std::vector<int>& sizes, int target) {
  const int p = static_cast<int>(sizes.size());
  long total = 0;
  for (int s : sizes) {
    if (s <= 0) throw PreconditionError("subset sum sizes must be positive");
    total += s;
  }
  if (total > 2L * p - 1 && !(p == 0 && total == 0)) {
    throw PreconditionError("subset sum requires total <= 2p - 1; a solution is not guaranteed");
  }
  if (target < 0 || target > total) throw PreconditionError("subset sum target out of range");

  // reachable[i][v]: some subset of sizes[i..] sums to v.
  const int width = static_cast<int>(total) + 1;
  std::vector<std::vector<char>> reachable(p + 1, std::vector<char>(width, 0));
  reachable[p][0] = 1;
  for (int i = p - 1; i >= 0; --i) {
    for (int v = 0; v < width; ++v) {
      reachable[i][v] = reachable[i + 1][v] || (v >= sizes[i] && reachable[i + 1][v - sizes[i]]);
    }
  }
  if (!reachable[0][target]) {
    throw PreconditionError("no subset reaches the target");
  }
  std::vector<int> chosen;
  int rest = target;
  for (int i = 0; i < p && rest > 0; ++i) {
    if (rest >= sizes[i] && reachable[i + 1][rest - sizes[i]]) {
      chosen.push_back(i);
      rest -= sizes[i];
    }
  }
  return chosen;
}

BalancedSplit balanced_component_split(const ComponentPartition& partition, int omega) {
  if (omega < 2 || partition.count() != omega) {
    throw PreconditionError("partition must have exactly omega >= 2 blocks");
  }
  const std::vector<int> sizes = partition.sizes();
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw PreconditionError("blocks must be sorted by ascending size");
  }
  int total = 0;
  for (int s : sizes) total += s;
  const int largest = sizes.back();
  const int smaller = total - largest;
  if (total < 2 * omega + 1) throw PreconditionError("partition needs at least 2*omega + 1 vertices");
  if (smaller < omega) {
    throw PreconditionError("the omega - 1 smaller blocks must hold at least omega vertices");
  }

  std::vector<int> chosen;
  if (largest >= omega) {
    for (int i = 0; i + 1 < omega; ++i) chosen.push_back(i);
  } else {
    // Here 3 <= |U_ω| <= ω - 1, so 1 <= ℓ <= ω - 3.
    const int ell = omega - largest;
    std::vector<int> trimmed(sizes.begin(), sizes.end() - 1);
    int excess = smaller - (2 * omega - 3);
    // Shrink blocks toward one vertex each until the total is 2ω - 3.
    for (int i = 0; excess > 0 && i < static_cast<int>(trimmed.size()); ++i) {
      const int cut = std::min(excess, trimmed[i] - 1);
      trimmed[i] -= cut;
      excess -= cut;
    }
    chosen = subset_with_sum(trimmed, ell);
    chosen.push_back(omega - 1);
  }

  BalancedSplit split;
  split.block_indices = chosen;
  for (int i : chosen) split.r |= partition.blocks[i];
  for (const auto& b : partition.blocks) split.t |= b;
  split.t -= split.r;
  return split;
}

}  // namespace tough
