#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tough/graph_io.hpp"

using namespace tough;

TEST_CASE("graph6 decoding") {
  CHECK(parse_graph6("C~") == Graph::complete(4));
  CHECK(parse_graph6("@") == Graph(1));
  const Graph c = parse_graph6("Cl");
  CHECK(c == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(parse_graph6("  Cl\n") == c);
}

TEST_CASE("graph6 encoding") {
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph::complete(4)) == "C~");
  CHECK(write_graph6(Graph::cycle(4)) == "Cl");
  CHECK(write_graph6(Graph::petersen()).size() == 1 + 8);
  CHECK_THROWS_AS(write_graph6(Graph(63)), PreconditionError);
}

TEST_CASE("graph6 errors are distinguished") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::kEmpty;
  };
  CHECK(kind_of("") == ParseError::Kind::kEmpty);
  CHECK(kind_of("!!") == ParseError::Kind::kInvalidCharacter);
  CHECK(kind_of("C") == ParseError::Kind::kTruncated);
  CHECK(kind_of("C~~") == ParseError::Kind::kTrailingData);
  CHECK(kind_of("~?@?") == ParseError::Kind::kOversize);
  CHECK(kind_of("B@") == ParseError::Kind::kNonzeroPadding);
}

TEST_CASE("graph6 round trip is exhaustive on n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t seen = 0;
    LabeledGraphStream all(n, false);
    while (auto e = all.next()) {
      CHECK(parse_graph6(e->text) == *e->graph);
      CHECK(write_graph6(parse_graph6(e->text)) == e->text);
      ++seen;
    }
    CHECK(seen == (std::uint64_t{1} << pair_count(n)));
  }
}

TEST_CASE("graph6 round trip on random graphs up to 62 vertices") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kGraph6MaxOrder);
    const int density = 1 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (static_cast<int>(rng() % 10) < density) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    REQUIRE(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("2\n0 1") == Graph::complete(2));
  CHECK(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0") == Graph::cycle(4));
  const Graph dup = parse_edge_list("3\n0 1\n1 0");
  CHECK(dup.size() == 1);
  CHECK(parse_edge_list(write_edge_list(Graph::petersen())) == Graph::petersen());

  auto kind_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::kEmpty;
  };
  CHECK(kind_of("3\n0 3") == ParseError::Kind::kEndpointOutOfRange);
  CHECK(kind_of("3\n1 1") == ParseError::Kind::kSelfLoop);
  CHECK(kind_of("3\n0 x") == ParseError::Kind::kMalformedToken);
  CHECK(kind_of("3\n0") == ParseError::Kind::kMalformedToken);
  CHECK(kind_of("") == ParseError::Kind::kEmpty);
}

TEST_CASE("labelled connected enumeration") {
  auto count = [](int n) {
    auto stream = enumerate_labeled_connected(n);
    std::uint64_t c = 0;
    std::uint64_t last = 0;
    bool first = true;
    while (auto e = stream->next()) {
      CHECK(oracle::connected(*e->graph));
      if (!first) CHECK(e->index > last);
      last = e->index;
      first = false;
      ++c;
    }
    return c;
  };
  CHECK(count(1) == 1);
  CHECK(count(3) == 4);
  CHECK(count(4) == 38);
  for (int n = 1; n <= 5; ++n) CHECK(count(n) == oracle::connected_mask_count(n));
  CHECK_THROWS_AS(enumerate_labeled_connected(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_labeled_connected(8), PreconditionError);
}

TEST_CASE("disjoint mask ranges cover the corpus exactly once") {
  std::uint64_t total = 0;
  for (std::uint64_t begin = 0; begin < 1024; begin += 100) {
    LabeledGraphStream part(5, true, begin, begin + 100);
    while (part.next()) ++total;
  }
  CHECK(total == 728);
}

TEST_CASE("graph6 line stream reports bad lines and continues") {
  std::istringstream in("C~\n!!\n\nCl\n");
  Graph6LineStream stream(in);
  auto a = stream.next();
  REQUIRE(a);
  CHECK(a->graph.has_value());
  auto b = stream.next();
  REQUIRE(b);
  CHECK_FALSE(b->graph.has_value());
  CHECK(b->index == 2);
  CHECK_FALSE(b->error.empty());
  auto c = stream.next();
  REQUIRE(c);
  CHECK(c->index == 4);
  CHECK(*c->graph == Graph::cycle(4));
  CHECK_FALSE(stream.next());
}
