#include <doctest.h>

#include "chromham/graph6.hh"

using namespace chromham;

TEST_CASE("graph6 documented vectors") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("?").order() == 0);
  CHECK(to_graph6(edgeless_graph(0)) == "?");
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 round trip on every graph up to order 6") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t m = 0; m < count; ++m) {
      const Graph g = graph_from_edge_mask(n, m);
      const std::string text = to_graph6(g);
      REQUIRE(parse_graph6(text) == g);
      REQUIRE(to_graph6(parse_graph6(text)) == text);
    }
  }
}

TEST_CASE("graph6 round trip near the order limit") {
  GraphBuilder b(62);
  for (Vertex v = 0; v + 1 < 62; v += 3) b.add_edge(v, v + 1);
  b.add_edge(0, 61);
  const Graph g = b.build();
  CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C\x7f"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("B\x7f"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);  // padding bit set
  CHECK_THROWS_AS(parse_graph6("~??~"), Graph6Error);
  CHECK_THROWS_AS(to_graph6(complete_graph(63)), Graph6Error);
}
