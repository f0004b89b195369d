#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "named_graphs.hpp"
#include "spectra/generators.hpp"
#include "spectra/graph.hpp"
#include "spectra/graph6.hpp"
#include "spectra/spectral.hpp"

using namespace spectra;
using namespace spectra::testing;

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("from_edge_list builds simple graphs") {
  std::vector<std::pair<Vertex, Vertex>> star_pairs = {{0, 1}, {0, 2}, {0, 3}};
  const Graph g = Graph::from_edge_list(4, star_pairs);
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.degrees() == std::vector<std::size_t>{3, 1, 1, 1});

  const Graph empty = Graph::from_edge_list(3, {});
  CHECK(empty.m() == 0);

  std::vector<std::pair<Vertex, Vertex>> dup = {{0, 1}, {1, 0}};
  const Graph single = Graph::from_edge_list(2, dup);
  CHECK(single.m() == 1);
  CHECK(single.has_edge(1, 0));
}

TEST_CASE("from_edge_list rejects bad pairs with their index") {
  std::vector<std::pair<Vertex, Vertex>> out_of_range = {{0, 1}, {1, 4}};
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(4, out_of_range), doctest::Contains("edge 1"), GraphError);
  std::vector<std::pair<Vertex, Vertex>> loop = {{2, 2}};
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(4, loop), doctest::Contains("self-loop"), GraphError);
}

TEST_CASE("adjacency is symmetric and sorted") {
  const Graph g = random_gnm(25, 90, 7);
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nbrs = g.neighbors(u);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    degree_sum += nbrs.size();
    for (Vertex v : nbrs) {
      CHECK(v != u);
      CHECK(g.has_edge(v, u));
    }
  }
  CHECK(degree_sum == 2 * g.m());
}

TEST_CASE("graph6 decoding") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == complete(4));

  const Graph one = parse_graph6("@");
  CHECK(one.n() == 1);
  CHECK(one.m() == 0);

  // Two body bytes carry the 10 bits of n=5, so this is the empty graph.
  const Graph five = parse_graph6("D??");
  CHECK(five.n() == 5);
  CHECK(five.m() == 0);

  // Reference strings produced by networkx's encoder.
  CHECK(parse_graph6("IheA@GUAo") == petersen());
  CHECK(parse_graph6("Dhc") == cycle(5));
}

TEST_CASE("graph6 wide size prefix") {
  const std::string path70 =
      "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????"
      "G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@?"
      "??????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????"
      "_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C?"
      "?????????@???????????G";
  const Graph g = parse_graph6(path70);
  CHECK(g == path(70));
  CHECK(encode_graph6(path(70)) == path70);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  SUBCASE("body too short") {
    try {
      parse_graph6("D?");
      FAIL("expected rejection");
    } catch (const Graph6Error& e) {
      CHECK(e.offset() == 2);
      CHECK(std::string(e.what()).find("body length") != std::string::npos);
    }
  }
  SUBCASE("body too long") {
    try {
      parse_graph6("D???");
      FAIL("expected rejection");
    } catch (const Graph6Error& e) {
      CHECK(e.offset() == 3);
    }
  }
  SUBCASE("character out of range") {
    try {
      parse_graph6("C ");
      FAIL("expected rejection");
    } catch (const Graph6Error& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("nonzero padding") {
    // n=2 uses one bit; '`' = 63 + 0b100001 sets a padding bit.
    CHECK(parse_graph6("A_").m() == 1);
    try {
      parse_graph6("A`");
      FAIL("expected rejection");
    } catch (const Graph6Error& e) {
      CHECK(e.offset() == 1);
      CHECK(std::string(e.what()).find("padding") != std::string::npos);
    }
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_graph6(""), Graph6Error); }
}

TEST_CASE("graph6 encoding") {
  CHECK(encode_graph6(complete(4)) == "C~");
  CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(encode_graph6(Graph::from_edge_list(0, {})) == "?");
  CHECK(encode_graph6(petersen()) == "IheA@GUAo");
}

TEST_CASE("graph6 roundtrip on random and exhaustive graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const std::size_t max_m = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_m)(rng);
    const Graph g = random_gnm(n, m, rng());
    REQUIRE(parse_graph6(encode_graph6(g)) == g);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Graph& g : enumerate_labeled(n)) REQUIRE(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("complete split graphs") {
  const Graph cs = complete_split(2, 4);
  CHECK(cs.m() == 5);
  CHECK(cs.degrees() == std::vector<std::size_t>{3, 3, 2, 2});
  CHECK(complete_split(6, 6) == complete(6));
  CHECK(complete_split(0, 5).m() == 0);
  CHECK_THROWS_AS(complete_split(5, 4), GraphError);

  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t q = 0; q <= n; ++q) {
      std::vector<std::size_t> expected(n - q, q);
      expected.insert(expected.end(), q, n - 1);
      std::sort(expected.begin(), expected.end());
      REQUIRE(sorted_degrees(complete_split(q, n)) == expected);
      REQUIRE(complete_split(q, n).m() == q * (q - (q > 0 ? 1 : 0)) / 2 + q * (n - q));
    }
  }
}

TEST_CASE("blow-up") {
  const Graph k2 = complete(2);
  const Graph c4 = blow_up(k2, 2);
  CHECK(c4.n() == 4);
  CHECK(c4.m() == 4);
  CHECK(sorted_degrees(c4) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(is_bipartite(c4));
  // (0,i) are 0,1 and (1,j) are 2,3: K_{2,2}.
  CHECK(c4.has_edge(0, 2));
  CHECK(c4.has_edge(1, 3));
  CHECK_FALSE(c4.has_edge(0, 1));

  const Graph g = random_gnm(9, 14, 3);
  CHECK(blow_up(g, 1) == g);
  CHECK_THROWS_AS(blow_up(g, 0), GraphError);

  const Graph b = blow_up(g, 3);
  CHECK(b.n() == 27);
  CHECK(b.m() == 9 * g.m());
}

TEST_CASE("blow-up composes multiplicatively") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_gnm(6, 7, seed);
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}, {2, 2}}) {
      const Graph nested = blow_up(blow_up(g, a), b);
      const Graph direct = blow_up(g, a * b);
      CHECK(sorted_degrees(nested) == sorted_degrees(direct));
      CHECK(dense_eigen_oracle(nested) == doctest::Approx(dense_eigen_oracle(direct)).epsilon(1e-12));
    }
  }
}

TEST_CASE("random_gnm") {
  CHECK(random_gnm(5, 10, 99) == complete(5));
  CHECK(random_gnm(4, 0, 99).m() == 0);
  CHECK(random_gnm(30, 100, 42) == random_gnm(30, 100, 42));
  CHECK(random_gnm(30, 100, 42).m() == 100);
  CHECK_THROWS_AS(random_gnm(4, 7, 1), GraphError);
}

TEST_CASE("random_gnm is uniform over labeled graphs") {
  // n=4, m=2: C(6,2) = 15 equally likely edge sets.
  std::map<std::string, int> counts;
  const int samples = 15000;
  for (int s = 0; s < samples; ++s) ++counts[encode_graph6(random_gnm(4, 2, static_cast<std::uint64_t>(s)))];
  CHECK(counts.size() == 15);
  for (const auto& [key, count] : counts) {
    CHECK(count > 850);  // mean 1000, sd ~31
    CHECK(count < 1150);
  }
}

TEST_CASE("labeled enumeration") {
  CHECK(enumerate_labeled(3).size() == 8);
  CHECK(enumerate_labeled(4).size() == 64);
  std::size_t triangles = 0;
  std::size_t seen = 0;
  for (const Graph& g : enumerate_labeled(3)) {
    ++seen;
    if (g.m() == 3) ++triangles;
  }
  CHECK(seen == 8);
  CHECK(triangles == 1);

  std::set<std::string> distinct;
  for (const Graph& g : enumerate_labeled(4)) distinct.insert(encode_graph6(g));
  CHECK(distinct.size() == 64);

  CHECK(labeled_graph(4, 0b000001) == Graph::from_edges(4, std::vector<Edge>{{0, 1}}));
  CHECK_THROWS_WITH_AS(enumerate_labeled(9), doctest::Contains("n <= 8"), GraphError);
}

TEST_CASE("partition_edge_counts") {
  const Vertex center[] = {0};
  const EdgeSplit s1 = partition_edge_counts(star(3), center);
  CHECK(s1.m_a == 0);
  CHECK(s1.m_ab == 3);
  CHECK(s1.m_b == 0);
  CHECK(s1.admissible());

  const Vertex universal[] = {0, 1};
  const EdgeSplit s2 = partition_edge_counts(complete_split(2, 4), universal);
  CHECK(s2.m_a == 1);
  CHECK(s2.m_ab == 4);
  CHECK(s2.m_b == 0);

  const Graph g = random_gnm(10, 20, 5);
  std::vector<Vertex> all(10);
  for (Vertex u = 0; u < 10; ++u) all[u] = u;
  const EdgeSplit s3 = partition_edge_counts(g, all);
  CHECK(s3.m_a == 20);
  CHECK(s3.m_ab == 0);
  CHECK(s3.b.empty());

  const Vertex bad[] = {10};
  CHECK_THROWS_AS(partition_edge_counts(g, bad), GraphError);
}

TEST_CASE("partition_edge_counts sums to m") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, n * (n - 1) / 2)(rng);
    const Graph g = random_gnm(n, m, rng());
    std::vector<Vertex> a;
    for (Vertex u = 0; u < n; ++u) {
      if (rng() & 1) a.push_back(u);
    }
    const EdgeSplit split = partition_edge_counts(g, a);
    REQUIRE(split.m_a + split.m_ab + split.m_b == g.m());
    REQUIRE(split.a.size() + split.b.size() == n);
  }
}

TEST_CASE("triangle-free and bipartite predicates") {
  CHECK(is_triangle_free(cycle(5)));
  CHECK_FALSE(is_triangle_free(complete(3)));
  CHECK_FALSE(is_triangle_free(complete_split(2, 4)));
  CHECK(is_triangle_free(petersen()));

  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_bipartite(cycle(6)));
  CHECK(is_bipartite(star(4)));
  CHECK(is_bipartite(Graph::from_edge_list(3, {})));

  // Brute force on n <= 5: triangle check by triples, bipartite by 2-colorings.
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled(n)) {
      bool triangle = false;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c)
            triangle = triangle || (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
      REQUIRE(is_triangle_free(g) == !triangle);
      bool two_colorable = false;
      for (std::uint32_t coloring = 0; coloring < (1u << n) && !two_colorable; ++coloring) {
        bool proper = true;
        for (const Edge& e : g.edges()) proper = proper && (((coloring >> e.u) ^ (coloring >> e.v)) & 1);
        two_colorable = proper;
      }
      REQUIRE(is_bipartite(g) == two_colorable);
    }
  }
}

TEST_CASE("edge-list text format") {
  const Graph g = parse_edge_list("4 3\n0 1\n0 2\n0 3\n");
  CHECK(g == star(3));
  CHECK(parse_edge_list(format_edge_list(petersen())) == petersen());
  CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n"), doctest::Contains("expected 2 edges"), GraphError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 5\n"), doctest::Contains("line 2"), GraphError);
  CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n1 1\n"), doctest::Contains("self-loop"), GraphError);
  CHECK_THROWS_AS(parse_edge_list(""), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), GraphError);
}
