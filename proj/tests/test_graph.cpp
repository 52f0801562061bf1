#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "silscope/graph.hpp"
#include "support.hpp"

using namespace silscope;
using testing::fixture;
using testing::vs;

TEST_CASE("link") {
  const auto g1 = fixture("g1");
  CHECK(link(g1, g1.index_of("c")) == vs(g1, {"v1", "v2", "d"}));
  const auto p3 = fixture("p3");
  CHECK(link(p3, p3.index_of("v1")) == vs(p3, {"v2", "v3"}));
  const LabelledGraph single({{"z", 2}}, {});
  CHECK(link(single, 0).empty());
  CHECK_THROWS_AS(link(single, 1), UnknownVertex);
}

TEST_CASE("star") {
  const auto g1 = fixture("g1");
  CHECK(star(g1, g1.index_of("d")) == vs(g1, {"d", "c", "e", "f"}));
  const auto p3 = fixture("p3");
  CHECK(star(p3, p3.index_of("v3")) == vs(p3, {"v3", "v1"}));
  const auto d1 = fixture("d1");
  CHECK(star(d1, d1.index_of("w")) == vs(d1, {"w"}));
}

TEST_CASE("components") {
  const auto g1 = fixture("g1");
  const auto parts = components(g1, g1.all().difference(vs(g1, {"c"})));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == vs(g1, {"v1", "a", "b", "v2"}));
  CHECK(parts[1] == vs(g1, {"d", "e", "f"}));

  const auto d1 = fixture("d1");
  const auto dparts = components(d1, d1.all());
  REQUIRE(dparts.size() == 2);
  CHECK(dparts[0] == vs(d1, {"v1", "k", "v2"}));
  CHECK(dparts[1] == vs(d1, {"w"}));

  const auto e3 = fixture("e3");
  const auto eparts = components(e3, e3.all());
  REQUIRE(eparts.size() == 3);
  CHECK(eparts[0] == vs(e3, {"x1"}));
  CHECK(eparts[1] == vs(e3, {"x2"}));
  CHECK(eparts[2] == vs(e3, {"x3"}));

  CHECK(components(g1, VertexSet{}).empty());
}

TEST_CASE("star cut points") {
  const auto g1 = fixture("g1");
  CHECK(star_cut_points(g1) == std::vector<Vertex>{g1.index_of("v1"), g1.index_of("v2"), g1.index_of("c")});
  const auto g2 = fixture("g2");
  CHECK(star_cut_points(g2) == std::vector<Vertex>{g2.index_of("v1"), g2.index_of("v2"), g2.index_of("c"),
                                                   g2.index_of("d")});
  CHECK(star_cut_points(fixture("k3")).empty());
}

TEST_CASE("center") {
  const auto p3 = fixture("p3");
  CHECK(center(p3) == vs(p3, {"v1"}));
  CHECK(center(fixture("e3")).empty());
  const auto k3 = fixture("k3");
  CHECK(center(k3) == k3.all());
}

TEST_CASE("graph validation") {
  using Spec = LabelledGraph::VertexSpec;
  CHECK_THROWS_AS(LabelledGraph({}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 2}, {"a", 2}}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"", 2}}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 6}}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 1}}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 0}}, {}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 2}}, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 2}, {"b", 2}}, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(LabelledGraph({{"a", 2}, {"b", 2}}, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(LabelledGraph::from_names({Spec{"a", 2}}, {{"a", "q"}}), UnknownVertex);
  CHECK_NOTHROW(LabelledGraph({{"a", 9}, {"b", 1024}, {"c", 7}}, {{0, 1}}));
}

TEST_CASE("prime powers") {
  const std::vector<std::uint64_t> yes{2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 121, 4294967311ULL,
                                       18446744073709551557ULL, 9223372036854775808ULL};
  const std::vector<std::uint64_t> no{0, 1, 6, 10, 12, 15, 36, 100, 4294967311ULL * 3,
                                      18446744073709551615ULL};
  for (auto n : yes) CHECK_MESSAGE(is_prime_power(n), n);
  for (auto n : no) CHECK_MESSAGE(!is_prime_power(n), n);
  // trial division agrees for small n
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool expected = false;
    for (std::uint64_t p = 2; p <= n && !expected; ++p) {
      bool prime = true;
      for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (!prime) continue;
      std::uint64_t q = p;
      while (q < n) q *= p;
      expected = q == n;
    }
    REQUIRE_MESSAGE(is_prime_power(n) == expected, n);
  }
}

TEST_CASE("random graphs match the brute-force oracles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<LabelledGraph::VertexSpec> specs;
    for (std::size_t i = 0; i < n; ++i) specs.push_back({"u" + std::to_string(i), 2});
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const LabelledGraph g(specs, edges);
    for (Vertex v = 0; v < n; ++v) {
      const auto lk = link(g, v);
      CHECK(std::set<Vertex>(lk.begin(), lk.end()) == oracle::link(g, v));
      CHECK(!lk.contains(v));
      CHECK(star(g, v) == lk.with(v));
    }
    // random keep-set
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3) keep.push_back(v);
    }
    const VertexSet keep_set(keep);
    const auto parts = components(g, keep_set);
    const auto expected = oracle::components(g, oracle::Set(keep.begin(), keep.end()));
    REQUIRE(parts.size() == expected.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(oracle::Set(parts[i].begin(), parts[i].end()) == expected[i]);
    }
    // partition: disjoint, covering, no edges across parts
    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total += parts[i].size();
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        CHECK(!parts[i].intersects(parts[j]));
        for (Vertex a : parts[i]) {
          for (Vertex b : parts[j]) CHECK(!g.adjacent(a, b));
        }
      }
    }
    CHECK(total == keep.size());

    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < n; ++v) {
      if (components(g, g.all().difference(star(g, v))).size() >= 2) cuts.push_back(v);
    }
    CHECK(star_cut_points(g) == cuts);
    const auto c = center(g);
    CHECK(std::set<Vertex>(c.begin(), c.end()) == oracle::center(g));
  }
}

TEST_CASE("permuted and induced") {
  const auto g1 = fixture("g1");
  std::vector<Vertex> perm(g1.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::reverse(perm.begin(), perm.end());
  const auto p = g1.permuted(perm);
  for (auto [u, v] : g1.edges()) CHECK(p.adjacent(perm[u], perm[v]));
  CHECK(p.edges().size() == g1.edges().size());
  CHECK(p.name(perm[0]) == g1.name(0));

  const auto sub = g1.induced(vs(g1, {"d", "e", "f"}));
  CHECK(sub.size() == 3);
  CHECK(sub.edges().size() == 3);
  CHECK(sub.name(0) == "d");
}
