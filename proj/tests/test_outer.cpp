#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "silscope/harness.hpp"
#include "silscope/outer.hpp"
#include "support.hpp"

using namespace silscope;
using testing::at;
using testing::chi;
using testing::fixture;
using testing::labels;
using testing::vs;

namespace {

std::vector<Vertex> identity_order(const LabelledGraph& g) {
  std::vector<Vertex> o(g.size());
  std::iota(o.begin(), o.end(), Vertex{0});
  return o;
}

}  // namespace

TEST_CASE("build_p0 on the worked examples") {
  const auto g1 = fixture("g1");
  CHECK(labels(g1, build_p0(g1).gens) ==
        std::vector<std::string>{"χ_{v1,{d,e,f}}", "χ_{v2,{d,e,f}}", "χ_{c,{e,f}}"});

  const auto g2 = fixture("g2");
  CHECK(labels(g2, build_p0(g2).gens) ==
        std::vector<std::string>{"χ_{v1,{d,e,f}}", "χ_{v2,{d,e,f}}", "χ_{c,{e,f}}", "χ_{d,{f}}"});

  const auto g3 = fixture("g3");
  CHECK(labels(g3, build_p0(g3).gens) ==
        std::vector<std::string>{"χ_{v1,{d,e,f}}", "χ_{v2,{d,e,f}}", "χ_{c,{e}}", "χ_{c,{f}}",
                                 "χ_{e,{f}}", "χ_{f,{e}}"});

  const auto k3 = fixture("k3");
  auto order = identity_order(k3);
  do {
    CHECK(build_p0(k3, order).gens.empty());
  } while (std::next_permutation(order.begin(), order.end()));

  const auto d1 = fixture("d1");
  CHECK(labels(d1, build_p0(d1).gens) == std::vector<std::string>{"χ_{v1,{w}}", "χ_{v2,{w}}"});
}

TEST_CASE("build_p0 drops the component holding the first-numbered vertex") {
  const auto g1 = fixture("g1");
  // number d first: for v1 the {d,e,f} side is dropped instead
  std::vector<Vertex> order{at(g1, "d"), at(g1, "a"), at(g1, "v1"), at(g1, "v2"),
                            at(g1, "b"), at(g1, "c"), at(g1, "e"),  at(g1, "f")};
  CHECK(labels(g1, build_p0(g1, order).gens) ==
        std::vector<std::string>{"χ_{v1,{v2,b}}", "χ_{v2,{a,v1}}", "χ_{c,{e,f}}"});
}

TEST_CASE("build_p0 rejects bad orderings") {
  const auto g1 = fixture("g1");
  std::vector<Vertex> short_order{0, 1, 2};
  CHECK_THROWS_AS(build_p0(g1, short_order), GraphError);
  std::vector<Vertex> repeated{0, 1, 2, 3, 4, 5, 6, 6};
  CHECK_THROWS_AS(build_p0(g1, repeated), GraphError);
  std::vector<Vertex> out_of_range{0, 1, 2, 3, 4, 5, 6, 9};
  CHECK_THROWS_AS(build_p0(g1, out_of_range), GraphError);
}

TEST_CASE("partial conjugation validation") {
  const auto g1 = fixture("g1");
  CHECK_NOTHROW(validate(g1, chi(g1, "v1", {"d", "e", "f"})));
  CHECK_THROWS_AS(validate(g1, chi(g1, "v1", {"d", "e"})), GraphError);
  CHECK_THROWS_AS(validate(g1, chi(g1, "v1", {"a"})), GraphError);
  CHECK(partial_conjugations(g1, at(g1, "c")).size() == 2);
  CHECK(partial_conjugations(fixture("k3"), 0).empty());
}

TEST_CASE("commutes predicate") {
  const auto g1 = fixture("g1");
  const auto x = chi(g1, "v1", {"d", "e", "f"});
  const auto y = chi(g1, "v2", {"d", "e", "f"});
  CHECK(!commutes(g1, x, y));
  CHECK(!commutes(g1, y, x));
  CHECK(commutes(g1, x, chi(g1, "c", {"e", "f"})));
  CHECK(commutes(g1, chi(g1, "c", {"e", "f"}), chi(g1, "c", {"a", "b"})));

  const auto g3 = fixture("g3");
  CHECK(commutes(g3, chi(g3, "c", {"e"}), chi(g3, "c", {"a", "b"})));
  // flagged by SIL {c,e|f}
  CHECK(!commutes(g3, chi(g3, "c", {"f"}), chi(g3, "e", {"f"})));
  CHECK(!commutes(g3, chi(g3, "e", {"f"}), chi(g3, "f", {"e"})));

  const auto d1 = fixture("d1");
  CHECK(!commutes(d1, chi(d1, "v1", {"w"}), chi(d1, "v2", {"w"})));
}

TEST_CASE("classify fixtures") {
  CHECK(classify(fixture("p3")).tag == OutClassTag::Finite);
  CHECK(classify(fixture("g1")).tag == OutClassTag::VirtuallyZ);
  CHECK(classify(fixture("g2")).tag == OutClassTag::VirtuallyZ);
  CHECK(classify(fixture("d1")).tag == OutClassTag::VirtuallyZ);
  CHECK(classify(fixture("k3")).tag == OutClassTag::Finite);
  CHECK(classify(fixture("discon_abelian")).tag == OutClassTag::VirtuallyAbelianNotZ);
  CHECK(classify(fixture("stil")).tag == OutClassTag::Large);
  CHECK(classify(fixture("d1_noncoxeter")).tag == OutClassTag::Large);

  const auto e3 = classify(fixture("e3"));
  CHECK(e3.tag == OutClassTag::Large);
  CHECK(e3.evidence == Evidence{3, 0, 0, 1});

  const auto g3 = classify(fixture("g3"));
  CHECK(g3.tag == OutClassTag::Large);
  CHECK(g3.evidence == Evidence{4, 0, 0, 1});
}

TEST_CASE("smallest graph with a single non-Coxeter SIL is Large") {
  std::optional<LabelledGraph> found;
  for (std::size_t n = 1; n <= 5 && !found; ++n) {
    EnumSpec spec;
    spec.min_vertices = spec.max_vertices = n;
    spec.order_alphabet = {2, 3};
    spec.dedup_isomorphic = true;
    for_each_graph(spec, [&](const LabelledGraph& g) {
      if (found) return;
      const auto sils = enumerate_sils(g);
      if (sils.size() == 1 && !sils[0].coxeter) found = g;
    });
  }
  REQUIRE(found);
  CHECK(found->size() == 4);
  CHECK(classify(*found).tag == OutClassTag::Large);
}

TEST_CASE("presentation summaries") {
  const auto g1 = fixture("g1");
  const auto p1 = presentation(g1, identity_order(g1));
  CHECK(p1.summary == "D∞ × ℤ/2ℤ");
  CHECK(p1.non_commuting_pairs() == 1);
  CHECK(p1.commuting_edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(p1.orders == std::vector<std::uint64_t>{2, 2, 2});

  const auto g2 = fixture("g2");
  CHECK(presentation(g2, identity_order(g2)).summary == "D∞ × ℤ/2ℤ × ℤ/2ℤ");

  const auto d1 = fixture("d1");
  CHECK(presentation(d1, identity_order(d1)).summary == "D∞");

  const auto k3 = fixture("k3");
  CHECK(presentation(k3, identity_order(k3)).summary == "1");

  const auto g3 = fixture("g3");
  const auto p3 = presentation(g3, identity_order(g3));
  CHECK(p3.summary ==
        "D∞ × unfactored graph product ⟨χ_{c,{e}}, χ_{c,{f}}, χ_{e,{f}}, χ_{f,{e}}⟩");
}

TEST_CASE("summarize_graph_product") {
  using Matrix = std::vector<std::vector<bool>>;
  CHECK(summarize_graph_product({}, {}, Matrix{}) == "1");
  const std::vector<std::string> two{"x", "y"};
  CHECK(summarize_graph_product(two, std::vector<std::uint64_t>{2, 2}, Matrix{{true, false}, {false, true}}) ==
        "D∞");
  CHECK(summarize_graph_product(two, std::vector<std::uint64_t>{3, 2}, Matrix{{true, false}, {false, true}}) ==
        "unfactored graph product ⟨x, y⟩");
  CHECK(summarize_graph_product(two, std::vector<std::uint64_t>{3, 4}, Matrix{{true, true}, {true, true}}) ==
        "ℤ/3ℤ × ℤ/4ℤ");
  const std::vector<std::string> four{"p", "q", "r", "s"};
  Matrix m(4, std::vector<bool>(4, true));
  m[0][1] = m[1][0] = false;
  m[2][3] = m[3][2] = false;
  CHECK(summarize_graph_product(four, std::vector<std::uint64_t>{2, 2, 2, 2}, m) == "D∞ × D∞");
}

TEST_CASE("disconnected structure") {
  CHECK(!disconnected_structure(fixture("g1")));

  const auto d1 = fixture("d1");
  const auto s = disconnected_structure(d1);
  REQUIRE(s);
  CHECK(s->component_count == 2);
  CHECK(s->verdict == DisconnectedVerdict::ProductOfQuotients);
  REQUIRE(s->quotients.size() == 2);
  CHECK(s->quotients[0] == vs(d1, {"v1", "v2"}));
  CHECK(s->quotients[1].empty());
  CHECK(s->summary == "D∞");

  const auto ab = disconnected_structure(fixture("discon_abelian"));
  REQUIRE(ab);
  CHECK(ab->verdict == DisconnectedVerdict::ProductOfQuotients);
  CHECK(ab->summary == "D∞ × D∞");

  const auto e3 = disconnected_structure(fixture("e3"));
  REQUIRE(e3);
  CHECK(e3->verdict == DisconnectedVerdict::FsilForcedLarge);
  CHECK(e3->summary == "FSIL forced, Large");

  const auto nc = disconnected_structure(fixture("d1_noncoxeter"));
  REQUIRE(nc);
  CHECK(nc->verdict == DisconnectedVerdict::Large);
}

TEST_CASE("generator-set properties over enumerated graphs") {
  EnumSpec spec;
  spec.max_vertices = 6;
  spec.dedup_isomorphic = true;
  std::mt19937_64 rng(3);
  std::size_t virtually_z = 0;
  for_each_graph(spec, [&](const LabelledGraph& g) {
    const auto p0 = build_p0(g);
    std::size_t expected = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
      const auto k = oracle::components(g, oracle::minus(oracle::everything(g), oracle::link(g, v)))
                         .size();
      // oracle::link excludes v; drop v's own singleton part
      const auto parts = k - 1;
      if (parts >= 2) expected += parts - 1;
    }
    CHECK(p0.gens.size() == expected);
    for (const auto& pc : p0.gens) CHECK_NOTHROW(validate(g, pc));

    const auto sils = enumerate_sils(g);
    const auto cls = classify(g);
    if (cls.tag == OutClassTag::VirtuallyZ) {
      ++virtually_z;
      auto order = identity_order(g);
      do {
        const auto pres = presentation(g, order);
        REQUIRE(pres.non_commuting_pairs() == 1);
        // the rest of the generators commute with both members of the pair
        std::set<std::size_t> in_pair;
        for (std::size_t i = 0; i < pres.generators.size(); ++i) {
          for (std::size_t j = i + 1; j < pres.generators.size(); ++j) {
            if (!commutes(sils, pres.generators[i], pres.generators[j])) in_pair.insert({i, j});
          }
        }
        CHECK(in_pair.size() == 2);
      } while (std::next_permutation(order.begin(), order.end()));
    }

    bool two_parts_everywhere = true;
    for (Vertex v : star_cut_points(g)) {
      two_parts_everywhere = two_parts_everywhere && partial_conjugations(g, v).size() == 2;
    }
    if (two_parts_everywhere) {
      const auto base = presentation(g, identity_order(g)).commuting_edges.size();
      for (int t = 0; t < 5; ++t) {
        auto order = identity_order(g);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(presentation(g, order).commuting_edges.size() == base);
      }
    }
  });
  CHECK(virtually_z > 0);
}
