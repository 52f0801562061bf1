#pragma once

// Fixture loading and small helpers shared by the test binaries.

#include <initializer_list>
#include <string>
#include <vector>

#include "silscope/graph.hpp"
#include "silscope/io.hpp"
#include "silscope/outer.hpp"
#include "silscope/word.hpp"

#ifndef SILSCOPE_TEST_DATA
#error "SILSCOPE_TEST_DATA must point at tests/"
#endif

namespace testing {

inline std::string data_path(const std::string& rel) { return std::string(SILSCOPE_TEST_DATA) + "/" + rel; }

inline silscope::LabelledGraph fixture(const std::string& name) {
  return silscope::load_graph(data_path("fixtures/" + name + ".json"));
}

inline silscope::VertexSet vs(const silscope::LabelledGraph& g, std::initializer_list<const char*> names) {
  std::vector<silscope::Vertex> out;
  for (const char* n : names) out.push_back(g.index_of(n));
  return silscope::VertexSet(std::move(out));
}

inline silscope::Vertex at(const silscope::LabelledGraph& g, const char* name) { return g.index_of(name); }

inline silscope::PartialConjugation chi(const silscope::LabelledGraph& g, const char* v,
                                        std::initializer_list<const char*> comp) {
  return {g.index_of(v), vs(g, comp)};
}

inline std::vector<std::string> labels(const silscope::LabelledGraph& g,
                                       const std::vector<silscope::PartialConjugation>& pcs) {
  std::vector<std::string> out;
  for (const auto& pc : pcs) out.push_back(silscope::label(g, pc));
  return out;
}

inline silscope::Word word(const silscope::LabelledGraph& g, const char* text) {
  return silscope::parse_word(g, text);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"g1", "g2", "g3", "p3", "d1", "d1_noncoxeter",
                                              "e3", "k3", "stil", "discon_abelian"};
  return names;
}

}  // namespace testing
