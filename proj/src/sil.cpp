#include "silscope/sil.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace silscope {

namespace {

Sil make_sil(const LabelledGraph& g, Vertex a, Vertex b, VertexSet component) {
  if (a > b) std::swap(a, b);
  return Sil{a, b, std::move(component), g.order(a) == 2 && g.order(b) == 2};
}

// Components of Γ minus `removed` that avoid every vertex in `avoid`.
std::vector<VertexSet> separated_components(const LabelledGraph& g, const VertexSet& removed,
                                            std::span<const Vertex> avoid) {
  std::vector<VertexSet> out;
  for (auto& part : components(g, g.all().difference(removed))) {
    bool clear = std::none_of(avoid.begin(), avoid.end(),
                              [&](Vertex v) { return part.contains(v); });
    if (clear) out.push_back(std::move(part));
  }
  return out;
}

}  // namespace

std::vector<Sil> enumerate_sils(const LabelledGraph& g) {
  std::vector<Sil> out;
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      const VertexSet common = g.neighbours(a).intersection(g.neighbours(b));
      const std::array<Vertex, 2> pair{a, b};
      for (auto& part : separated_components(g, common, pair)) {
        out.push_back(make_sil(g, a, b, std::move(part)));
      }
    }
  }
  return out;
}

std::optional<Sil> is_sil(const LabelledGraph& g, Vertex v1, Vertex v2, Vertex z) {
  g.require(v1);
  g.require(v2);
  g.require(z);
  if (v1 == v2 || g.adjacent(v1, v2)) return std::nullopt;
  const VertexSet common = g.neighbours(v1).intersection(g.neighbours(v2));
  if (common.contains(z)) return std::nullopt;
  for (auto& part : components(g, g.all().difference(common))) {
    if (!part.contains(z)) continue;
    if (part.contains(v1) || part.contains(v2)) return std::nullopt;
    return make_sil(g, v1, v2, std::move(part));
  }
  return std::nullopt;
}

std::vector<Stil> enumerate_stils(const LabelledGraph& g) {
  std::vector<Stil> out;
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        int edges = int{g.adjacent(a, b)} + int{g.adjacent(a, c)} + int{g.adjacent(b, c)};
        if (edges > 1) continue;
        const VertexSet common =
            g.neighbours(a).intersection(g.neighbours(b)).intersection(g.neighbours(c));
        const std::array<Vertex, 3> triple{a, b, c};
        for (auto& part : separated_components(g, common, triple)) {
          out.push_back(Stil{triple, std::move(part)});
        }
      }
    }
  }
  return out;
}

std::vector<Fsil> enumerate_fsils(const LabelledGraph& g) {
  return enumerate_fsils(g, enumerate_sils(g));
}

std::vector<Fsil> enumerate_fsils(const LabelledGraph& g, std::span<const Sil> sils) {
  std::map<std::pair<Vertex, Vertex>, std::vector<const Sil*>> by_pair;
  for (const auto& s : sils) by_pair[{s.first, s.second}].push_back(&s);

  auto witness = [&](Vertex a, Vertex b, Vertex k) -> const Sil* {
    auto it = by_pair.find({a, b});
    if (it == by_pair.end()) return nullptr;
    for (const Sil* s : it->second) {
      if (s->component.contains(k)) return s;
    }
    return nullptr;
  };

  std::vector<Fsil> out;
  const auto n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!by_pair.contains({a, b})) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        const Sil* wa = witness(b, c, a);
        const Sil* wb = witness(a, c, b);
        const Sil* wc = witness(a, b, c);
        if (wa && wb && wc) out.push_back(Fsil{{a, b, c}, {*wa, *wb, *wc}});
      }
    }
  }
  return out;
}

VertexSet shared_sil_component(const LabelledGraph& g, const Sil& sil) {
  if (sil.component.empty()) throw ConsistencyError("SIL with empty component");
  const Vertex z = sil.component.min();
  auto side = [&](Vertex v) -> VertexSet {
    for (auto& part : components(g, g.all().difference(star(g, v)))) {
      if (part.contains(z)) return part;
    }
    throw ConsistencyError("SIL component meets St(" + g.name(v) + ")");
  };
  VertexSet c1 = side(sil.first);
  VertexSet c2 = side(sil.second);
  if (c1 != c2) {
    throw ConsistencyError("stars of " + g.name(sil.first) + " and " + g.name(sil.second) +
                           " cut out different components around " + g.name(z));
  }
  if (c1 != sil.component) {
    throw ConsistencyError("shared component differs from the SIL component");
  }
  return c1;
}

SilCensus SilCensus::of(const LabelledGraph& g) {
  SilCensus census;
  census.sils = enumerate_sils(g);
  census.stils = enumerate_stils(g);
  census.fsils = enumerate_fsils(g, census.sils);
  return census;
}

std::size_t SilCensus::coxeter_count() const {
  return static_cast<std::size_t>(
      std::count_if(sils.begin(), sils.end(), [](const Sil& s) { return s.coxeter; }));
}

std::size_t SilCensus::non_coxeter_count() const { return sils.size() - coxeter_count(); }

}  // namespace silscope
