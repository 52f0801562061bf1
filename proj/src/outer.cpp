#include "silscope/outer.hpp"

#include <algorithm>
#include <numeric>

namespace silscope {

void validate(const LabelledGraph& g, const PartialConjugation& pc) {
  g.require(pc.acting);
  for (const auto& part : components(g, g.all().difference(star(g, pc.acting)))) {
    if (part == pc.component) return;
  }
  throw GraphError("not a component of the complement of St(" + g.name(pc.acting) + ")");
}

std::vector<PartialConjugation> partial_conjugations(const LabelledGraph& g, Vertex v) {
  std::vector<PartialConjugation> out;
  for (auto& part : components(g, g.all().difference(star(g, v)))) {
    out.push_back({v, std::move(part)});
  }
  return out;
}

std::string label(const LabelledGraph& g, const PartialConjugation& pc) {
  std::string out = "χ_{" + g.name(pc.acting) + ",{";
  bool first = true;
  for (Vertex v : pc.component) {
    if (!first) out += ',';
    out += g.name(v);
    first = false;
  }
  return out + "}}";
}

GeneratorSetP0 build_p0(const LabelledGraph& g, std::span<const Vertex> ordering) {
  const std::size_t n = g.size();
  if (ordering.size() != n) throw GraphError("ordering must list every vertex exactly once");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = ordering[i];
    if (v >= n || rank[v] != n) throw GraphError("ordering must list every vertex exactly once");
    rank[v] = i;
  }

  GeneratorSetP0 out;
  out.ordering.assign(ordering.begin(), ordering.end());
  for (Vertex v : star_cut_points(g)) {
    auto parts = partial_conjugations(g, v);
    auto first_rank = [&](const PartialConjugation& pc) {
      std::size_t best = n;
      for (Vertex u : pc.component) best = std::min(best, rank[u]);
      return best;
    };
    std::sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
      return first_rank(a) < first_rank(b);
    });
    for (std::size_t i = 1; i < parts.size(); ++i) out.gens.push_back(std::move(parts[i]));
  }
  return out;
}

GeneratorSetP0 build_p0(const LabelledGraph& g) {
  std::vector<Vertex> ordering(g.size());
  std::iota(ordering.begin(), ordering.end(), Vertex{0});
  return build_p0(g, ordering);
}

bool commutes(const LabelledGraph& g, const PartialConjugation& x, const PartialConjugation& y) {
  return commutes(enumerate_sils(g), x, y);
}

bool commutes(std::span<const Sil> sils, const PartialConjugation& x, const PartialConjugation& y) {
  if (x.acting == y.acting) return true;
  const Vertex a = std::min(x.acting, y.acting);
  const Vertex b = std::max(x.acting, y.acting);
  const VertexSet& c = x.component;
  const VertexSet& d = y.component;
  const bool x_in_d = d.contains(x.acting);
  const bool y_in_c = c.contains(y.acting);
  for (const Sil& s : sils) {
    if (s.first != a || s.second != b) continue;
    if (x_in_d && y_in_c) return false;
    // Some z in the SIL component with z ∈ C = D, or (x ∈ D, z ∈ C), or (y ∈ C, z ∈ D).
    const bool meets_c = s.component.intersects(c);
    const bool meets_d = s.component.intersects(d);
    if (meets_c && c == d) return false;
    if (x_in_d && meets_c) return false;
    if (y_in_c && meets_d) return false;
  }
  return true;
}

std::string_view to_string(OutClassTag tag) {
  switch (tag) {
    case OutClassTag::Finite: return "Finite";
    case OutClassTag::VirtuallyZ: return "VirtuallyZ";
    case OutClassTag::VirtuallyAbelianNotZ: return "VirtuallyAbelianNotZ";
    case OutClassTag::Large: return "Large";
  }
  return "?";
}

OutClass classify(const LabelledGraph& g) { return classify(SilCensus::of(g)); }

OutClass classify(const SilCensus& census) {
  OutClass out;
  out.evidence = {census.coxeter_count(), census.non_coxeter_count(), census.stils.size(),
                  census.fsils.size()};
  const auto& e = out.evidence;
  if (e.non_coxeter_sils > 0 || e.fsils > 0 || e.stils > 0) {
    out.tag = OutClassTag::Large;
  } else if (census.sils.empty()) {
    out.tag = OutClassTag::Finite;
  } else if (census.sils.size() == 1) {
    out.tag = OutClassTag::VirtuallyZ;
  } else {
    out.tag = OutClassTag::VirtuallyAbelianNotZ;
  }
  return out;
}

std::size_t CommutationPresentation::non_commuting_pairs() const {
  const std::size_t k = generators.size();
  if (k < 2) return 0;
  return k * (k - 1) / 2 - commuting_edges.size();
}

std::string summarize_graph_product(std::span<const std::string> labels,
                                    std::span<const std::uint64_t> orders,
                                    const std::vector<std::vector<bool>>& commute) {
  const std::size_t k = labels.size();
  // Components of the non-commutation graph are the direct factors.
  std::vector<std::size_t> comp(k, k);
  std::vector<std::vector<std::size_t>> factors;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] != k) continue;
    std::vector<std::size_t> members{s};
    comp[s] = factors.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        if (t != members[i] && comp[t] == k && !commute[members[i]][t]) {
          comp[t] = factors.size();
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    factors.push_back(std::move(members));
  }

  std::vector<std::string> dihedral, unfactored, cyclic;
  for (const auto& f : factors) {
    if (f.size() == 1) {
      cyclic.push_back("ℤ/" + std::to_string(orders[f[0]]) + "ℤ");
    } else if (f.size() == 2 && orders[f[0]] == 2 && orders[f[1]] == 2) {
      dihedral.emplace_back("D∞");
    } else {
      std::string s = "unfactored graph product ⟨";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) s += ", ";
        s += labels[f[i]];
      }
      unfactored.push_back(s + "⟩");
    }
  }
  std::string out;
  for (const auto* group : {&dihedral, &unfactored, &cyclic}) {
    for (const auto& s : *group) {
      if (!out.empty()) out += " × ";
      out += s;
    }
  }
  return out.empty() ? "1" : out;
}

CommutationPresentation presentation(const LabelledGraph& g, std::span<const Vertex> ordering) {
  return presentation(g, enumerate_sils(g), build_p0(g, ordering));
}

CommutationPresentation presentation(const LabelledGraph& g, std::span<const Sil> sils,
                                     const GeneratorSetP0& p0) {
  CommutationPresentation out;
  out.generators = p0.gens;
  const std::size_t k = out.generators.size();
  std::vector<std::string> labels;
  for (const auto& pc : out.generators) {
    out.orders.push_back(g.order(pc.acting));
    labels.push_back(label(g, pc));
  }
  std::vector<std::vector<bool>> commute(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool c = commutes(sils, out.generators[i], out.generators[j]);
      commute[i][j] = commute[j][i] = c;
      if (c) out.commuting_edges.emplace_back(i, j);
    }
  }
  out.summary = summarize_graph_product(labels, out.orders, commute);
  return out;
}

std::string_view to_string(DisconnectedVerdict verdict) {
  switch (verdict) {
    case DisconnectedVerdict::FsilForcedLarge: return "FsilForcedLarge";
    case DisconnectedVerdict::ProductOfQuotients: return "ProductOfQuotients";
    case DisconnectedVerdict::Large: return "Large";
  }
  return "?";
}

std::optional<DisconnectedStructure> disconnected_structure(const LabelledGraph& g) {
  return disconnected_structure(g, SilCensus::of(g));
}

std::optional<DisconnectedStructure> disconnected_structure(const LabelledGraph& g,
                                                            const SilCensus& census) {
  const auto parts = components(g, g.all());
  if (parts.size() < 2) return std::nullopt;

  DisconnectedStructure out;
  out.component_count = parts.size();
  if (parts.size() >= 3) {
    out.verdict = DisconnectedVerdict::FsilForcedLarge;
    out.summary = "FSIL forced, Large";
    return out;
  }
  if (!census.stils.empty() || !census.fsils.empty() || census.non_coxeter_count() > 0) {
    out.verdict = DisconnectedVerdict::Large;
    out.summary = "Large";
    return out;
  }

  // Out⁰ is the direct product of the graph products on Γ_i ∖ Z(Γ_i).
  std::vector<Vertex> members;
  std::vector<std::size_t> side;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const LabelledGraph sub = g.induced(parts[i]);
    std::vector<Vertex> keep;
    const VertexSet sub_center = center(sub);
    for (Vertex local = 0; local < sub.size(); ++local) {
      if (sub_center.contains(local)) continue;
      Vertex v = parts[i].items()[local];
      keep.push_back(v);
      members.push_back(v);
      side.push_back(i);
    }
    out.quotients.emplace_back(std::move(keep));
  }
  const std::size_t k = members.size();
  std::vector<std::string> labels;
  std::vector<std::uint64_t> orders;
  for (Vertex v : members) {
    labels.push_back(g.name(v));
    orders.push_back(g.order(v));
  }
  std::vector<std::vector<bool>> commute(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && side[i] == side[j]) commute[i][j] = g.adjacent(members[i], members[j]);
    }
  }
  out.verdict = DisconnectedVerdict::ProductOfQuotients;
  out.summary = summarize_graph_product(labels, orders, commute);
  return out;
}

}  // namespace silscope
