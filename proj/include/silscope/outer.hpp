#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "silscope/graph.hpp"
#include "silscope/sil.hpp"

namespace silscope {

/// χ_{acting, component}: conjugates every vertex of `component` by `acting`.
/// `component` must be a connected component of Γ∖St(acting).
struct PartialConjugation {
  Vertex acting = 0;
  VertexSet component;

  friend bool operator==(const PartialConjugation&, const PartialConjugation&) = default;
  friend auto operator<=>(const PartialConjugation&, const PartialConjugation&) = default;
};

/// Throws GraphError unless pc.component is a component of Γ∖St(pc.acting).
void validate(const LabelledGraph& g, const PartialConjugation& pc);

/// Every partial conjugation with acting vertex v (one per component of Γ∖St(v)).
std::vector<PartialConjugation> partial_conjugations(const LabelledGraph& g, Vertex v);

/// "χ_{v,{a,b}}"
std::string label(const LabelledGraph& g, const PartialConjugation& pc);

struct GeneratorSetP0 {
  /// ordering[i] is the vertex numbered i.
  std::vector<Vertex> ordering;
  std::vector<PartialConjugation> gens;
};

/// For each star cut point, every component of Γ∖St(v) except the one whose
/// smallest-numbered vertex comes first in `ordering`. Throws GraphError if
/// `ordering` is not a permutation of the vertices.
GeneratorSetP0 build_p0(const LabelledGraph& g, std::span<const Vertex> ordering);
/// Input order.
GeneratorSetP0 build_p0(const LabelledGraph& g);

/// Whether two partial conjugations commute in Out(W_Γ). Same acting vertex
/// always commutes; otherwise they fail to commute exactly when some SIL
/// {x, y | z} has z ∈ C = D, or x ∈ D and z ∈ C, or y ∈ C and z ∈ D, or
/// x ∈ D and y ∈ C.
bool commutes(const LabelledGraph& g, const PartialConjugation& x, const PartialConjugation& y);
bool commutes(std::span<const Sil> sils, const PartialConjugation& x, const PartialConjugation& y);

enum class OutClassTag { Finite, VirtuallyZ, VirtuallyAbelianNotZ, Large };

std::string_view to_string(OutClassTag tag);

struct Evidence {
  std::size_t coxeter_sils = 0;
  std::size_t non_coxeter_sils = 0;
  std::size_t stils = 0;
  std::size_t fsils = 0;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct OutClass {
  OutClassTag tag = OutClassTag::Finite;
  Evidence evidence;
};

OutClass classify(const LabelledGraph& g);
OutClass classify(const SilCensus& census);

struct CommutationPresentation {
  std::vector<PartialConjugation> generators;
  std::vector<std::uint64_t> orders;
  /// Index pairs (i < j) of commuting generators, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> commuting_edges;
  std::string summary;

  std::size_t non_commuting_pairs() const;
};

CommutationPresentation presentation(const LabelledGraph& g, std::span<const Vertex> ordering);
CommutationPresentation presentation(const LabelledGraph& g, std::span<const Sil> sils,
                                     const GeneratorSetP0& p0);

/// Factor a graph product of cyclic groups over a commutation graph: the
/// product splits along components of the non-commutation graph; a lone
/// generator is ℤ/mℤ, a non-commuting pair of involutions is D∞, and any
/// other factor is reported as an unfactored graph product. Returns "1" for
/// the empty product.
std::string summarize_graph_product(std::span<const std::string> labels,
                                    std::span<const std::uint64_t> orders,
                                    const std::vector<std::vector<bool>>& commute);

enum class DisconnectedVerdict { FsilForcedLarge, ProductOfQuotients, Large };

std::string_view to_string(DisconnectedVerdict verdict);

struct DisconnectedStructure {
  std::size_t component_count = 0;
  DisconnectedVerdict verdict = DisconnectedVerdict::Large;
  /// Γ_i ∖ Z(Γ_i) for each of the two components (ProductOfQuotients only).
  std::vector<VertexSet> quotients;
  std::string summary;
};

/// Absent for connected graphs.
std::optional<DisconnectedStructure> disconnected_structure(const LabelledGraph& g);
std::optional<DisconnectedStructure> disconnected_structure(const LabelledGraph& g,
                                                            const SilCensus& census);

}  // namespace silscope
