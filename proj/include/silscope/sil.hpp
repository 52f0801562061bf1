#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "silscope/graph.hpp"

namespace silscope {

/// Separating intersection of links {first, second | component}.
///
/// `first < second`; the two vertices are distinct and non-adjacent, and
/// `component` is a connected component of the graph with
/// Lk(first) ∩ Lk(second) removed that contains neither of them. Two Sils are
/// the same SIL iff pair and component coincide.
struct Sil {
  Vertex first = 0;
  Vertex second = 0;
  VertexSet component;
  bool coxeter = false;

  friend bool operator==(const Sil&, const Sil&) = default;
  friend auto operator<=>(const Sil&, const Sil&) = default;
};

/// Separating triple intersection of links. `triple` is sorted.
struct Stil {
  std::array<Vertex, 3> triple{};
  VertexSet component;

  friend bool operator==(const Stil&, const Stil&) = default;
  friend auto operator<=>(const Stil&, const Stil&) = default;
};

/// Flexible SIL: each pair of the (sorted) triple forms a SIL whose component
/// holds the third vertex. `witnesses[k]` is the Sil on the pair that omits
/// `triple[k]`.
struct Fsil {
  std::array<Vertex, 3> triple{};
  std::array<Sil, 3> witnesses;

  friend bool operator==(const Fsil&, const Fsil&) = default;
};

/// Raised when a structural property that must hold for every graph fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// All SILs, ordered by pair then by component minimum.
std::vector<Sil> enumerate_sils(const LabelledGraph& g);

/// The SIL {v1, v2 | z}, if there is one.
std::optional<Sil> is_sil(const LabelledGraph& g, Vertex v1, Vertex v2, Vertex z);

std::vector<Stil> enumerate_stils(const LabelledGraph& g);

std::vector<Fsil> enumerate_fsils(const LabelledGraph& g);
/// FSILs derived from an already computed SIL list of `g`.
std::vector<Fsil> enumerate_fsils(const LabelledGraph& g, std::span<const Sil> sils);

/// The component C shared by Γ∖St(v1) and Γ∖St(v2) that carries the SIL.
/// Throws ConsistencyError if the two stars cut out different components, or
/// if that component is not exactly the SIL component.
VertexSet shared_sil_component(const LabelledGraph& g, const Sil& sil);

/// SIL, STIL and FSIL lists of one graph, computed once.
struct SilCensus {
  std::vector<Sil> sils;
  std::vector<Stil> stils;
  std::vector<Fsil> fsils;

  static SilCensus of(const LabelledGraph& g);

  std::size_t coxeter_count() const;
  std::size_t non_coxeter_count() const;
};

}  // namespace silscope
