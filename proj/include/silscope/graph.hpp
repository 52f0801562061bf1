#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace silscope {

/// Dense vertex index, 0..n-1 in input order.
using Vertex = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Sorted, duplicate-free set of vertex indices. Equality is structural.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  bool contains(Vertex v) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  Vertex min() const { return items_.front(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Vertex>& items() const { return items_; }

  bool intersects(const VertexSet& other) const;
  VertexSet intersection(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet difference(const VertexSet& other) const;
  VertexSet with(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

/// True iff n = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t n);

/// A finite simple graph with a prime-power order on every vertex.
class LabelledGraph {
 public:
  struct VertexSpec {
    std::string name;
    std::uint64_t order = 2;
  };

  /// Validates the graph invariants and throws GraphError on violation:
  /// empty vertex list, duplicate or empty names, orders that are not prime
  /// powers, self-loops, duplicate edges, out-of-range endpoints.
  LabelledGraph(std::vector<VertexSpec> vertices,
                std::vector<std::pair<Vertex, Vertex>> edges);

  /// Same, with edges given by vertex name.
  static LabelledGraph from_names(
      std::vector<VertexSpec> vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const;
  std::uint64_t order(Vertex v) const;

  std::optional<Vertex> find(std::string_view name) const;
  /// Throws UnknownVertex.
  Vertex index_of(std::string_view name) const;
  /// Throws UnknownVertex when v is out of range.
  void require(Vertex v) const;

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[static_cast<std::size_t>(u) * names_.size() + v] != 0;
  }
  const VertexSet& neighbours(Vertex v) const { return neighbours_[v]; }

  VertexSet all() const;
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Relabelled copy: vertex v of *this becomes vertex perm[v] of the result.
  LabelledGraph permuted(const std::vector<Vertex>& perm) const;
  /// Induced subgraph, vertices renumbered in increasing order of `keep`.
  LabelledGraph induced(const VertexSet& keep) const;

  friend bool operator==(const LabelledGraph& a, const LabelledGraph& b);

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<VertexSet> neighbours_;
};

VertexSet link(const LabelledGraph& g, Vertex v);
VertexSet star(const LabelledGraph& g, Vertex v);

/// Connected components of the subgraph induced by `keep`, ordered by their
/// minimal vertex index.
std::vector<VertexSet> components(const LabelledGraph& g, const VertexSet& keep);

/// Vertices v for which the complement of St(v) has at least two components.
std::vector<Vertex> star_cut_points(const LabelledGraph& g);

/// Vertices adjacent to every other vertex.
VertexSet center(const LabelledGraph& g);

bool is_connected(const LabelledGraph& g);

}  // namespace silscope
