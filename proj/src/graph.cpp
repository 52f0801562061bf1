#include "silscope/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace silscope {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet VertexSet::intersection(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::difference(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), v);
  if (it == out.items_.end() || *it != v) out.items_.insert(it, v);
  return out;
}

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// r^k compared against n without overflow: -1, 0, +1.
int compare_power(std::uint64_t r, int k, std::uint64_t n) {
  u128 acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return 1;
  }
  return acc == n ? 0 : -1;
}

}  // namespace

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  if (is_prime(n)) return true;
  // largest exponent first, so the root found is not itself a power
  for (int k = 63; k >= 2; --k) {
    if (k < 64 && (1ULL << k) > n) continue;
    auto guess = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<long double>(n), 1.0L / k)));
    for (std::uint64_t r = guess > 1 ? guess - 1 : 1; r <= guess + 1; ++r) {
      if (r < 2) continue;
      if (compare_power(r, k, n) == 0) return is_prime(r);
    }
  }
  return false;
}

LabelledGraph::LabelledGraph(std::vector<VertexSpec> vertices,
                             std::vector<std::pair<Vertex, Vertex>> edges) {
  if (vertices.empty()) throw GraphError("graph must have at least one vertex");
  const std::size_t n = vertices.size();
  std::unordered_set<std::string> seen;
  names_.reserve(n);
  orders_.reserve(n);
  for (auto& spec : vertices) {
    if (spec.name.empty()) throw GraphError("vertex names must be non-empty");
    if (!seen.insert(spec.name).second) throw GraphError("duplicate vertex name '" + spec.name + "'");
    if (!is_prime_power(spec.order)) {
      throw GraphError("order of vertex '" + spec.name + "' is " + std::to_string(spec.order) +
                       ", not a prime power >= 2");
    }
    names_.push_back(std::move(spec.name));
    orders_.push_back(spec.order);
  }
  adjacency_.assign(n * n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at vertex '" + names_[u] + "'");
    auto& cell = adjacency_[static_cast<std::size_t>(u) * n + v];
    if (cell != 0) {
      throw GraphError("duplicate edge " + names_[u] + " -- " + names_[v]);
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
  }
  neighbours_.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> nb;
    for (Vertex v = 0; v < n; ++v) {
      if (adjacent(u, v)) nb.push_back(v);
    }
    neighbours_[u] = VertexSet(std::move(nb));
  }
}

LabelledGraph LabelledGraph::from_names(
    std::vector<VertexSpec> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].name, i);
  std::vector<std::pair<Vertex, Vertex>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownVertex("edge references unknown vertex '" + a + "'");
    if (ib == index.end()) throw UnknownVertex("edge references unknown vertex '" + b + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return LabelledGraph(std::move(vertices), std::move(indexed));
}

const std::string& LabelledGraph::name(Vertex v) const {
  require(v);
  return names_[v];
}

std::uint64_t LabelledGraph::order(Vertex v) const {
  require(v);
  return orders_[v];
}

std::optional<Vertex> LabelledGraph::find(std::string_view name) const {
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

Vertex LabelledGraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

void LabelledGraph::require(Vertex v) const {
  if (v >= names_.size()) throw UnknownVertex("unknown vertex index " + std::to_string(v));
}

VertexSet LabelledGraph::all() const {
  std::vector<Vertex> vs(size());
  for (Vertex v = 0; v < vs.size(); ++v) vs[v] = v;
  return VertexSet(std::move(vs));
}

std::vector<std::pair<Vertex, Vertex>> LabelledGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbours_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

LabelledGraph LabelledGraph::permuted(const std::vector<Vertex>& perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw GraphError("permutation has wrong length");
  std::vector<VertexSpec> specs(n);
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (perm[v] >= n || hit[perm[v]]) throw GraphError("not a permutation");
    hit[perm[v]] = true;
    specs[perm[v]] = {names_[v], orders_[v]};
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
  return LabelledGraph(std::move(specs), std::move(es));
}

LabelledGraph LabelledGraph::induced(const VertexSet& keep) const {
  std::vector<VertexSpec> specs;
  std::vector<Vertex> renumber(size(), 0);
  for (Vertex v : keep) {
    require(v);
    renumber[v] = static_cast<Vertex>(specs.size());
    specs.push_back({names_[v], orders_[v]});
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (auto [u, v] : edges()) {
    if (keep.contains(u) && keep.contains(v)) es.emplace_back(renumber[u], renumber[v]);
  }
  return LabelledGraph(std::move(specs), std::move(es));
}

bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
  return a.names_ == b.names_ && a.orders_ == b.orders_ && a.adjacency_ == b.adjacency_;
}

VertexSet link(const LabelledGraph& g, Vertex v) {
  g.require(v);
  return g.neighbours(v);
}

VertexSet star(const LabelledGraph& g, Vertex v) {
  g.require(v);
  return g.neighbours(v).with(v);
}

std::vector<VertexSet> components(const LabelledGraph& g, const VertexSet& keep) {
  const std::size_t n = g.size();
  std::vector<std::uint8_t> allowed(n, 0);
  for (Vertex v : keep) {
    g.require(v);
    allowed[v] = 1;
  }
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<VertexSet> out;
  std::deque<Vertex> queue;
  // Seeds are visited in increasing index order, so the output is sorted by
  // minimal element.
  for (Vertex seed : keep) {
    if (visited[seed]) continue;
    std::vector<Vertex> part;
    visited[seed] = 1;
    queue.push_back(seed);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      part.push_back(u);
      for (Vertex w : g.neighbours(u)) {
        if (allowed[w] && !visited[w]) {
          visited[w] = 1;
          queue.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(part));
  }
  return out;
}

std::vector<Vertex> star_cut_points(const LabelledGraph& g) {
  std::vector<Vertex> out;
  const VertexSet everything = g.all();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (components(g, everything.difference(star(g, v))).size() >= 2) out.push_back(v);
  }
  return out;
}

VertexSet center(const LabelledGraph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.neighbours(v).size() + 1 == g.size()) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool is_connected(const LabelledGraph& g) { return components(g, g.all()).size() == 1; }

}  // namespace silscope
