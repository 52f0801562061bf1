#pragma once

// Brute-force reference implementations, written straight from the
// definitions and sharing no code with the library beyond the adjacency
// matrix and vertex orders. Slow on purpose.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "silscope/graph.hpp"

namespace oracle {

using silscope::LabelledGraph;
using silscope::Vertex;
using Set = std::set<Vertex>;

inline Set link(const LabelledGraph& g, Vertex v) {
  Set out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (u != v && g.adjacent(u, v)) out.insert(u);
  }
  return out;
}

inline Set everything(const LabelledGraph& g) {
  Set out;
  for (Vertex v = 0; v < g.size(); ++v) out.insert(v);
  return out;
}

inline Set minus(const Set& a, const Set& b) {
  Set out;
  for (Vertex v : a) {
    if (!b.contains(v)) out.insert(v);
  }
  return out;
}

inline Set meet(const Set& a, const Set& b) {
  Set out;
  for (Vertex v : a) {
    if (b.contains(v)) out.insert(v);
  }
  return out;
}

// Union-find over every edge with both ends in keep; parts sorted by minimum.
inline std::vector<Set> components(const LabelledGraph& g, const Set& keep) {
  std::vector<Vertex> parent(g.size());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex u : keep) {
    for (Vertex v : keep) {
      if (u < v && g.adjacent(u, v)) parent[find(u)] = find(v);
    }
  }
  std::map<Vertex, Set> groups;
  for (Vertex v : keep) groups[find(v)].insert(v);
  std::vector<Set> out;
  for (auto& [root, part] : groups) out.push_back(std::move(part));
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return *a.begin() < *b.begin(); });
  return out;
}

struct NaiveSil {
  Vertex a;
  Vertex b;
  Set component;
  bool coxeter;
  auto operator<=>(const NaiveSil&) const = default;
};

inline std::vector<NaiveSil> sils(const LabelledGraph& g) {
  std::vector<NaiveSil> out;
  for (Vertex a = 0; a < g.size(); ++a) {
    for (Vertex b = a + 1; b < g.size(); ++b) {
      if (g.adjacent(a, b)) continue;
      const Set cut = meet(oracle::link(g, a), oracle::link(g, b));
      for (const Set& part : components(g, minus(everything(g), cut))) {
        if (part.contains(a) || part.contains(b)) continue;
        out.push_back({a, b, part, g.order(a) == 2 && g.order(b) == 2});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct NaiveStil {
  std::array<Vertex, 3> triple;
  Set component;
  auto operator<=>(const NaiveStil&) const = default;
};

inline std::vector<NaiveStil> stils(const LabelledGraph& g) {
  std::vector<NaiveStil> out;
  const Vertex n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const int edges = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
        if (edges > 1) continue;
        const Set cut = meet(meet(oracle::link(g, a), oracle::link(g, b)), oracle::link(g, c));
        for (const Set& part : components(g, minus(everything(g), cut))) {
          if (part.contains(a) || part.contains(b) || part.contains(c)) continue;
          out.push_back({{a, b, c}, part});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Triples where every pair has a SIL whose component holds the third vertex.
inline std::vector<std::array<Vertex, 3>> fsils(const LabelledGraph& g) {
  const auto all = sils(g);
  auto witnessed = [&](Vertex x, Vertex y, Vertex z) {
    return std::any_of(all.begin(), all.end(), [&](const NaiveSil& s) {
      return s.a == std::min(x, y) && s.b == std::max(x, y) && s.component.contains(z);
    });
  };
  std::vector<std::array<Vertex, 3>> out;
  const Vertex n = static_cast<Vertex>(g.size());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (witnessed(a, b, c) && witnessed(a, c, b) && witnessed(b, c, a)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline Set center(const LabelledGraph& g) {
  Set out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (oracle::link(g, v).size() + 1 == g.size()) out.insert(v);
  }
  return out;
}

// Words as (vertex, exponent) with exponents taken mod m(vertex).
using RawWord = std::vector<std::pair<Vertex, std::int64_t>>;

inline RawWord normalise(const LabelledGraph& g, const RawWord& w) {
  RawWord out;
  for (auto [v, k] : w) {
    const auto m = static_cast<std::int64_t>(g.order(v));
    const auto e = ((k % m) + m) % m;
    if (e != 0) out.emplace_back(v, e);
  }
  return out;
}

inline RawWord inverse(const LabelledGraph& g, const RawWord& w) {
  RawWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return normalise(g, out);
}

inline RawWord concat(const RawWord& a, const RawWord& b) {
  RawWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Decides w = 1 by exhaustive rewriting: swap adjacent syllables on adjacent
// vertices, merge adjacent syllables on the same vertex. A word is trivial
// iff some sequence of these moves empties it.
inline bool trivial(const LabelledGraph& g, const RawWord& input) {
  std::set<RawWord> seen;
  std::deque<RawWord> queue;
  const RawWord start = normalise(g, input);
  queue.push_back(start);
  seen.insert(start);
  while (!queue.empty()) {
    RawWord w = std::move(queue.front());
    queue.pop_front();
    if (w.empty()) return true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      RawWord next = w;
      if (w[i].first == w[i + 1].first) {
        next[i].second += next[i + 1].second;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        next = normalise(g, next);
      } else if (g.adjacent(w[i].first, w[i + 1].first)) {
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return false;
}

inline bool equal(const LabelledGraph& g, const RawWord& a, const RawWord& b) {
  return trivial(g, concat(a, inverse(g, b)));
}

// χ_{v,C} applied syllable by syllable, straight from the definition.
inline RawWord apply_partial(const Vertex v, const Set& component, const RawWord& w) {
  RawWord out;
  for (auto [u, k] : w) {
    if (component.contains(u)) {
      out.emplace_back(v, 1);
      out.emplace_back(u, k);
      out.emplace_back(v, -1);
    } else {
      out.emplace_back(u, k);
    }
  }
  return out;
}

}  // namespace oracle
