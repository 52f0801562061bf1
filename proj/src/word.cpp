#include "silscope/word.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace silscope {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

// Distinct adjacent vertices commute; a vertex never slides past itself.
bool slides_past(const LabelledGraph& g, Vertex a, Vertex b) { return a != b && g.adjacent(a, b); }

Word merge_left(const LabelledGraph& g, std::span<const Syllable> word) {
  Word out;
  out.reserve(word.size());
  for (const Syllable& raw : word) {
    const std::uint64_t m = g.order(raw.vertex);
    const std::uint64_t e = raw.exponent % m;
    if (e == 0) continue;
    bool merged = false;
    for (std::size_t i = out.size(); i > 0; --i) {
      Syllable& t = out[i - 1];
      if (t.vertex == raw.vertex) {
        t.exponent = add_mod(t.exponent, e, m);
        if (t.exponent == 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
        merged = true;
        break;
      }
      if (!g.adjacent(t.vertex, raw.vertex)) break;
    }
    if (!merged) out.push_back({raw.vertex, e});
  }
  return out;
}

Word canonical_order(const LabelledGraph& g, Word reduced) {
  Word out;
  out.reserve(reduced.size());
  while (!reduced.empty()) {
    std::size_t best = reduced.size();
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      bool available = true;
      for (std::size_t i = 0; i < j && available; ++i) {
        available = slides_past(g, reduced[i].vertex, reduced[j].vertex);
      }
      if (available && (best == reduced.size() || reduced[j].vertex < reduced[best].vertex)) {
        best = j;
      }
    }
    out.push_back(reduced[best]);
    reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

// Shortest representative of w·⟨St(v)⟩.
Word trim_centraliser(const LabelledGraph& g, std::span<const Syllable> w, Vertex v) {
  Word cur = merge_left(g, w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = cur.size(); j > 0 && !changed; --j) {
      const Vertex u = cur[j - 1].vertex;
      if (u != v && !g.adjacent(u, v)) continue;
      bool at_end = true;
      for (std::size_t i = j; i < cur.size() && at_end; ++i) at_end = slides_past(g, cur[i].vertex, u);
      if (at_end) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j - 1));
        changed = true;
      }
    }
  }
  return canonical_order(g, std::move(cur));
}

void append_conjugate(Word& out, const LabelledGraph& g, std::span<const Syllable> w, Syllable s) {
  out.insert(out.end(), w.begin(), w.end());
  out.push_back(s);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->vertex, g.order(it->vertex) - it->exponent});
  }
}

}  // namespace

std::optional<Syllable> make_syllable(const LabelledGraph& g, Vertex v, std::int64_t k) {
  const std::uint64_t m = g.order(v);
  std::uint64_t e = 0;
  if (k >= 0) {
    e = static_cast<std::uint64_t>(k) % m;
  } else {
    // -(k) computed without overflowing INT64_MIN.
    const std::uint64_t mag = static_cast<std::uint64_t>(-(k + 1)) + 1;
    e = (m - mag % m) % m;
  }
  if (e == 0) return std::nullopt;
  return Syllable{v, e};
}

Word reduce(const LabelledGraph& g, std::span<const Syllable> word) {
  return canonical_order(g, merge_left(g, word));
}

Word multiply(const LabelledGraph& g, std::span<const Syllable> a, std::span<const Syllable> b) {
  Word cat(a.begin(), a.end());
  cat.insert(cat.end(), b.begin(), b.end());
  return reduce(g, cat);
}

Word invert(const LabelledGraph& g, std::span<const Syllable> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const std::uint64_t m = g.order(it->vertex);
    out.push_back({it->vertex, (m - it->exponent % m) % m});
  }
  return reduce(g, out);
}

bool equals(const LabelledGraph& g, std::span<const Syllable> a, std::span<const Syllable> b) {
  return reduce(g, a) == reduce(g, b);
}

Word conjugate(const LabelledGraph& g, std::span<const Syllable> w, Vertex v) {
  Word out;
  append_conjugate(out, g, w, Syllable{v, 1});
  return reduce(g, out);
}

Word apply(const LabelledGraph& g, const PartialConjugation& pc, std::span<const Syllable> w,
           std::int64_t exponent) {
  const auto conj = make_syllable(g, pc.acting, exponent);
  Word out;
  for (const Syllable& s : w) {
    if (conj && pc.component.contains(s.vertex)) {
      append_conjugate(out, g, std::span<const Syllable>(&*conj, 1), s);
    } else {
      out.push_back(s);
    }
  }
  return reduce(g, out);
}

Automorphism0 Automorphism0::identity(const LabelledGraph& g) {
  Automorphism0 phi;
  phi.conjugators_.resize(g.size());
  return phi;
}

Automorphism0 Automorphism0::from(const LabelledGraph& g, const PartialConjugation& pc,
                                  std::int64_t exponent) {
  Automorphism0 phi = identity(g);
  if (auto s = make_syllable(g, pc.acting, exponent)) {
    for (Vertex u : pc.component) phi.conjugators_[u] = trim_centraliser(g, Word{*s}, u);
  }
  return phi;
}

Automorphism0 Automorphism0::inner(const LabelledGraph& g, std::span<const Syllable> w) {
  Automorphism0 phi = identity(g);
  for (Vertex u = 0; u < g.size(); ++u) phi.conjugators_[u] = trim_centraliser(g, w, u);
  return phi;
}

Automorphism0 Automorphism0::from_conjugators(const LabelledGraph& g, std::vector<Word> conjugators) {
  if (conjugators.size() != g.size()) throw GraphError("one conjugator per vertex required");
  Automorphism0 phi;
  phi.conjugators_.resize(g.size());
  for (Vertex u = 0; u < g.size(); ++u) phi.conjugators_[u] = trim_centraliser(g, conjugators[u], u);
  return phi;
}

bool Automorphism0::is_identity() const {
  return std::all_of(conjugators_.begin(), conjugators_.end(), [](const Word& w) { return w.empty(); });
}

Word Automorphism0::image(const LabelledGraph& g, Vertex v) const {
  return conjugate(g, conjugators_.at(v), v);
}

Word Automorphism0::apply(const LabelledGraph& g, std::span<const Syllable> w) const {
  Word out;
  for (const Syllable& s : w) append_conjugate(out, g, conjugators_.at(s.vertex), s);
  return reduce(g, out);
}

Automorphism0 compose(const LabelledGraph& g, const Automorphism0& phi1, const Automorphism0& phi2) {
  // (φ1∘φ2)(v) = φ1(w2) · φ1(v) · φ1(w2)⁻¹ = (φ1(w2) · w1) v (φ1(w2) · w1)⁻¹
  std::vector<Word> conj(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    Word w = phi1.apply(g, phi2.conjugator(v));
    const Word& w1 = phi1.conjugator(v);
    w.insert(w.end(), w1.begin(), w1.end());
    conj[v] = std::move(w);
  }
  return Automorphism0::from_conjugators(g, std::move(conj));
}

Automorphism0 compose_all(const LabelledGraph& g, std::span<const Automorphism0> factors) {
  Automorphism0 acc = Automorphism0::identity(g);
  for (const auto& f : factors) acc = compose(g, acc, f);
  return acc;
}

Automorphism0 commutator(const LabelledGraph& g, const PartialConjugation& x,
                         const PartialConjugation& y) {
  const std::array<Automorphism0, 4> parts{Automorphism0::from(g, x, 1), Automorphism0::from(g, y, 1),
                                           Automorphism0::from(g, x, -1), Automorphism0::from(g, y, -1)};
  return compose_all(g, parts);
}

Automorphism0 power(const LabelledGraph& g, const Automorphism0& phi, std::size_t n) {
  Automorphism0 acc = Automorphism0::identity(g);
  for (std::size_t i = 0; i < n; ++i) acc = compose(g, acc, phi);
  return acc;
}

bool is_inner_with(const LabelledGraph& g, const Automorphism0& phi, std::span<const Syllable> gword) {
  for (Vertex u = 0; u < g.size(); ++u) {
    if (conjugate(g, gword, u) != phi.image(g, u)) return false;
  }
  return true;
}

std::optional<Word> search_inner(const LabelledGraph& g, const Automorphism0& phi, std::size_t depth) {
  const auto n = static_cast<Vertex>(g.size());
  std::vector<Word> images(n);
  for (Vertex u = 0; u < n; ++u) images[u] = phi.image(g, u);
  auto matches = [&](const Word& w) {
    for (Vertex u = 0; u < n; ++u) {
      if (conjugate(g, w, u) != images[u]) return false;
    }
    return true;
  };

  std::vector<Word> level{Word{}};
  if (matches(level.front())) return level.front();
  std::set<Word> seen{Word{}};
  for (std::size_t len = 1; len <= depth; ++len) {
    std::set<Word> next;
    for (const Word& w : level) {
      for (Vertex u = 0; u < n; ++u) {
        for (std::uint64_t k = 1; k < g.order(u); ++k) {
          Word ext = w;
          ext.push_back({u, k});
          Word r = reduce(g, ext);
          if (r.size() == len && !seen.contains(r)) next.insert(std::move(r));
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const Word& w : level) {
      if (matches(w)) return w;
      seen.insert(w);
    }
    if (level.empty()) break;
  }
  return std::nullopt;
}

std::size_t commutator_power_probe(const LabelledGraph& g, const PartialConjugation& x,
                                   const PartialConjugation& y, std::size_t max_n,
                                   std::size_t depth) {
  const Automorphism0 c = commutator(g, x, y);
  Automorphism0 acc = Automorphism0::identity(g);
  for (std::size_t k = 1; k <= max_n; ++k) {
    acc = compose(g, acc, c);
    if (search_inner(g, acc, depth)) return k - 1;
  }
  return max_n;
}

Word parse_word(const LabelledGraph& g, std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "ε" || token == "1") continue;
    std::string_view name = token;
    std::int64_t k = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw GraphError("malformed exponent in word token '" + std::string(token) + "'");
      }
    }
    if (name.empty()) throw GraphError("malformed word token '" + std::string(token) + "'");
    if (auto s = make_syllable(g, g.index_of(name), k)) out.push_back(*s);
  }
  return out;
}

std::string format_word(const LabelledGraph& g, std::span<const Syllable> w) {
  if (w.empty()) return "ε";
  std::string out;
  for (const Syllable& s : w) {
    if (!out.empty()) out += ' ';
    out += g.name(s.vertex);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

}  // namespace silscope
