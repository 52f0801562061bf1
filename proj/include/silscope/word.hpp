#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "silscope/graph.hpp"
#include "silscope/outer.hpp"

namespace silscope {

/// vertex^exponent with exponent in [1, m(vertex) - 1].
struct Syllable {
  Vertex vertex = 0;
  std::uint64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

/// Syllable v^k with k taken mod m(v); nullopt when k ≡ 0.
std::optional<Syllable> make_syllable(const LabelledGraph& g, Vertex v, std::int64_t k);

/// Canonical normal form in W_Γ.
///
/// Each syllable is pushed left across syllables it commutes with and merged
/// into a same-vertex syllable if it reaches one (cancelling when the
/// exponents sum to 0 mod m). The reduced word is then re-emitted greedily,
/// always taking the smallest vertex among the syllables that can be moved
/// to the front, which picks one representative per commutation class.
Word reduce(const LabelledGraph& g, std::span<const Syllable> word);

Word multiply(const LabelledGraph& g, std::span<const Syllable> a, std::span<const Syllable> b);
Word invert(const LabelledGraph& g, std::span<const Syllable> w);
bool equals(const LabelledGraph& g, std::span<const Syllable> a, std::span<const Syllable> b);
/// reduce(w · v^1 · w⁻¹)
Word conjugate(const LabelledGraph& g, std::span<const Syllable> w, Vertex v);

/// Image of a word under χ^exponent (exponent 1 is the plain partial conjugation).
Word apply(const LabelledGraph& g, const PartialConjugation& pc, std::span<const Syllable> w,
           std::int64_t exponent = 1);

/// An element of Aut⁰: v ↦ w_v · v · w_v⁻¹.
///
/// Conjugators are kept as the shortest representative of w_v modulo the
/// centraliser ⟨St(v)⟩, so two automorphisms are equal iff their conjugator
/// lists are equal.
class Automorphism0 {
 public:
  static Automorphism0 identity(const LabelledGraph& g);
  static Automorphism0 from(const LabelledGraph& g, const PartialConjugation& pc,
                            std::int64_t exponent = 1);
  /// Inner automorphism x ↦ w x w⁻¹.
  static Automorphism0 inner(const LabelledGraph& g, std::span<const Syllable> w);
  static Automorphism0 from_conjugators(const LabelledGraph& g, std::vector<Word> conjugators);

  const Word& conjugator(Vertex v) const { return conjugators_.at(v); }
  const std::vector<Word>& conjugators() const { return conjugators_; }
  bool is_identity() const;

  Word image(const LabelledGraph& g, Vertex v) const;
  Word apply(const LabelledGraph& g, std::span<const Syllable> w) const;

  friend bool operator==(const Automorphism0&, const Automorphism0&) = default;

 private:
  std::vector<Word> conjugators_;
};

/// φ1 ∘ φ2
Automorphism0 compose(const LabelledGraph& g, const Automorphism0& phi1, const Automorphism0& phi2);

/// χ^exponent for every listed generator, composed left to right.
Automorphism0 compose_all(const LabelledGraph& g, std::span<const Automorphism0> factors);

/// [x, y] = x y x⁻¹ y⁻¹ of two partial conjugations.
Automorphism0 commutator(const LabelledGraph& g, const PartialConjugation& x,
                         const PartialConjugation& y);

/// φ^n, n >= 0.
Automorphism0 power(const LabelledGraph& g, const Automorphism0& phi, std::size_t n);

/// True iff φ(u) = gword · u · gword⁻¹ for every vertex u.
bool is_inner_with(const LabelledGraph& g, const Automorphism0& phi, std::span<const Syllable> gword);

/// Breadth-first search over reduced words of at most `depth` syllables
/// (length first, then lexicographic) for a conjugator realising φ as an
/// inner automorphism. A miss is not a proof that φ is outer.
std::optional<Word> search_inner(const LabelledGraph& g, const Automorphism0& phi, std::size_t depth);

/// Largest N <= max_n such that none of [x,y]^1..[x,y]^N is found inner
/// within `depth`.
std::size_t commutator_power_probe(const LabelledGraph& g, const PartialConjugation& x,
                                   const PartialConjugation& y, std::size_t max_n,
                                   std::size_t depth);

/// Parses space-separated `name^k` tokens (k defaults to 1, may be negative).
/// "ε" or an empty string is the identity. Throws GraphError / UnknownVertex.
Word parse_word(const LabelledGraph& g, std::string_view text);
/// Inverse of parse_word; the identity prints as "ε".
std::string format_word(const LabelledGraph& g, std::span<const Syllable> w);

}  // namespace silscope
