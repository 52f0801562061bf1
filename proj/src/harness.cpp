#include "silscope/harness.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "silscope/outer.hpp"
#include "silscope/word.hpp"

namespace silscope {

namespace {

constexpr std::size_t kMaxEnumVertices = 8;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// pair_index[u * n + v] for u < v, in (0,1), (0,2), ..., (1,2), ... order.
std::vector<std::size_t> pair_table(std::size_t n) {
  std::vector<std::size_t> table(n * n, 0);
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      table[u * n + v] = k;
      table[v * n + u] = k;
      ++k;
    }
  }
  return table;
}

Json names(const LabelledGraph& g, const VertexSet& set) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(g.name(v));
  return out;
}

Json sil_json(const LabelledGraph& g, const Sil& s) {
  return Json{{"pair", Json::array({g.name(s.first), g.name(s.second)})},
              {"component", names(g, s.component)}};
}

std::string sil_text(const LabelledGraph& g, const Sil& s) {
  std::string out = "{" + g.name(s.first) + "," + g.name(s.second) + "|";
  bool first = true;
  for (Vertex v : s.component) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::optional<Failure> check_lemma_2_2(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  for (const Sil& s : ctx.census.sils) {
    try {
      const VertexSet shared = shared_sil_component(g, s);
      validate(g, PartialConjugation{s.first, shared});
      validate(g, PartialConjugation{s.second, shared});
    } catch (const std::exception& e) {
      return Failure{sil_json(g, s), "SIL " + sil_text(g, s) + " has no shared component: " + e.what()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_lemma_4(const CheckContext& ctx) {
  if (ctx.census.sils.size() != 1 || ctx.census.stils.empty()) return std::nullopt;
  const auto& g = ctx.graph;
  const Stil& t = ctx.census.stils.front();
  Json w{{"sil", sil_json(g, ctx.census.sils.front())},
         {"stil", Json{{"triple", Json::array({g.name(t.triple[0]), g.name(t.triple[1]),
                                               g.name(t.triple[2])})},
                       {"component", names(g, t.component)}}}};
  return Failure{w, "exactly one SIL but a STIL exists"};
}

std::optional<Failure> check_stil_two_sils(const CheckContext& ctx) {
  if (ctx.census.stils.empty() || ctx.census.sils.size() >= 2) return std::nullopt;
  const auto& g = ctx.graph;
  const Stil& t = ctx.census.stils.front();
  Json w{{"triple", Json::array({g.name(t.triple[0]), g.name(t.triple[1]), g.name(t.triple[2])})},
         {"component", names(g, t.component)},
         {"sils", ctx.census.sils.size()}};
  return Failure{w, "STIL with fewer than two SILs"};
}

std::optional<Failure> check_lemma_7(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  if (ctx.census.sils.size() != 1 || !is_connected(g)) return std::nullopt;
  const Sil& s = ctx.census.sils.front();
  for (Vertex v : {s.first, s.second}) {
    const auto parts = components(g, g.all().difference(star(g, v)));
    if (parts.size() != 2) {
      Json w{{"sil", sil_json(g, s)}, {"vertex", g.name(v)}, {"components", parts.size()}};
      return Failure{w, "complement of St(" + g.name(v) + ") has " + std::to_string(parts.size()) +
                            " components, expected 2"};
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_lemma_1_7(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  const auto& sils = ctx.census.sils;
  if (sils.size() < 2 || !is_connected(g)) return std::nullopt;
  auto other = [](const Sil& s, Vertex x) { return s.first == x ? s.second : s.first; };
  for (std::size_t i = 0; i < sils.size(); ++i) {
    for (std::size_t j = 0; j < sils.size(); ++j) {
      if (i == j) continue;
      const Sil& a = sils[i];
      const Sil& b = sils[j];
      for (Vertex x1 : {a.first, a.second}) {
        if (x1 != b.first && x1 != b.second) continue;
        const Vertex x2 = other(a, x1);
        const Vertex x3 = other(b, x1);
        if (x2 == x3) continue;
        std::array<Vertex, 3> triple{x1, x2, x3};
        std::sort(triple.begin(), triple.end());
        for (Vertex z : a.component.intersection(b.component)) {
          const bool found = std::any_of(
              ctx.census.stils.begin(), ctx.census.stils.end(),
              [&](const Stil& t) { return t.triple == triple && t.component.contains(z); });
          if (!found) {
            Json w{{"sils", Json::array({sil_json(g, a), sil_json(g, b)})}, {"z", g.name(z)}};
            return Failure{w, "no STIL {" + g.name(x1) + "," + g.name(x2) + "," + g.name(x3) + "|" +
                                  g.name(z) + "}"};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_finite_equiv(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  const auto p0 = build_p0(g);
  std::optional<std::pair<std::size_t, std::size_t>> clash;
  for (std::size_t i = 0; i < p0.gens.size() && !clash; ++i) {
    for (std::size_t j = i + 1; j < p0.gens.size(); ++j) {
      if (!commutes(ctx.census.sils, p0.gens[i], p0.gens[j])) {
        clash.emplace(i, j);
        break;
      }
    }
  }
  const bool no_sils = ctx.census.sils.empty();
  if (no_sils == !clash) return std::nullopt;
  Json w{{"sils", ctx.census.sils.size()}};
  if (clash) {
    w["pair"] = Json::array({label(g, p0.gens[clash->first]), label(g, p0.gens[clash->second])});
    return Failure{w, "no SIL but a non-commuting pair of generators"};
  }
  w["sil"] = sil_json(g, ctx.census.sils.front());
  return Failure{w, "SILs present but all generators commute"};
}

std::optional<Failure> check_three_components_fsil(const CheckContext& ctx) {
  const auto parts = components(ctx.graph, ctx.graph.all());
  if (parts.size() < 3 || !ctx.census.fsils.empty()) return std::nullopt;
  return Failure{Json{{"components", parts.size()}}, "three or more components but no FSIL"};
}

std::optional<Failure> check_lemma_1_4_oracle(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  if (g.size() > ctx.oracle_max_vertices) return std::nullopt;
  const auto p0 = build_p0(g);
  for (std::size_t i = 0; i < p0.gens.size(); ++i) {
    for (std::size_t j = i + 1; j < p0.gens.size(); ++j) {
      const auto& x = p0.gens[i];
      const auto& y = p0.gens[j];
      const bool predicted = commutes(ctx.census.sils, x, y);
      const auto conj = search_inner(g, commutator(g, x, y), ctx.oracle_depth);
      if (predicted == conj.has_value()) continue;
      Json w{{"x", label(g, x)},
             {"y", label(g, y)},
             {"predicted_commute", predicted},
             {"oracle_depth", ctx.oracle_depth}};
      if (conj) w["conjugator"] = format_word(g, *conj);
      return Failure{w, predicted ? "predicted commuting, but no inner conjugator found"
                                  : "predicted non-commuting, but the commutator is inner"};
    }
  }
  return std::nullopt;
}

std::optional<Failure> check_fsil_three_sils(const CheckContext& ctx) {
  const auto& g = ctx.graph;
  const auto& sils = ctx.census.sils;
  for (const Fsil& f : ctx.census.fsils) {
    std::vector<Sil> seen;
    for (const Sil& s : f.witnesses) {
      if (std::find(sils.begin(), sils.end(), s) == sils.end()) continue;
      if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
    }
    if (seen.size() < 3) {
      Json w{{"triple", Json::array({g.name(f.triple[0]), g.name(f.triple[1]), g.name(f.triple[2])})},
             {"distinct_sils", seen.size()}};
      return Failure{w, "FSIL backed by fewer than three distinct SILs"};
    }
  }
  return std::nullopt;
}

std::vector<Check> selected_checks(const EnumSpec& spec, std::span<const Check> extra) {
  std::map<std::string, const Check*> by_id;
  for (const auto& c : standard_checks()) by_id.emplace(c.id, &c);
  for (const auto& c : extra) by_id.emplace(c.id, &c);
  if (spec.checks.empty()) return standard_checks();
  std::vector<Check> out;
  for (const auto& id : spec.checks) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw UnknownCheck("unknown check id '" + id + "'");
    if (std::none_of(out.begin(), out.end(), [&](const Check& c) { return c.id == id; })) {
      out.push_back(*it->second);
    }
  }
  return out;
}

// Visits the graphs with `n` vertices and edge set `mask`, labels in odometer
// order with the last vertex varying fastest.
void visit_mask(const EnumSpec& spec, std::size_t n, std::uint64_t mask,
                const std::function<void(const LabelledGraph&)>& visit) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(u, v);
    }
  }
  const std::size_t base = spec.order_alphabet.size();
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    std::vector<LabelledGraph::VertexSpec> specs;
    for (std::size_t v = 0; v < n; ++v) {
      specs.push_back({"x" + std::to_string(v), spec.order_alphabet[digits[v]]});
    }
    LabelledGraph g(std::move(specs), edges);
    if (!spec.dedup_isomorphic || is_canonical(g)) visit(g);
    std::size_t k = n;
    while (k > 0 && ++digits[k - 1] == base) digits[--k] = 0;
    if (k == 0) break;
  }
}

std::vector<std::uint64_t> sorted_alphabet(std::vector<std::uint64_t> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.min_vertices < 1 || spec.max_vertices < spec.min_vertices) {
    throw std::invalid_argument("vertex range must satisfy 1 <= min <= max");
  }
  if (spec.max_vertices > kMaxEnumVertices) {
    throw std::invalid_argument("enumeration is limited to " + std::to_string(kMaxEnumVertices) +
                                " vertices");
  }
  if (spec.order_alphabet.empty()) throw std::invalid_argument("order alphabet is empty");
  for (auto m : spec.order_alphabet) {
    if (!is_prime_power(m)) {
      throw std::invalid_argument("order " + std::to_string(m) + " is not a prime power");
    }
  }
  if (spec.workers < 1) throw std::invalid_argument("need at least one worker");
}

bool is_canonical(const LabelledGraph& g) {
  const std::size_t n = g.size();
  const auto table = pair_table(n);
  std::uint64_t mask = 0;
  std::vector<std::uint64_t> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = g.order(v);
  const auto edges = g.edges();
  for (auto [u, v] : edges) mask |= std::uint64_t{1} << table[u * n + v];

  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::uint64_t> plabels(n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::uint64_t pmask = 0;
    for (auto [u, v] : edges) pmask |= std::uint64_t{1} << table[perm[u] * n + perm[v]];
    if (pmask > mask) continue;
    for (Vertex v = 0; v < n; ++v) plabels[perm[v]] = labels[v];
    if (pmask < mask || plabels < labels) return false;
  }
  return true;
}

void for_each_graph(const EnumSpec& spec, const std::function<void(const LabelledGraph&)>& visit) {
  validate(spec);
  EnumSpec s = spec;
  s.order_alphabet = sorted_alphabet(spec.order_alphabet);
  for (std::size_t n = s.min_vertices; n <= s.max_vertices; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) visit_mask(s, n, mask, visit);
  }
}

std::vector<LabelledGraph> enumerate_graphs(const EnumSpec& spec) {
  std::vector<LabelledGraph> out;
  for_each_graph(spec, [&](const LabelledGraph& g) { out.push_back(g); });
  return out;
}

Json CounterexampleReport::to_json() const {
  return Json{{"check", check}, {"graph", graph}, {"witness", witness}, {"message", message}};
}

CounterexampleReport CounterexampleReport::from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("check") || !doc.contains("graph")) {
    throw InputError("counterexample report needs \"check\" and \"graph\"");
  }
  CounterexampleReport r;
  r.check = doc["check"].get<std::string>();
  r.graph = graph_to_json(graph_from_json(doc["graph"]));
  if (doc.contains("witness")) r.witness = doc["witness"];
  if (doc.contains("message")) r.message = doc["message"].get<std::string>();
  return r;
}

const std::vector<Check>& standard_checks() {
  static const std::vector<Check> checks{
      {"lemma_2_2", check_lemma_2_2},
      {"lemma_4", check_lemma_4},
      {"stil_two_sils", check_stil_two_sils},
      {"lemma_7", check_lemma_7},
      {"lemma_1_7", check_lemma_1_7},
      {"finite_equiv", check_finite_equiv},
      {"three_components_fsil", check_three_components_fsil},
      {"lemma_1_4_oracle", check_lemma_1_4_oracle},
      {"fsil_three_sils", check_fsil_three_sils},
  };
  return checks;
}

std::vector<std::string> standard_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : standard_checks()) ids.push_back(c.id);
  return ids;
}

SuiteResult run_suite(const EnumSpec& spec, std::span<const Check> extra) {
  validate(spec);
  const auto checks = selected_checks(spec, extra);
  EnumSpec s = spec;
  s.order_alphabet = sorted_alphabet(spec.order_alphabet);

  // One job per (n, mask); results are concatenated in job order.
  std::vector<std::pair<std::size_t, std::uint64_t>> jobs;
  for (std::size_t n = s.min_vertices; n <= s.max_vertices; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) jobs.emplace_back(n, mask);
  }
  std::vector<std::vector<CounterexampleReport>> found(jobs.size());
  std::vector<std::size_t> counts(jobs.size(), 0);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      visit_mask(s, jobs[j].first, jobs[j].second, [&](const LabelledGraph& g) {
        ++counts[j];
        const SilCensus census = SilCensus::of(g);
        const CheckContext ctx{g, census, s.oracle_depth, s.oracle_max_vertices};
        for (const auto& c : checks) {
          if (auto fail = c.run(ctx)) {
            found[j].push_back({c.id, graph_to_json(g), std::move(fail->witness), fail->message});
          }
        }
      });
    }
  };

  const unsigned workers = std::min<std::size_t>(s.workers, std::max<std::size_t>(jobs.size(), 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SuiteResult out;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    out.graphs += counts[j];
    for (auto& r : found[j]) out.reports.push_back(std::move(r));
  }
  return out;
}

std::optional<CounterexampleReport> replay(const CounterexampleReport& report,
                                           std::span<const Check> extra, std::size_t oracle_depth) {
  EnumSpec spec;
  spec.checks = {report.check};
  const auto checks = selected_checks(spec, extra);
  const LabelledGraph g = graph_from_json(report.graph);
  const SilCensus census = SilCensus::of(g);
  const CheckContext ctx{g, census, oracle_depth, std::numeric_limits<std::size_t>::max()};
  auto fail = checks.front().run(ctx);
  if (!fail) return std::nullopt;
  return CounterexampleReport{report.check, graph_to_json(g), std::move(fail->witness), fail->message};
}

}  // namespace silscope
