#include "silscope/report.hpp"

#include <algorithm>
#include <numeric>

namespace silscope {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Json names(const LabelledGraph& g, const VertexSet& set) {
  Json out = Json::array();
  for (Vertex v : set) out.push_back(g.name(v));
  return out;
}

Json triple_names(const LabelledGraph& g, const std::array<Vertex, 3>& t) {
  return Json::array({g.name(t[0]), g.name(t[1]), g.name(t[2])});
}

std::string join_names(const LabelledGraph& g, std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ",";
    out += g.name(v);
  }
  return out;
}

}  // namespace

std::vector<Vertex> parse_ordering(const LabelledGraph& g, std::string_view text) {
  if (trim(text).empty()) {
    std::vector<Vertex> ordering(g.size());
    std::iota(ordering.begin(), ordering.end(), Vertex{0});
    return ordering;
  }
  std::vector<Vertex> ordering;
  for (const auto& name : split_names(text)) ordering.push_back(g.index_of(name));
  std::vector<Vertex> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != g.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("ordering must list every vertex exactly once");
  }
  return ordering;
}

PartialConjugation parse_generator(const LabelledGraph& g, std::string_view text) {
  std::string s = trim(text);
  for (std::string_view prefix : {"chi", "χ"}) {
    if (s.starts_with(prefix) && s.size() > prefix.size() &&
        (s[prefix.size()] == ' ' || s[prefix.size()] == '_' || s[prefix.size()] == '(')) {
      s = trim(std::string_view(s).substr(prefix.size() + 1));
      break;
    }
  }
  // Optional outer braces/parens around the whole thing: χ_{v,{a,b}}.
  if ((s.starts_with("{") && s.ends_with("}") && s.find('{', 1) != std::string::npos) ||
      (s.starts_with("(") && s.ends_with(")"))) {
    s = trim(std::string_view(s).substr(1, s.size() - 2));
  }
  const auto open = s.find('{');
  const auto close = s.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw GraphError("generator must look like 'chi v {a,b,...}'");
  }
  auto acting_names = split_names(std::string_view(s).substr(0, open));
  if (acting_names.size() != 1) throw GraphError("generator must name exactly one acting vertex");
  if (!trim(std::string_view(s).substr(close + 1)).empty()) {
    throw GraphError("unexpected text after generator component");
  }
  std::vector<Vertex> members;
  for (const auto& name : split_names(std::string_view(s).substr(open + 1, close - open - 1))) {
    members.push_back(g.index_of(name));
  }
  PartialConjugation pc{g.index_of(acting_names.front()), VertexSet(std::move(members))};
  validate(g, pc);
  return pc;
}

Json sil_to_json(const LabelledGraph& g, const Sil& s) {
  return Json{{"pair", Json::array({g.name(s.first), g.name(s.second)})},
              {"component", names(g, s.component)},
              {"coxeter", s.coxeter}};
}

Json stil_to_json(const LabelledGraph& g, const Stil& s) {
  return Json{{"triple", triple_names(g, s.triple)}, {"component", names(g, s.component)}};
}

Json fsil_to_json(const LabelledGraph& g, const Fsil& f) {
  Json witnesses = Json::array();
  for (const auto& s : f.witnesses) witnesses.push_back(sil_to_json(g, s));
  return Json{{"triple", triple_names(g, f.triple)}, {"witnesses", witnesses}};
}

Json presentation_to_json(const LabelledGraph& g, const CommutationPresentation& p) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    gens.push_back(Json{{"label", label(g, p.generators[i])}, {"order", p.orders[i]}});
  }
  Json edges = Json::array();
  for (auto [i, j] : p.commuting_edges) edges.push_back(Json::array({i, j}));
  return Json{{"generators", gens},
              {"commuting_edges", edges},
              {"non_commuting_pairs", p.non_commuting_pairs()},
              {"summary", p.summary}};
}

std::vector<std::string> report_warnings(const LabelledGraph& g, const SilCensus& census) {
  std::vector<std::string> out;
  if (!census.fsils.empty() && census.stils.empty() && census.non_coxeter_count() == 0 &&
      census.sils.size() >= 2) {
    std::string triples;
    for (const auto& f : census.fsils) {
      if (!triples.empty()) triples += ", ";
      triples += "{" + join_names(g, f.triple) + "}";
    }
    out.push_back("Large is forced only by FSIL " + triples + "; the " +
                  std::to_string(census.sils.size()) +
                  " Coxeter SILs alone would read as virtually abelian but not virtually ℤ");
  }
  return out;
}

Json classify_report(const LabelledGraph& g, std::span<const Vertex> ordering) {
  const SilCensus census = SilCensus::of(g);
  const OutClass cls = classify(census);
  const GeneratorSetP0 p0 = build_p0(g, ordering);
  const CommutationPresentation pres = presentation(g, census.sils, p0);

  Json report;
  report["version"] = kVersion;
  report["graph"] = graph_to_json(g);
  report["ordering"] = Json::array();
  for (Vertex v : ordering) report["ordering"].push_back(g.name(v));
  report["class"] = to_string(cls.tag);
  report["evidence"] = Json{{"coxeter_sils", cls.evidence.coxeter_sils},
                            {"non_coxeter_sils", cls.evidence.non_coxeter_sils},
                            {"stils", cls.evidence.stils},
                            {"fsils", cls.evidence.fsils}};
  report["sils"] = Json::array();
  for (const auto& s : census.sils) report["sils"].push_back(sil_to_json(g, s));
  report["stils"] = Json::array();
  for (const auto& s : census.stils) report["stils"].push_back(stil_to_json(g, s));
  report["fsils"] = Json::array();
  for (const auto& f : census.fsils) report["fsils"].push_back(fsil_to_json(g, f));
  report["p0"] = Json::array();
  for (const auto& pc : p0.gens) report["p0"].push_back(label(g, pc));
  report["presentation"] = presentation_to_json(g, pres);
  if (auto d = disconnected_structure(g, census)) {
    Json quotients = Json::array();
    for (const auto& q : d->quotients) quotients.push_back(names(g, q));
    report["disconnected"] = Json{{"components", d->component_count},
                                  {"verdict", to_string(d->verdict)},
                                  {"quotients", quotients},
                                  {"summary", d->summary}};
  } else {
    report["disconnected"] = nullptr;
  }
  report["warnings"] = report_warnings(g, census);
  return report;
}

}  // namespace silscope
