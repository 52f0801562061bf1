#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "silscope/graph.hpp"
#include "silscope/io.hpp"
#include "silscope/outer.hpp"
#include "silscope/sil.hpp"

namespace silscope {

inline constexpr std::string_view kVersion = "0.1.0";

/// Comma-separated vertex names; an empty string means input order.
/// Throws GraphError / UnknownVertex.
std::vector<Vertex> parse_ordering(const LabelledGraph& g, std::string_view text);

/// "chi v1 {d,e,f}", "χ_{v1,{d,e,f}}" and similar. Throws GraphError unless
/// the set is a component of Γ∖St(v).
PartialConjugation parse_generator(const LabelledGraph& g, std::string_view text);

Json sil_to_json(const LabelledGraph& g, const Sil& s);
Json stil_to_json(const LabelledGraph& g, const Stil& s);
Json fsil_to_json(const LabelledGraph& g, const Fsil& f);
Json presentation_to_json(const LabelledGraph& g, const CommutationPresentation& p);

/// Human-readable notes attached to a report. Currently flags graphs whose
/// Large verdict rests only on FSILs, where the Coxeter SIL count alone
/// would point at a virtually abelian answer.
std::vector<std::string> report_warnings(const LabelledGraph& g, const SilCensus& census);

/// Full classification report, fields in a fixed order:
/// version, graph, ordering, class, evidence, sils, stils, fsils, p0,
/// presentation, disconnected, warnings.
Json classify_report(const LabelledGraph& g, std::span<const Vertex> ordering);

}  // namespace silscope
