#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "silscope/graph.hpp"
#include "silscope/sil.hpp"

namespace silscope {

using Json = nlohmann::ordered_json;

/// Malformed input text. line/column are 1-based; 0 when unknown.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// {"vertices":[{"name":..,"order":..},..],"edges":[[a,b],..]} in index
/// order, edges sorted. Loading then dumping is byte-stable.
Json graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const Json& doc);
LabelledGraph parse_graph_json(std::string_view text);

/// `graph { a [order=3]; a -- b -- c; }`; `order` defaults to 2.
LabelledGraph parse_graph_dot(std::string_view text);

/// DOT, with SIL acting vertices and separated components coloured when a
/// census is given.
std::string graph_to_dot(const LabelledGraph& g, const SilCensus* census = nullptr);

/// JSON unless the file ends in .dot/.gv or its first token is a DOT keyword.
LabelledGraph parse_graph(std::string_view text, bool dot);
LabelledGraph load_graph(const std::filesystem::path& path);

}  // namespace silscope
