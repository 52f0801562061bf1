#include "silscope/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace silscope {

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line > 0 ? message + " at line " + std::to_string(line) + ", column " +
                                        std::to_string(column)
                                  : message),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Json graph_to_json(const LabelledGraph& g) {
  Json doc;
  Json vertices = Json::array();
  for (Vertex v = 0; v < g.size(); ++v) {
    vertices.push_back(Json{{"name", g.name(v)}, {"order", g.order(v)}});
  }
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.name(u), g.name(v)}));
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

LabelledGraph graph_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("graph document needs a \"vertices\" array");
  }
  std::vector<LabelledGraph::VertexSpec> specs;
  for (const auto& item : doc["vertices"]) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string()) {
      throw InputError("every vertex needs a string \"name\"");
    }
    LabelledGraph::VertexSpec spec{item["name"].get<std::string>(), 2};
    if (item.contains("order")) {
      if (!item["order"].is_number_unsigned()) {
        throw GraphError("order of vertex '" + spec.name + "' must be a positive integer");
      }
      spec.order = item["order"].get<std::uint64_t>();
    }
    specs.push_back(std::move(spec));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError("every edge must be a pair of vertex names");
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return LabelledGraph::from_names(std::move(specs), edges);
}

LabelledGraph parse_graph_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    // keep only the reason; the position is appended by InputError
    auto colon = what.find(": ");
    throw InputError("invalid JSON: " + (colon == std::string::npos ? what : what.substr(colon + 2)),
                     line, column);
  }
  return graph_from_json(doc);
}

namespace {

class DotLexer {
 public:
  explicit DotLexer(std::string_view text) : text_(text) {}

  struct Token {
    enum Kind { Id, Punct, End } kind = End;
    std::string text;
    std::size_t offset = 0;
  };

  Token next() {
    skip_space();
    Token t;
    t.offset = pos_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (c == '"') {
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        s += text_[pos_++];
      }
      if (pos_ >= text_.size()) fail("unterminated string", t.offset);
      ++pos_;
      t.kind = Token::Id;
      t.text = std::move(s);
      return t;
    }
    if (c == '-' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '-' || text_[pos_ + 1] == '>')) {
      t.kind = Token::Punct;
      t.text = text_.substr(pos_, 2);
      pos_ += 2;
      return t;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
        static_cast<unsigned char>(c) >= 0x80) {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        unsigned char d = static_cast<unsigned char>(text_[pos_]);
        if (!(std::isalnum(d) || d == '_' || d == '.' || d >= 0x80 ||
              (d == '-' && pos_ == start))) {
          break;
        }
        ++pos_;
      }
      t.kind = Token::Id;
      t.text = text_.substr(start, pos_ - start);
      return t;
    }
    if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      ++pos_;
      return t;
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    auto [line, column] = line_column(text_, offset);
    throw InputError("invalid DOT: " + message, line, column);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (text_.substr(pos_, 2) == "/*") {
        auto end = text_.find("*/", pos_ + 2);
        pos_ = end == std::string_view::npos ? text_.size() : end + 2;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabelledGraph parse_graph_dot(std::string_view text) {
  DotLexer lex(text);
  auto tok = lex.next();
  if (tok.kind == DotLexer::Token::Id && tok.text == "strict") tok = lex.next();
  if (tok.kind != DotLexer::Token::Id || (tok.text != "graph" && tok.text != "digraph")) {
    lex.fail("expected 'graph'", tok.offset);
  }
  tok = lex.next();
  if (tok.kind == DotLexer::Token::Id) tok = lex.next();
  if (tok.text != "{") lex.fail("expected '{'", tok.offset);

  std::vector<LabelledGraph::VertexSpec> specs;
  std::map<std::string, std::size_t> index;
  std::set<std::pair<std::string, std::string>> edge_set;
  std::vector<std::pair<std::string, std::string>> edges;
  auto touch = [&](const std::string& name) {
    if (!index.contains(name)) {
      index.emplace(name, specs.size());
      specs.push_back({name, 2});
    }
  };
  auto read_attrs = [&](DotLexer::Token& t) {
    std::vector<std::tuple<std::string, std::string, std::size_t>> attrs;
    while (t.text == "[") {
      t = lex.next();
      while (t.text != "]") {
        if (t.kind != DotLexer::Token::Id) lex.fail("expected attribute name", t.offset);
        std::string key = t.text;
        t = lex.next();
        if (t.text != "=") lex.fail("expected '='", t.offset);
        t = lex.next();
        if (t.kind != DotLexer::Token::Id) lex.fail("expected attribute value", t.offset);
        attrs.emplace_back(key, t.text, t.offset);
        t = lex.next();
        if (t.text == "," || t.text == ";") t = lex.next();
        if (t.kind == DotLexer::Token::End) lex.fail("unterminated attribute list", t.offset);
      }
      t = lex.next();
    }
    return attrs;
  };

  tok = lex.next();
  while (tok.text != "}") {
    if (tok.kind == DotLexer::Token::End) lex.fail("expected '}'", tok.offset);
    if (tok.text == ";") {
      tok = lex.next();
      continue;
    }
    if (tok.kind != DotLexer::Token::Id) lex.fail("expected a statement", tok.offset);
    if (tok.text == "node" || tok.text == "edge" || tok.text == "graph") {
      tok = lex.next();
      read_attrs(tok);
      continue;
    }
    std::vector<std::string> chain{tok.text};
    tok = lex.next();
    if (tok.text == "=") {  // graph attribute a=b
      tok = lex.next();
      tok = lex.next();
      continue;
    }
    while (tok.text == "--" || tok.text == "->") {
      tok = lex.next();
      if (tok.kind != DotLexer::Token::Id) lex.fail("expected a node after edge operator", tok.offset);
      chain.push_back(tok.text);
      tok = lex.next();
    }
    for (const auto& name : chain) touch(name);
    auto attrs = read_attrs(tok);
    if (chain.size() == 1) {
      for (const auto& [key, value, offset] : attrs) {
        if (key != "order") continue;
        std::uint64_t order = 0;
        try {
          std::size_t used = 0;
          order = std::stoull(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
          lex.fail("order attribute must be a positive integer", offset);
        }
        specs[index[chain[0]]].order = order;
      }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto key = std::minmax(chain[i], chain[i + 1]);
      if (edge_set.insert({key.first, key.second}).second) edges.emplace_back(chain[i], chain[i + 1]);
    }
  }
  if (specs.empty()) throw GraphError("graph must have at least one vertex");
  return LabelledGraph::from_names(std::move(specs), edges);
}

std::string graph_to_dot(const LabelledGraph& g, const SilCensus* census) {
  std::set<Vertex> acting;
  std::set<Vertex> separated;
  if (census) {
    for (const auto& s : census->sils) {
      acting.insert(s.first);
      acting.insert(s.second);
      separated.insert(s.component.begin(), s.component.end());
    }
  }
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << quote(g.name(v)) << " [order=" << g.order(v);
    if (acting.contains(v)) {
      out << ", style=filled, fillcolor=\"#e8743b\"";
    } else if (separated.contains(v)) {
      out << ", style=filled, fillcolor=\"#7fb2e5\"";
    }
    out << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << quote(g.name(u)) << " -- " << quote(g.name(v)) << ";\n";
  out << "}\n";
  return out.str();
}

LabelledGraph parse_graph(std::string_view text, bool dot) {
  return dot ? parse_graph_dot(text) : parse_graph_json(text);
}

LabelledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto ext = path.extension().string();
  bool dot = ext == ".dot" || ext == ".gv";
  if (!dot) {
    auto first = text.find_first_not_of(" \t\r\n");
    dot = first != std::string::npos && text[first] != '{' && text[first] != '[';
  }
  return parse_graph(text, dot);
}

}  // namespace silscope
