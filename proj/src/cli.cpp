#include "silscope/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "silscope/harness.hpp"
#include "silscope/io.hpp"
#include "silscope/outer.hpp"
#include "silscope/report.hpp"
#include "silscope/word.hpp"

namespace silscope {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::size_t env_oracle_depth(std::size_t fallback) {
  const char* raw = std::getenv("SILSCOPE_ORACLE_DEPTH");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used == std::string(raw).size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("SILSCOPE_ORACLE_DEPTH must be a non-negative integer, got '") + raw +
                   "'");
}

struct Options {
  std::string path;
  std::string ordering;
  std::string format = "json";
  std::string word;
  std::string generator;

  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::string orders = "2";
  bool dedup = false;
  std::string checks;
  std::size_t oracle_depth = 4;
  std::size_t oracle_max_vertices = 5;
  unsigned workers = 0;
};

void line(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_classify(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  if (o.format == "dot") {
    const auto census = SilCensus::of(g);
    out << graph_to_dot(g, &census);
    return kExitOk;
  }
  line(out, classify_report(g, parse_ordering(g, o.ordering)));
  return kExitOk;
}

int cmd_sils(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto census = SilCensus::of(g);
  if (o.format == "dot") {
    out << graph_to_dot(g, &census);
    return kExitOk;
  }
  for (const auto& s : census.sils) line(out, Json{{"sil", sil_to_json(g, s)}});
  for (const auto& s : census.stils) line(out, Json{{"stil", stil_to_json(g, s)}});
  for (const auto& f : census.fsils) line(out, Json{{"fsil", fsil_to_json(g, f)}});
  return kExitOk;
}

int cmd_gens(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto p0 = build_p0(g, parse_ordering(g, o.ordering));
  for (const auto& pc : p0.gens) {
    Json comp = Json::array();
    for (Vertex v : pc.component) comp.push_back(g.name(v));
    line(out, Json{{"generator", label(g, pc)},
                   {"acting", g.name(pc.acting)},
                   {"component", comp},
                   {"order", g.order(pc.acting)}});
  }
  return kExitOk;
}

int cmd_presentation(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto p = presentation(g, parse_ordering(g, o.ordering));
  line(out, presentation_to_json(g, p));
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto w = reduce(g, parse_word(g, o.word));
  line(out, Json{{"input", o.word}, {"normal_form", format_word(g, w)}, {"syllables", w.size()}});
  return kExitOk;
}

int cmd_act(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.path);
  const auto pc = parse_generator(g, o.generator);
  const auto image = apply(g, pc, parse_word(g, o.word));
  line(out, Json{{"generator", label(g, pc)}, {"input", o.word}, {"image", format_word(g, image)}});
  return kExitOk;
}

int cmd_verify(const Options& o, bool depth_given, std::ostream& out, std::ostream& err) {
  EnumSpec spec;
  spec.min_vertices = o.min_vertices;
  spec.max_vertices = o.max_vertices;
  spec.order_alphabet.clear();
  for (const auto& item : split_list(o.orders)) {
    try {
      std::size_t used = 0;
      spec.order_alphabet.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--orders expects comma-separated integers, got '" + item + "'");
    }
  }
  spec.dedup_isomorphic = o.dedup;
  spec.checks = split_list(o.checks);
  spec.oracle_depth = depth_given ? o.oracle_depth : env_oracle_depth(o.oracle_depth);
  spec.oracle_max_vertices = o.oracle_max_vertices;
  spec.workers = o.workers > 0 ? o.workers : std::max(1U, std::thread::hardware_concurrency());

  const auto start = std::chrono::steady_clock::now();
  const auto result = run_suite(spec);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;

  for (const auto& r : result.reports) line(out, r.to_json());
  Json checks = Json::array();
  for (const auto& id : spec.checks.empty() ? standard_check_ids() : spec.checks) checks.push_back(id);
  line(out, Json{{"summary", Json{{"graphs", result.graphs},
                                  {"checks", checks},
                                  {"oracle_depth", spec.oracle_depth},
                                  {"counterexamples", result.reports.size()}}}});
  err << "verified " << result.graphs << " graphs in " << took.count() << " s with " << spec.workers
      << " worker(s)\n";
  return result.reports.empty() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SIL census and Out(W_Γ) classification for graph products of primary cyclic groups",
               "silscope"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options o;
  bool depth_given = false;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", o.path, "graph file (JSON, or DOT with an `order` node attribute)")
        ->required();
  };
  auto add_ordering = [&](CLI::App* sub) {
    sub->add_option("--ordering", o.ordering, "vertex numbering, comma-separated names");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "full classification report");
  add_graph(classify_cmd);
  add_ordering(classify_cmd);
  add_format(classify_cmd);

  auto* sils_cmd = app.add_subcommand("sils", "list SILs, STILs and FSILs");
  add_graph(sils_cmd);
  add_format(sils_cmd);

  auto* gens_cmd = app.add_subcommand("gens", "list the generating set P0");
  add_graph(gens_cmd);
  add_ordering(gens_cmd);

  auto* pres_cmd = app.add_subcommand("presentation", "commutation data of P0 and its summary");
  add_graph(pres_cmd);
  add_ordering(pres_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a word");
  add_graph(reduce_cmd);
  reduce_cmd->add_option("word", o.word, "word such as \"v1 d^2 v1\"")->required();

  auto* act_cmd = app.add_subcommand("act", "apply a partial conjugation to a word");
  add_graph(act_cmd);
  act_cmd->add_option("generator", o.generator, "e.g. \"chi v1 {d,e,f}\"")->required();
  act_cmd->add_option("word", o.word, "word such as \"d\"")->required();

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive check suite over small graphs");
  verify_cmd->add_option("--min-vertices", o.min_vertices, "smallest graph size")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--max-vertices", o.max_vertices, "largest graph size")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--orders", o.orders, "vertex order alphabet, e.g. 2,3");
  verify_cmd->add_flag("--dedup", o.dedup, "one graph per label-preserving isomorphism class");
  verify_cmd->add_option("--checks", o.checks, "comma-separated check ids (default: all)");
  auto* depth_opt = verify_cmd->add_option("--oracle-depth", o.oracle_depth,
                                           "word search depth (env SILSCOPE_ORACLE_DEPTH)");
  verify_cmd->add_option("--oracle-max-vertices", o.oracle_max_vertices,
                         "largest graph the word oracle runs on");
  verify_cmd->add_option("--workers", o.workers, "threads (default: hardware concurrency)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  depth_given = depth_opt->count() > 0;

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (sils_cmd->parsed()) return cmd_sils(o, out);
    if (gens_cmd->parsed()) return cmd_gens(o, out);
    if (pres_cmd->parsed()) return cmd_presentation(o, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, out);
    if (act_cmd->parsed()) return cmd_act(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, depth_given, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace silscope
