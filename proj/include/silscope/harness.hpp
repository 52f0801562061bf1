#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "silscope/graph.hpp"
#include "silscope/io.hpp"
#include "silscope/sil.hpp"

namespace silscope {

struct EnumSpec {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::vector<std::uint64_t> order_alphabet{2};
  bool dedup_isomorphic = false;
  /// Check ids to run; empty means every standard check.
  std::vector<std::string> checks;
  std::size_t oracle_depth = 4;
  /// The word-oracle check skips graphs above this size.
  std::size_t oracle_max_vertices = 5;
  unsigned workers = 1;
};

/// Throws std::invalid_argument on an empty range, n > 8, or an alphabet
/// entry that is not a prime power.
void validate(const EnumSpec& spec);

/// Graphs come out ordered by (n, edge mask, order labels); vertices are
/// named x0, x1, ... Edge bit i is the i-th pair in (0,1), (0,2), ...,
/// (1,2), ... order.
void for_each_graph(const EnumSpec& spec, const std::function<void(const LabelledGraph&)>& visit);
std::vector<LabelledGraph> enumerate_graphs(const EnumSpec& spec);

/// True iff (mask, labels) is the smallest encoding among all
/// label-preserving relabellings of g.
bool is_canonical(const LabelledGraph& g);

struct CounterexampleReport {
  std::string check;
  Json graph;
  Json witness;
  std::string message;

  Json to_json() const;
  static CounterexampleReport from_json(const Json& doc);
  friend bool operator==(const CounterexampleReport&, const CounterexampleReport&) = default;
};

struct CheckContext {
  const LabelledGraph& graph;
  const SilCensus& census;
  std::size_t oracle_depth = 4;
  std::size_t oracle_max_vertices = 5;
};

struct Failure {
  Json witness;
  std::string message;
};

struct Check {
  std::string id;
  std::function<std::optional<Failure>(const CheckContext&)> run;
};

/// The nine standard checks, in reporting order.
const std::vector<Check>& standard_checks();
/// Ids of standard_checks().
std::vector<std::string> standard_check_ids();

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteResult {
  std::vector<CounterexampleReport> reports;
  std::size_t graphs = 0;
};

/// Runs the selected checks over every enumerated graph. `extra` checks are
/// selectable by id alongside the standard ones. Reports are sorted by
/// (graph, check order), independent of the worker count. Throws
/// UnknownCheck if spec.checks names a check that does not exist.
SuiteResult run_suite(const EnumSpec& spec, std::span<const Check> extra = {});

/// Re-runs the report's check on its graph. Returns the fresh report, or
/// nullopt if the check now passes.
std::optional<CounterexampleReport> replay(const CounterexampleReport& report,
                                           std::span<const Check> extra = {},
                                           std::size_t oracle_depth = 4);

}  // namespace silscope
