#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetlogic/census.hpp"
#include "posetlogic/logic.hpp"
#include "posetlogic/poset.hpp"
#include "posetlogic/structure.hpp"

namespace posetlogic {

// Poset file grammar, one directive per line:
//
//   element <name>     declare an element; names are unique
//   cover <x> <y>      x < y (need not be a cover; the order is normalized)
//   # ...              comment, also allowed after a directive
//
// Blank lines are ignored.

/// Throws ParseError (kSyntax or kUnknownElement, with the 1-based line),
/// CycleError, or SizeLimitError.
Poset parse_poset_file(std::string_view text, const Limits& limits = {});
/// Inverse of parse_poset_file: declares elements in index order, then lists
/// the cover relation. Elements without labels are named by index.
std::string serialize_poset_file(const Poset& p);

/// Hasse diagram as a Graphviz digraph drawn bottom-up; one edge x -> y for
/// each cover x < y.
std::string emit_dot_hasse(const Poset& p);
/// Cover diagram of the logic. Each node carries its closed set and, as an
/// external label, its orthocomplement. `labels` names the orthoset elements.
std::string emit_dot_lattice(const Logic& l, const std::vector<std::string>& labels = {});

/// Everything `analyze` learns about one poset.
struct AnalysisReport {
  Poset poset;
  TheoremCheck verdicts;
  std::optional<NWitness> n;
  std::optional<NWitness> covering_n;
  std::optional<NWitness> weak_n;
  /// Failing (X, B) in the incomparability orthoset.
  std::optional<std::pair<SubsetMask, SubsetMask>> dacey_witness;
  std::optional<std::pair<int, int>> compatible_witness;
  std::optional<std::pair<SubsetMask, SubsetMask>> orthomodular_witness;
  std::optional<std::array<SubsetMask, 3>> boolean_witness;
  bool strict_dacey = false;
  std::optional<std::pair<SubsetMask, SubsetMask>> strict_dacey_witness;
  std::size_t lattice_size = 0;
  /// Wall-clock time of the analysis; omitted from JSON when absent.
  std::optional<double> elapsed_ms;
};

AnalysisReport analyze(const Poset& p, const Limits& limits = {});

/// Canonical JSON: sorted keys, arrays in element-index or mask order.
/// Elements are referred to by label.
nlohmann::json report_to_json(const AnalysisReport& report);
std::string emit_json_report(const AnalysisReport& report);

/// Re-checks every witness in a JSON report against `p` from first
/// principles. Returns an empty string when all witnesses hold, otherwise a
/// description of the first one that does not.
std::string revalidate_report(const nlohmann::json& report, const Poset& p);

/// JSON form of census summaries.
nlohmann::json census_to_json(const std::vector<CensusSummary>& summaries);

/// JSON form of a logic: elements as label lists plus order, meet, join and
/// orthocomplement tables.
nlohmann::json logic_to_json(const Logic& l, const std::vector<std::string>& labels = {});

}  // namespace posetlogic
