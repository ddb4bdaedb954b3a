// Command-line front end. Exit status: 0 on success, 1 on error, 2 when a
// search finds a matching poset.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "posetlogic/posetlogic.hpp"

namespace pl = posetlogic;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_text_report(const pl::AnalysisReport& r) {
  const pl::Poset& p = r.poset;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto quad = [&](const std::optional<pl::NWitness>& w) {
    if (!w) return std::string("-");
    return "(" + p.label(w->a()) + ", " + p.label(w->b()) + ", " + p.label(w->c()) + ", " +
           p.label(w->d()) + ")";
  };
  const auto& v = r.verdicts;
  std::cout << "elements:           " << p.size() << "\n"
            << "N-free:             " << yes(v.n_free) << "  " << quad(r.n) << "\n"
            << "covering-N-free:    " << yes(v.covering_n_free) << "  " << quad(r.covering_n) << "\n"
            << "weak-N-free:        " << yes(v.weak_n_free) << "  " << quad(r.weak_n) << "\n"
            << "chain-antichain:    " << yes(v.chain_antichain) << "\n"
            << "Dacey:              " << yes(v.dacey);
  if (r.dacey_witness) {
    std::cout << "  X=" << pl::to_string(r.dacey_witness->first, &p.labels())
              << " B=" << pl::to_string(r.dacey_witness->second, &p.labels());
  }
  std::cout << "\ncompatible:         " << yes(v.compatible);
  if (r.compatible_witness) {
    std::cout << "  (" << p.label(r.compatible_witness->first) << ", "
              << p.label(r.compatible_witness->second) << ")";
  }
  std::cout << "\northomodular logic: " << yes(v.orthomodular) << "\n"
            << "Boolean logic:      " << yes(v.boolean) << "\n"
            << "strict-comp. Dacey: " << yes(r.strict_dacey) << "\n"
            << "logic size:         " << r.lattice_size << "\n";
  for (const auto& msg : v.violations) std::cout << "VIOLATION: " << msg << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide N-freeness, Dacey and compatibility properties of finite posets"};
  app.require_subcommand(1);

  pl::Limits limits;
  app.add_option("--max-elements", limits.max_poset_elements, "Largest accepted poset")
      ->capture_default_str();
  app.add_option("--max-lattice", limits.max_lattice, "Largest logic that will be materialized")
      ->capture_default_str();
  app.add_option("--max-closed-elements", limits.max_closed_elements,
                 "Largest orthoset for closed-set enumeration")
      ->capture_default_str();
  app.add_option("--max-family", limits.max_family, "Largest closed-set family")
      ->capture_default_str();

  std::string file;
  std::string format = "json";
  bool no_timing = false;
  auto* analyze = app.add_subcommand("analyze", "Evaluate every predicate on a poset file");
  analyze->add_option("file", file, "Poset file, or - for stdin")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  analyze->add_flag("--no-timing", no_timing, "Omit timing_ms for reproducible output");

  std::string orthoset_kind = "incomparability";
  auto* logic = app.add_subcommand("logic", "Print the logic of a poset's orthoset");
  logic->add_option("file", file, "Poset file, or - for stdin")->required();
  logic->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  logic->add_option("--orthoset", orthoset_kind)
      ->check(CLI::IsMember({"incomparability", "strict"}))
      ->capture_default_str();

  auto* hasse = app.add_subcommand("hasse", "Print the Hasse diagram of a poset file as DOT");
  hasse->add_option("file", file, "Poset file, or - for stdin")->required();

  int max_n = 4;
  int workers = 1;
  auto* census = app.add_subcommand("census", "Check every labeled poset up to a size");
  census->add_option("--max-n", max_n)->check(CLI::Range(0, pl::kMaxEnumerationN))->capture_default_str();
  census->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();

  std::string predicate;
  auto* search = app.add_subcommand("search", "Find the smallest poset satisfying a predicate");
  search->add_option("--predicate", predicate)
      ->required()
      ->check(CLI::IsMember({"nfree_but_strict_not_dacey", "strict_dacey"}));
  search->add_option("--max-n", max_n)->check(CLI::Range(0, pl::kMaxEnumerationN))->capture_default_str();

  std::string kind;
  int n = 4;
  std::uint64_t seed = 0;
  double edge_prob = 0.5;
  auto* generate = app.add_subcommand("generate", "Write a poset file");
  generate->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"chain", "antichain", "n", "diamond22", "random"}));
  generate->add_option("--n", n)->check(CLI::Range(0, pl::kMaxElements))->capture_default_str();
  generate->add_option("--seed", seed)->capture_default_str();
  generate->add_option("--edge-prob", edge_prob)->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      auto report = pl::analyze(pl::parse_poset_file(read_input(file), limits), limits);
      if (no_timing) report.elapsed_ms.reset();
      if (format == "json") {
        std::cout << pl::emit_json_report(report);
      } else {
        print_text_report(report);
      }
      return report.verdicts.violations.empty() ? 0 : 1;
    }
    if (*logic) {
      const pl::Poset p = pl::parse_poset_file(read_input(file), limits);
      const pl::Orthoset o = orthoset_kind == "strict" ? pl::strict_comparability_orthoset(p)
                                                       : pl::incomparability_orthoset(p);
      std::vector<std::string> labels;
      for (int x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
      const pl::Logic l = pl::build_logic(o, limits);
      if (format == "dot") {
        std::cout << pl::emit_dot_lattice(l, labels);
      } else {
        std::cout << pl::logic_to_json(l, labels).dump(2) << "\n";
      }
      return 0;
    }
    if (*hasse) {
      std::cout << pl::emit_dot_hasse(pl::parse_poset_file(read_input(file), limits));
      return 0;
    }
    if (*census) {
      limits.max_census_n = max_n;
      const auto summaries = pl::census_run(max_n, workers, limits);
      std::cout << pl::census_to_json(summaries).dump(2) << "\n";
      for (const auto& s : summaries) {
        if (!s.violations.empty()) return 1;
      }
      return 0;
    }
    if (*search) {
      limits.max_census_n = max_n;
      const auto found = pl::search_counterexample(pl::parse_search_predicate(predicate), max_n, limits);
      if (!found) {
        std::cerr << "no poset with at most " << max_n << " elements satisfies " << predicate << "\n";
        return 0;
      }
      std::cout << pl::serialize_poset_file(*found);
      return 2;
    }
    if (*generate) {
      pl::Poset p;
      if (kind == "chain") p = pl::chain(n);
      else if (kind == "antichain") p = pl::antichain(n);
      else if (kind == "n") p = pl::n_poset();
      else if (kind == "diamond22") p = pl::diamond22();
      else p = pl::random_poset(n, seed, edge_prob);
      std::cout << pl::serialize_poset_file(p);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
