#include "posetlogic/io.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "posetlogic/bridges.hpp"

namespace posetlogic {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> names_of(SubsetMask s, const Poset& p) {
  std::vector<std::string> out;
  for (int x : s) out.push_back(p.label(x));
  return out;
}

nlohmann::json quad_json(const std::optional<NWitness>& w, const Poset& p) {
  if (!w) return nullptr;
  return {{"a", p.label(w->a())}, {"b", p.label(w->b())}, {"c", p.label(w->c())},
          {"d", p.label(w->d())}};
}

nlohmann::json pair_json(const std::optional<std::pair<SubsetMask, SubsetMask>>& w,
                         const Poset& p, const char* first, const char* second) {
  if (!w) return nullptr;
  return {{first, names_of(w->first, p)}, {second, names_of(w->second, p)}};
}

}  // namespace

Poset parse_poset_file(std::string_view text, const Limits& limits) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> relations;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0] == "element") {
      if (words.size() != 2) {
        throw ParseError(ParseError::Kind::kSyntax, line_no, "expected 'element <name>'");
      }
      if (!index.emplace(words[1], static_cast<int>(labels.size())).second) {
        throw ParseError(ParseError::Kind::kSyntax, line_no,
                         "element '" + words[1] + "' declared twice");
      }
      labels.push_back(words[1]);
    } else if (words[0] == "cover") {
      if (words.size() != 3) {
        throw ParseError(ParseError::Kind::kSyntax, line_no, "expected 'cover <x> <y>'");
      }
      auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) {
          throw ParseError(ParseError::Kind::kUnknownElement, line_no,
                           "unknown element '" + name + "'");
        }
        return it->second;
      };
      relations.emplace_back(lookup(words[1]), lookup(words[2]));
    } else {
      throw ParseError(ParseError::Kind::kSyntax, line_no, "unknown directive '" + words[0] + "'");
    }
  }
  return Poset::from_covers(static_cast<int>(labels.size()), relations, limits)
      .with_labels(std::move(labels));
}

std::string serialize_poset_file(const Poset& p) {
  std::string out;
  for (int x = 0; x < p.size(); ++x) out += "element " + p.label(x) + "\n";
  for (auto [x, y] : p.cover_pairs()) out += "cover " + p.label(x) + " " + p.label(y) + "\n";
  return out;
}

std::string emit_dot_hasse(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << quote(p.label(x)) << "];\n";
  for (auto [x, y] : p.cover_pairs()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot_lattice(const Logic& l, const std::vector<std::string>& labels) {
  const auto* names = labels.empty() ? nullptr : &labels;
  std::ostringstream out;
  out << "digraph logic {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Logic::Index i = 0; i < l.size(); ++i) {
    out << "  n" << i << " [label=" << quote(to_string(l.element(i), names))
        << ", xlabel=" << quote("perp " + to_string(l.element(l.ocompl(i)), names)) << "];\n";
  }
  for (auto [i, j] : l.cover_pairs()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

AnalysisReport analyze(const Poset& p, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.poset = p;
  r.verdicts = verify_theorems(p, limits);
  r.n = find_n(p);
  r.covering_n = find_covering_n(p);
  r.weak_n = find_weak_n(p);

  const Orthoset o = incomparability_orthoset(p);
  r.dacey_witness = is_dacey(o, limits).witness;
  r.compatible_witness = is_compatible(o, limits).witness;
  const Logic logic = build_logic(o, limits);
  r.lattice_size = logic.size();
  if (auto om = is_orthomodular(logic).witness) {
    r.orthomodular_witness = std::make_pair(logic.element(om->first), logic.element(om->second));
  }
  if (auto b = is_boolean(logic).witness) {
    r.boolean_witness = std::array{logic.element((*b)[0]), logic.element((*b)[1]),
                                   logic.element((*b)[2])};
  }
  const DaceyResult strict = is_dacey(strict_comparability_orthoset(p), limits);
  r.strict_dacey = strict.dacey;
  r.strict_dacey_witness = strict.witness;
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json report_to_json(const AnalysisReport& r) {
  const Poset& p = r.poset;
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.cover_pairs()) covers.push_back({p.label(x), p.label(y)});
  std::vector<std::string> elements;
  for (int x = 0; x < p.size(); ++x) elements.push_back(p.label(x));

  const TheoremCheck& v = r.verdicts;
  nlohmann::json doc = {
      {"version", 1},
      {"input", {{"n", p.size()}, {"elements", elements}, {"covers", covers}}},
      {"predicates",
       {{"n_free", v.n_free},
        {"covering_n_free", v.covering_n_free},
        {"weak_n_free", v.weak_n_free},
        {"chain_antichain", v.chain_antichain},
        {"dacey", v.dacey},
        {"compatible", v.compatible},
        {"orthomodular", v.orthomodular},
        {"boolean", v.boolean},
        {"strict_comparability_dacey", r.strict_dacey}}},
      {"lattice_size", r.lattice_size},
      {"violations", v.violations},
  };
  nlohmann::json& w = doc["witnesses"];
  w["n"] = quad_json(r.n, p);
  w["covering_n"] = quad_json(r.covering_n, p);
  w["weak_n"] = quad_json(r.weak_n, p);
  w["dacey"] = pair_json(r.dacey_witness, p, "X", "B");
  w["strict_comparability_dacey"] = pair_json(r.strict_dacey_witness, p, "X", "B");
  w["orthomodular"] = pair_json(r.orthomodular_witness, p, "x", "y");
  w["compatible"] = r.compatible_witness
                        ? nlohmann::json{p.label(r.compatible_witness->first),
                                         p.label(r.compatible_witness->second)}
                        : nlohmann::json(nullptr);
  if (r.boolean_witness) {
    const auto& t = *r.boolean_witness;
    w["boolean"] = {{"x", names_of(t[0], p)}, {"y", names_of(t[1], p)}, {"z", names_of(t[2], p)}};
  } else {
    w["boolean"] = nullptr;
  }
  if (r.elapsed_ms) doc["timing_ms"] = *r.elapsed_ms;
  return doc;
}

std::string emit_json_report(const AnalysisReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string revalidate_report(const nlohmann::json& report, const Poset& p) {
  std::map<std::string, int> index;
  for (int x = 0; x < p.size(); ++x) index[p.label(x)] = x;
  auto element = [&](const nlohmann::json& name) -> int {
    auto it = index.find(name.get<std::string>());
    if (it == index.end()) throw ParseError(ParseError::Kind::kUnknownElement, 0, name.dump());
    return it->second;
  };
  auto subset = [&](const nlohmann::json& names) {
    SubsetMask s;
    for (const auto& name : names) s = s.with(element(name));
    return s;
  };

  try {
    const auto& w = report.at("witnesses");
    const auto& pred = report.at("predicates");
    const std::pair<const char*, NWitness::Kind> quads[] = {
        {"n", NWitness::Kind::kN},
        {"covering_n", NWitness::Kind::kCoveringN},
        {"weak_n", NWitness::Kind::kWeakN}};
    for (auto [key, kind] : quads) {
      const auto& q = w.at(key);
      if (q.is_null()) continue;
      const std::array quad{element(q.at("a")), element(q.at("b")), element(q.at("c")),
                            element(q.at("d"))};
      if (!forms(p, kind, quad)) return std::string(key) + " witness does not form a " + to_string(kind);
    }

    auto check_dacey = [&](const nlohmann::json& wd, const Orthoset& o) -> bool {
      const SubsetMask x = subset(wd.at("X"));
      const SubsetMask b = subset(wd.at("B"));
      if (!is_orthoclosed(o, x) || !b.subset_of(x)) return false;
      for (int e : b) {
        if (!(b - SubsetMask::singleton(e)).subset_of(o.neighbours(e))) return false;
      }
      for (int e : x - b) {
        if (b.subset_of(o.neighbours(e))) return false;  // B not maximal in X
      }
      return !perp(o, b).subset_of(perp(o, x));
    };
    const Orthoset inc = incomparability_orthoset(p);
    if (!w.at("dacey").is_null() && !check_dacey(w.at("dacey"), inc)) return "dacey witness does not fail";
    if (!w.at("strict_comparability_dacey").is_null() &&
        !check_dacey(w.at("strict_comparability_dacey"), strict_comparability_orthoset(p))) {
      return "strict comparability dacey witness does not fail";
    }

    if (const auto& wc = w.at("compatible"); !wc.is_null()) {
      const int x = element(wc.at(0));
      const int y = element(wc.at(1));
      if (inc.orthogonal(x, y)) return "compatible witness pair is orthogonal";
      const SubsetMask needed = inc.neighbours(x) | inc.neighbours(y);
      for (int z = 0; z < inc.size(); ++z) {
        if (needed.subset_of(inc.neighbours(z))) return "compatible witness pair has a z";
      }
    }
    if (const auto& wo = w.at("orthomodular"); !wo.is_null()) {
      const SubsetMask x = subset(wo.at("x"));
      const SubsetMask y = subset(wo.at("y"));
      if (!is_orthoclosed(inc, x) || !is_orthoclosed(inc, y) || !x.subset_of(y)) {
        return "orthomodular witness is not a comparable pair of closed sets";
      }
      if (double_perp(inc, x | (y & perp(inc, x))) == y) return "orthomodular witness satisfies the law";
    }
    if (const auto& wb = w.at("boolean"); !wb.is_null()) {
      const SubsetMask x = subset(wb.at("x"));
      const SubsetMask y = subset(wb.at("y"));
      const SubsetMask z = subset(wb.at("z"));
      for (SubsetMask s : {x, y, z}) {
        if (!is_orthoclosed(inc, s)) return "boolean witness contains a non-closed set";
      }
      if ((x & double_perp(inc, y | z)) == double_perp(inc, (x & y) | (x & z))) {
        return "boolean witness satisfies distributivity";
      }
    }

    const std::pair<const char*, const char*> presence[] = {
        {"n_free", "n"}, {"covering_n_free", "covering_n"}, {"weak_n_free", "weak_n"},
        {"dacey", "dacey"}, {"compatible", "compatible"}, {"orthomodular", "orthomodular"},
        {"boolean", "boolean"}, {"strict_comparability_dacey", "strict_comparability_dacey"}};
    for (auto [verdict, witness] : presence) {
      if (pred.at(verdict).get<bool>() != w.at(witness).is_null()) {
        return std::string("verdict ") + verdict + " inconsistent with its witness";
      }
    }
  } catch (const std::exception& e) {
    return std::string("malformed report: ") + e.what();
  }
  return {};
}

nlohmann::json census_to_json(const std::vector<CensusSummary>& summaries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : summaries) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : s.violations) {
      violations.push_back({{"n", v.n}, {"shard", v.shard}, {"index", v.index},
                            {"covers", v.covers}, {"message", v.message}});
    }
    out.push_back({{"n", s.n},
                   {"total_posets", s.total_posets},
                   {"counts",
                    {{"n_free", s.n_free},
                     {"covering_n_free", s.covering_n_free},
                     {"weak_n_free", s.weak_n_free},
                     {"chain_antichain", s.chain_antichain},
                     {"dacey", s.dacey},
                     {"compatible", s.compatible},
                     {"orthomodular", s.orthomodular},
                     {"boolean", s.boolean}}},
                   {"violations", violations}});
  }
  return out;
}

nlohmann::json logic_to_json(const Logic& l, const std::vector<std::string>& labels) {
  auto names = [&](SubsetMask s) {
    std::vector<std::string> out;
    for (int x : s) out.push_back(x < static_cast<int>(labels.size()) ? labels[x] : std::to_string(x));
    return out;
  };
  nlohmann::json elements = nlohmann::json::array();
  nlohmann::json ocompl = nlohmann::json::array();
  nlohmann::json meet = nlohmann::json::array();
  nlohmann::json join = nlohmann::json::array();
  nlohmann::json covers = nlohmann::json::array();
  for (Logic::Index i = 0; i < l.size(); ++i) {
    elements.push_back(names(l.element(i)));
    ocompl.push_back(l.ocompl(i));
    std::vector<Logic::Index> meet_row;
    std::vector<Logic::Index> join_row;
    for (Logic::Index j = 0; j < l.size(); ++j) {
      meet_row.push_back(l.meet(i, j));
      join_row.push_back(l.join(i, j));
    }
    meet.push_back(meet_row);
    join.push_back(join_row);
  }
  for (auto [i, j] : l.cover_pairs()) covers.push_back({i, j});
  return {{"size", l.size()}, {"elements", elements}, {"ocompl", ocompl},
          {"meet", meet},     {"join", join},         {"covers", covers}};
}

}  // namespace posetlogic
