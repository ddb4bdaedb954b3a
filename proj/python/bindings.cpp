#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetlogic/posetlogic.hpp"

namespace py = pybind11;
namespace pl = posetlogic;

namespace {

// Subsets cross the boundary as sorted lists of element indices.
std::vector<int> to_list(pl::SubsetMask s) { return s.elements(); }

pl::SubsetMask from_list(const std::vector<int>& xs, int n) {
  pl::SubsetMask s;
  for (int x : xs) {
    if (x < 0 || x >= n) throw pl::IndexError("element " + std::to_string(x) + " out of range");
    s = s.with(x);
  }
  return s;
}

std::vector<std::vector<int>> to_lists(const std::vector<pl::SubsetMask>& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (auto s : family) out.push_back(to_list(s));
  return out;
}

py::object quad(const std::optional<pl::NWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->a(), w->b(), w->c(), w->d());
}

py::dict theorem_dict(const pl::TheoremCheck& c) {
  py::dict d;
  d["n_free"] = c.n_free;
  d["covering_n_free"] = c.covering_n_free;
  d["weak_n_free"] = c.weak_n_free;
  d["chain_antichain"] = c.chain_antichain;
  d["dacey"] = c.dacey;
  d["compatible"] = c.compatible;
  d["orthomodular"] = c.orthomodular;
  d["boolean"] = c.boolean;
  d["violations"] = c.violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "N-free posets, orthosets and their logics";

  auto base = py::register_exception<pl::Error>(m, "Error");
  py::register_exception<pl::CycleError>(m, "CycleError", base);
  py::register_exception<pl::IndexError>(m, "IndexError", base);
  py::register_exception<pl::SizeLimitError>(m, "SizeLimitError", base);
  py::register_exception<pl::NotOrthoclosedError>(m, "NotOrthoclosedError", base);
  py::register_exception<pl::ParseError>(m, "ParseError", base);

  py::class_<pl::Poset>(m, "Poset")
      .def_static(
          "from_covers",
          [](int n, const std::vector<std::pair<int, int>>& rel) { return pl::Poset::from_covers(n, rel); },
          py::arg("n"), py::arg("covers"))
      .def_property_readonly("size", &pl::Poset::size)
      .def("__len__", &pl::Poset::size)
      .def("lt", &pl::Poset::lt)
      .def("leq", &pl::Poset::leq)
      .def("incomparable", &pl::Poset::incomparable)
      .def("covers", &pl::Poset::covers)
      .def("cover_pairs", &pl::Poset::cover_pairs)
      .def("label", &pl::Poset::label)
      .def_property_readonly("labels", &pl::Poset::labels)
      .def("with_labels", &pl::Poset::with_labels)
      .def("validate", &pl::Poset::validate)
      .def("__eq__", [](const pl::Poset& a, const pl::Poset& b) { return a == b; })
      .def("__repr__", [](const pl::Poset& p) {
        return "<Poset n=" + std::to_string(p.size()) + " covers=" +
               std::to_string(p.cover_pairs().size()) + ">";
      });

  m.def("chain", &pl::chain);
  m.def("antichain", &pl::antichain);
  m.def("n_poset", &pl::n_poset);
  m.def("diamond22", &pl::diamond22);
  m.def("dual", &pl::dual);
  m.def("maximal_chains", [](const pl::Poset& p) { return to_lists(pl::maximal_chains(p)); });
  m.def("maximal_antichains", [](const pl::Poset& p) { return to_lists(pl::maximal_antichains(p)); });

  m.def("find_n", [](const pl::Poset& p) { return quad(pl::find_n(p)); });
  m.def("find_covering_n", [](const pl::Poset& p) { return quad(pl::find_covering_n(p)); });
  m.def("find_weak_n", [](const pl::Poset& p) { return quad(pl::find_weak_n(p)); });
  m.def("is_n_free", &pl::is_n_free);
  m.def("chain_antichain_property", [](const pl::Poset& p) { return pl::chain_antichain_property(p); });

  py::class_<pl::Orthoset>(m, "Orthoset")
      .def_static("from_edges", &pl::Orthoset::from_edges, py::arg("n"), py::arg("edges"))
      .def_property_readonly("size", &pl::Orthoset::size)
      .def("__len__", &pl::Orthoset::size)
      .def("orthogonal", &pl::Orthoset::orthogonal)
      .def("complement", &pl::Orthoset::complement)
      .def("__eq__", [](const pl::Orthoset& a, const pl::Orthoset& b) { return a == b; });

  m.def("perp", [](const pl::Orthoset& o, const std::vector<int>& s) {
    return to_list(pl::perp(o, from_list(s, o.size())));
  });
  m.def("double_perp", [](const pl::Orthoset& o, const std::vector<int>& s) {
    return to_list(pl::double_perp(o, from_list(s, o.size())));
  });
  m.def("is_orthoclosed", [](const pl::Orthoset& o, const std::vector<int>& s) {
    return pl::is_orthoclosed(o, from_list(s, o.size()));
  });
  m.def("enumerate_orthoclosed", [](const pl::Orthoset& o) { return to_lists(pl::enumerate_orthoclosed(o)); });
  m.def("bases", [](const pl::Orthoset& o, const std::vector<int>& x) {
    return to_lists(pl::bases(o, from_list(x, o.size())));
  });
  m.def("is_dacey_subset", [](const pl::Orthoset& o, const std::vector<int>& x) {
    return pl::is_dacey_subset(o, from_list(x, o.size()));
  });
  m.def("is_dacey", [](const pl::Orthoset& o) {
    const auto r = pl::is_dacey(o);
    py::object w = py::none();
    if (r.witness) w = py::make_tuple(to_list(r.witness->first), to_list(r.witness->second));
    return py::make_tuple(r.dacey, w);
  });
  m.def("is_compatible", [](const pl::Orthoset& o) {
    const auto r = pl::is_compatible(o);
    py::object w = py::none();
    if (r.witness) w = py::make_tuple(r.witness->first, r.witness->second);
    return py::make_tuple(r.compatible, w);
  });
  m.def("orthocomplement_pair_check",
        [](const pl::Orthoset& o, const std::vector<int>& x, const std::vector<int>& y) {
          return pl::orthocomplement_pair_check(o, from_list(x, o.size()), from_list(y, o.size()));
        });

  m.def("incomparability_orthoset", &pl::incomparability_orthoset);
  m.def("strict_comparability_orthoset", &pl::strict_comparability_orthoset);
  m.def("ud_decomposition", [](const pl::Poset& p, const std::vector<int>& x) {
    const auto ud = pl::ud_decomposition(p, from_list(x, p.size()));
    return py::make_tuple(to_list(ud.up), to_list(ud.down));
  });

  py::class_<pl::Logic>(m, "Logic")
      .def_property_readonly("size", &pl::Logic::size)
      .def("__len__", &pl::Logic::size)
      .def_property_readonly("elements", [](const pl::Logic& l) { return to_lists(l.elements()); })
      .def("meet", &pl::Logic::meet)
      .def("join", &pl::Logic::join)
      .def("ocompl", &pl::Logic::ocompl)
      .def("leq", &pl::Logic::leq)
      .def("cover_pairs", &pl::Logic::cover_pairs);
  m.def("build_logic", [](const pl::Orthoset& o) { return pl::build_logic(o); });
  m.def("verify_ortholattice", [](const pl::Logic& l) {
    const auto r = pl::verify_ortholattice(l);
    return py::make_tuple(r.ok, r.failed_law, r.counterexample);
  });
  m.def("is_orthomodular", [](const pl::Logic& l) {
    const auto r = pl::is_orthomodular(l);
    py::object w = py::none();
    if (r.witness) w = py::make_tuple(r.witness->first, r.witness->second);
    return py::make_tuple(r.orthomodular, w);
  });
  m.def("is_boolean", [](const pl::Logic& l) {
    const auto r = pl::is_boolean(l);
    py::object w = py::none();
    if (r.witness) w = py::make_tuple((*r.witness)[0], (*r.witness)[1], (*r.witness)[2]);
    return py::make_tuple(r.boolean, w);
  });

  m.def("count_labeled_posets", [](int n) {
    std::uint64_t count = 0;
    pl::Limits limits;
    limits.max_census_n = pl::kMaxEnumerationN;
    pl::for_each_labeled_poset(n, [&](const pl::Poset&) { ++count; }, limits);
    return count;
  });
  m.def("enumerate_labeled_posets", [](int n) { return pl::enumerate_labeled_posets(n); });
  m.def("random_poset", &pl::random_poset, py::arg("n"), py::arg("seed"), py::arg("edge_prob"));
  m.def("random_orthoset", &pl::random_orthoset, py::arg("n"), py::arg("seed"), py::arg("edge_prob"));
  m.def("verify_theorems", [](const pl::Poset& p) { return theorem_dict(pl::verify_theorems(p)); });
  m.def(
      "census_run_json",
      [](int max_n, int workers) {
        py::gil_scoped_release release;
        pl::Limits limits;
        limits.max_census_n = max_n;
        return pl::census_to_json(pl::census_run(max_n, workers, limits)).dump();
      },
      py::arg("max_n"), py::arg("workers") = 1);
  m.def(
      "search_counterexample",
      [](const std::string& predicate, int max_n) -> std::optional<pl::Poset> {
        py::gil_scoped_release release;
        pl::Limits limits;
        limits.max_census_n = max_n;
        return pl::search_counterexample(pl::parse_search_predicate(predicate), max_n, limits);
      },
      py::arg("predicate"), py::arg("max_n"));

  m.def("parse_poset_file", [](const std::string& text) { return pl::parse_poset_file(text); });
  m.def("serialize_poset_file", &pl::serialize_poset_file);
  m.def("emit_dot_hasse", &pl::emit_dot_hasse);
  m.def("emit_dot_lattice", &pl::emit_dot_lattice, py::arg("logic"),
        py::arg("labels") = std::vector<std::string>{});
  m.def(
      "analyze_json",
      [](const pl::Poset& p, bool timing) {
        auto report = pl::analyze(p);
        if (!timing) report.elapsed_ms.reset();
        return pl::emit_json_report(report);
      },
      py::arg("poset"), py::arg("timing") = false);
  m.def("revalidate_report_json", [](const std::string& report, const pl::Poset& p) {
    return pl::revalidate_report(nlohmann::json::parse(report), p);
  });
}
