// Python bindings. Matrices cross the boundary as 3x3 nested lists of [a, b]
// pairs (or {"entries": ...}); integers of any size map to Python int.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <future>
#include <string>
#include <vector>

#include "su21/cocycle.hpp"
#include "su21/errors.hpp"
#include "su21/fpgroup.hpp"
#include "su21/gendecomp.hpp"
#include "su21/weightdenom.hpp"

namespace py = pybind11;
using namespace su21;

namespace {

py::int_ to_py(const mpz_class& n) {
  if (n.fits_slong_p()) return py::int_(n.get_si());
  return py::int_(py::str(n.get_str()));
}

mpz_class to_mpz(py::handle h) {
  if (!py::isinstance<py::int_>(h)) throw ParseError("expected an integer");
  return mpz_class(py::str(h).cast<std::string>());
}

GroupMatrix matrix_from_py(py::handle obj) {
  py::object rows = py::reinterpret_borrow<py::object>(obj);
  if (py::isinstance<py::dict>(obj)) rows = obj.cast<py::dict>()["entries"];
  auto seq = rows.cast<py::sequence>();
  if (py::len(seq) != 3) throw ParseError("matrix must have three rows");
  GroupMatrix g;
  for (int i = 0; i < 3; ++i) {
    auto row = seq[i].cast<py::sequence>();
    if (py::len(row) != 3) throw ParseError("each row must have three entries");
    for (int j = 0; j < 3; ++j) {
      auto pair = row[j].cast<py::sequence>();
      if (py::len(pair) != 2) throw ParseError("an Eisenstein integer is a pair [a, b]");
      g(i, j) = Eisenstein(to_mpz(pair[0]), to_mpz(pair[1]));
    }
  }
  return g;
}

py::list matrix_to_py(const GroupMatrix& g) {
  py::list rows;
  for (int i = 0; i < 3; ++i) {
    py::list row;
    for (int j = 0; j < 3; ++j) row.append(py::make_tuple(to_py(g(i, j).a()), to_py(g(i, j).b())));
    rows.append(row);
  }
  return rows;
}

py::dict report_to_py(const DenominatorReport& r) {
  py::list torsion;
  for (const auto& t : r.torsion_invariants) torsion.append(to_py(t));
  py::dict d;
  d["group"] = r.group.name();
  d["index_in_upsilon"] = r.index_in_upsilon;
  d["generator_count"] = r.generator_count;
  d["relator_count"] = r.relator_count;
  d["weight_denominator"] = to_py(r.weight_denominator);
  d["torsion_invariants"] = torsion;
  d["free_rank"] = r.free_rank;
  if (!r.note.empty()) d["note"] = r.note;
  return d;
}

PipelineOptions options(std::size_t max_index, bool modular) {
  PipelineOptions o;
  o.max_index = max_index;
  o.modular = modular;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weight denominators of arithmetic subgroups of SU(2,1) over the Eisenstein integers";

  static py::exception<Error> base(m, "Su21Error");
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<InvalidParameters> invalid(m, "InvalidParameters", base.ptr());
  static py::exception<IndexOverflow> overflow(m, "IndexOverflow", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(domain.ptr(), e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(parse.ptr(), e.what());
    } catch (const InvalidParameters& e) {
      PyErr_SetString(invalid.ptr(), e.what());
    } catch (const IndexOverflow& e) {
      PyErr_SetString(overflow.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  m.def("generators", [] {
    py::list out;
    for (const auto& g : generators_upsilon()) out.append(matrix_to_py(g));
    return out;
  }, "The generators n1..n5 of Upsilon.");

  m.def("verify_presentation", [] {
    const auto& p = upsilon_presentation();
    py::list out;
    for (const Word& r : p.relators) {
      py::dict d;
      d["relator"] = format_word(r, p.generator_names);
      d["ok"] = evaluate_word(r, *p.images).is_identity();
      out.append(d);
    }
    return out;
  }, "Evaluate the 13 relators of Upsilon; one {relator, ok} record each.");

  m.def("weight_denominator", [](const std::string& group, std::size_t max_index, bool modular) {
    const SubgroupSpec spec = parse_subgroup(group);
    DenominatorReport r;
    {
      py::gil_scoped_release release;
      r = weight_denominator_of(spec, options(max_index, modular));
    }
    return report_to_py(r);
  }, py::arg("group"), py::arg("max_index") = 512, py::arg("modular") = false,
     "Report for upsilon, gamma_sqrt3, gamma3 or index3:a,b,c,d.");

  m.def("survey_index3", [](bool parallel) {
    const auto vectors = all_index3_vectors();
    std::vector<DenominatorReport> reports;
    {
      py::gil_scoped_release release;
      const PipelineOptions o;
      if (parallel) {
        std::vector<std::future<DenominatorReport>> jobs;
        for (const auto& v : vectors) {
          jobs.push_back(std::async(std::launch::async,
                                    [v, &o] { return weight_denominator_of(SubgroupSpec::index3(v), o); }));
        }
        for (auto& j : jobs) reports.push_back(j.get());
      } else {
        for (const auto& v : vectors) reports.push_back(weight_denominator_of(SubgroupSpec::index3(v), o));
      }
    }
    py::list out;
    for (const auto& r : reports) {
      py::dict d;
      const auto& v = r.group.vector();
      d["vector"] = py::make_tuple(v[0], v[1], v[2], v[3]);
      d["group"] = r.group.name();
      d["weight_denominator"] = to_py(r.weight_denominator);
      out.append(d);
    }
    return out;
  }, py::arg("parallel") = false, "Weight denominators of the 40 index-3 groups.");

  m.def("sigma", [](py::handle g, py::handle h) {
    return sigma(matrix_from_py(g), matrix_from_py(h));
  }, py::arg("g"), py::arg("h"), "The integer cocycle sigma(g, h).");

  m.def("decompose", [](py::handle g) {
    return format_word(decompose(matrix_from_py(g)), upsilon_presentation().generator_names);
  }, py::arg("g"), "A word in n1..n5 for an element of Upsilon.");

  m.def("multiplier_system_exists", [](const std::string& group, const std::string& weight) {
    const SubgroupSpec spec = parse_subgroup(group);
    const mpq_class w = parse_weight(weight);
    py::gil_scoped_release release;
    return multiplier_system_exists(spec, w);
  }, py::arg("group"), py::arg("weight"), "Is there a multiplier system of weight a/b?");
}
