#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtoric/asymptotic.hpp"
#include "qtoric/cohomology.hpp"
#include "qtoric/qample.hpp"
#include "qtoric/svg.hpp"

namespace py = pybind11;
using namespace qtoric;

namespace {

IntVec to_intvec(const std::vector<std::string>& v) {
  IntVec out;
  for (const auto& s : v) {
    Rat r = parse_rat(s);
    if (r.get_den() != 1) throw QtError("BadInput", "expected an integer, got " + s);
    out.push_back(r.get_num());
  }
  return out;
}

RatVec to_ratvec(const std::vector<std::string>& v) {
  RatVec out;
  for (const auto& s : v) out.push_back(parse_rat(s));
  return out;
}

std::vector<std::string> from_ratvec(const RatVec& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

py::list cone_to_py(const POCone& c) {
  py::list rows;
  for (const auto& row : c.constraints) {
    py::list nrm;
    for (const auto& e : row.normal) nrm.append(py::int_(py::str(e.get_str())));
    rows.append(py::make_tuple(nrm, row.strict));
  }
  return rows;
}

py::list union_to_py(const ConeUnion& u) {
  py::list out;
  for (const auto& c : u) out.append(cone_to_py(c));
  return out;
}

Fan make_fan(std::size_t dim, const std::vector<std::vector<long>>& rays,
             const std::vector<std::vector<std::size_t>>& max_cones) {
  Fan f;
  f.dim = dim;
  for (const auto& ray : rays) {
    IntVec v;
    for (long e : ray) v.push_back(Int(e));
    f.rays.push_back(std::move(v));
  }
  f.max_cones = max_cones;
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact cohomology and q-ample cones of simplicial projective toric varieties";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const QtError& e) {
      PyErr_SetString(PyExc_ValueError, (e.code + ": " + e.what()).c_str());
    }
  });

  py::class_<Fan>(m, "Fan")
      .def(py::init(&make_fan), py::arg("dim"), py::arg("rays"), py::arg("max_cones"))
      .def_readonly("dim", &Fan::dim)
      .def_property_readonly("num_rays", &Fan::num_rays);

  m.def("validate", [](const Fan& f) {
    ValidationReport r = validate(f);
    py::dict out;
    out["valid"] = r.valid;
    out["error"] = r.error;
    out["detail"] = r.detail;
    return out;
  });

  m.def("class_rank", [](const Fan& f) { return class_lattice(f).rank; });
  m.def("class_projection", [](const Fan& f) {
    ClassLattice cl = class_lattice(f);
    std::vector<std::vector<long>> rows(cl.projection.rows());
    for (std::size_t r = 0; r < cl.projection.rows(); ++r)
      for (std::size_t c = 0; c < cl.projection.cols(); ++c)
        rows[r].push_back(cl.projection(r, c).get_si());
    return rows;
  });
  m.def("class_of", [](const Fan& f, const std::vector<std::string>& d) {
    return from_ratvec(class_of(class_lattice(f), to_ratvec(d)));
  });

  m.def("is_cartier",
        [](const Fan& f, const std::vector<std::string>& d) { return is_cartier(f, to_intvec(d)).cartier; });
  m.def("is_ample",
        [](const Fan& f, const std::vector<std::string>& d) { return is_ample(f, to_intvec(d)); });
  m.def("find_ample", [](const Fan& f) {
    std::vector<std::string> out;
    for (const auto& e : find_ample(f)) out.push_back(e.get_str());
    return out;
  });

  m.def(
      "cohomology",
      [](const Fan& f, const std::vector<std::string>& d, bool keep_weights) {
        CohomologyTable t = cohomology(f, to_intvec(d), keep_weights);
        py::dict out;
        out["dims"] = t.dims;
        if (keep_weights) {
          py::dict w;
          for (const auto& [p, list] : t.weights) {
            py::list rows;
            for (const auto& [mvec, mult] : list) {
              py::list mv;
              for (const auto& e : mvec) mv.append(py::int_(py::str(e.get_str())));
              rows.append(py::make_tuple(mv, mult));
            }
            w[py::int_(p)] = rows;
          }
          out["weights"] = w;
        }
        return out;
      },
      py::arg("fan"), py::arg("divisor"), py::arg("keep_weights") = false);

  m.def("cech", [](const Fan& f, const std::vector<std::string>& d) {
    TorusDivisor div = to_intvec(d);
    CohomologyTable direct = cohomology(f, div);
    LatticeBox box = direct.box;
    if (box.lo.empty()) {
      box.lo.assign(f.dim, 0);
      box.hi.assign(f.dim, 0);
    }
    for (std::size_t j = 0; j < box.lo.size(); ++j) {
      box.lo[j] -= 1;
      box.hi[j] += 1;
    }
    return cech_oracle(f, div, box).dims;
  });

  m.def("obstruction", [](const Fan& f) {
    ObstructionTable t = obstruction_table(f);
    py::list out;
    for (const auto& [alpha, cohom] : t.entries) {
      py::list idx;
      for (std::size_t i = 0; i < f.num_rays(); ++i)
        if ((alpha >> i) & 1u) idx.append(i + 1);
      out.append(py::make_tuple(idx, cohom));
    }
    return out;
  });

  m.def("is_q_ample", [](const Fan& f, const std::vector<std::string>& c, std::size_t q) {
    return is_q_ample(f, to_ratvec(c), q);
  });
  m.def("ampleness_level", [](const Fan& f, const std::vector<std::string>& c) {
    return ampleness_level(f, to_ratvec(c));
  });
  m.def("q_ample_cone", [](const Fan& f, std::size_t q) {
    QAmpleCone amp = q_ample_cone(f, q);
    py::dict out;
    out["q"] = amp.q;
    out["cells"] = union_to_py(amp.cells);
    out["closed_pieces"] = union_to_py(amp.closed_pieces);
    return out;
  });
  m.def("effective_cone", [](const Fan& f) { return cone_to_py(effective_cone(f)); });

  m.def("hhat", [](const Fan& f, const std::vector<std::string>& d, std::size_t i) {
    return to_string(hhat(f, to_ratvec(d), i).value);
  });
  m.def("hhat_homogeneity_check",
        [](const Fan& f, const std::vector<std::string>& d, std::size_t i, const std::string& s) {
          return hhat_homogeneity_check(f, to_ratvec(d), i, parse_rat(s));
        });
  m.def("vanishing_check", [](const Fan& f, const std::vector<std::string>& c, std::size_t q) {
    VanishingReport r = vanishing_equivalence_check(f, to_ratvec(c), q);
    py::dict out;
    out["membership"] = r.membership;
    out["sampled_zero"] = r.sampled_zero;
    out["structural_zero"] = r.structural_zero;
    out["inconclusive"] = r.inconclusive;
    return out;
  });

  m.def("figure_svg", [](const Fan& f, std::size_t q) { return emit_figure(f, q); });
}
