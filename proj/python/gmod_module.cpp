// Python bindings for the graded-module engine.  Degrees cross the boundary
// as tuples of ints, windows as (lo, hi) pairs, and big integers as python
// ints (via decimal strings, since the C++ side uses GMP).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gmod/charts.hpp"
#include "gmod/functors.hpp"
#include "gmod/homology.hpp"
#include "gmod/tau.hpp"
#include "gmod/verify.hpp"

namespace py = pybind11;
using namespace gmod;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.get_str())); }

Int to_int(const py::int_& v) {
  return Int(std::string(py::str(py::handle(v))));
}

Degree to_degree(const Ring& r, const std::vector<long>& c) {
  if (int(c.size()) != r.grank())
    throw std::invalid_argument("degree has wrong number of coordinates");
  return reduce_degree(r, Degree{c});
}

py::tuple from_degree(const Degree& d) {
  py::tuple t(d.c.size());
  for (size_t i = 0; i < d.c.size(); ++i) t[i] = d.c[i];
  return t;
}

py::dict from_table(const Table& t) {
  py::dict out;
  for (const auto& [d, g] : t) out[from_degree(d)] = g;
  return out;
}

py::dict from_htable(const HTable& h) {
  py::dict out;
  for (const auto& [spot, t] : h) out[py::int_(spot)] = from_table(t);
  return out;
}

py::dict from_gt(const GT& a) {
  py::dict out;
  for (const auto& [d, g] : a) out[py::int_(d)] = g;
  return out;
}

GT to_gt(const py::dict& d) {
  GT out;
  for (const auto& [k, v] : d)
    out[k.cast<long>()] = v.cast<FGAbelianGroup>();
  return out;
}

Window to_window(std::pair<long, long> w) {
  if (w.first > w.second) throw std::invalid_argument("window lo > hi");
  return Window{w.first, w.second};
}

}  // namespace

PYBIND11_MODULE(_gmod, mod) {
  mod.doc() =
      "Exact linear algebra for finitely presented graded modules: ring "
      "family, piece tables, transforms, resolutions and the claim suites.";

  py::class_<FGAbelianGroup>(mod, "Group")
      .def(py::init([](long free_rank, const std::vector<py::int_>& torsion) {
             FGAbelianGroup g;
             g.free_rank = free_rank;
             for (const py::int_& t : torsion) g.torsion.push_back(to_int(t));
             return g;
           }),
           py::arg("free_rank") = 0,
           py::arg("torsion") = std::vector<py::int_>{})
      .def_readonly("free_rank", &FGAbelianGroup::free_rank)
      .def_property_readonly("torsion",
                             [](const FGAbelianGroup& g) {
                               py::list out;
                               for (const Int& t : g.torsion)
                                 out.append(to_py(t));
                               return out;
                             })
      .def("is_trivial", &FGAbelianGroup::is_trivial)
      .def("__eq__",
           [](const FGAbelianGroup& a, const FGAbelianGroup& b) {
             return a == b;
           })
      .def("__repr__", [](const FGAbelianGroup& g) { return g.str(); });
  mod.def("free_group", &free_group, py::arg("rank") = 1);
  mod.def("cyclic_group",
          [](const py::int_& n) { return cyclic_group(to_int(n)); });
  mod.def("direct_sum", [](const FGAbelianGroup& a, const FGAbelianGroup& b) {
    return direct_sum(a, b);
  });

  py::class_<Ring>(mod, "Ring")
      .def_property_readonly("name", &Ring::name)
      .def_property_readonly("grank", &Ring::grank)
      .def_property_readonly("moduli", &Ring::moduli)
      .def_property_readonly(
          "characteristic",
          [](const Ring& r) { return to_py(r.characteristic()); })
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
      .def("__repr__", [](const Ring& r) { return r.name(); });
  mod.def("base_z", &base_z);
  mod.def("point_g", &point_g);
  mod.def("line_r", &line_r);
  mod.def("line_t", &line_t, py::arg("l"));
  mod.def("hyper", &hyper, py::arg("l"));
  mod.def("chart", &chart, py::arg("l"), py::arg("n"));
  mod.def("chart_div", &chart_div, py::arg("l"), py::arg("n"));
  mod.def("div_z", &div_z, py::arg("n"));

  py::class_<Module>(mod, "Module")
      .def_readonly("ring", &Module::ring)
      .def_property_readonly("gens",
                             [](const Module& m) {
                               py::list out;
                               for (const Degree& d : m.gens)
                                 out.append(from_degree(d));
                               return out;
                             })
      .def_property_readonly("ngens", &Module::ngens)
      .def_property_readonly("nrels", &Module::nrels)
      .def("__repr__", [](const Module& m) {
        return "Module(" + m.ring.name() + ", " +
               std::to_string(m.ngens()) + " gens, " +
               std::to_string(m.nrels()) + " rels)";
      });
  mod.def(
      "free_module",
      [](const Ring& r, const std::vector<std::vector<long>>& gens) {
        std::vector<Degree> ds;
        for (const auto& g : gens) ds.push_back(to_degree(r, g));
        return free_module(r, ds);
      },
      py::arg("ring"), py::arg("gens"));
  mod.def(
      "degree_piece",
      [](const Module& m, const std::vector<long>& d) {
        return degree_piece(m, to_degree(m.ring, d));
      },
      py::arg("module"), py::arg("degree"));
  mod.def(
      "piece_table",
      [](const Module& m, std::pair<long, long> w) {
        return from_table(piece_table(m, to_window(w)));
      },
      py::arg("module"), py::arg("window"));
  mod.def(
      "twist",
      [](const Module& m, const std::vector<long>& a) {
        return twist(m, to_degree(m.ring, a));
      },
      py::arg("module"), py::arg("by"));
  mod.def("tensor",
          [](const Module& a, const Module& b) { return tensor(a, b); });

  // Graded-table functors on the invariant-factor level.
  mod.def("gt_twist",
          [](const py::dict& a, long i) { return from_gt(gt_twist(to_gt(a), i)); },
          py::arg("table"), py::arg("i"));
  mod.def("bt_pull",
          [](const py::dict& a, long l) { return from_gt(bt_pull(to_gt(a), l)); },
          py::arg("table"), py::arg("l"));
  mod.def("bt_push",
          [](const py::dict& a, long l) { return from_gt(bt_push(to_gt(a), l)); },
          py::arg("table"), py::arg("l"));

  // Geometry-side functors.
  mod.def("theta_pull", &theta_pull, py::arg("module"), py::arg("l"));
  mod.def(
      "theta_push",
      [](const Module& m, long l, std::pair<long, long> w) {
        return theta_push(m, l, to_window(w));
      },
      py::arg("module"), py::arg("l"), py::arg("window"));
  mod.def(
      "wedge_right",
      [](long i, const py::dict& a, long l) {
        return wedge_right(i, to_gt(a), l);
      },
      py::arg("i"), py::arg("table"), py::arg("l"));
  mod.def(
      "wedge_left",
      [](long i, const Module& m, long l, std::pair<long, long> w) {
        py::dict out;
        for (const auto& [spot, gt] : wedge_left(i, m, l, to_window(w)))
          out[py::int_(spot)] = from_gt(gt);
        return out;
      },
      py::arg("i"), py::arg("module"), py::arg("l"), py::arg("window"));

  // Kernel chain and transforms.
  mod.def(
      "tau_module",
      [](long l, long n, long m, std::pair<long, long> w) {
        return tau_module(l, n, m, to_window(w));
      },
      py::arg("l"), py::arg("n"), py::arg("m"), py::arg("window"));
  mod.def("tau_step_t_coker",
          [](long l, long m) { return from_table(tau_step_t_coker(l, m)); },
          py::arg("l"), py::arg("m"));
  mod.def("tau_step_i_coker",
          [](long l, long n) { return from_table(tau_step_i_coker(l, n)); },
          py::arg("l"), py::arg("n"));
  mod.def(
      "fm_transform_homology",
      [](const Module& k, const Module& m, std::pair<long, long> w,
         int depth) {
        Window win = to_window(w);
        return from_htable(
            homology_table(fm_transform(k, m, win, depth), win));
      },
      py::arg("kernel"), py::arg("module"), py::arg("window"),
      py::arg("depth") = 8);
  mod.def(
      "graded_ext",
      [](const Module& m, const Module& n, int i, std::pair<long, long> w,
         int depth) {
        bool certified = false;
        FGAbelianGroup g = graded_ext(m, n, i, zero_degree(m.ring),
                                      to_window(w), depth, &certified);
        return py::make_tuple(g, certified);
      },
      py::arg("source"), py::arg("target"), py::arg("i"), py::arg("window"),
      py::arg("depth") = 8);

  // Claim suites.
  py::class_<SuiteConfig>(mod, "SuiteConfig")
      .def(py::init<>())
      .def_readwrite("ls", &SuiteConfig::ls)
      .def_readwrite("divisors", &SuiteConfig::divisors)
      .def_property(
          "window",
          [](const SuiteConfig& c) {
            return std::make_pair(c.window.lo, c.window.hi);
          },
          [](SuiteConfig& c, std::pair<long, long> w) {
            c.window = to_window(w);
          })
      .def_readwrite("depth", &SuiteConfig::depth);

  py::class_<ClaimReport>(mod, "ClaimReport")
      .def_readonly("id", &ClaimReport::id)
      .def_readonly("statement", &ClaimReport::statement)
      .def_readonly("params", &ClaimReport::params)
      .def_readonly("status", &ClaimReport::status)
      .def_readonly("witness", &ClaimReport::witness)
      .def("__repr__", [](const ClaimReport& r) {
        return "[" + r.status + "] " + r.id;
      });

  mod.def("suite_names", &suite_names);
  mod.def("run_suite", &run_suite, py::arg("suite"),
          py::arg("config") = SuiteConfig{});
  mod.def(
      "report_json",
      [](const std::string& suite, const SuiteConfig& cfg) {
        return report_json(suite, cfg, run_suite(suite, cfg));
      },
      py::arg("suite"), py::arg("config") = SuiteConfig{});
}
