// Python bindings for the pcdpe core: geometry predicates, closed-form
// moments, pattern samplers, Delaunay meshes, densities and the Monte Carlo
// test machinery.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "pcdpe/closed_form.hpp"
#include "pcdpe/delaunay.hpp"
#include "pcdpe/graph.hpp"
#include "pcdpe/inference.hpp"
#include "pcdpe/mc.hpp"
#include "pcdpe/multitri.hpp"
#include "pcdpe/patterns.hpp"

namespace py = pybind11;
using namespace pcdpe;

namespace {

ProximityParam to_r(double r) {
  if (std::isinf(r)) return ProximityParam::infinity();
  return ProximityParam::finite(r);
}

EdgeMode to_mode(const std::string& s) {
  if (s == "and") return EdgeMode::And;
  if (s == "or") return EdgeMode::Or;
  throw DomainError("mode must be 'and' or 'or'");
}

Alternative to_alt(const std::string& s) {
  if (s == "seg" || s == "segregation") return Alternative::Segregation;
  if (s == "assoc" || s == "association") return Alternative::Association;
  throw DomainError("alternative must be 'seg' or 'assoc'");
}

PatternSpec to_pattern(const std::string& kind, double eps) {
  if (kind == "null") return PatternSpec::null();
  if (kind == "seg" || kind == "segregation") {
    return PatternSpec::segregation(eps);
  }
  if (kind == "assoc" || kind == "association") {
    return PatternSpec::association(eps);
  }
  throw DomainError("pattern must be null, seg or assoc");
}

using PyPoint = std::pair<double, double>;

Point to_point(const PyPoint& p) { return {p.first, p.second}; }

std::vector<Point> to_points(const std::vector<PyPoint>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_point(p));
  return out;
}

Triangle to_triangle(const std::vector<PyPoint>& v) {
  if (v.size() != 3) throw DomainError("triangle needs exactly 3 vertices");
  return Triangle(to_point(v[0]), to_point(v[1]), to_point(v[2]));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Proportional-edge proximity catch digraphs: edge-density statistics "
      "for spatial pattern tests";

  py::register_exception<DegenerateStatisticError>(m, "DegenerateStatisticError",
                                                   PyExc_ArithmeticError);
  py::register_exception<Error>(m, "PcdError", PyExc_ValueError);

  py::class_<Triangle>(m, "Triangle")
      .def(py::init([](const std::vector<PyPoint>& v) { return to_triangle(v); }))
      .def_static("equilateral", &Triangle::equilateral)
      .def_property_readonly("vertices",
                             [](const Triangle& t) {
                               std::vector<PyPoint> v;
                               for (int i = 0; i < 3; ++i) {
                                 v.emplace_back(t.vertex(i).x, t.vertex(i).y);
                               }
                               return v;
                             })
      .def("area", &Triangle::area)
      .def("barycentric",
           [](const Triangle& t, const PyPoint& p) {
             const Bary b = t.barycentric(to_point(p));
             return py::make_tuple(b.b1, b.b2, b.b3);
           })
      .def("contains",
           [](const Triangle& t, const PyPoint& p) {
             return t.contains(to_point(p));
           })
      .def("vertex_region", [](const Triangle& t, const PyPoint& p) {
        return t.vertex_region(to_point(p));
      });

  py::class_<DelaunayMesh>(m, "DelaunayMesh")
      .def_static("build",
                  [](const std::vector<PyPoint>& markers) {
                    return DelaunayMesh::build(to_points(markers));
                  })
      .def_property_readonly("triangle_count", &DelaunayMesh::triangle_count)
      .def_property_readonly("weights",
                             [](const DelaunayMesh& mesh) {
                               return std::vector<double>(
                                   mesh.weights().begin(), mesh.weights().end());
                             })
      .def_property_readonly("triangles",
                             [](const DelaunayMesh& mesh) {
                               std::vector<std::array<int, 3>> out;
                               for (int t = 0; t < mesh.triangle_count(); ++t) {
                                 out.push_back(mesh.triangle_indices(t));
                               }
                               return out;
                             })
      .def_property_readonly("hull_area", &DelaunayMesh::hull_area)
      .def("locate", [](const DelaunayMesh& mesh, const PyPoint& p) {
        return mesh.locate(to_point(p));
      });

  m.def("in_proximity_region",
        [](const Triangle& tri, double r, const PyPoint& x, const PyPoint& z) {
          return in_proximity_region(tri, to_r(r), to_point(x), to_point(z));
        },
        py::arg("tri"), py::arg("r"), py::arg("x"), py::arg("z"));
  m.def("in_gamma1_region",
        [](const Triangle& tri, double r, const PyPoint& x, const PyPoint& z) {
          return in_gamma1_region(tri, to_r(r), to_point(x), to_point(z));
        });

  m.def("mu_null",
        [](const std::string& mode, double r) {
          return mu_null(to_mode(mode), to_r(r));
        });
  m.def("var_h_null", [](const std::string& mode, double r) {
    return var_h_null(to_mode(mode), to_r(r));
  });
  m.def("nu_null", [](const std::string& mode, double r) {
    return nu_null(to_mode(mode), to_r(r));
  });
  m.def("joint_pmf", [](const std::string& mode, double r) {
    const JointPmf p = joint_pmf(to_mode(mode), to_r(r));
    return py::make_tuple(p.p00, p.p01, p.p10, p.p11);
  });
  m.def("mu_alt",
        [](const std::string& mode, const std::string& alt, double r,
           double eps) { return mu_alt(to_mode(mode), to_alt(alt), to_r(r), eps); });
  m.def("pae", [](const std::string& mode, const std::string& alt, double r) {
    return pae(to_mode(mode), to_alt(alt), r);
  });
  m.def("asym_power", [](double mu0, double nu0, double mu_eps, double nu_eps,
                         double n, double alpha, const std::string& direction) {
    return asym_power(mu0, nu0, mu_eps, nu_eps, n, alpha, to_alt(direction));
  });
  m.def("multi_tri_moments_I",
        [](double mu, double nu, const std::vector<double>& w) {
          const MomentPair p = multi_tri_moments_I(mu, nu, w);
          return py::make_tuple(p.mu, p.nu);
        });
  m.def("multi_tri_moments_II",
        [](double mu, double nu, const std::vector<double>& w) {
          const MomentPair p = multi_tri_moments_II(mu, nu, w);
          return py::make_tuple(p.mu, p.nu);
        });
  m.def("clt_valid", [](const std::string& mode, const std::string& alt,
                        double r, double eps) {
    return clt_valid(to_mode(mode), to_alt(alt), r, eps);
  });
  m.def("delta_from_epsilon", &delta_from_epsilon);
  m.def("epsilon_from_delta", &epsilon_from_delta);

  m.def("sample",
        [](const Triangle& tri, const std::string& pattern, double eps, int n,
           std::uint64_t seed, std::uint64_t stream) {
          const auto pts = sample(tri, to_pattern(pattern, eps), n, {seed, stream});
          std::vector<PyPoint> out;
          out.reserve(pts.size());
          for (const auto& p : pts) out.emplace_back(p.x, p.y);
          return out;
        },
        py::arg("tri"), py::arg("pattern"), py::arg("eps"), py::arg("n"),
        py::arg("seed"), py::arg("stream") = 0);
  m.def("sample_mesh",
        [](const DelaunayMesh& mesh, const std::string& pattern, double eps,
           int n, std::uint64_t seed, std::uint64_t stream) {
          const auto pts =
              sample_mesh(mesh, to_pattern(pattern, eps), n, {seed, stream});
          std::vector<std::tuple<double, double, int>> out;
          out.reserve(pts.size());
          for (const auto& p : pts) out.emplace_back(p.p.x, p.p.y, p.triangle);
          return out;
        },
        py::arg("mesh"), py::arg("pattern"), py::arg("eps"), py::arg("n"),
        py::arg("seed"), py::arg("stream") = 0);

  m.def("densities",
        [](const std::vector<PyPoint>& pts, const Triangle& tri, double r) {
          const DensitySummary s =
              densities(PcDigraph::build(to_points(pts), tri, to_r(r)));
          py::dict d;
          d["rho_arc"] = s.rho_arc;
          d["rho_and"] = s.rho_and;
          d["rho_or"] = s.rho_or;
          d["arcs"] = s.arcs;
          d["edges_and"] = s.edges_and;
          d["edges_or"] = s.edges_or;
          return d;
        });
  m.def("arcs",
        [](const std::vector<PyPoint>& pts, const Triangle& tri, double r) {
          const PcDigraph d = PcDigraph::build(to_points(pts), tri, to_r(r));
          std::vector<std::pair<int, int>> out;
          for (int i = 0; i < d.order(); ++i) {
            for (int j = 0; j < d.order(); ++j) {
              if (i != j && d.arc(i, j)) out.emplace_back(i, j);
            }
          }
          return out;
        });
  m.def("domination_number",
        [](const std::vector<PyPoint>& pts, const Triangle& tri, double r,
           const std::string& graph) {
          const PcDigraph d = PcDigraph::build(to_points(pts), tri, to_r(r));
          if (graph == "digraph") return domination_number(d);
          return domination_number(UnderlyingGraph(d, to_mode(graph)));
        },
        py::arg("points"), py::arg("tri"), py::arg("r"),
        py::arg("graph") = "digraph");

  m.def("multi_density",
        [](const std::vector<PyPoint>& pts, const DelaunayMesh& mesh, double r) {
          const MultiDensity md = multi_density(to_points(pts), mesh, to_r(r));
          py::dict d;
          d["rho_I_and"] = md.rho_I_and;
          d["rho_I_or"] = md.rho_I_or;
          d["rho_II_and"] = md.rho_II_and;
          d["rho_II_or"] = md.rho_II_or;
          d["xi_hat_and"] = md.xi_hat_and;
          d["xi_hat_or"] = md.xi_hat_or;
          d["n_t"] = md.n_t;
          d["per_triangle_n"] = md.per_triangle_n;
          return d;
        });

  m.def("standardized_stat", &standardized_stat, py::arg("rho"), py::arg("mu"),
        py::arg("four_nu"), py::arg("n"));
  m.def("norm_cdf", &norm_cdf);
  m.def("norm_quantile", &norm_quantile);
  m.def("normal_test",
        [](double statistic, const std::string& direction, double alpha) {
          const TestOutcome t = normal_test(statistic, to_alt(direction), alpha);
          py::dict d;
          d["statistic"] = t.statistic;
          d["p_value"] = t.p_value;
          d["critical"] = t.critical;
          d["reject"] = t.reject;
          return d;
        });

  m.def("mc_critical_values",
        [](const Triangle& tri, double r, const std::string& mode, int n,
           int n_mc, double alpha, std::uint64_t seed, int threads) {
          const auto cv = mc_critical_values(tri, to_r(r), to_mode(mode), n,
                                             n_mc, alpha, seed, threads);
          return py::make_tuple(cv.c_seg, cv.c_assoc);
        },
        py::arg("tri"), py::arg("r"), py::arg("mode"), py::arg("n"),
        py::arg("n_mc"), py::arg("alpha") = 0.05, py::arg("seed") = 0,
        py::arg("threads") = 0);

  m.def("run_replicates",
        [](const py::object& geometry, const std::string& pattern, double eps,
           int n, const std::vector<double>& r_list, int n_mc,
           std::uint64_t seed, int threads) {
          McConfig cfg;
          if (py::isinstance<Triangle>(geometry)) {
            cfg.geometry = geometry.cast<Triangle>();
          } else {
            cfg.geometry = geometry.cast<DelaunayMesh>();
          }
          cfg.pattern = to_pattern(pattern, eps);
          cfg.n = n;
          for (double r : r_list) cfg.r_list.push_back(to_r(r));
          cfg.n_mc = n_mc;
          cfg.seed = seed;
          cfg.threads = threads;
          const auto results = run_replicates(cfg);
          std::vector<std::vector<std::tuple<double, double, double>>> out;
          out.reserve(results.size());
          for (const auto& rep : results) {
            std::vector<std::tuple<double, double, double>> row;
            for (const auto& t : rep.by_r) {
              row.emplace_back(t.arc, t.and_, t.or_);
            }
            out.push_back(std::move(row));
          }
          return out;
        },
        py::arg("geometry"), py::arg("pattern"), py::arg("eps"), py::arg("n"),
        py::arg("r_list"), py::arg("n_mc"), py::arg("seed") = 0,
        py::arg("threads") = 0);

  m.def("empirical_power",
        [](const py::object& geometry, const std::vector<double>& r_list,
           const std::string& mode, int n, int n_mc,
           const std::vector<std::pair<std::string, double>>& alts,
           double alpha, const std::string& critical, std::uint64_t seed,
           int threads) {
          PowerConfig cfg;
          if (py::isinstance<Triangle>(geometry)) {
            cfg.geometry = geometry.cast<Triangle>();
          } else {
            cfg.geometry = geometry.cast<DelaunayMesh>();
          }
          for (double r : r_list) cfg.r_list.push_back(to_r(r));
          cfg.mode = to_mode(mode);
          cfg.n = n;
          cfg.n_mc = n_mc;
          for (const auto& [kind, eps] : alts) {
            cfg.alternatives.push_back(to_pattern(kind, eps));
          }
          cfg.alpha = alpha;
          cfg.source = critical == "asymptotic" ? CriticalSource::Asymptotic
                                                : CriticalSource::MonteCarlo;
          cfg.seed = seed;
          cfg.threads = threads;
          const PowerEstimate est = empirical_power(cfg);
          py::list rows;
          for (const auto& row : est.rows) {
            py::dict d;
            d["r"] = row.r.is_infinite()
                         ? std::numeric_limits<double>::infinity()
                         : row.r.value();
            d["c_seg"] = row.c_seg;
            d["c_assoc"] = row.c_assoc;
            d["alpha_hat_seg"] = row.alpha_hat_seg;
            d["alpha_hat_assoc"] = row.alpha_hat_assoc;
            d["beta_hat"] = row.beta_hat;
            rows.append(std::move(d));
          }
          return rows;
        },
        py::arg("geometry"), py::arg("r_list"), py::arg("mode"), py::arg("n"),
        py::arg("n_mc"), py::arg("alts"), py::arg("alpha") = 0.05,
        py::arg("critical") = "mc", py::arg("seed") = 0, py::arg("threads") = 0);

  m.def("estimate_kernel_cov",
        [](const Triangle& tri, const std::string& pattern, double eps,
           double r, const std::string& mode, std::uint64_t n_triples,
           std::uint64_t seed, int threads) {
          const auto est =
              estimate_kernel_cov(tri, to_pattern(pattern, eps), to_r(r),
                                  to_mode(mode), n_triples, {seed, 0}, threads);
          py::dict d;
          d["nu_hat"] = est.nu_hat;
          d["mu_hat"] = est.mu_hat;
          d["se"] = est.se;
          d["n_triples"] = est.n_triples;
          return d;
        },
        py::arg("tri"), py::arg("pattern"), py::arg("eps"), py::arg("r"),
        py::arg("mode"), py::arg("n_triples"), py::arg("seed") = 0,
        py::arg("threads") = 0);

  m.attr("__version__") = "0.1.0";
}
