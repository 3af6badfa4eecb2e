// Python bindings for the main operations: grids, sector operators and
// propagators, hydrogen states, norms, cutoff constants, product-formula
// errors, rate fitting, and the finite-dimensional identity oracle.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trotterlab/cutoff.hpp"
#include "trotterlab/experiments.hpp"
#include "trotterlab/oracle.hpp"

namespace py = pybind11;
using namespace trotterlab;

namespace {

cvec to_cvec(const py::array_t<cplx>& arr) {
  auto buf = arr.request();
  if (buf.ndim != 1) throw std::invalid_argument("expected a 1-d complex array");
  const cplx* p = static_cast<const cplx*>(buf.ptr);
  return cvec(p, p + buf.shape[0]);
}

py::array_t<cplx> from_cvec(const cvec& v) {
  py::array_t<cplx> out(v.size());
  std::copy(v.begin(), v.end(), static_cast<cplx*>(out.request().ptr));
  return out;
}

states::SectorState make_sector_state(int ell, int m, const py::array_t<cplx>& u,
                                      std::shared_ptr<const states::RadialGrid> grid) {
  states::SectorState s;
  s.ell = ell;
  s.m = m;
  s.u = to_cvec(u);
  s.grid = std::move(grid);
  if (static_cast<int>(s.u.size()) != s.grid->n)
    throw std::invalid_argument("profile length does not match grid");
  return s;
}

}  // namespace

PYBIND11_MODULE(_trotterlab, mod) {
  mod.doc() = "Product-formula error laboratory for radial Coulomb dynamics";

  py::class_<states::RadialGrid, std::shared_ptr<states::RadialGrid>>(mod, "RadialGrid")
      .def_readonly("r_max", &states::RadialGrid::r_max)
      .def_readonly("n", &states::RadialGrid::n)
      .def_readonly("h", &states::RadialGrid::h)
      .def_property_readonly("r", [](const states::RadialGrid& g) {
        return py::array_t<double>(g.r.size(), g.r.data());
      });

  mod.def("build_grid",
          [](double r_max, int n) {
            return std::const_pointer_cast<states::RadialGrid>(spectral::build_grid(r_max, n));
          },
          py::arg("r_max"), py::arg("n"));

  py::enum_<spectral::OperatorKind>(mod, "OperatorKind")
      .value("full_hamiltonian", spectral::OperatorKind::full_hamiltonian)
      .value("kinetic_only", spectral::OperatorKind::kinetic_only)
      .value("potential_only", spectral::OperatorKind::potential_only);

  py::class_<spectral::SectorOperator>(mod, "SectorOperator")
      .def_readonly("ell", &spectral::SectorOperator::ell)
      .def_readonly("c", &spectral::SectorOperator::c)
      .def_readonly("sign", &spectral::SectorOperator::sign)
      .def_property_readonly("main_diag",
                             [](const spectral::SectorOperator& op) {
                               return py::array_t<double>(op.main_diag.size(),
                                                          op.main_diag.data());
                             })
      .def_property_readonly("off_diag", [](const spectral::SectorOperator& op) {
        return py::array_t<double>(op.off_diag.size(), op.off_diag.data());
      });

  mod.def("sector_operator",
          [](std::shared_ptr<states::RadialGrid> grid, int ell, spectral::OperatorKind kind,
             double c, int sign) { return spectral::sector_operator(*grid, ell, kind, c, sign); },
          py::arg("grid"), py::arg("ell"), py::arg("kind"), py::arg("c"), py::arg("sign"));

  py::class_<spectral::EigenDecomposition>(mod, "EigenDecomposition")
      .def_readonly("n", &spectral::EigenDecomposition::n)
      .def_property_readonly("eigenvalues", [](const spectral::EigenDecomposition& e) {
        return py::array_t<double>(e.eigenvalues.size(), e.eigenvalues.data());
      });

  mod.def("diagonalize", &spectral::diagonalize, py::arg("op"));
  mod.def("eigenvalues_only", [](const spectral::SectorOperator& op) {
    auto v = spectral::eigenvalues_only(op);
    return py::array_t<double>(v.size(), v.data());
  });

  mod.def("propagate",
          [](const spectral::EigenDecomposition& eig, const py::array_t<cplx>& state, double t) {
            return from_cvec(spectral::propagate(eig, to_cvec(state), t));
          },
          py::arg("eig"), py::arg("state"), py::arg("t"));

  mod.def("potential_phase",
          [](std::shared_ptr<states::RadialGrid> grid, double c, int sign,
             const py::array_t<cplx>& state, double t) {
            return from_cvec(spectral::potential_phase(*grid, c, sign, to_cvec(state), t));
          },
          py::arg("grid"), py::arg("c"), py::arg("sign"), py::arg("state"), py::arg("t"));

  py::class_<states::SectorState>(mod, "SectorState")
      .def(py::init(&make_sector_state), py::arg("ell"), py::arg("m"), py::arg("u"),
           py::arg("grid"))
      .def_readonly("ell", &states::SectorState::ell)
      .def_readonly("m", &states::SectorState::m)
      .def_property_readonly("u", [](const states::SectorState& s) { return from_cvec(s.u); })
      .def_property_readonly("grid",
                             [](const states::SectorState& s) {
                               return std::const_pointer_cast<states::RadialGrid>(s.grid);
                             })
      .def("norm", &states::SectorState::norm);

  mod.def("hydrogen_state",
          [](int n, int ell, int m, std::shared_ptr<states::RadialGrid> grid) {
            return states::hydrogen_state(n, ell, m, std::move(grid));
          },
          py::arg("n"), py::arg("ell"), py::arg("m"), py::arg("grid"));
  mod.def("hydrogen_radial", &states::hydrogen_radial, py::arg("n"), py::arg("ell"),
          py::arg("r"));

  mod.def("l2_norm", &norms::l2_norm);
  mod.def("h2_norm", &norms::h2_norm);
  mod.def("weighted_h2_norm", &norms::weighted_h2_norm, py::arg("state"), py::arg("ell_weight"));
  mod.def("hardy_norm_estimate",
          [](std::shared_ptr<states::RadialGrid> grid, int ell_max) {
            return norms::hardy_norm_estimate(*grid, ell_max);
          },
          py::arg("grid"), py::arg("ell_max"));
  mod.def("spherical_hardy_check", [](const states::SectorState& s) {
    auto c = norms::spherical_hardy_check(s);
    return py::make_tuple(c.lhs, c.rhs, c.ratio);
  });

  py::class_<cutoff::CutoffProfile>(mod, "CutoffProfile")
      .def_readonly("c0_norm", &cutoff::CutoffProfile::c0_norm)
      .def_readonly("beta", &cutoff::CutoffProfile::beta);
  mod.def("make_cutoff_profile", &cutoff::make_cutoff_profile, py::arg("beta") = 0.5,
          py::arg("quad_tol") = 1e-12);
  mod.def("f_leq", &cutoff::f_leq);
  mod.def("compute_cf1", &cutoff::compute_cf1, py::arg("profile"), py::arg("samples") = 100000);
  mod.def("compute_cf2", &cutoff::compute_cf2, py::arg("profile"), py::arg("samples") = 100000);

  mod.def("trotter_error",
          [](const std::string& scheme, const states::SectorState& state, double c, int sign,
             double T, int L) {
            states::MultiSectorState ms;
            ms.insert(state);
            trotter::SectorContext ctx{state.grid, state.ell, c, sign};
            auto run = trotter::trotter_error(trotter::scheme_from_name(scheme), ctx, ms, T, L);
            return run.error_l2;
          },
          py::arg("scheme"), py::arg("state"), py::arg("c"), py::arg("sign"), py::arg("T"),
          py::arg("L"));

  mod.def("c_n", &bounds::c_n, py::arg("n_particles"), py::arg("c0"));
  mod.def("c_tilde_n", &bounds::c_tilde_n, py::arg("n_particles"), py::arg("c0"),
          py::arg("abs_const") = 1.0);
  mod.def("gamma_rate", [](const std::string& scheme, int ell) {
    auto r = bounds::gamma_rate(trotter::scheme_from_name(scheme), ell);
    return py::make_tuple(r.num, r.den);
  });
  mod.def("theorem1_bound",
          [](int n, double c0, double abs_const, double T, double t, double h2) {
            auto b = bounds::theorem1_bound(n, c0, abs_const, T, t, h2);
            return py::make_tuple(b.headline, b.three_term);
          });
  mod.def("reduce_two_body", [](double m_e, double m_p, double hbar, double e_sq) {
    auto r = bounds::reduce_two_body(m_e, m_p, hbar, e_sq);
    return py::dict(py::arg("M") = r.M, py::arg("mu") = r.mu, py::arg("c_eff") = r.c_eff,
                    py::arg("time_scale") = r.time_scale);
  });

  mod.def("fit_slope", [](const std::vector<double>& t, const std::vector<double>& err) {
    if (t.size() != err.size()) throw std::invalid_argument("length mismatch");
    ratefit::ConvergenceSeries s;
    for (size_t i = 0; i < t.size(); ++i) s.points.push_back({t[i], err[i], 0});
    auto fit = ratefit::fit_slope(s, 0, static_cast<int>(t.size()));
    return py::make_tuple(fit.slope, fit.r_squared);
  });

  mod.def("oracle_strang_residual", [](int dim, std::uint64_t seed, double t, int nodes) {
    auto pair = oracle::make_generator_pair(dim, seed);
    return (oracle::strang_error_integral(pair, t, nodes) - oracle::strang_error_direct(pair, t))
        .norm();
  });
  mod.def("oracle_lie_residual", [](int dim, std::uint64_t seed, double t, int nodes) {
    auto pair = oracle::make_generator_pair(dim, seed);
    return (oracle::lie_error_integral(pair, t, nodes) - oracle::lie_error_direct(pair, t))
        .norm();
  });
}
