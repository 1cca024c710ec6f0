#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <array>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qkt/analytic3.hpp"
#include "qkt/classical.hpp"
#include "qkt/concurrence.hpp"
#include "qkt/error.hpp"
#include "qkt/kicked_top.hpp"
#include "qkt/pairwise.hpp"
#include "qkt/spin.hpp"

namespace py = pybind11;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

qkt::ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1) || a.shape(0) == 0)
    throw std::invalid_argument("expected a non-empty square matrix");
  const auto dim = static_cast<std::size_t>(a.shape(0));
  qkt::ComplexMatrix m(dim);
  auto r = a.unchecked<2>();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = r(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  return m;
}

CArray to_array(const qkt::ComplexMatrix& m) {
  const auto dim = static_cast<py::ssize_t>(m.dim());
  CArray out({dim, dim});
  auto w = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < dim; ++i)
    for (py::ssize_t j = 0; j < dim; ++j) w(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return out;
}

CArray to_array(const qkt::ComplexVector& v) {
  CArray out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

qkt::SymmetricState state_from(const CArray& amps) {
  if (amps.ndim() != 1) throw std::invalid_argument("expected a 1-d amplitude array");
  return qkt::SymmetricState(qkt::ComplexVector(amps.data(), amps.data() + amps.size()));
}

py::dict result_dict(const qkt::ConcurrenceResult& r) {
  py::dict d;
  d["concurrence"] = r.concurrence;
  d["c_lambda"] = r.c_lambda;
  d["lambdas"] = std::vector<double>(r.lambdas.begin(), r.lambdas.end());
  return d;
}

}  // namespace

PYBIND11_MODULE(_qkt, m) {
  m.doc() = "Pairwise entanglement in symmetric multi-qubit states and the quantum kicked top";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qkt::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  // states
  m.def("dicke_state", [](int n, double mz) { return to_array(qkt::dicke_state(n, mz).amps()); },
        py::arg("qubits"), py::arg("m"));
  m.def("spin_coherent", [](int n, std::complex<double> eta) { return to_array(qkt::spin_coherent(n, eta).amps()); },
        py::arg("qubits"), py::arg("eta"));
  m.def("coherent_from_angles",
        [](int n, double theta, double phi) { return to_array(qkt::coherent_from_angles(n, theta, phi).amps()); },
        py::arg("qubits"), py::arg("theta"), py::arg("phi"));

  // two-qubit reductions and concurrence
  m.def("reduce_symmetric",
        [](const CArray& amps) {
          return to_array(qkt::reduce_symmetric(qkt::collective_expectations(state_from(amps))).matrix());
        },
        py::arg("amps"), "Two-qubit reduced density matrix of a symmetric state given over the Dicke basis.");
  m.def("epr_reduce", [](int n) { return to_array(qkt::epr_reduce(n).matrix()); }, py::arg("qubits"));
  m.def("wootters", [](const CArray& rho) { return result_dict(qkt::wootters(to_matrix(rho))); }, py::arg("rho"));
  m.def("concurrence", [](const CArray& rho) { return qkt::wootters(to_matrix(rho)).concurrence; }, py::arg("rho"));
  m.def("pairwise_concurrence", [](const CArray& amps) { return result_dict(qkt::pairwise_concurrence(state_from(amps))); },
        py::arg("amps"));
  m.def("dicke_concurrence_closed", &qkt::dicke_concurrence_closed, py::arg("qubits"), py::arg("m"));
  m.def("entanglement_of_formation", &qkt::entanglement_of_formation, py::arg("concurrence"));
  m.def("binary_entropy", &qkt::binary_entropy, py::arg("p"));

  // kicked top
  m.def("floquet",
        [](int two_j, double kappa0, double p) {
          return to_array(qkt::floquet(qkt::KickedTopParams{qkt::SpinQuantum(two_j), kappa0, p, 1.0}));
        },
        py::arg("two_j"), py::arg("kappa0"), py::arg("p") = std::numbers::pi / 2.0);
  m.def("concurrence_series",
        [](int two_j, double kappa0, double theta0, double phi0, int n_max, double p) {
          const auto s = qkt::concurrence_series(qkt::KickedTopParams{qkt::SpinQuantum(two_j), kappa0, p, 1.0},
                                                 theta0, phi0, n_max);
          std::vector<double> c;
          c.reserve(s.entries.size());
          for (const auto& e : s.entries) c.push_back(e.concurrence);
          return c;
        },
        py::arg("two_j"), py::arg("kappa0"), py::arg("theta0") = 0.0, py::arg("phi0") = 0.0, py::arg("n_max") = 200,
        py::arg("p") = std::numbers::pi / 2.0, "Concurrence after kicks n = 1..n_max.");

  // three-qubit closed forms
  m.def("analytic_concurrence", &qkt::analytic3::analytic_concurrence, py::arg("n"), py::arg("kappa0"));
  m.def("first_kick_concurrence", &qkt::analytic3::first_kick_concurrence, py::arg("kappa0"));
  m.def("chebyshev_step",
        [](int n, double kappa0) {
          const auto s = qkt::analytic3::chebyshev_step(n, kappa0);
          py::dict d;
          d["n"] = s.n;
          d["chi"] = s.chi;
          d["t_n"] = s.t_n;
          d["u_n_minus_1"] = s.u_n_minus_1;
          d["alpha"] = s.alpha;
          d["beta"] = s.beta;
          return d;
        },
        py::arg("n"), py::arg("kappa0"));

  // classical limit
  m.def("classical_map",
        [](std::array<double, 3> pt, double kappa0, double p) {
          return qkt::classical::classical_map(qkt::classical::SpherePoint(pt[0], pt[1], pt[2]), kappa0, p).vec();
        },
        py::arg("point"), py::arg("kappa0"), py::arg("p") = std::numbers::pi / 2.0);
  m.def("lyapunov",
        [](double kappa0, std::array<double, 3> pt, int steps, int transient, std::uint64_t seed, double p) {
          return qkt::classical::lyapunov(kappa0, p, qkt::classical::SpherePoint(pt[0], pt[1], pt[2]), steps, transient,
                                          seed)
              .lambda;
        },
        py::arg("kappa0"), py::arg("point"), py::arg("steps"), py::arg("transient") = 100, py::arg("seed") = 0,
        py::arg("p") = std::numbers::pi / 2.0);
}
