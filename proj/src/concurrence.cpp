#include "qkt/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "qkt/error.hpp"

namespace qkt {

ComplexMatrix spin_flip() {
  return ComplexMatrix{{0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {-1.0, 0.0, 0.0, 0.0}};
}

ComplexMatrix wootters_product(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "Wootters product needs a 4x4 matrix");
  const ComplexMatrix flip = spin_flip();
  return rho * flip * rho.conj() * flip;
}

ConcurrenceResult wootters(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw Error(ErrorKind::DimensionMismatch, "concurrence needs a 4x4 density matrix");
  if (std::abs(rho.trace() - 1.0) > tol::kTrace)
    throw Error(ErrorKind::NotPhysical, "density matrix trace " + std::to_string(rho.trace().real()));
  const double herm = hermiticity_defect(rho);
  if (herm > tol::kHermitian) throw Error(ErrorKind::NotPhysical, "density matrix not Hermitian");

  const EigenDecomposition eig = hermitian_eigen(rho);
  if (eig.values.front() < -tol::kNotPhysical)
    throw Error(ErrorKind::NotPhysical, "density matrix eigenvalue " + std::to_string(eig.values.front()));

  std::vector<ComplexVector> support;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] <= tol::kRankCutoff) continue;
    ComplexVector col = eig.vectors.column(k);
    const double scale = std::sqrt(eig.values[k]);
    for (auto& z : col) z *= scale;
    support.push_back(std::move(col));
  }
  if (support.empty()) throw Error(ErrorKind::NotPhysical, "density matrix has no support");

  // tau = W^T S W; its nonzero singular values are the lambdas.
  const ComplexMatrix flip = spin_flip();
  const std::size_t rank = support.size();
  ComplexMatrix tau(rank);
  for (std::size_t a = 0; a < rank; ++a) {
    const ComplexVector flipped = flip.apply(support[a]);
    for (std::size_t b = 0; b < rank; ++b) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < 4; ++r) acc += flipped[r] * support[b][r];
      tau(a, b) = acc;
    }
  }
  const ComplexVector mu = eigvals_general_small(tau.adjoint() * tau);

  std::array<double, 4> values{};
  for (std::size_t k = 0; k < rank; ++k) {
    values[k] = mu[k].real();
    if (values[k] < -tol::kClampProduct)
      throw Error(ErrorKind::NumericalFailure, "Wootters product eigenvalue " + std::to_string(values[k]));
  }
  std::sort(values.begin(), values.end(), std::greater<>());

  ConcurrenceResult out;
  for (std::size_t k = 0; k < 4; ++k) out.lambdas[k] = std::sqrt(std::max(values[k], 0.0));
  out.c_lambda = out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3];
  out.concurrence = std::max(0.0, out.c_lambda);
  return out;
}

ConcurrenceResult wootters(const TwoQubitDensity& rho) { return wootters(rho.matrix()); }

double concurrence_dicke_form(const TwoQubitDensity& rho) {
  const double off = std::max({std::abs(rho.u()), std::abs(rho.x_plus()), std::abs(rho.x_minus()),
                               std::abs(rho.y().imag())});
  if (off > tol::kStructure)
    throw Error(ErrorKind::WrongStructure, "not of Dicke form (u, x+-, Im y up to " + std::to_string(off) + ")");
  return 2.0 * std::max(0.0, rho.y().real() - std::sqrt(std::max(0.0, rho.v_plus() * rho.v_minus())));
}

double concurrence_x_form(const TwoQubitDensity& rho) {
  const double off = std::max(std::abs(rho.x_plus()), std::abs(rho.x_minus()));
  if (off > tol::kStructure)
    throw Error(ErrorKind::WrongStructure, "not an X state (x+- up to " + std::to_string(off) + ")");
  const double vv = std::sqrt(std::max(0.0, rho.v_plus() * rho.v_minus()));
  // sqrt(rho_11 rho_22) is w for swap-symmetric input and keeps the formula
  // exact for general X states.
  const double ww = std::sqrt(std::max(0.0, rho.matrix()(1, 1).real() * rho.matrix()(2, 2).real()));
  return 2.0 * std::max({0.0, std::abs(rho.u()) - ww, std::abs(rho.y()) - vv});
}

double dicke_concurrence_closed(int qubits, double m) {
  if (qubits < 2) throw Error(ErrorKind::DomainError, "Dicke concurrence needs N >= 2");
  const double n = qubits;
  if (std::abs(m) > 0.5 * n + 1e-12) throw Error(ErrorKind::DomainError, "|M| exceeds N/2");
  const double twice = 2.0 * m;
  if (std::abs(twice - std::round(twice)) > 1e-12 ||
      (static_cast<long>(std::llround(twice)) - qubits) % 2 != 0)
    throw Error(ErrorKind::DomainError, "M must equal N/2 modulo 1");
  const double a = n * n - 4.0 * m * m;
  const double b = (n - 2.0) * (n - 2.0) - 4.0 * m * m;
  // b < 0 only at |M| = N/2, where a = 0 as well.
  const double c = (a - std::sqrt(std::max(0.0, a * b))) / (2.0 * n * (n - 1.0));
  return std::max(0.0, c);
}

double binary_entropy(double p) {
  const auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

double entanglement_of_formation(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0))
    throw Error(ErrorKind::DomainError, "concurrence must lie in [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - concurrence * concurrence)));
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  if (std::abs(rho.trace() - 1.0) > tol::kTrace) throw Error(ErrorKind::NotPhysical, "trace must be 1");
  if (hermiticity_defect(rho) > tol::kHermitian) throw Error(ErrorKind::NotPhysical, "not Hermitian");
  const EigenDecomposition eig = hermitian_eigen(rho);
  double entropy = 0.0;
  for (double t : eig.values) {
    if (t < -tol::kNotPhysical) throw Error(ErrorKind::NotPhysical, "negative eigenvalue " + std::to_string(t));
    if (t > 0.0) entropy -= t * std::log2(t);
  }
  return std::clamp(entropy, 0.0, std::log2(static_cast<double>(rho.dim())));
}

ConcurrenceResult pairwise_concurrence(const SymmetricState& state) {
  return wootters(reduce_symmetric(collective_expectations(state)));
}

}  // namespace qkt
