#include "qkt/kicked_top.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qkt/error.hpp"
#include "qkt/pairwise.hpp"

namespace qkt {

ComplexMatrix floquet(const KickedTopParams& params) {
  const CollectiveOps ops = collective_operators(params.spin);
  const ComplexMatrix rotation = unitary_from_hermitian(ops.jy, params.p);
  const std::size_t d = params.spin.dim();
  const double j = params.spin.j();
  // Twist is diagonal in the J_z basis: scale row n by its phase.
  ComplexMatrix u = rotation;
  for (std::size_t n = 0; n < d; ++n) {
    const double m = static_cast<double>(n) - j;
    const Complex phase = std::polar(1.0, -params.kappa0 * m * m / (2.0 * j));
    for (std::size_t c = 0; c < d; ++c) u(n, c) *= phase;
  }
  return u;
}

ComplexMatrix ising_floquet(const KickedTopParams& params) {
  const int qubits = params.spin.qubits();
  if (qubits > 10) throw Error(ErrorKind::DimensionTooLarge, "Ising form limited to 10 qubits");
  const double j = params.spin.j();

  // Single-qubit rotation exp(-i p sigma_y / 2) = [[c, -s], [s, c]].
  const double c = std::cos(0.5 * params.p);
  const double s = std::sin(0.5 * params.p);
  ComplexMatrix rotation = ComplexMatrix{{c, -s}, {s, c}};
  ComplexMatrix full = rotation;
  for (int q = 1; q < qubits; ++q) full = kron(full, rotation);

  const std::size_t dim = full.dim();
  for (std::size_t idx = 0; idx < dim; ++idx) {
    // sum_{l<l'} sz_l sz_l' = (M^2 - N) / 2 with M = sum_l sz_l.
    const int ones = std::popcount(idx);
    const double total = qubits - 2.0 * ones;
    const double pair_sum = 0.5 * (total * total - qubits);
    const Complex phase = std::polar(1.0, -params.kappa0 / (4.0 * j) * pair_sum);
    for (std::size_t col = 0; col < dim; ++col) full(idx, col) *= phase;
  }
  return full;
}

ComplexMatrix parity_operator(const SpinQuantum& spin) {
  return unitary_from_hermitian(collective_operators(spin).jy, std::numbers::pi);
}

SymmetricState evolve(const SymmetricState& state, const ComplexMatrix& u, int n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "kick count must be >= 0");
  if (u.dim() != state.dim())
    throw Error(ErrorKind::DimensionMismatch, "Floquet dimension " + std::to_string(u.dim()) +
                                                  " vs state dimension " + std::to_string(state.dim()));
  ComplexVector psi = state.amps();
  for (int k = 0; k < n; ++k) psi = u.apply(psi);
  return SymmetricState::normalized(std::move(psi));
}

ConcurrenceSeries concurrence_series(const KickedTopParams& params, double theta0, double phi0, int n_max) {
  if (params.spin.qubits() < 2) throw Error(ErrorKind::DomainError, "concurrence needs at least 2 qubits");
  if (n_max < 1) throw Error(ErrorKind::DomainError, "n_max must be >= 1");
  const ComplexMatrix u = floquet(params);
  ConcurrenceSeries series{params, theta0, phi0, {}};
  series.entries.reserve(static_cast<std::size_t>(n_max));
  SymmetricState state = coherent_from_angles(params.spin.qubits(), theta0, phi0);
  for (int n = 1; n <= n_max; ++n) {
    state = evolve(state, u, 1);
    series.entries.push_back({n, pairwise_concurrence(state).concurrence});
  }
  return series;
}

double time_average(const ConcurrenceSeries& series, int burn_in) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& e : series.entries) {
    if (e.n <= burn_in) continue;
    sum += e.concurrence;
    ++count;
  }
  if (count == 0) throw Error(ErrorKind::EmptyWindow, "no kicks after burn-in " + std::to_string(burn_in));
  return sum / static_cast<double>(count);
}

}  // namespace qkt
