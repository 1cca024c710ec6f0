#include "qkt/pairwise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qkt/error.hpp"

namespace qkt {

TwoQubitDensity::TwoQubitDensity(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.dim() != 4) throw Error(ErrorKind::NotPhysical, "two-qubit density matrix must be 4x4");
  const double herm = hermiticity_defect(rho_);
  if (herm > tol::kHermitian)
    throw Error(ErrorKind::NotPhysical, "density matrix not Hermitian: " + std::to_string(herm));
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > tol::kTrace)
    throw Error(ErrorKind::NotPhysical, "density matrix trace " + std::to_string(tr.real()));
  // Remove the sub-tolerance anti-Hermitian residue so downstream solvers
  // see an exactly Hermitian matrix.
  rho_ = (rho_ + rho_.adjoint()) * Complex{0.5};
}

double TwoQubitDensity::swap_asymmetry() const {
  constexpr std::size_t perm[4] = {0, 2, 1, 3};
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m = std::max(m, std::abs(rho_(i, j) - rho_(perm[i], perm[j])));
  return m;
}

double TwoQubitDensity::min_eigenvalue() const { return hermitian_eigen(rho_).values.front(); }

CollectiveExpectations collective_expectations(const SymmetricState& state) {
  const SpinQuantum q(state.qubits());
  const CollectiveOps ops = collective_operators(q);
  const auto& psi = state.amps();

  CollectiveExpectations e;
  e.qubits = state.qubits();
  e.sz = expectation(ops.jz, psi).real();
  e.sz2 = expectation(ops.jz * ops.jz, psi).real();
  e.sxsy_anti = expectation(ops.jx * ops.jy + ops.jy * ops.jx, psi).real();
  // J^2 = j(j+1) on the symmetric subspace.
  e.sx2_plus_sy2 = q.j() * (q.j() + 1.0) - e.sz2;
  e.splus = expectation(ops.jplus, psi);
  e.splus2 = expectation(ops.jplus * ops.jplus, psi);
  e.splus_sz_anti = expectation(ops.jplus * ops.jz + ops.jz * ops.jplus, psi);
  return e;
}

TwoQubitDensity reduce_symmetric(const CollectiveExpectations& e) {
  const int n_int = e.qubits;
  if (n_int < 2) throw Error(ErrorKind::DomainError, "pairwise reduction needs N >= 2, got " + std::to_string(n_int));
  const double n = n_int;
  const double pairs = n * (n - 1.0);

  const double v_plus = (n * n - 2.0 * n + 4.0 * e.sz2 + 4.0 * e.sz * (n - 1.0)) / (4.0 * pairs);
  const double v_minus = (n * n - 2.0 * n + 4.0 * e.sz2 - 4.0 * e.sz * (n - 1.0)) / (4.0 * pairs);
  const Complex x_plus = ((n - 1.0) * e.splus + e.splus_sz_anti) / (2.0 * pairs);
  const Complex x_minus = ((n - 1.0) * e.splus - e.splus_sz_anti) / (2.0 * pairs);
  const double w = (n * n - 4.0 * e.sz2) / (4.0 * pairs);
  const double y = (2.0 * e.sx2_plus_sy2 - n) / (2.0 * pairs);
  const Complex u = e.splus2 / pairs;

  ComplexMatrix rho(4);
  rho(0, 0) = v_plus;
  rho(1, 1) = w;
  rho(2, 2) = w;
  rho(3, 3) = v_minus;
  rho(1, 0) = x_plus;
  rho(2, 0) = x_plus;
  rho(3, 1) = x_minus;
  rho(3, 2) = x_minus;
  rho(3, 0) = u;
  rho(2, 1) = y;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) rho(i, j) = std::conj(rho(j, i));

  TwoQubitDensity out(std::move(rho));
  const double lowest = out.min_eigenvalue();
  if (lowest < -tol::kNotPhysical)
    throw Error(ErrorKind::NotPhysical, "reduced density matrix eigenvalue " + std::to_string(lowest));
  return out;
}

EprExpectations epr_expectations(int qubits) {
  if (qubits < 1) throw Error(ErrorKind::DomainError, "EPR ensembles need N >= 1");
  const EprState state = epr_state(qubits);
  const double j = 0.5 * qubits;
  EprExpectations e;
  e.qubits = qubits;
  // Only diagonal pairs (n, n) carry amplitude, so every expectation reduces
  // to a single sum over n.
  for (int n = 0; n <= qubits; ++n) {
    const double m = n - j;
    const double weight = std::norm(state(n, n));
    e.jz1_jz2 += weight * m * m;
    e.jz1 += weight * m;
    if (n < qubits) {
      const double l = ladder_coefficient(qubits, n);
      e.jp1_jp2 += std::conj(state(n + 1, n + 1)) * state(n, n) * l * l;
    }
  }
  e.jp1_jm2 = 0.0;  // J_1+ J_2- maps (n, n) to (n+1, n-1), off the support
  return e;
}

TwoQubitDensity epr_reduce(int qubits) {
  const EprExpectations e = epr_expectations(qubits);
  const double n = qubits;
  const double sz1 = 2.0 * e.jz1 / n;
  const double zz = 4.0 * e.jz1_jz2 / (n * n);
  ComplexMatrix rho(4);
  rho(0, 0) = 0.25 * (1.0 + 2.0 * sz1 + zz);
  rho(3, 3) = 0.25 * (1.0 - 2.0 * sz1 + zz);
  rho(1, 1) = 0.25 - e.jz1_jz2 / (n * n);
  rho(2, 2) = rho(1, 1);
  rho(3, 0) = e.jp1_jp2 / (n * n);
  rho(0, 3) = std::conj(rho(3, 0));
  rho(2, 1) = e.jp1_jm2 / (n * n);
  rho(1, 2) = std::conj(rho(2, 1));
  return TwoQubitDensity(std::move(rho));
}

TwoQubitDensity partial_trace_pair(std::span<const Complex> psi, int qubit_count, int first, int second) {
  if (qubit_count < 2 || first == second || first < 0 || second < 0 || first >= qubit_count ||
      second >= qubit_count)
    throw Error(ErrorKind::IndexOutOfRange, "invalid qubit pair for partial trace");
  const std::size_t dim = std::size_t{1} << qubit_count;
  if (psi.size() != dim) throw Error(ErrorKind::DimensionMismatch, "state length is not 2^N");

  const std::size_t bit_a = std::size_t{1} << (qubit_count - 1 - first);
  const std::size_t bit_b = std::size_t{1} << (qubit_count - 1 - second);
  const auto pair_index = [&](std::size_t idx) {
    return ((idx & bit_a) ? 2u : 0u) + ((idx & bit_b) ? 1u : 0u);
  };

  ComplexMatrix rho(4);
  for (std::size_t i = 0; i < dim; ++i) {
    if (psi[i] == Complex{}) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      // Same environment bits only.
      if ((i & ~(bit_a | bit_b)) != (j & ~(bit_a | bit_b))) continue;
      rho(pair_index(i), pair_index(j)) += psi[i] * std::conj(psi[j]);
    }
  }
  return TwoQubitDensity(std::move(rho));
}

ComplexVector embed_symmetric(const SymmetricState& state) {
  const int n_qubits = state.qubits();
  if (n_qubits > 20) throw Error(ErrorKind::DimensionTooLarge, "product-space embedding limited to 20 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexVector out(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const int ones = std::popcount(idx);
    const int zeros = n_qubits - ones;
    const double log_binom =
        std::lgamma(n_qubits + 1.0) - std::lgamma(zeros + 1.0) - std::lgamma(ones + 1.0);
    out[idx] = state[static_cast<std::size_t>(zeros)] * std::exp(-0.5 * log_binom);
  }
  return out;
}

}  // namespace qkt
