#include "qkt/spin.hpp"

#include <cmath>
#include <string>

#include "qkt/error.hpp"

namespace qkt {

namespace {

// sqrt(binom(N, n)) via log-gamma; exact enough for N in the hundreds.
double sqrt_binomial(int big_n, int n) {
  const double log_binom = std::lgamma(big_n + 1.0) - std::lgamma(n + 1.0) - std::lgamma(big_n - n + 1.0);
  return std::exp(0.5 * log_binom);
}

Complex int_power(Complex base, int exponent) {
  Complex acc = 1.0;
  for (int k = 0; k < exponent; ++k) acc *= base;
  return acc;
}

void require_qubits(int qubits, int min) {
  if (qubits < min)
    throw Error(ErrorKind::DomainError, "qubit count must be >= " + std::to_string(min) + ", got " + std::to_string(qubits));
}

}  // namespace

SpinQuantum::SpinQuantum(int two_j) : two_j_(two_j) {
  if (two_j < 1) throw Error(ErrorKind::DomainError, "2j must be >= 1, got " + std::to_string(two_j));
}

SymmetricState::SymmetricState(ComplexVector amps) : amps_(std::move(amps)) {
  if (amps_.size() < 2) throw Error(ErrorKind::DomainError, "symmetric state needs at least one qubit");
  const double norm = norm2(amps_);
  if (std::abs(norm - 1.0) > tol::kNorm)
    throw Error(ErrorKind::DomainError, "state not normalized: ||psi|| = " + std::to_string(norm));
}

SymmetricState SymmetricState::normalized(ComplexVector amps) {
  const double norm = norm2(amps);
  if (norm == 0.0 || !std::isfinite(norm)) throw Error(ErrorKind::DomainError, "cannot normalize a zero vector");
  for (auto& a : amps) a /= norm;
  return SymmetricState(std::move(amps));
}

CollectiveOps collective_operators(const SpinQuantum& q) {
  const std::size_t d = q.dim();
  const double j = q.j();
  CollectiveOps ops{ComplexMatrix(d), ComplexMatrix(d), ComplexMatrix(d), ComplexMatrix(d), ComplexMatrix(d)};
  for (std::size_t n = 0; n < d; ++n) {
    const double m = static_cast<double>(n) - j;
    ops.jz(n, n) = m;
    if (n + 1 < d) ops.jplus(n + 1, n) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  ops.jminus = ops.jplus.adjoint();
  ops.jx = (ops.jplus + ops.jminus) * Complex{0.5};
  ops.jy = (ops.jplus - ops.jminus) * Complex{0.0, -0.5};
  return ops;
}

double ladder_coefficient(int qubits, int n) {
  const double j = 0.5 * qubits;
  const double m = n - j;
  return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

void fix_global_phase(ComplexVector& amps) {
  for (const auto& a : amps) {
    if (a == Complex{}) continue;
    const Complex rot = std::conj(a) / std::abs(a);
    for (auto& b : amps) b *= rot;
    return;
  }
}

SymmetricState number_state(int qubits, int n) {
  require_qubits(qubits, 1);
  if (n < 0 || n > qubits)
    throw Error(ErrorKind::IndexOutOfRange,
                "number state n = " + std::to_string(n) + " outside [0, " + std::to_string(qubits) + "]");
  ComplexVector amps(static_cast<std::size_t>(qubits) + 1);
  amps[static_cast<std::size_t>(n)] = 1.0;
  return SymmetricState(std::move(amps));
}

SymmetricState dicke_state(int qubits, double m) {
  require_qubits(qubits, 1);
  const double n = m + 0.5 * qubits;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) > 1e-12)
    throw Error(ErrorKind::DomainError, "M must equal N/2 modulo 1");
  if (rounded < 0 || rounded > qubits)
    throw Error(ErrorKind::DomainError, "|M| exceeds N/2");
  return number_state(qubits, static_cast<int>(rounded));
}

SymmetricState spin_coherent(int qubits, Complex eta) {
  require_qubits(qubits, 1);
  const double prefactor = std::pow(1.0 + std::norm(eta), -0.5 * qubits);
  ComplexVector amps(static_cast<std::size_t>(qubits) + 1);
  Complex power = 1.0;
  for (int n = 0; n <= qubits; ++n) {
    amps[static_cast<std::size_t>(n)] = prefactor * sqrt_binomial(qubits, n) * power;
    power *= eta;
  }
  fix_global_phase(amps);
  return SymmetricState::normalized(std::move(amps));
}

SymmetricState coherent_from_angles(int qubits, double theta, double phi) {
  require_qubits(qubits, 1);
  const Complex up = std::cos(0.5 * theta);
  const Complex down = std::polar(1.0, phi) * std::sin(0.5 * theta);
  ComplexVector amps(static_cast<std::size_t>(qubits) + 1);
  for (int n = 0; n <= qubits; ++n)
    amps[static_cast<std::size_t>(n)] = sqrt_binomial(qubits, n) * int_power(up, n) * int_power(down, qubits - n);
  fix_global_phase(amps);
  return SymmetricState::normalized(std::move(amps));
}

EprState epr_state(int qubits) {
  require_qubits(qubits, 1);
  const std::size_t d = static_cast<std::size_t>(qubits) + 1;
  EprState s{qubits, ComplexVector(d * d)};
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t n = 0; n < d; ++n) s.amps[n * d + n] = amp;
  return s;
}

}  // namespace qkt
