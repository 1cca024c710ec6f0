#pragma once

#include <cstddef>
#include <vector>

#include "qkt/numerics.hpp"

namespace qkt {

/// Spin quantum number j = two_j / 2, realized as 2j qubits in the
/// permutation-symmetric subspace.
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_j);

  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  int qubits() const noexcept { return two_j_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(two_j_) + 1; }

 private:
  int two_j_;
};

/// Pure symmetric N-qubit state over the Dicke basis |n>_N, n = 0..N, where
/// n counts qubits in |0> and J_z = n - N/2.
class SymmetricState {
 public:
  // Throws DomainError unless amps.size() >= 2 and ||amps|| = 1 within 1e-12.
  explicit SymmetricState(ComplexVector amps);
  // Normalizes first; throws DomainError on a zero vector.
  static SymmetricState normalized(ComplexVector amps);

  int qubits() const noexcept { return static_cast<int>(amps_.size()) - 1; }
  std::size_t dim() const noexcept { return amps_.size(); }
  const ComplexVector& amps() const noexcept { return amps_; }
  Complex operator[](std::size_t n) const { return amps_[n]; }

 private:
  ComplexVector amps_;
};

struct CollectiveOps {
  ComplexMatrix jx, jy, jz, jplus, jminus;
};

CollectiveOps collective_operators(const SpinQuantum& q);

// Rotates the vector so its lowest-index nonzero entry is real and >= 0.
void fix_global_phase(ComplexVector& amps);

SymmetricState number_state(int qubits, int n);

/// Dicke state |N/2, M>; M must satisfy |M| <= N/2 and M = N/2 (mod 1).
SymmetricState dicke_state(int qubits, double m);

/// amps[n] = (1+|eta|^2)^(-N/2) binom(N,n)^(1/2) eta^n.
SymmetricState spin_coherent(int qubits, Complex eta);

/// Product of qubits cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, so that
/// <J>/j = (sin theta cos phi, sin theta sin phi, cos theta). theta = 0 is
/// the all-|0> pole (m = +N/2).
SymmetricState coherent_from_angles(int qubits, double theta, double phi);

/// Two-ensemble state sum_n |n>|n> / sqrt(N+1), stored over (n1, n2) with
/// index n1 * (N+1) + n2.
struct EprState {
  int qubits;
  ComplexVector amps;

  Complex operator()(int n1, int n2) const {
    return amps[static_cast<std::size_t>(n1) * (static_cast<std::size_t>(qubits) + 1) + static_cast<std::size_t>(n2)];
  }
};

EprState epr_state(int qubits);

// <m+1|J+|m> for the Dicke index n (m = n - N/2).
double ladder_coefficient(int qubits, int n);

}  // namespace qkt
