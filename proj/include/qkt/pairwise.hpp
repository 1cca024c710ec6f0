#pragma once

#include "qkt/numerics.hpp"
#include "qkt/spin.hpp"

namespace qkt {

/// Collective-spin moments of a symmetric state that fix its two-qubit
/// reduced density matrix.
struct CollectiveExpectations {
  int qubits = 0;
  double sz = 0.0;             // <S_z>
  double sz2 = 0.0;            // <S_z^2>
  double sxsy_anti = 0.0;      // <[S_x, S_y]_+>
  double sx2_plus_sy2 = 0.0;   // <S_x^2 + S_y^2>
  Complex splus;               // <S_+>
  Complex splus2;              // <S_+^2>
  Complex splus_sz_anti;       // <[S_+, S_z]_+>
};

/// Two-qubit density matrix on {|00>, |01>, |10>, |11>} (|0> has sigma_z = +1).
///
/// Named views follow the symmetric-state parameterization:
///   v+ = rho(0,0), v- = rho(3,3), w = rho(1,1) = rho(2,2),
///   y  = rho(2,1) = <sigma_1+ sigma_2->,
///   u  = rho(3,0) = <sigma_1+ sigma_2+>,
///   x+ = rho(1,0) = rho(2,0), x- = rho(3,1) = rho(3,2).
class TwoQubitDensity {
 public:
  // Throws NotPhysical unless 4x4, Hermitian within 1e-10 and unit trace
  // within 1e-10. Positivity is checked by the consumers that need it.
  explicit TwoQubitDensity(ComplexMatrix rho);

  const ComplexMatrix& matrix() const noexcept { return rho_; }

  double v_plus() const { return rho_(0, 0).real(); }
  double v_minus() const { return rho_(3, 3).real(); }
  double w() const { return rho_(1, 1).real(); }
  Complex y() const { return rho_(2, 1); }
  Complex u() const { return rho_(3, 0); }
  Complex x_plus() const { return rho_(1, 0); }
  Complex x_minus() const { return rho_(3, 1); }

  // max deviation under exchange of the two qubits (rows/cols 1 <-> 2)
  double swap_asymmetry() const;
  double min_eigenvalue() const;

 private:
  ComplexMatrix rho_;
};

CollectiveExpectations collective_expectations(const SymmetricState& state);

/// Assembles rho_12 from collective moments. Throws DomainError for N < 2 and
/// NotPhysical when the result has an eigenvalue below -1e-7.
TwoQubitDensity reduce_symmetric(const CollectiveExpectations& exp);

struct EprExpectations {
  int qubits = 0;
  double jz1_jz2 = 0.0;   // <J_1z J_2z>
  Complex jp1_jp2;        // <J_1+ J_2+>
  Complex jp1_jm2;        // <J_1+ J_2->
  double jz1 = 0.0;       // <J_1z>
};

/// Closed-form sums over the diagonal two-ensemble state.
EprExpectations epr_expectations(int qubits);

/// rho for one qubit from each EPR-correlated ensemble.
TwoQubitDensity epr_reduce(int qubits);

/// Literal partial trace of a pure state on 2^k qubits down to qubits
/// (first, second); qubit 0 is the most significant bit. Used for
/// cross-checks against the collective-moment route.
TwoQubitDensity partial_trace_pair(std::span<const Complex> psi, int qubit_count, int first, int second);

/// Embeds a symmetric state into the 2^N product space.
ComplexVector embed_symmetric(const SymmetricState& state);

}  // namespace qkt
