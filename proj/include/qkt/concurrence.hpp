#pragma once

#include <array>

#include "qkt/numerics.hpp"
#include "qkt/pairwise.hpp"
#include "qkt/spin.hpp"

namespace qkt {

struct ConcurrenceResult {
  double concurrence = 0.0;        // max(0, c_lambda)
  double c_lambda = 0.0;           // lambda_1 - lambda_2 - lambda_3 - lambda_4
  std::array<double, 4> lambdas{}; // descending
};

/// sigma_y (x) sigma_y in the {|00>,|01>,|10>,|11>} basis.
ComplexMatrix spin_flip();

/// rho (sigma_y x sigma_y) rho* (sigma_y x sigma_y)
ComplexMatrix wootters_product(const ComplexMatrix& rho);

/// Wootters concurrence of an arbitrary two-qubit density matrix.
///
/// The lambdas are the square roots of the eigenvalues of
/// wootters_product(rho). They are computed on the support of rho: with
/// rho = W W^dagger over its numerically nonzero eigenvalues (> 1e-13),
/// the nonzero eigenvalues of the product coincide with those of
/// tau^dagger tau, tau = W^T (sigma_y x sigma_y) W, and the rest are zero.
/// The small eigenproblem goes through eigvals_general_small.
///
/// Throws NotPhysical for eigenvalues of rho below -1e-7 and
/// NumericalFailure for product eigenvalues below -1e-7.
ConcurrenceResult wootters(const ComplexMatrix& rho);
ConcurrenceResult wootters(const TwoQubitDensity& rho);

/// 2 max{0, y - sqrt(v+ v-)}; requires u = x+ = x- = 0 and real y.
double concurrence_dicke_form(const TwoQubitDensity& rho);

/// 2 max{0, |u| - w, |y| - sqrt(v+ v-)}; requires x+ = x- = 0. For input that
/// is not swap-symmetric, w is read as sqrt(rho_11 rho_22).
double concurrence_x_form(const TwoQubitDensity& rho);

/// Dicke-state concurrence from N and M alone.
double dicke_concurrence_closed(int qubits, double m);

double binary_entropy(double p);
double entanglement_of_formation(double concurrence);

/// -sum t log2 t over the eigenvalues of rho.
double von_neumann_entropy(const ComplexMatrix& rho);

/// wootters(reduce_symmetric(collective_expectations(state))).
ConcurrenceResult pairwise_concurrence(const SymmetricState& state);

}  // namespace qkt
