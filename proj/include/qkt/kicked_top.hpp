#pragma once

#include <numbers>
#include <vector>

#include "qkt/concurrence.hpp"
#include "qkt/numerics.hpp"
#include "qkt/spin.hpp"

namespace qkt {

struct KickedTopParams {
  SpinQuantum spin{1};
  double kappa0 = 0.0;                // twist strength per kick
  double p = std::numbers::pi / 2.0;  // precession angle per period
  double tau = 1.0;                   // kick period; bookkeeping only
};

// kappa = kappa0 / 6, the labeling used for the three-qubit figures.
inline double kappa0_from_kappa(double kappa) { return 6.0 * kappa; }

struct SeriesPoint {
  int n = 0;
  double concurrence = 0.0;
};

struct ConcurrenceSeries {
  KickedTopParams params;
  double theta0 = 0.0;
  double phi0 = 0.0;
  std::vector<SeriesPoint> entries;  // n = 1..n_max
};

/// U = exp[-i (kappa0 / 2j) J_z^2] exp[-i p J_y] on the symmetric subspace.
/// The rotation acts first within each period.
ComplexMatrix floquet(const KickedTopParams& params);

/// Same map on the full 2j-qubit product space in its Ising form,
/// exp(-i kappa0/(4j) sum_{l<l'} sz_l sz_l') exp(-i p/2 sum_l sy_l).
/// Restricted to the symmetric subspace it equals floquet() times the
/// global phase exp(i kappa0 / 4). Limited to 2j <= 10.
ComplexMatrix ising_floquet(const KickedTopParams& params);

/// exp(-i pi J_y): the up-down parity on the symmetric subspace.
ComplexMatrix parity_operator(const SpinQuantum& spin);

/// U^n |psi> by repeated application. Throws DimensionMismatch.
SymmetricState evolve(const SymmetricState& state, const ComplexMatrix& u, int n);

/// Pairwise concurrence after each kick n = 1..n_max, starting from the
/// coherent state at (theta0, phi0).
ConcurrenceSeries concurrence_series(const KickedTopParams& params, double theta0, double phi0, int n_max);

/// Mean concurrence over kicks n > burn_in. Throws EmptyWindow.
double time_average(const ConcurrenceSeries& series, int burn_in);

}  // namespace qkt
