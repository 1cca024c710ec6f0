#pragma once

#include <array>

#include "qkt/numerics.hpp"
#include "qkt/pairwise.hpp"

// Exactly solvable three-qubit (j = 3/2) kicked top.
//
// The symmetric subspace {|000>, |W>, |Wbar>, |111>} splits under the
// parity (x)^3 sigma_y into two 2-dimensional blocks spanned by
//   Phi1+- = (|000> -+ i|111>) / sqrt(2),
//   Phi2+- = (|W>   +- i|Wbar>) / sqrt(2).
// On each block the Floquet map is, up to a phase, the SU(2) matrix
// [[alpha_1, -+conj(beta_1)], [+-beta_1, conj(alpha_1)]], so its n-th power
// is given by Chebyshev polynomials of chi = sin(kappa0 / 3) / 2.
namespace qkt::analytic3 {

inline constexpr int kQubits = 3;

struct ParityBasis {
  // Order: Phi1+, Phi2+, Phi1-, Phi2-.
  std::array<ComplexVector, 4> product;    // over |abc>, index 4a + 2b + c
  std::array<ComplexVector, 4> symmetric;  // over Dicke index n (zeros count)
  static constexpr std::array<int, 4> kParity = {+1, +1, -1, -1};
};

ParityBasis build_parity_basis();

/// (x)^3 sigma_y on the 8-dimensional product space.
ComplexMatrix parity_product_operator();

struct ChebyshevStep {
  int n = 0;
  double chi = 0.0;       // sin(kappa0 / 3) / 2
  double gamma = 0.0;     // cos(gamma) = chi
  double t_n = 1.0;       // T_n(chi)
  double u_n_minus_1 = 0; // U_{n-1}(chi)
  Complex alpha;
  Complex beta;
};

/// T_n and U_{n-1} by the three-term recurrence, then
/// alpha_n = T_n + (i/2) U_{n-1} cos(2 kappa), beta_n = (sqrt(3)/2) U_{n-1} e^{2 i kappa},
/// with kappa = kappa0 / 6.
ChebyshevStep chebyshev_step(int n, double kappa0);

/// Reduced two-qubit state after n kicks from |000>; requires even n >= 2.
/// For n = 0 mod 4 the state is alpha|000> + i beta|Wbar>, for n = 2 mod 4 it
/// is i alpha|111> - beta|W> (global phases dropped).
TwoQubitDensity rho12_analytic(int n, double kappa0);

/// Closed-form concurrence C(n, kappa0) from |000>; odd n use n + 1.
double analytic_concurrence(int n, double kappa0);

/// C(1, kappa0) = s[(1 - 3 s^2 / 4)^(1/2) - s / 2], s = sin(kappa0/3), on [0, 3 pi].
double first_kick_concurrence(double kappa0);

struct ParityBlocks {
  ComplexMatrix plus{2};
  ComplexMatrix minus{2};
  double leakage = 0.0;  // max |entry| coupling the two parity sectors
};

/// Conjugates the j = 3/2 Floquet matrix into the parity basis and splits
/// the blocks. Throws BlockLeakage if the sectors couple above 1e-9.
ParityBlocks blocks_u_pm(double kappa0);

/// m / sqrt(det m) for a 2x2 matrix; the result has unit determinant and is
/// fixed up to an overall sign.
ComplexMatrix strip_phase(const ComplexMatrix& m);

}  // namespace qkt::analytic3
