#include "qkt/analytic3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qkt/error.hpp"
#include "qkt/kicked_top.hpp"

namespace qkt::analytic3 {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;
const Complex kI{0.0, 1.0};

// Symmetric-subspace (Dicke index = number of zeros) coordinates.
constexpr std::size_t kSym111 = 0;
constexpr std::size_t kSymWbar = 1;
constexpr std::size_t kSymW = 2;
constexpr std::size_t kSym000 = 3;

ComplexVector product_w(bool bar) {
  ComplexVector v(8);
  const double amp = 1.0 / kSqrt3;
  // W: one qubit in |1>, Wbar: one qubit in |0>.
  for (std::size_t idx : {1u, 2u, 4u}) v[bar ? 7u - idx : idx] = amp;
  return v;
}

}  // namespace

ParityBasis build_parity_basis() {
  const double h = 1.0 / std::numbers::sqrt2;
  ParityBasis basis;
  const ComplexVector w = product_w(false);
  const ComplexVector wbar = product_w(true);
  for (int k = 0; k < 4; ++k) {
    basis.product[k] = ComplexVector(8);
    basis.symmetric[k] = ComplexVector(4);
  }
  // sign of the i-term per vector: Phi1+ (-), Phi2+ (+), Phi1- (+), Phi2- (-)
  const double ghz_sign[2] = {-1.0, +1.0};
  const double w_sign[2] = {+1.0, -1.0};
  for (int sector = 0; sector < 2; ++sector) {
    auto& ghz = basis.product[2 * sector];
    auto& wv = basis.product[2 * sector + 1];
    ghz[0] = h;
    ghz[7] = ghz_sign[sector] * kI * h;
    for (std::size_t i = 0; i < 8; ++i) wv[i] = h * (w[i] + w_sign[sector] * kI * wbar[i]);

    auto& ghz_sym = basis.symmetric[2 * sector];
    auto& w_sym = basis.symmetric[2 * sector + 1];
    ghz_sym[kSym000] = h;
    ghz_sym[kSym111] = ghz_sign[sector] * kI * h;
    w_sym[kSymW] = h;
    w_sym[kSymWbar] = w_sign[sector] * kI * h;
  }
  return basis;
}

ComplexMatrix parity_product_operator() {
  const ComplexMatrix sy{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
  return kron(kron(sy, sy), sy);
}

ChebyshevStep chebyshev_step(int n, double kappa0) {
  if (n < 0) throw Error(ErrorKind::DomainError, "Chebyshev index must be >= 0");
  ChebyshevStep s;
  s.n = n;
  s.chi = 0.5 * std::sin(kappa0 / 3.0);
  s.gamma = std::acos(s.chi);
  // t_prev = T_{k-1}, t_cur = T_k; likewise u_prev = U_{k-2}, u_cur = U_{k-1}.
  double t_prev = 1.0, t_cur = 1.0;
  double u_prev = 0.0, u_cur = 0.0;
  if (n >= 1) {
    t_prev = 1.0;
    t_cur = s.chi;
    u_prev = 0.0;
    u_cur = 1.0;
    for (int k = 1; k < n; ++k) {
      const double t_next = 2.0 * s.chi * t_cur - t_prev;
      const double u_next = 2.0 * s.chi * u_cur - u_prev;
      t_prev = t_cur;
      t_cur = t_next;
      u_prev = u_cur;
      u_cur = u_next;
    }
  }
  s.t_n = t_cur;
  s.u_n_minus_1 = u_cur;
  const double kappa = kappa0 / 6.0;
  s.alpha = Complex{s.t_n, 0.5 * s.u_n_minus_1 * std::cos(2.0 * kappa)};
  s.beta = 0.5 * kSqrt3 * s.u_n_minus_1 * std::polar(1.0, 2.0 * kappa);
  return s;
}

TwoQubitDensity rho12_analytic(int n, double kappa0) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::DomainError, "analytic rho_12 needs even n >= 2, got " + std::to_string(n));
  const ChebyshevStep s = chebyshev_step(n, kappa0);
  const double a2 = std::norm(s.alpha);
  const double b2 = std::norm(s.beta) / 3.0;
  ComplexMatrix rho(4);
  Complex corner;  // <00|rho|11>
  if (n % 4 == 0) {
    rho(0, 0) = a2;
    rho(3, 3) = b2;
    corner = -kI * s.alpha * std::conj(s.beta) / kSqrt3;
  } else {
    rho(0, 0) = b2;
    rho(3, 3) = a2;
    corner = kI * std::conj(s.alpha) * s.beta / kSqrt3;
  }
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) rho(i, j) = b2;
  rho(0, 3) = corner;
  rho(3, 0) = std::conj(corner);
  return TwoQubitDensity(std::move(rho));
}

double analytic_concurrence(int n, double kappa0) {
  if (n < 1) throw Error(ErrorKind::DomainError, "kick index must be >= 1");
  const int even = (n % 2 == 0) ? n : n + 1;
  const double u = std::abs(chebyshev_step(even, kappa0).u_n_minus_1);
  return u * std::abs(0.5 * u - std::sqrt(std::max(0.0, 1.0 - 0.75 * u * u)));
}

double first_kick_concurrence(double kappa0) {
  constexpr double kSlack = 1e-12;
  if (kappa0 < -kSlack || kappa0 > 3.0 * std::numbers::pi + kSlack)
    throw Error(ErrorKind::DomainError, "first-kick formula holds on [0, 3 pi]; reduce kappa0 modulo 6 pi first");
  const double s = std::sin(kappa0 / 3.0);
  return s * (std::sqrt(1.0 - 0.75 * s * s) - 0.5 * s);
}

ParityBlocks blocks_u_pm(double kappa0) {
  const KickedTopParams params{SpinQuantum(kQubits), kappa0};
  const ComplexMatrix u = floquet(params);
  const ParityBasis basis = build_parity_basis();
  const ComplexMatrix b = ComplexMatrix::from_columns(basis.symmetric);
  const ComplexMatrix in_basis = b.adjoint() * u * b;

  ParityBlocks blocks;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      blocks.plus(i, j) = in_basis(i, j);
      blocks.minus(i, j) = in_basis(i + 2, j + 2);
      blocks.leakage = std::max({blocks.leakage, std::abs(in_basis(i, j + 2)), std::abs(in_basis(i + 2, j))});
    }
  if (blocks.leakage > tol::kBlockLeakage)
    throw Error(ErrorKind::BlockLeakage, "parity sectors couple at " + std::to_string(blocks.leakage));
  return blocks;
}

ComplexMatrix strip_phase(const ComplexMatrix& m) {
  if (m.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "strip_phase expects a 2x2 matrix");
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (std::abs(det) == 0.0) throw Error(ErrorKind::NumericalFailure, "singular block");
  return m * (1.0 / std::sqrt(det));
}

}  // namespace qkt::analytic3
