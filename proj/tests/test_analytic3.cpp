#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qkt/analytic3.hpp"
#include "qkt/kicked_top.hpp"
#include "test_util.hpp"

using namespace qkt;
using namespace qkt::analytic3;
using namespace qkt::testing;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSpot = (std::sqrt(13.0) - 1.0) / 8.0;

KickedTopParams three(double kappa0) { return {SpinQuantum(3), kappa0, kPi / 2.0, 1.0}; }

std::vector<double> kappa_grid(int points) {
  std::vector<double> out;
  for (int k = 0; k < points; ++k) out.push_back(3.0 * kPi * k / (points - 1));
  return out;
}

// [[a, -s conj(b)], [s b, conj(a)]] for parity sign s.
ComplexMatrix su2(Complex a, Complex b, double sign) {
  return ComplexMatrix{{a, -sign * std::conj(b)}, {sign * b, std::conj(a)}};
}

double up_to_sign(const ComplexMatrix& a, const ComplexMatrix& b) {
  return std::min(max_abs_diff(a, b), max_abs_diff(a, b * Complex{-1.0}));
}

}  // namespace

TEST_CASE("parity basis") {
  const ParityBasis basis = build_parity_basis();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const double expected = a == b ? 1.0 : 0.0;
      CHECK(std::abs(inner(basis.product[a], basis.product[b]) - expected) < 1e-15);
      CHECK(std::abs(inner(basis.symmetric[a], basis.symmetric[b]) - expected) < 1e-15);
    }
  CHECK(std::abs(inner(basis.product[0], basis.product[2])) == 0.0);

  const ComplexMatrix parity = parity_product_operator();
  for (std::size_t a = 0; a < 4; ++a) {
    const ComplexVector image = parity.apply(basis.product[a]);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(std::abs(image[i] - static_cast<double>(ParityBasis::kParity[a]) * basis.product[a][i]) < 1e-12);
  }
  CHECK(ParityBasis::kParity[3] == -1);

  // |000> = (Phi1+ + Phi1-) / sqrt(2)
  for (std::size_t i = 0; i < 8; ++i) {
    const Complex sum = (basis.product[0][i] + basis.product[2][i]) / std::sqrt(2.0);
    CHECK(std::abs(sum - (i == 0 ? 1.0 : 0.0)) < 1e-15);
  }
  // The symmetric coordinates describe the same vectors.
  for (std::size_t a = 0; a < 4; ++a) {
    const ComplexVector embedded = embed_symmetric(SymmetricState(basis.symmetric[a]));
    CHECK(std::abs(std::abs(inner(embedded, basis.product[a])) - 1.0) < 1e-14);
  }
}

TEST_CASE("chebyshev_step: examples") {
  const ChebyshevStep zero = chebyshev_step(0, 1.3);
  CHECK(std::abs(zero.alpha - 1.0) < 1e-15);
  CHECK(std::abs(zero.beta) < 1e-15);
  for (double kappa0 : kappa_grid(50)) {
    const ChebyshevStep one = chebyshev_step(1, kappa0);
    CHECK(std::abs(std::abs(one.alpha) - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(one.beta) - std::sqrt(3.0) / 2.0) < 1e-12);
    CHECK(one.chi == doctest::Approx(std::sin(kappa0 / 3.0) / 2.0));
  }
  CHECK_ERROR_KIND(chebyshev_step(-1, 0.0), ErrorKind::DomainError);
}

TEST_CASE("chebyshev_step: identities and trigonometric cross-check") {
  for (double kappa0 : kappa_grid(50)) {
    for (int n : {2, 3, 10, 101, 1000, 10000}) {
      const ChebyshevStep s = chebyshev_step(n, kappa0);
      const double c = s.chi;
      CHECK(std::abs(s.t_n * s.t_n + (1.0 - c * c) * s.u_n_minus_1 * s.u_n_minus_1 - 1.0) < 1e-12);
      CHECK(std::abs(s.u_n_minus_1) <= 2.0 / std::sqrt(3.0) + 1e-12);
      CHECK(std::abs(std::norm(s.alpha) + std::norm(s.beta) - 1.0) < 1e-12);
      const double gamma = std::acos(c);
      CHECK(std::abs(s.t_n - std::cos(n * gamma)) < 1e-9);
      CHECK(std::abs(s.u_n_minus_1 - std::sin(n * gamma) / std::sin(gamma)) < 1e-9);
    }
  }
}

TEST_CASE("rho12_analytic") {
  ComplexMatrix up(4), down(4);
  up(0, 0) = 1.0;
  down(3, 3) = 1.0;
  CHECK(max_abs_diff(rho12_analytic(4, 0.0).matrix(), up) < 1e-12);
  CHECK(max_abs_diff(rho12_analytic(2, 0.0).matrix(), down) < 1e-12);
  CHECK(std::abs(wootters(rho12_analytic(2, kPi / 2.0)).concurrence - kSpot) < 1e-12);
  CHECK(std::abs(concurrence_x_form(rho12_analytic(2, kPi / 2.0)) - kSpot) < 1e-12);

  for (double kappa0 : {1.2, 0.4, 2.4, 6.0}) {
    const SymmetricState start = coherent_from_angles(3, 0.0, 0.0);
    const ComplexMatrix u = floquet(three(kappa0));
    for (int n = 2; n <= 40; n += 2) {
      const TwoQubitDensity simulated = reduce_symmetric(collective_expectations(evolve(start, u, n)));
      const TwoQubitDensity analytic = rho12_analytic(n, kappa0);
      CHECK(max_abs_diff(simulated.matrix(), analytic.matrix()) < 1e-9);
      CHECK(analytic.min_eigenvalue() >= -1e-12);
      CHECK(std::abs(analytic.matrix().trace() - 1.0) < 1e-12);
    }
  }
  CHECK_ERROR_KIND(rho12_analytic(3, 1.0), ErrorKind::DomainError);
  CHECK_ERROR_KIND(rho12_analytic(0, 1.0), ErrorKind::DomainError);
}

TEST_CASE("analytic_concurrence") {
  for (int n = 1; n <= 30; ++n) CHECK(analytic_concurrence(n, 0.0) < 1e-15);
  CHECK(std::abs(analytic_concurrence(2, kPi / 2.0) - kSpot) < 1e-12);
  for (double kappa0 : kappa_grid(20)) {
    const ConcurrenceSeries s = concurrence_series(three(kappa0), 0.0, 0.0, 200);
    for (const SeriesPoint& pt : s.entries) {
      const double c = analytic_concurrence(pt.n, kappa0);
      CHECK(std::abs(pt.concurrence - c) <= 1e-9);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  }
  for (double kappa0 : {0.2, 1.0, 4.4})
    for (int n : {1, 2, 7, 64}) CHECK(std::abs(analytic_concurrence(n, kappa0) - analytic_concurrence(n, kappa0 + 6.0 * kPi)) < 1e-9);
  CHECK_ERROR_KIND(analytic_concurrence(0, 1.0), ErrorKind::DomainError);
}

TEST_CASE("first_kick_concurrence") {
  CHECK(first_kick_concurrence(0.0) == 0.0);
  CHECK(std::abs(first_kick_concurrence(kPi / 2.0) - kSpot) < 1e-12);
  CHECK(std::abs(first_kick_concurrence(3.0 * kPi)) < 1e-12);
  for (double kappa0 : kappa_grid(200)) CHECK(std::abs(first_kick_concurrence(kappa0) - analytic_concurrence(1, kappa0)) < 1e-12);
  CHECK_ERROR_KIND(first_kick_concurrence(-0.1), ErrorKind::DomainError);
  CHECK_ERROR_KIND(first_kick_concurrence(3.0 * kPi + 0.1), ErrorKind::DomainError);

  // C(1) depends on kappa0 through sin(kappa0 / 3) only, so scan the rising
  // half. The maximum is 1/3 at sin(kappa0 / 3) = 1/sqrt(3), not at pi/2.
  double best = 0.0, where = 0.0;
  for (int k = 0; k <= 300000; ++k) {
    const double kappa0 = 1.5 * kPi * k / 300000.0;
    const double c = first_kick_concurrence(kappa0);
    if (c > best) best = c, where = kappa0;
  }
  CHECK(std::abs(where - 3.0 * std::asin(1.0 / std::sqrt(3.0))) < 1e-4);
  CHECK(std::abs(where - 1.8464) < 1e-4);
  CHECK(best == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(best > kSpot + 0.007);
}

TEST_CASE("blocks_u_pm: structure") {
  for (double kappa0 : kappa_grid(50)) {
    const ParityBlocks blocks = blocks_u_pm(kappa0);
    CHECK(blocks.leakage <= 1e-11);
    CHECK(unitarity_defect(blocks.plus) <= 1e-11);
    CHECK(unitarity_defect(blocks.minus) <= 1e-11);
    CHECK(std::abs(std::abs(blocks.plus(1, 0)) - std::sqrt(3.0) / 2.0) < 1e-12);
    const ComplexMatrix stripped = strip_phase(blocks.plus);
    // strip_phase fixes the block up to sign; chi >= 0 on [0, 3 pi].
    CHECK(std::abs(std::abs(stripped.trace().real()) / 2.0 - std::sin(kappa0 / 3.0) / 2.0) < 1e-10);
    CHECK(std::abs(stripped.trace().imag()) < 1e-10);
  }
  const ParityBlocks still = blocks_u_pm(0.0);
  ComplexMatrix fourth = ComplexMatrix::identity(2);
  for (int i = 0; i < 4; ++i) fourth = fourth * still.plus;
  CHECK(std::abs(fourth(0, 1)) < 1e-12);
  CHECK(std::abs(fourth(1, 0)) < 1e-12);
  CHECK(std::abs(fourth(0, 0) - fourth(1, 1)) < 1e-12);
}

TEST_CASE("blocks_u_pm: powers follow the Chebyshev closed form up to n = 10^4") {
  for (double kappa0 : kappa_grid(50)) {
    const ParityBlocks blocks = blocks_u_pm(kappa0);
    const ComplexMatrix plus = strip_phase(blocks.plus);
    const ComplexMatrix minus = strip_phase(blocks.minus);
    const double chi = std::sin(kappa0 / 3.0) / 2.0;
    const double kappa = kappa0 / 6.0;
    // Test-side recurrence: t = T_n, u = U_{n-1}.
    double t_prev = 1.0, t = chi, u_prev = 0.0, u = 1.0;
    ComplexMatrix power_plus = plus, power_minus = minus;
    double worst = 0.0;
    for (int n = 1; n <= 10000; ++n) {
      const Complex alpha = Complex{t, 0.5 * u * std::cos(2.0 * kappa)};
      const Complex beta = std::sqrt(3.0) / 2.0 * u * std::polar(1.0, 2.0 * kappa);
      worst = std::max(worst, up_to_sign(power_plus, su2(alpha, beta, +1.0)));
      worst = std::max(worst, up_to_sign(power_minus, su2(alpha, beta, -1.0)));
      if (n % 997 == 0) {
        const ChebyshevStep s = chebyshev_step(n, kappa0);
        CHECK(std::abs(s.alpha - alpha) < 1e-10);
        CHECK(std::abs(s.beta - beta) < 1e-10);
      }
      const double t_next = 2.0 * chi * t - t_prev;
      const double u_next = 2.0 * chi * u - u_prev;
      t_prev = t, t = t_next, u_prev = u, u = u_next;
      power_plus = power_plus * plus;
      power_minus = power_minus * minus;
    }
    CHECK(worst <= 1e-10);
  }
}
