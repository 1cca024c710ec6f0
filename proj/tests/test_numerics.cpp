#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qkt/concurrence.hpp"
#include "qkt/numerics.hpp"
#include "qkt/spin.hpp"
#include "test_util.hpp"

using namespace qkt;
using namespace qkt::testing;

namespace {

// Greedy multiset distance between two spectra.
double spectrum_distance(ComplexVector a, ComplexVector b) {
  REQUIRE(a.size() == b.size());
  double worst = 0.0;
  for (const Complex& x : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](const Complex& l, const Complex& r) { return std::abs(l - x) < std::abs(r - x); });
    worst = std::max(worst, std::abs(*best - x));
    b.erase(best);
  }
  return worst;
}

ComplexVector as_complex(const std::vector<double>& v) { return ComplexVector(v.begin(), v.end()); }

}  // namespace

TEST_CASE("hermitian_eigen: small known spectra") {
  const EigenDecomposition id = hermitian_eigen(ComplexMatrix::identity(3));
  for (double v : id.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

  const EigenDecomposition sy = hermitian_eigen(pauli_y());
  CHECK(sy.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sy.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  const ComplexVector v = sy.vectors.column(1);
  CHECK(std::abs(v[1] / v[0] - kI) < 1e-12);
}

TEST_CASE("hermitian_eigen: J_y for j = 1 against its characteristic polynomial") {
  const CollectiveOps ops = collective_operators(SpinQuantum(2));
  const EigenDecomposition eig = hermitian_eigen(ops.jy);
  // det(J_y - x I) = -x^3 + x, roots -1, 0, 1; evaluated with the LU oracle.
  for (double x : eig.values) {
    ComplexMatrix shifted = ops.jy;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= x;
    CHECK(std::abs(determinant(shifted)) < 1e-12);
  }
  CHECK(eig.values[0] == doctest::Approx(-1.0));
  CHECK(std::abs(eig.values[1]) < 1e-13);
  CHECK(eig.values[2] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen: rejects non-Hermitian input") {
  CHECK_ERROR_KIND(hermitian_eigen(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), ErrorKind::NotHermitian);
}

TEST_CASE("hermitian_eigen: reconstruction, orthonormality, trace and determinant") {
  std::mt19937_64 rng(11);
  for (std::size_t dim : {2u, 4u, 9u, 20u, 51u}) {
    const ComplexMatrix h = random_hermitian(rng, dim);
    const EigenDecomposition eig = hermitian_eigen(h);
    CHECK(std::is_sorted(eig.values.begin(), eig.values.end()));
    const ComplexMatrix& v = eig.vectors;
    const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(std::span<const double>(eig.values)) * v.adjoint();
    CHECK(max_abs_diff(rebuilt, h) < 1e-10 * static_cast<double>(dim));
    CHECK(unitarity_defect(v) < 1e-12 * static_cast<double>(dim));
    double sum = 0.0;
    for (double x : eig.values) sum += x;
    CHECK(std::abs(sum - h.trace().real()) < 1e-10 * static_cast<double>(dim));
    if (dim <= 4) {
      double product = 1.0;
      for (double x : eig.values) product *= x;
      CHECK(std::abs(product - determinant(h)) < 1e-10 * std::max(1.0, std::abs(product)));
    }
  }
}

TEST_CASE("unitary_from_hermitian") {
  CHECK(max_abs_diff(unitary_from_hermitian(ComplexMatrix(3), 0.7), ComplexMatrix::identity(3)) < 1e-15);
  CHECK(max_abs_diff(unitary_from_hermitian(pauli_z(), std::numbers::pi), ComplexMatrix::identity(2) * Complex{-1.0}) <
        1e-15);

  const ComplexMatrix jy = collective_operators(SpinQuantum(3)).jy;
  const ComplexMatrix quarter = unitary_from_hermitian(jy, std::numbers::pi / 4.0);
  CHECK(max_abs_diff(unitary_from_hermitian(jy, std::numbers::pi / 2.0), quarter * quarter) < 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 6);
    const double a = angle(rng), b = angle(rng);
    const ComplexMatrix ua = unitary_from_hermitian(h, a);
    CHECK(unitarity_defect(ua) < 1e-11);
    CHECK(max_abs_diff(ua * unitary_from_hermitian(h, b), unitary_from_hermitian(h, a + b)) < 1e-11);
  }
}

TEST_CASE("characteristic_polynomial: monic, constant term is (-1)^n det") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (std::size_t dim = 1; dim <= 6; ++dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex{g(rng), g(rng)};
    const ComplexVector c = characteristic_polynomial(m);
    REQUIRE(c.size() == dim + 1);
    CHECK(c[dim] == Complex{1.0});
    CHECK(std::abs(c[dim - 1] + m.trace()) < 1e-12);
    const Complex det = determinant(m) * (dim % 2 == 0 ? 1.0 : -1.0);
    CHECK(std::abs(c[0] - det) < 1e-10 * std::max(1.0, std::abs(det)));
  }
}

TEST_CASE("polynomial_roots") {
  // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
  const ComplexVector roots = polynomial_roots(ComplexVector{6.0, -7.0, 0.0, 1.0});
  CHECK(spectrum_distance(roots, {1.0, 2.0, -3.0}) < 1e-12);
  CHECK_ERROR_KIND(polynomial_roots(ComplexVector{1.0, 2.0}), ErrorKind::DomainError);
}

TEST_CASE("eigvals_general_small: examples") {
  const ComplexVector diag = eigvals_general_small(ComplexMatrix::diagonal(std::vector<double>{3.0, 1.0, 4.0, 1.0}));
  CHECK(spectrum_distance(diag, {3.0, 1.0, 4.0, 1.0}) < 1e-12);

  const ComplexVector nil = eigvals_general_small(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
  for (const Complex& z : nil) CHECK(std::abs(z) < 1e-12);

  CHECK_ERROR_KIND(eigvals_general_small(ComplexMatrix(9)), ErrorKind::DimensionTooLarge);
  CHECK(spectrum_distance(eigvals_general_small(ComplexMatrix(3)), ComplexVector(3, 0.0)) == 0.0);
}

TEST_CASE("eigvals_general_small agrees with hermitian_eigen on Hermitian input") {
  std::mt19937_64 rng(17);
  for (std::size_t dim = 1; dim <= 8; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, dim);
      CHECK(spectrum_distance(eigvals_general_small(h), as_complex(hermitian_eigen(h).values)) < 1e-9);
    }
  }
  // Degenerate spectra: a rotated diag(2, 2, 2, -1, 5).
  const ComplexMatrix u = unitary_from_hermitian(random_hermitian(rng, 5), 1.0);
  const ComplexMatrix h = u * ComplexMatrix::diagonal(std::vector<double>{2.0, 2.0, 2.0, -1.0, 5.0}) * u.adjoint();
  CHECK(spectrum_distance(eigvals_general_small(h), {2.0, 2.0, 2.0, -1.0, 5.0}) < 1e-9);
}

TEST_CASE("eigvals_general_small on Wootters products matches the power-iteration oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix product = wootters_product(random_density(rng));
    const ComplexVector mine = eigvals_general_small(product);
    for (const Complex& z : mine) {
      CHECK(std::abs(z.imag()) <= 1e-9);
      CHECK(z.real() >= -1e-9);
    }
    CHECK(spectrum_distance(mine, power_deflation_eigenvalues(product)) < 1e-8);
  }
}
