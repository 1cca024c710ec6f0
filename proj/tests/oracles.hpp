#pragma once

// Test-only reference implementations. None of these call the library's
// eigen-solvers, so they can arbitrate its results.

#include <algorithm>
#include <cmath>
#include <functional>
#include <complex>
#include <random>
#include <vector>

#include "qkt/numerics.hpp"

namespace qkt::testing {

inline const Complex kI{0.0, 1.0};

// Gaussian elimination with partial pivoting; returns x with A x = b.
inline ComplexVector solve_linear(ComplexMatrix a, ComplexVector b) {
  const std::size_t n = a.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    Complex diag = a(col, col);
    if (std::abs(diag) < 1e-300) diag = 1e-300;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / diag;
      if (f == Complex{}) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  ComplexVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    Complex diag = a(i, i);
    if (std::abs(diag) < 1e-300) diag = 1e-300;
    x[i] = acc / diag;
  }
  return x;
}

// Determinant by LU with partial pivoting.
inline Complex determinant(ComplexMatrix a) {
  const std::size_t n = a.dim();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

inline ComplexMatrix projector(const ComplexVector& v) {
  ComplexMatrix p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

namespace detail {

inline ComplexVector normalized(ComplexVector v) {
  const double n = norm2(v);
  for (auto& z : v) z /= n;
  return v;
}

// Dominant eigenpair by power iteration, polished with a few steps of
// shifted inverse iteration.
inline Complex dominant_eigenpair(const ComplexMatrix& a, ComplexVector& x) {
  const std::size_t n = a.dim();
  x.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = Complex{1.0 + 0.37 * i, 0.11 * i * i - 0.2};
  x = normalized(x);
  Complex mu = 0.0;
  for (int it = 0; it < 20000; ++it) {
    ComplexVector y = a.apply(x);
    const double ny = norm2(y);
    if (ny == 0.0) return 0.0;
    const Complex next = inner(x, y);
    for (auto& z : y) z /= ny;
    x = std::move(y);
    if (it > 50 && std::abs(next - mu) <= 1e-15 * std::abs(next)) {
      mu = next;
      break;
    }
    mu = next;
  }
  const double scale = std::max(std::abs(mu), 1e-300);
  for (int it = 0; it < 3; ++it) {
    ComplexMatrix shifted = a;
    const Complex shift = mu + Complex{1e-10, 1e-10} * scale;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= shift;
    ComplexVector z = solve_linear(shifted, x);
    const double nz = norm2(z);
    if (!std::isfinite(nz) || nz == 0.0) break;
    for (auto& c : z) c /= nz;
    x = std::move(z);
    mu = inner(x, a.apply(x));
  }
  return mu;
}

}  // namespace detail

// All eigenvalues of a diagonalizable matrix by power iteration with
// (Wielandt/Hotelling) deflation using left and right eigenvectors.
inline ComplexVector power_deflation_eigenvalues(ComplexMatrix a) {
  const std::size_t n = a.dim();
  ComplexVector values;
  const double scale = std::max(a.max_abs(), 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    if (a.max_abs() <= 1e-18 * scale) {
      values.push_back(0.0);
      continue;
    }
    ComplexVector right, left;
    const Complex mu = detail::dominant_eigenpair(a, right);
    detail::dominant_eigenpair(a.adjoint(), left);
    const Complex overlap = inner(left, right);
    values.push_back(mu);
    if (std::abs(overlap) < 1e-14) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= mu * right[i] * std::conj(left[j]) / overlap;
  }
  return values;
}

// Concurrence by power iteration only. The lambdas are the singular values
// of tau = W^T (sy x sy) W with rho = W W^dagger on its support. Working on
// tau rather than on the 4x4 product keeps zero lambdas at rounding level
// instead of at the square root of it.
inline double oracle_concurrence(const ComplexMatrix& rho) {
  ComplexMatrix flip(4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;

  std::vector<ComplexVector> support;
  ComplexMatrix rest = rho;
  for (int k = 0; k < 4; ++k) {
    ComplexVector x;
    const double mu = detail::dominant_eigenpair(rest, x).real();
    if (mu <= 1e-13) break;
    rest -= projector(x) * Complex{mu};
    for (auto& z : x) z *= std::sqrt(mu);
    support.push_back(std::move(x));
  }
  const std::size_t rank = support.size();
  ComplexMatrix tau(rank);
  for (std::size_t a = 0; a < rank; ++a) {
    const ComplexVector flipped = flip.apply(support[a]);
    for (std::size_t b = 0; b < rank; ++b)
      for (std::size_t r = 0; r < 4; ++r) tau(a, b) += flipped[r] * support[b][r];
  }

  std::vector<double> lambdas(4, 0.0);
  for (std::size_t k = 0; k < rank; ++k) {
    if (tau.max_abs() == 0.0) break;
    ComplexVector v;
    detail::dominant_eigenpair(tau.adjoint() * tau, v);
    ComplexVector u = tau.apply(v);
    const double sigma = norm2(u);
    lambdas[k] = sigma;
    if (sigma == 0.0) break;
    for (auto& z : u) z /= sigma;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) tau(i, j) -= sigma * u[i] * std::conj(v[j]);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

// ---------------------------------------------------------------------------
// Random generators

inline ComplexVector random_pure(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexVector v(dim);
  for (auto& z : v) z = Complex{g(rng), g(rng)};
  return detail::normalized(v);
}

// Mixture of 1..4 random pure two-qubit states with random weights.
inline ComplexMatrix random_density(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = count(rng);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng) + 1e-3);
  ComplexMatrix rho(4);
  for (int i = 0; i < k; ++i) rho += projector(random_pure(rng, 4)) * Complex{w[static_cast<std::size_t>(i)] / total};
  return rho;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = g(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      h(i, j) = Complex{g(rng), g(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

// Haar-ish random SU(2) element times a phase.
inline ComplexMatrix random_qubit_unitary(std::mt19937_64& rng) {
  const ComplexVector ab = random_pure(rng, 2);
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  const Complex e = std::polar(1.0, phase(rng));
  return ComplexMatrix{{e * ab[0], -e * std::conj(ab[1])}, {e * ab[1], e * std::conj(ab[0])}};
}

inline ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline ComplexMatrix pauli_y() { return ComplexMatrix{{0.0, -kI}, {kI, 0.0}}; }
inline ComplexMatrix pauli_z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace qkt::testing
