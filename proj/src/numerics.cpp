#include "qkt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qkt/error.hpp"

namespace qkt {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotPhysical: return "NotPhysical";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::WrongStructure: return "WrongStructure";
    case ErrorKind::BlockLeakage: return "BlockLeakage";
    case ErrorKind::OffSphere: return "OffSphere";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * dim_));
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  ComplexMatrix m(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.dim_)
      throw Error(ErrorKind::DimensionMismatch, "column length differs from column count");
    for (std::size_t r = 0; r < m.dim_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t col) const {
  ComplexVector v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, col);
  return v;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> vec) const {
  if (vec.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  ComplexVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc = 0.0;
    const Complex* row = &data_[i * dim_];
    for (std::size_t j = 0; j < dim_; ++j) acc += row[j] * vec[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  const std::size_t n = lhs.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

double hermiticity_defect(const ComplexMatrix& h) {
  double m = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i; j < h.dim(); ++j) m = std::max(m, std::abs(h(i, j) - std::conj(h(j, i))));
  return m;
}

double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim()));
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product");
  Complex acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

double norm2(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

Complex expectation(const ComplexMatrix& op, std::span<const Complex> state) {
  const ComplexVector image = op.apply(state);
  return inner(state, image);
}

// ---------------------------------------------------------------------------
// Hermitian eigenproblem: cyclic Jacobi with complex rotations.

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h, const HermitianEigenOptions& opts) {
  const double defect = hermiticity_defect(h);
  if (defect > opts.hermiticity_tol)
    throw Error(ErrorKind::NotHermitian, "||H - H^dagger||_max = " + std::to_string(defect));

  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = std::numeric_limits<double>::epsilon() * scale;
  bool converged = off_diagonal_norm(a) <= target;

  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double r = std::abs(b);
        if (r == 0.0) continue;
        const Complex phase = b / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double cs = 1.0 / std::hypot(t, 1.0);
        const double sn = t * cs;
        // G = diag(1, conj(phase)) * [[cs, sn], [-sn, cs]]
        const Complex g00 = cs, g01 = sn;
        const Complex g10 = -sn * std::conj(phase), g11 = cs * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex kp = a(k, p), kq = a(k, q);
          a(k, p) = kp * g00 + kq * g10;
          a(k, q) = kp * g01 + kq * g11;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex pk = a(p, k), qk = a(q, k);
          a(p, k) = std::conj(g00) * pk + std::conj(g10) * qk;
          a(q, k) = std::conj(g01) * pk + std::conj(g11) * qk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex kp = v(k, p), kq = v(k, q);
          v(k, p) = kp * g00 + kq * g10;
          v(k, q) = kp * g01 + kq * g11;
        }
      }
    }
    converged = off_diagonal_norm(a) <= target;
  }
  if (!converged)
    throw Error(ErrorKind::NoConvergence,
                "Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double angle,
                                     const HermitianEigenOptions& opts) {
  const EigenDecomposition eig = hermitian_eigen(h, opts);
  const std::size_t n = h.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::polar(1.0, -angle * eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * phase;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small general eigenproblem: characteristic polynomial + Durand-Kerner.

ComplexVector characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexVector c(n + 1);
  c[n] = 1.0;
  ComplexMatrix mk(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    c[n - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

namespace {

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

double horner_abs_bound(std::span<const Complex> coeffs, double r) {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * r + std::abs(coeffs[k]);
  return acc;
}

}  // namespace

ComplexVector polynomial_roots(std::span<const Complex> coeffs, const GeneralEigenOptions& opts) {
  if (coeffs.empty() || coeffs.back() != Complex{1.0, 0.0})
    throw Error(ErrorKind::DomainError, "polynomial_roots expects monic coefficients");
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};

  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeffs[k]));
  radius += 1.0;

  ComplexVector z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  // Roots whose residual sits at the rounding floor of the polynomial
  // evaluation are accepted even if the step has not shrunk; multiple roots
  // only converge linearly and would otherwise stall above the step tolerance.
  const double eps = std::numeric_limits<double>::epsilon();
  const double floor_factor = 8.0 * static_cast<double>(n + 1) * eps;

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex value = horner(coeffs, z[k]);
      Complex denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (diff == Complex{}) diff = Complex{eps, eps} * std::max(1.0, std::abs(z[k]));
        denom *= diff;
      }
      const Complex step = value / denom;
      z[k] -= step;
      const double mag = std::max(1.0, std::abs(z[k]));
      const bool small_step = std::abs(step) <= opts.relative_tol * mag;
      const bool at_floor =
          std::abs(horner(coeffs, z[k])) <= floor_factor * horner_abs_bound(coeffs, std::abs(z[k]));
      if (!(small_step || at_floor)) done = false;
    }
    if (done) return z;
  }
  throw Error(ErrorKind::NoConvergence,
              "Durand-Kerner did not converge in " + std::to_string(opts.max_iterations) + " iterations");
}

namespace {

// Solves A x = b in place by partial-pivot elimination. Vanishing pivots are
// nudged to `floor`, which is what inverse iteration at an exact eigenvalue
// needs.
void solve_in_place(ComplexMatrix a, ComplexVector& b, double floor) {
  const std::size_t n = a.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      std::swap(b[col], b[pivot]);
    }
    if (std::abs(a(col, col)) < floor) a(col, col) = floor;
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = i + 1; c < n; ++c) b[i] -= a(i, c) * b[c];
    b[i] /= a(i, i);
  }
}

// Modified Gram-Schmidt, applied twice.
void orthonormalize(std::vector<ComplexVector>& q) {
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        const Complex overlap = inner(q[j], q[k]);
        for (std::size_t i = 0; i < q[k].size(); ++i) q[k][i] -= overlap * q[j][i];
      }
      const double len = norm2(q[k]);
      for (auto& z : q[k]) z /= len;
    }
  }
}

// Roots from the characteristic polynomial carry absolute errors set by the
// coefficients, and a k-fold cluster is only resolved to about eps^(1/k).
// The matrix itself still determines them to rounding, so iterate on the
// invariant subspace near the cluster center and take the eigenvalues of
// the projected k x k block.
void refine_cluster(const ComplexMatrix& m, ComplexVector& roots, const std::vector<std::size_t>& members,
                    const GeneralEigenOptions& opts) {
  const std::size_t n = m.dim();
  const std::size_t k = members.size();
  Complex center = 0.0;
  for (std::size_t idx : members) center += roots[idx];
  center /= static_cast<double>(k);

  ComplexMatrix shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= center;
  const double floor = std::numeric_limits<double>::epsilon() * std::max(1.0, m.max_abs());

  std::vector<ComplexVector> q(k, ComplexVector(n));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i)
      q[c][i] = Complex{1.0 + 0.31 * static_cast<double>((i + 1) * (c + 1) % 7), 0.17 * static_cast<double>(i + c)};
  orthonormalize(q);
  for (int it = 0; it < 12; ++it) {
    for (auto& col : q) solve_in_place(shifted, col, floor);
    orthonormalize(q);
  }

  ComplexMatrix block(k);
  for (std::size_t a = 0; a < k; ++a) {
    const ComplexVector mq = shifted.apply(q[a]);
    for (std::size_t b = 0; b < k; ++b) block(b, a) = inner(q[b], mq);
  }
  const double spread = block.max_abs();
  if (spread == 0.0) {
    for (std::size_t idx : members) roots[idx] = center;
    return;
  }
  const ComplexVector local = polynomial_roots(characteristic_polynomial(block * Complex{1.0 / spread}), opts);
  for (std::size_t c = 0; c < k; ++c) roots[members[c]] = center + spread * local[c];
}

}  // namespace

constexpr double kClusterGap = 1e-3;  // relative to the largest entry

ComplexVector eigvals_general_small(const ComplexMatrix& m, const GeneralEigenOptions& opts) {
  const std::size_t n = m.dim();
  if (n > tol::kGeneralEigenMaxDim)
    throw Error(ErrorKind::DimensionTooLarge, "eigvals_general_small supports dim <= 8, got " + std::to_string(n));
  const double scale = m.max_abs();
  if (scale == 0.0) return ComplexVector(n, 0.0);
  // Work on a unit-scaled copy so the polynomial coefficients stay O(1).
  const ComplexMatrix scaled = m * Complex{1.0 / scale};
  ComplexVector roots = polynomial_roots(characteristic_polynomial(scaled), opts);

  // Single-linkage clusters of roots closer than kClusterGap, each polished
  // against the matrix.
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (std::abs(roots[a] - roots[b]) <= kClusterGap) {
        const std::size_t from = label[b], to = label[a];
        for (auto& l : label)
          if (l == from) l = to;
      }
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (label[i] == root) members.push_back(i);
    if (!members.empty()) refine_cluster(scaled, roots, members, opts);
  }

  for (auto& r : roots) r *= scale;
  return roots;
}

}  // namespace qkt
