#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qkt {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Default tolerances. Every bound quoted by the library lives here; the
// option structs below copy them so a caller can override per call.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kUnitary = 1e-11;
inline constexpr double kNorm = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kClampRoot = 1e-9;      // sqrt of eigenvalues >= -this clamps to 0
inline constexpr double kClampProduct = 1e-7;   // Wootters product eigenvalues
inline constexpr double kNotPhysical = 1e-7;    // density-matrix eigenvalue floor
inline constexpr double kRankCutoff = 1e-13;    // density-matrix eigenvalues treated as zero
inline constexpr double kStructure = 1e-10;     // shortcut-formula structure checks
inline constexpr double kBlockLeakage = 1e-9;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr int kDurandKernerMaxIter = 500;
inline constexpr double kDurandKernerRelTol = 1e-13;
inline constexpr std::size_t kGeneralEigenMaxDim = 8;
}  // namespace tol

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  // Columns of the result are the given vectors.
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;
  ComplexVector column(std::size_t col) const;

  ComplexVector apply(std::span<const Complex> vec) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// ||H - H^dagger||_max
double hermiticity_defect(const ComplexMatrix& h);
// ||U^dagger U - I||_max
double unitarity_defect(const ComplexMatrix& u);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm2(std::span<const Complex> v);
Complex expectation(const ComplexMatrix& op, std::span<const Complex> state);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

struct HermitianEigenOptions {
  double hermiticity_tol = tol::kHermitian;
  int max_sweeps = tol::kJacobiMaxSweeps;
};

// Cyclic complex Jacobi. Throws NotHermitian / NoConvergence.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h, const HermitianEigenOptions& opts = {});

// exp(-i * angle * H)
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double angle,
                                     const HermitianEigenOptions& opts = {});

struct GeneralEigenOptions {
  int max_iterations = tol::kDurandKernerMaxIter;
  double relative_tol = tol::kDurandKernerRelTol;
};

// Monic characteristic polynomial coefficients c[0..n] (c[n] == 1) by
// Faddeev-LeVerrier: det(xI - M) = sum_k c[k] x^k.
ComplexVector characteristic_polynomial(const ComplexMatrix& m);

// Simultaneous (Weierstrass / Durand-Kerner) iteration for all roots of a
// monic polynomial given low-to-high coefficients.
ComplexVector polynomial_roots(std::span<const Complex> monic_coeffs,
                               const GeneralEigenOptions& opts = {});

// Eigenvalues of a small non-Hermitian matrix, with multiplicity, unordered.
// Throws DimensionTooLarge for dim > 8.
ComplexVector eigvals_general_small(const ComplexMatrix& m, const GeneralEigenOptions& opts = {});

}  // namespace qkt
