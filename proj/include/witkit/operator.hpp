#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace witkit {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Tolerance on |A(r,s) - conj(A(s,r))| accepted as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Local dimensions of H_A (x) H_B. Basis index of |i>|j> is i*dB + j.
class Dims {
 public:
  Dims(int dA, int dB);

  int dA() const noexcept { return dA_; }
  int dB() const noexcept { return dB_; }
  int dAB() const noexcept { return dA_ * dB_; }

  int index(int i, int j) const noexcept { return i * dB_ + j; }

  friend bool operator==(const Dims&, const Dims&) = default;

 private:
  int dA_;
  int dB_;
};

enum class Subsystem { A, B };

/// Dense Hermitian operator on a bipartite space. Immutable once built;
/// construction validates shape and Hermiticity.
class HermitianOperator {
 public:
  HermitianOperator(Dims dims, CMatrix entries);

  static HermitianOperator identity(Dims dims);
  static HermitianOperator zero(Dims dims);
  static HermitianOperator diagonal(Dims dims, const std::vector<double>& diag);
  /// |v><v| (v need not be normalized).
  static HermitianOperator projector(Dims dims, const CVector& v);

  const Dims& dims() const noexcept { return dims_; }
  const CMatrix& matrix() const noexcept { return m_; }
  int size() const noexcept { return dims_.dAB(); }
  cplx operator()(int r, int s) const { return m_(r, s); }

  double trace() const;

  /// A + s*I
  HermitianOperator shifted(double s) const;

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

  /// Largest entrywise modulus of the difference.
  double max_abs_diff(const HermitianOperator& o) const;

 private:
  Dims dims_;
  CMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;

  double min() const { return eigenvalues(0); }
  CVector vector(int k) const { return eigenvectors.col(k); }
};

HermitianOperator make_hermitian(const CMatrix& entries, Dims dims);

/// Full spectrum. Throws ConvergenceFailure if the solver does not converge
/// or any residual |A v - l v| exceeds tol * max(1, |A|_2).
Spectrum eig_hermitian(const HermitianOperator& a, double tol = 1e-10);

std::vector<double> eigenvalues(const HermitianOperator& a);

std::pair<double, CVector> min_eigenpair(const HermitianOperator& a);

double min_eigenvalue(const HermitianOperator& a);

HermitianOperator partial_transpose(const HermitianOperator& a, Subsystem side = Subsystem::B);

/// tr(A B). Throws NonRealResult if the imaginary part exceeds 1e-10.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

double hs_norm(const HermitianOperator& a);

/// Number of eigenvalues with |l| > tol * max|l|.
int numeric_rank(const HermitianOperator& a, double tol = 1e-9);

/// <v|A|v>, real part.
double expectation(const HermitianOperator& a, const CVector& v);

}  // namespace witkit
