#include "witkit/operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "witkit/error.hpp"

namespace witkit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::WeightSumError: return "WeightSumError";
    case ErrorKind::NotADensity: return "NotADensity";
    case ErrorKind::NotAWitness: return "NotAWitness";
    case ErrorKind::ExceedsCmax: return "ExceedsCmax";
    case ErrorKind::NotNegative: return "NotNegative";
    case ErrorKind::EstimateMissing: return "EstimateMissing";
    case ErrorKind::DifferentSigma: return "DifferentSigma";
    case ErrorKind::ZeroTrace: return "ZeroTrace";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Dims::Dims(int dA, int dB) : dA_(dA), dB_(dB) {
  if (dA < 2 || dB < 2) {
    std::ostringstream os;
    os << "local dimensions must be >= 2, got (" << dA << ", " << dB << ")";
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

HermitianOperator::HermitianOperator(Dims dims, CMatrix entries)
    : dims_(dims), m_(std::move(entries)) {
  const int n = dims_.dAB();
  if (m_.rows() != n || m_.cols() != n) {
    std::ostringstream os;
    os << "matrix is " << m_.rows() << "x" << m_.cols() << ", dims require " << n << "x" << n;
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  double worst = 0.0;
  int wr = 0, ws = 0;
  for (int r = 0; r < n; ++r) {
    for (int s = r; s < n; ++s) {
      const double d = std::abs(m_(r, s) - std::conj(m_(s, r)));
      if (!(d <= worst)) {
        worst = d;
        wr = r;
        ws = s;
      }
    }
  }
  if (!(worst <= kHermitianTol)) {
    std::ostringstream os;
    os << "max asymmetry " << worst << " at (" << wr << ", " << ws << ")";
    throw Error(ErrorKind::NotHermitian, os.str());
  }
}

HermitianOperator HermitianOperator::identity(Dims dims) {
  return HermitianOperator(dims, CMatrix::Identity(dims.dAB(), dims.dAB()));
}

HermitianOperator HermitianOperator::zero(Dims dims) {
  return HermitianOperator(dims, CMatrix::Zero(dims.dAB(), dims.dAB()));
}

HermitianOperator HermitianOperator::diagonal(Dims dims, const std::vector<double>& diag) {
  if (static_cast<int>(diag.size()) != dims.dAB()) {
    throw Error(ErrorKind::DimensionMismatch, "diagonal length differs from dAB");
  }
  CMatrix m = CMatrix::Zero(dims.dAB(), dims.dAB());
  for (int k = 0; k < dims.dAB(); ++k) m(k, k) = diag[k];
  return HermitianOperator(dims, std::move(m));
}

HermitianOperator HermitianOperator::projector(Dims dims, const CVector& v) {
  if (v.size() != dims.dAB()) {
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from dAB");
  }
  CMatrix m = v * v.adjoint();
  // Outer products are Hermitian only up to rounding in the diagonal's imaginary part.
  for (int k = 0; k < m.rows(); ++k) m(k, k) = m(k, k).real();
  return HermitianOperator(dims, std::move(m));
}

double HermitianOperator::trace() const { return m_.trace().real(); }

HermitianOperator HermitianOperator::shifted(double s) const {
  CMatrix m = m_;
  m.diagonal().array() += s;
  return HermitianOperator(dims_, std::move(m));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (!(dims_ == o.dims_)) throw Error(ErrorKind::DimensionMismatch, "operator sum");
  return HermitianOperator(dims_, m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (!(dims_ == o.dims_)) throw Error(ErrorKind::DimensionMismatch, "operator difference");
  return HermitianOperator(dims_, m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(dims_, m_ * s);
}

double HermitianOperator::max_abs_diff(const HermitianOperator& o) const {
  if (!(dims_ == o.dims_)) throw Error(ErrorKind::DimensionMismatch, "operator comparison");
  return (m_ - o.m_).cwiseAbs().maxCoeff();
}

HermitianOperator make_hermitian(const CMatrix& entries, Dims dims) {
  return HermitianOperator(dims, entries);
}

Spectrum eig_hermitian(const HermitianOperator& a, double tol) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver hit its iteration cap");
  }
  Spectrum spec{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = std::max(1.0, spec.eigenvalues.cwiseAbs().maxCoeff());
  for (int k = 0; k < spec.eigenvalues.size(); ++k) {
    const double res =
        (a.matrix() * spec.eigenvectors.col(k) - spec.eigenvalues(k) * spec.eigenvectors.col(k))
            .norm();
    if (!(res <= tol * scale)) {
      std::ostringstream os;
      os << "residual " << res << " for eigenpair " << k << " exceeds " << tol * scale;
      throw Error(ErrorKind::ConvergenceFailure, os.str());
    }
  }
  return spec;
}

std::vector<double> eigenvalues(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver hit its iteration cap");
  }
  const RVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::pair<double, CVector> min_eigenpair(const HermitianOperator& a) {
  Spectrum s = eig_hermitian(a);
  return {s.min(), s.vector(0)};
}

double min_eigenvalue(const HermitianOperator& a) { return eigenvalues(a).front(); }

HermitianOperator partial_transpose(const HermitianOperator& a, Subsystem side) {
  const Dims& d = a.dims();
  const int dA = d.dA(), dB = d.dB();
  CMatrix out(d.dAB(), d.dAB());
  for (int i = 0; i < dA; ++i) {
    for (int j = 0; j < dB; ++j) {
      for (int k = 0; k < dA; ++k) {
        for (int l = 0; l < dB; ++l) {
          out(d.index(i, j), d.index(k, l)) = side == Subsystem::B
                                                  ? a(d.index(i, l), d.index(k, j))
                                                  : a(d.index(k, j), d.index(i, l));
        }
      }
    }
  }
  return HermitianOperator(d, std::move(out));
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (!(a.dims() == b.dims())) throw Error(ErrorKind::DimensionMismatch, "hs_inner");
  // tr(AB) = sum_rs A_rs B_sr
  const cplx t = (a.matrix().array() * b.matrix().transpose().array()).sum();
  if (std::abs(t.imag()) > 1e-10) {
    std::ostringstream os;
    os << "tr(AB) has imaginary part " << t.imag();
    throw Error(ErrorKind::NonRealResult, os.str());
  }
  return t.real();
}

double hs_norm(const HermitianOperator& a) { return a.matrix().norm(); }

int numeric_rank(const HermitianOperator& a, double tol) {
  const std::vector<double> ev = eigenvalues(a);
  double big = 0.0;
  for (double l : ev) big = std::max(big, std::abs(l));
  if (big == 0.0) return 0;
  return static_cast<int>(
      std::count_if(ev.begin(), ev.end(), [&](double l) { return std::abs(l) > tol * big; }));
}

double expectation(const HermitianOperator& a, const CVector& v) {
  if (v.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "expectation");
  return v.dot(a.matrix() * v).real();
}

}  // namespace witkit
