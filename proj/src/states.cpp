#include "witkit/states.hpp"

#include <cmath>
#include <sstream>

#include "witkit/error.hpp"

namespace witkit {

namespace {

CVector normalized(CVector v, const char* what) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::InvalidParams, std::string(what) + " has zero or non-finite norm");
  }
  return v / n;
}

CVector gaussian_vector(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (int k = 0; k < n; ++k) {
    const double re = g(rng);
    const double im = g(rng);
    v(k) = cplx(re, im);
  }
  return v;
}

}  // namespace

ProductVector::ProductVector(CVector muA, CVector nuB)
    : muA_(normalized(std::move(muA), "mu_A")), nuB_(normalized(std::move(nuB), "nu_B")) {}

ProductVector ProductVector::basis(Dims dims, int i, int j) {
  CVector mu = CVector::Zero(dims.dA());
  CVector nu = CVector::Zero(dims.dB());
  mu(i) = 1.0;
  nu(j) = 1.0;
  return ProductVector(mu, nu);
}

CVector ProductVector::kron() const {
  const auto dA = muA_.size(), dB = nuB_.size();
  CVector out(dA * dB);
  for (Eigen::Index i = 0; i < dA; ++i) out.segment(i * dB, dB) = muA_(i) * nuB_;
  return out;
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::SeparableByConstruction: return "separable-by-construction";
    case Provenance::Asserted: return "asserted";
    case Provenance::Unknown: return "unknown";
  }
  return "unknown";
}

Provenance provenance_from_string(std::string_view s) {
  if (s == "separable-by-construction") return Provenance::SeparableByConstruction;
  if (s == "asserted") return Provenance::Asserted;
  if (s == "unknown") return Provenance::Unknown;
  throw Error(ErrorKind::ParseError, "unknown provenance '" + std::string(s) + "'");
}

DensityOperator::DensityOperator(HermitianOperator op, Provenance provenance)
    : op_(std::move(op)), provenance_(provenance) {
  const double tr = op_.trace();
  const double lmin = min_eigenvalue(op_);
  if (std::abs(tr - 1.0) > kTol || lmin < -kTol) {
    std::ostringstream os;
    os << "trace " << tr << ", min eigenvalue " << lmin;
    throw Error(ErrorKind::NotADensity, os.str());
  }
}

double DensityOperator::purity() const { return hs_inner(op_, op_); }

DensityOperator ensemble_density(const SeparableEnsemble& e) {
  if (e.terms.empty()) throw Error(ErrorKind::WeightSumError, "empty ensemble");
  double total = 0.0;
  for (const auto& t : e.terms) {
    if (!(t.weight > 0.0)) throw Error(ErrorKind::WeightSumError, "non-positive weight");
    if (!(t.pv.dims() == e.dims)) throw Error(ErrorKind::DimensionMismatch, "ensemble term");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "weights sum to " << total;
    throw Error(ErrorKind::WeightSumError, os.str());
  }
  const int n = e.dims.dAB();
  CMatrix m = CMatrix::Zero(n, n);
  for (const auto& t : e.terms) {
    const CVector v = t.pv.kron();
    m.noalias() += t.weight * (v * v.adjoint());
  }
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(HermitianOperator(e.dims, std::move(m)),
                         Provenance::SeparableByConstruction);
}

DensityOperator maximally_mixed(Dims dims) {
  return DensityOperator(HermitianOperator::identity(dims) * (1.0 / dims.dAB()),
                         Provenance::SeparableByConstruction);
}

ProductVector random_product_vector(Dims dims, Rng& rng) {
  CVector mu = gaussian_vector(dims.dA(), rng);
  CVector nu = gaussian_vector(dims.dB(), rng);
  return ProductVector(std::move(mu), std::move(nu));
}

ProductVector random_product_vector(Dims dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_product_vector(dims, rng);
}

DensityOperator random_density(Dims dims, std::uint64_t seed) {
  Rng rng(seed);
  const int n = dims.dAB();
  CMatrix g(n, n);
  for (int c = 0; c < n; ++c) g.col(c) = gaussian_vector(n, rng);
  CMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  m /= m.trace().real();
  return DensityOperator(HermitianOperator(dims, std::move(m)), Provenance::Unknown);
}

SeparableEnsemble random_ensemble(Dims dims, int n_terms, std::uint64_t seed) {
  if (n_terms < 1) throw Error(ErrorKind::InvalidParams, "ensemble needs at least one term");
  Rng rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n_terms);
  double total = 0.0;
  for (auto& x : w) {
    x = expo(rng) + 1e-3;
    total += x;
  }
  SeparableEnsemble e{dims, {}};
  e.terms.reserve(n_terms);
  double acc = 0.0;
  for (int k = 0; k < n_terms; ++k) {
    // last weight absorbs rounding so the sum is 1 to the ulp
    const double wk = k + 1 < n_terms ? w[k] / total : 1.0 - acc;
    acc += wk;
    e.terms.push_back({wk, random_product_vector(dims, rng)});
  }
  return e;
}

DensityOperator pure_density(Dims dims, const CVector& v) {
  return DensityOperator(HermitianOperator::projector(dims, v / v.norm()), Provenance::Unknown);
}

}  // namespace witkit
