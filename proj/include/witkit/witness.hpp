#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "witkit/operator.hpp"
#include "witkit/states.hpp"

namespace witkit {

/// Best product vector found for inf <mu nu| sigma |mu nu>. `value` is
/// achieved by `argmin`, so it upper-bounds the true infimum.
struct CmaxEstimate {
  double value;
  ProductVector argmin;
  int restarts;
  int iterations;
  bool converged;
};

struct SeeSawOptions {
  int restarts = 32;
  int max_iter = 500;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  int threads = 0;  ///< 0: OpenMP default
};

/// One see-saw run from a given start; exposes the objective trace.
struct SeeSawRun {
  double value;
  ProductVector argmin;
  int iterations;
  bool converged;
  std::vector<double> trace;  ///< objective after every half-step
};

double product_expectation(const DensityOperator& sigma, const ProductVector& pv);
double product_expectation(const HermitianOperator& a, const ProductVector& pv);

/// A-side operator M[i,k] = sum_{j,l} conj(nu_j) A[(i,j),(k,l)] nu_l.
CMatrix condition_on_b(const HermitianOperator& a, const CVector& nu);
/// B-side operator N[j,l] = sum_{i,k} conj(mu_i) A[(i,j),(k,l)] mu_k.
CMatrix condition_on_a(const HermitianOperator& a, const CVector& mu);

SeeSawRun see_saw_run(const HermitianOperator& a, const ProductVector& start, int max_iter,
                      double tol);

/// Multistart see-saw; restart r starts from random_product_vector(seed + r).
/// Restarts run in parallel; result is identical to c_sigma_max_serial.
CmaxEstimate c_sigma_max(const DensityOperator& sigma, const SeeSawOptions& opts = {});
CmaxEstimate c_sigma_max_serial(const DensityOperator& sigma, const SeeSawOptions& opts = {});

/// Same search for any Hermitian operator (minimum product-state expectation).
CmaxEstimate min_product_expectation(const HermitianOperator& a, const SeeSawOptions& opts = {});

/// W = sigma - c I with sigma separable (or asserted so) and
/// lambda_min(sigma) < c <= c_max.
class SigmaFormWitness {
 public:
  const DensityOperator& sigma() const noexcept { return sigma_; }
  double c() const noexcept { return c_; }
  double lambda0_sigma() const noexcept { return lambda0_sigma_; }
  const std::optional<CmaxEstimate>& cmax() const noexcept { return cmax_; }
  const Dims& dims() const noexcept { return sigma_.dims(); }

  /// True when c was checked against a see-saw estimate; that check is
  /// necessary but does not certify c <= the true infimum.
  bool cmax_checked() const noexcept { return cmax_.has_value(); }

  HermitianOperator op() const { return sigma_.op().shifted(-c_); }

 private:
  friend SigmaFormWitness build_witness(const DensityOperator&, double);
  friend SigmaFormWitness build_witness(const DensityOperator&, double, const CmaxEstimate&);

  SigmaFormWitness(DensityOperator sigma, double c, double lambda0,
                   std::optional<CmaxEstimate> cmax)
      : sigma_(std::move(sigma)), c_(c), lambda0_sigma_(lambda0), cmax_(std::move(cmax)) {}

  DensityOperator sigma_;
  double c_;
  double lambda0_sigma_;
  std::optional<CmaxEstimate> cmax_;
};

inline constexpr double kCmaxTol = 1e-10;

/// Throws NotAWitness when c <= lambda_min(sigma).
SigmaFormWitness build_witness(const DensityOperator& sigma, double c);
/// Additionally throws ExceedsCmax when c > cmax.value + 1e-10.
SigmaFormWitness build_witness(const DensityOperator& sigma, double c, const CmaxEstimate& cmax);

/// Witness at c = c_max estimate (weakly optimal up to the see-saw's accuracy).
SigmaFormWitness weakly_optimal_witness(const DensityOperator& sigma,
                                        const SeeSawOptions& opts = {});

struct RecastWitness {
  SigmaFormWitness witness;
  double scale;  ///< gamma: witness.op() == scale * W_raw
};

/// Rescales a raw witness into sigma-form: sigma = gamma W + c I with unit
/// trace, c = gamma (max(-lambda_min(W), -lambda_min(W^Gamma)) + eps) and
/// eps = margin_rel * |W|_2, so sigma and sigma^Gamma are strictly positive.
/// Separability of sigma beyond PPT is asserted, not shown.
/// Throws NotNegative if lambda_min(W) >= 0 and NotAWitness if a sampled
/// product vector gives a clearly negative expectation.
RecastWitness sigma_form_from_matrix(const HermitianOperator& w_raw, double margin_rel = 1e-6,
                                     int product_samples = 64, std::uint64_t seed = 0);

struct TauForm {
  DensityOperator sigma;
  double c_prime;  ///< W = sigma - c' tau0
};

TauForm to_tau_form(const SigmaFormWitness& w);
double c_from_tau_form(double c_prime, Dims dims);

struct WeakOptimality {
  bool verdict;
  std::optional<ProductVector> certificate;
};

/// |c - cmax| <= tol. Throws EstimateMissing if no estimate is attached.
WeakOptimality is_weakly_optimal(const SigmaFormWitness& w, double tol = 1e-8);

double witness_value(const SigmaFormWitness& w, const DensityOperator& rho);
double witness_value(const SigmaFormWitness& w, const HermitianOperator& rho);
bool detects(const SigmaFormWitness& w, const DensityOperator& rho, double tol = 1e-10);

enum class Fineness { Finer, Equal, Incomparable };

/// Same-sigma comparison only; throws DifferentSigma otherwise.
Fineness finer_than(const SigmaFormWitness& w2, const SigmaFormWitness& w1);

/// W == P + Q^Gamma with P, Q >= 0 (all to within tol).
bool verify_decomposition(const HermitianOperator& w, const HermitianOperator& p,
                          const HermitianOperator& q, double tol = 1e-10);

}  // namespace witkit
