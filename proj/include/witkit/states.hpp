#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "witkit/operator.hpp"
#include "witkit/random.hpp"

namespace witkit {

/// Unit vectors |mu_A>, |nu_B> and their tensor product.
class ProductVector {
 public:
  /// Normalizes both factors; throws InvalidParams on a zero vector.
  ProductVector(CVector muA, CVector nuB);

  static ProductVector basis(Dims dims, int i, int j);

  const CVector& muA() const noexcept { return muA_; }
  const CVector& nuB() const noexcept { return nuB_; }
  Dims dims() const { return Dims(static_cast<int>(muA_.size()), static_cast<int>(nuB_.size())); }

  /// |mu> (x) |nu>, index i*dB + j.
  CVector kron() const;

 private:
  CVector muA_;
  CVector nuB_;
};

struct EnsembleTerm {
  double weight;
  ProductVector pv;
};

/// Convex mixture of product projectors; separable by construction.
struct SeparableEnsemble {
  Dims dims;
  std::vector<EnsembleTerm> terms;
};

enum class Provenance { SeparableByConstruction, Asserted, Unknown };

std::string_view to_string(Provenance p) noexcept;
Provenance provenance_from_string(std::string_view s);

/// Unit-trace positive operator with a record of how we know (or don't) that
/// it is separable.
class DensityOperator {
 public:
  static constexpr double kTol = 1e-10;

  /// Throws NotADensity if lambda_min < -1e-10 or |tr - 1| > 1e-10.
  DensityOperator(HermitianOperator op, Provenance provenance);

  const HermitianOperator& op() const noexcept { return op_; }
  const Dims& dims() const noexcept { return op_.dims(); }
  Provenance provenance() const noexcept { return provenance_; }

  double purity() const;

 private:
  HermitianOperator op_;
  Provenance provenance_;
};

DensityOperator ensemble_density(const SeparableEnsemble& e);

DensityOperator maximally_mixed(Dims dims);

/// Haar-random factors (normalized complex Gaussians).
ProductVector random_product_vector(Dims dims, std::uint64_t seed);
ProductVector random_product_vector(Dims dims, Rng& rng);

/// Hilbert-Schmidt ensemble: G G^dag / tr for complex Ginibre G.
DensityOperator random_density(Dims dims, std::uint64_t seed);

/// `n_terms` Haar product vectors with flat-Dirichlet weights. With
/// n_terms >= dAB the density is full rank almost surely; with fewer it has
/// rank n_terms.
SeparableEnsemble random_ensemble(Dims dims, int n_terms, std::uint64_t seed);

/// The pure state |v><v| / <v|v>, provenance Unknown.
DensityOperator pure_density(Dims dims, const CVector& v);

}  // namespace witkit
