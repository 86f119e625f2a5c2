#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "witkit/error.hpp"
#include "witkit/spa.hpp"
#include "witkit/states.hpp"

using namespace witkit;

TEST_CASE("ensemble_density basics") {
  const Dims d(2, 2);
  const auto single = ensemble_density({d, {{1.0, ProductVector::basis(d, 0, 0)}}});
  CHECK(single.provenance() == Provenance::SeparableByConstruction);
  CHECK(numeric_rank(single.op()) == 1);
  CHECK(single.op()(0, 0) == cplx(1.0));

  SeparableEnsemble full{d, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) full.terms.push_back({0.25, ProductVector::basis(d, i, j)});
  CHECK(ensemble_density(full).op().max_abs_diff(maximally_mixed(d).op()) <= 1e-15);

  SeparableEnsemble bad{d, {{0.5, ProductVector::basis(d, 0, 0)}, {0.4, ProductVector::basis(d, 1, 1)}}};
  try {
    ensemble_density(bad);
    FAIL("expected WeightSumError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WeightSumError);
  }
  bad.terms[1].weight = -0.5;
  CHECK_THROWS_AS(ensemble_density(bad), Error);
}

TEST_CASE("ensemble densities are PPT, affine in weights, valid densities") {
  for (const Dims& d : witkit::test::small_dims()) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const int terms = 1 + static_cast<int>(seed % (d.dAB() + 3));
      const SeparableEnsemble e = random_ensemble(d, terms, seed);
      const DensityOperator rho = ensemble_density(e);
      CHECK(ppt_check(rho.op()).status == PptStatus::Ppt);
      CHECK(std::abs(rho.op().trace() - 1.0) <= 1e-12);
      CHECK(min_eigenvalue(rho.op()) >= -1e-12);

      // Merge with a second ensemble at weight t.
      const SeparableEnsemble f = random_ensemble(d, 3, seed + 1000);
      const double t = 0.3;
      SeparableEnsemble merged{d, {}};
      for (const auto& term : e.terms) merged.terms.push_back({t * term.weight, term.pv});
      for (const auto& term : f.terms) merged.terms.push_back({(1 - t) * term.weight, term.pv});
      const auto lhs = ensemble_density(merged).op();
      const auto rhs = rho.op() * t + ensemble_density(f).op() * (1 - t);
      CHECK(lhs.max_abs_diff(rhs) <= 1e-14);
    }
  }
}

TEST_CASE("maximally_mixed") {
  for (const Dims& d : {Dims(2, 2), Dims(3, 3)}) {
    const auto tau = maximally_mixed(d);
    for (int k = 0; k < d.dAB(); ++k) CHECK(tau.op()(k, k).real() == doctest::Approx(1.0 / d.dAB()));
    CHECK(tau.purity() == doctest::Approx(1.0 / d.dAB()));
  }
}

TEST_CASE("random_product_vector: determinism, norms, Haar first moment") {
  const Dims d(3, 2);
  const auto p1 = random_product_vector(d, 42);
  const auto p2 = random_product_vector(d, 42);
  CHECK((p1.muA() - p2.muA()).norm() == 0.0);
  CHECK((p1.nuB() - p2.nuB()).norm() == 0.0);
  CHECK(std::abs(p1.muA().norm() - 1.0) <= 1e-12);
  CHECK(std::abs(p1.nuB().norm() - 1.0) <= 1e-12);
  CHECK(std::abs(p1.kron().norm() - 1.0) <= 1e-12);

  // E|<e_0|mu>|^2 = 1/dA; Var = (dA-1) / (dA^2 (dA+1)) for Haar vectors.
  const int n = 100000;
  const double dA = d.dA();
  Rng rng(2024);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::norm(random_product_vector(d, rng).muA()(0));
  const double mean = sum / n;
  const double sd = std::sqrt((dA - 1) / (dA * dA * (dA + 1)) / n);
  CHECK(std::abs(mean - 1.0 / dA) <= 3 * sd);
}

TEST_CASE("random_density") {
  for (const Dims& d : witkit::test::small_dims()) {
    const auto rho = random_density(d, 77);
    CHECK(std::abs(rho.op().trace() - 1.0) <= 1e-10);
    CHECK(min_eigenvalue(rho.op()) >= -1e-12);
    CHECK(rho.provenance() == Provenance::Unknown);
    CHECK(random_density(d, 77).op().max_abs_diff(rho.op()) == 0.0);
    CHECK(random_density(d, 78).op().max_abs_diff(rho.op()) > 0.0);
  }
}

TEST_CASE("DensityOperator rejects non-states") {
  const Dims d(2, 2);
  CHECK_THROWS_AS(DensityOperator(HermitianOperator::identity(d), Provenance::Unknown), Error);
  CHECK_THROWS_AS(DensityOperator(HermitianOperator::diagonal(d, {1.5, -0.5, 0, 0}), Provenance::Unknown), Error);
  CHECK_THROWS_AS(ProductVector(CVector::Zero(2), CVector::Ones(2)), Error);
}
