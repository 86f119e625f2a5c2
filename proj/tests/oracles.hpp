#pragma once

// Brute-force references for inf <mu nu|sigma|mu nu>. Test-only; they share
// no code with the see-saw.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "witkit/operator.hpp"
#include "witkit/random.hpp"

namespace witkit::test {

/// Minimum over n Haar-random product vectors, evaluated by explicit kron.
inline double mc_min_product_expectation(const HermitianOperator& sigma, long n,
                                         std::uint64_t seed) {
  const int dA = sigma.dims().dA(), dB = sigma.dims().dB();
  const CMatrix& m = sigma.matrix();
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel
  {
    double local = std::numeric_limits<double>::infinity();
#pragma omp for schedule(static)
    for (long chunk = 0; chunk < 64; ++chunk) {
      Rng rng(derive_seed(seed, 99, static_cast<std::uint64_t>(chunk)));
      std::normal_distribution<double> g(0.0, 1.0);
      CVector mu(dA), nu(dB), v(dA * dB);
      const long count = n / 64 + (chunk < n % 64 ? 1 : 0);
      for (long s = 0; s < count; ++s) {
        for (int i = 0; i < dA; ++i) mu(i) = cplx(g(rng), g(rng));
        for (int j = 0; j < dB; ++j) nu(j) = cplx(g(rng), g(rng));
        for (int i = 0; i < dA; ++i)
          for (int j = 0; j < dB; ++j) v(i * dB + j) = mu(i) * nu(j);
        const double val = v.dot(m * v).real() / v.squaredNorm();
        local = std::min(local, val);
      }
    }
#pragma omp critical
    best = std::min(best, local);
  }
  return best;
}

/// Two-qubit objective at Bloch angles (t1, p1, t2, p2).
class QubitPairObjective {
 public:
  explicit QubitPairObjective(const HermitianOperator& sigma) : m_(sigma.matrix()) {}

  double operator()(const std::array<double, 4>& x) const {
    const cplx mu0 = std::cos(x[0] / 2), mu1 = std::polar(std::sin(x[0] / 2), x[1]);
    const cplx nu0 = std::cos(x[2] / 2), nu1 = std::polar(std::sin(x[2] / 2), x[3]);
    Eigen::Vector4cd v(mu0 * nu0, mu0 * nu1, mu1 * nu0, mu1 * nu1);
    return v.dot(m_ * v).real();
  }

 private:
  Eigen::Matrix4cd m_;
};

/// Coarse 24^4 grid over (theta1, phi1, theta2, phi2), then nested local
/// 9^4 grids around the best 12 cells, shrinking the box 4x per level down
/// to ~1e-9 rad.
inline double grid_min_qubit_pair(const HermitianOperator& sigma) {
  const QubitPairObjective f(sigma);
  const int G = 24;
  const double ht = std::numbers::pi / (G - 1), hp = 2 * std::numbers::pi / G;
  std::vector<std::pair<double, std::array<double, 4>>> cells;
  cells.reserve(G * G * G * G);
  for (int a = 0; a < G; ++a)
    for (int b = 0; b < G; ++b)
      for (int c = 0; c < G; ++c)
        for (int d = 0; d < G; ++d) {
          const std::array<double, 4> x{a * ht, b * hp, c * ht, d * hp};
          cells.push_back({f(x), x});
        }
  const std::size_t keep = 12;
  std::partial_sort(cells.begin(), cells.begin() + keep, cells.end(),
                    [](const auto& l, const auto& r) { return l.first < r.first; });

  double best = cells.front().first;
  for (std::size_t k = 0; k < keep; ++k) {
    std::array<double, 4> center = cells[k].second;
    double value = cells[k].first;
    std::array<double, 4> h{ht, hp, ht, hp};
    for (int level = 0; level < 16; ++level) {
      std::array<double, 4> next = center;
      const int L = 4;  // offsets -L..L -> 9 points per axis
      for (int a = -L; a <= L; ++a)
        for (int b = -L; b <= L; ++b)
          for (int c = -L; c <= L; ++c)
            for (int d = -L; d <= L; ++d) {
              const std::array<double, 4> x{center[0] + a * h[0] / L, center[1] + b * h[1] / L,
                                            center[2] + c * h[2] / L, center[3] + d * h[3] / L};
              const double v = f(x);
              if (v < value) {
                value = v;
                next = x;
              }
            }
      center = next;
      for (double& s : h) s /= 4;
    }
    best = std::min(best, value);
  }
  return best;
}

}  // namespace witkit::test
