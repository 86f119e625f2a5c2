#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "witkit/operator.hpp"
#include "witkit/states.hpp"

namespace witkit::test {

inline CMatrix random_hermitian_matrix(int n, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) m(r, s) = cplx(g(rng), g(rng));
  }
  CMatrix h = 0.5 * (m + m.adjoint());
  for (int k = 0; k < n; ++k) h(k, k) = h(k, k).real();
  return h;
}

inline HermitianOperator random_hermitian(Dims dims, Rng& rng, double scale = 1.0) {
  return HermitianOperator(dims, random_hermitian_matrix(dims.dAB(), rng, scale));
}

/// B-side partial transpose as sum_{j,l} (I (x) E_jl) A (I (x) E_jl); shares
/// no index arithmetic with the library routine.
inline CMatrix pt_by_kraus_sum(const HermitianOperator& a) {
  const int dA = a.dims().dA(), dB = a.dims().dB();
  CMatrix out = CMatrix::Zero(a.size(), a.size());
  for (int j = 0; j < dB; ++j) {
    for (int l = 0; l < dB; ++l) {
      CMatrix e = CMatrix::Zero(dB, dB);
      e(j, l) = 1.0;
      CMatrix k = CMatrix::Zero(a.size(), a.size());
      for (int i = 0; i < dA; ++i) k.block(i * dB, i * dB, dB, dB) = e;
      out += k * a.matrix() * k;
    }
  }
  return out;
}

inline double max_sorted_dev(std::vector<double> x, std::vector<double> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

inline const std::vector<Dims>& small_dims() {
  static const std::vector<Dims> d{Dims(2, 2), Dims(2, 3), Dims(3, 3)};
  return d;
}

}  // namespace witkit::test
