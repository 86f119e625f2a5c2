#pragma once

#include <vector>

#include "witkit/operator.hpp"

namespace witkit {

/// Parameters of the 3x3 witness family W[a,b,c;theta].
struct HaKyeParams {
  double a;
  double b;
  double c;
  double theta;  ///< radians

  /// a = 4/3 cos(pi/12), b = 2/3 cos(pi/12), c = 0, theta = pi/12.
  static HaKyeParams reference_instance();
  /// a = 4/3 cos(theta), b = 2/3 cos(theta), c = 0.
  static HaKyeParams cos_scaled(double theta);
};

inline const Dims kHaKyeDims{3, 3};

/// Throws InvalidParams on negative or non-finite entries or a = b = c = 0.
void validate(const HaKyeParams& p);

/// Diagonal (a,c,b,b,a,c,c,b,a); -e^{i theta} at (0,4),(4,8),(8,0) and the
/// conjugate at the transposed positions.
HermitianOperator hakye_witness(const HaKyeParams& p);

/// Ascending. {0,4,8} is a circulant block with eigenvalues
/// a - 2 cos(theta + 2 pi k / 3); the rest is {b,b,b,c,c,c}.
std::vector<double> hakye_spectrum_closed_form(const HaKyeParams& p);

/// Ascending spectrum of the partial transpose: three 2x2 blocks
/// [[c, *], [*, b]] with unit coupling, plus {a,a,a}.
std::vector<double> hakye_pt_spectrum_closed_form(const HaKyeParams& p);

/// True if p matches the reference instance (theta = pi/12, cos-scaled a, b)
/// to 1e-4 in every field.
bool is_reference_instance(const HaKyeParams& p);

}  // namespace witkit
