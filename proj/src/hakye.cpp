#include "witkit/hakye.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "witkit/error.hpp"

namespace witkit {

HaKyeParams HaKyeParams::reference_instance() { return cos_scaled(std::numbers::pi / 12.0); }

HaKyeParams HaKyeParams::cos_scaled(double theta) {
  const double k = std::cos(theta);
  return HaKyeParams{4.0 / 3.0 * k, 2.0 / 3.0 * k, 0.0, theta};
}

void validate(const HaKyeParams& p) {
  for (double x : {p.a, p.b, p.c}) {
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorKind::InvalidParams, "a, b, c must be finite and non-negative");
    }
  }
  if (!std::isfinite(p.theta)) throw Error(ErrorKind::InvalidParams, "theta must be finite");
  if (p.a == 0.0 && p.b == 0.0 && p.c == 0.0) {
    throw Error(ErrorKind::InvalidParams, "at least one of a, b, c must be positive");
  }
}

HermitianOperator hakye_witness(const HaKyeParams& p) {
  validate(p);
  CMatrix m = CMatrix::Zero(9, 9);
  const double diag[9] = {p.a, p.c, p.b, p.b, p.a, p.c, p.c, p.b, p.a};
  for (int k = 0; k < 9; ++k) m(k, k) = diag[k];
  const cplx ph = -std::polar(1.0, p.theta);
  const cplx phc = std::conj(ph);
  m(0, 4) = ph;
  m(4, 8) = ph;
  m(8, 0) = ph;
  m(4, 0) = phc;
  m(8, 4) = phc;
  m(0, 8) = phc;
  return HermitianOperator(kHaKyeDims, std::move(m));
}

std::vector<double> hakye_spectrum_closed_form(const HaKyeParams& p) {
  validate(p);
  std::vector<double> ev;
  ev.reserve(9);
  for (int k = 0; k < 3; ++k) {
    ev.push_back(p.a - 2.0 * std::cos(p.theta + 2.0 * std::numbers::pi * k / 3.0));
  }
  ev.insert(ev.end(), {p.b, p.b, p.b, p.c, p.c, p.c});
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> hakye_pt_spectrum_closed_form(const HaKyeParams& p) {
  validate(p);
  const double mean = 0.5 * (p.b + p.c);
  const double half = 0.5 * (p.b - p.c);
  const double r = std::sqrt(half * half + 1.0);
  std::vector<double> ev{p.a, p.a, p.a};
  for (int k = 0; k < 3; ++k) {
    ev.push_back(mean - r);
    ev.push_back(mean + r);
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

bool is_reference_instance(const HaKyeParams& p) {
  const HaKyeParams ref = HaKyeParams::reference_instance();
  return std::abs(p.a - ref.a) <= 1e-4 && std::abs(p.b - ref.b) <= 1e-4 &&
         std::abs(p.c - ref.c) <= 1e-4 && std::abs(p.theta - ref.theta) <= 1e-4;
}

}  // namespace witkit
