#include "witkit/spa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "witkit/error.hpp"

namespace witkit {

namespace {

DensityOperator normalize(const HermitianOperator& op, Provenance prov) {
  const double tr = op.trace();
  if (!(tr > 1e-12)) {
    std::ostringstream os;
    os << "SPA operator has trace " << tr << "; cannot normalize";
    throw Error(ErrorKind::ZeroTrace, os.str());
  }
  return DensityOperator(op * (1.0 / tr), prov);
}

std::string onew_note(bool asserted) {
  return asserted ? "caller asserts W is an optimal nondecomposable witness (not certified)"
                  : "no optimality/nondecomposability assertion; violation cannot be concluded";
}

Conclusion conclude(bool condition, bool asserted, bool npt_evidence, bool separable_evidence) {
  if (condition && npt_evidence) return asserted ? Conclusion::Violates : Conclusion::Inconclusive;
  if (!condition && separable_evidence) return Conclusion::Consistent;
  return Conclusion::Inconclusive;
}

}  // namespace

SpaResult spa(const HermitianOperator& w) {
  const double s = std::max(0.0, -min_eigenvalue(w));
  HermitianOperator op = w.shifted(s);
  DensityOperator state = normalize(op, Provenance::Unknown);
  return SpaResult{s, std::move(op), std::move(state), false};
}

SpaResult spa_sigma_form(const SigmaFormWitness& w) {
  const DensityOperator& sigma = w.sigma();
  if (numeric_rank(sigma.op()) < w.dims().dAB()) {
    // Rank-deficient sigma: lambda0 = 0 and the SPA output is sigma itself.
    return SpaResult{w.c(), sigma.op(), sigma, true};
  }
  const double lambda0 = w.lambda0_sigma();
  HermitianOperator op = sigma.op().shifted(-lambda0);
  DensityOperator state = normalize(op, Provenance::Unknown);
  return SpaResult{w.c() - lambda0, std::move(op), std::move(state), false};
}

PptVerdict ppt_check(const HermitianOperator& op, double tol) {
  const double raw = min_eigenvalue(partial_transpose(op));
  const double tr = op.trace();
  const double normalized = tr > 1e-12 ? raw / tr : raw;
  const PptStatus status = normalized < -tol ? PptStatus::NptEntangled : PptStatus::Ppt;
  return PptVerdict{raw, normalized, status,
                    status == PptStatus::Ppt && op.dims().dAB() <= 6};
}

SigmaVerdict sigma_condition(const SigmaFormWitness& w, bool asserted_onew, double tol) {
  const HermitianOperator& sigma = w.sigma().op();
  const double l0 = w.lambda0_sigma();
  const double l0_pt = min_eigenvalue(partial_transpose(sigma));
  const bool condition = l0_pt < l0 - tol;
  // sigma - lambda0 I; its partial transpose has lambda_min = l0_pt - l0.
  const PptVerdict ppt = ppt_check(sigma.shifted(-l0), tol);
  if (condition && ppt.status != PptStatus::NptEntangled) {
    std::ostringstream os;
    os << "eigenvalue condition holds (" << l0_pt << " < " << l0
       << ") but the SPA passed PPT with min PT eigenvalue " << ppt.min_pt_eigenvalue;
    throw Error(ErrorKind::ConvergenceFailure, os.str());
  }
  return SigmaVerdict{condition,
                      l0,
                      l0_pt,
                      ppt,
                      conclude(condition, asserted_onew,
                      ppt.status == PptStatus::NptEntangled,
                      ppt.conclusive_separability),
                      onew_note(asserted_onew)};
}

GapVerdict gap_condition(const HermitianOperator& w, bool asserted_onew,
                         double tol) {
  const HermitianOperator w_pt = partial_transpose(w);
  const double l0 = min_eigenvalue(w);
  if (!(l0 < 0.0)) {
    std::ostringstream os;
    os << "lambda_min(W) = " << l0 << " >= 0; not a witness candidate";
    throw Error(ErrorKind::NotNegative, os.str());
  }
  const double l0_pt = min_eigenvalue(w_pt);
  const double s_w = std::max(0.0, -l0);
  const double s_w_pt = std::max(0.0, -l0_pt);
  const PptVerdict ppt_w = ppt_check(w.shifted(s_w), tol);
  const PptVerdict ppt_w_pt = ppt_check(w_pt.shifted(s_w_pt), tol);

  const bool condition = std::abs(l0 - l0_pt) > tol;
  // The side with the less negative lambda0 is shifted too little to cover
  // its partner's negativity.
  NptSide side = NptSide::None;
  if (condition) side = l0 > l0_pt ? NptSide::W : NptSide::WGamma;
  const PptVerdict& flagged = side == NptSide::WGamma ? ppt_w_pt : ppt_w;
  const bool npt = side != NptSide::None && flagged.status == PptStatus::NptEntangled;
  const bool separable =
      ppt_w.conclusive_separability && ppt_w_pt.conclusive_separability;

  return GapVerdict{condition,
                    l0,
                    l0_pt,
                    std::abs(l0 - l0_pt),
                    s_w,
                    s_w_pt,
                    ppt_w,
                    ppt_w_pt,
                    side,
                    conclude(condition, asserted_onew, npt, separable),
                    onew_note(asserted_onew)};
}

std::pair<HermitianOperator, int> ground_projector(const HermitianOperator& a, double tol) {
  const Spectrum s = eig_hermitian(a);
  int k = 1;
  while (k < s.eigenvalues.size() && s.eigenvalues(k) - s.eigenvalues(0) <= tol) ++k;
  const auto v = s.eigenvectors.leftCols(k);
  CMatrix p = v * v.adjoint();
  p = 0.5 * (p + p.adjoint()).eval();
  return {HermitianOperator(a.dims(), std::move(p)), k};
}

ExtremalProjectors extremal_projectors(const DensityOperator& sigma, double tol) {
  auto [f0, nf] = ground_projector(sigma.op(), tol);
  auto [e0, ne] = ground_projector(partial_transpose(sigma.op()), tol);
  return ExtremalProjectors{std::move(f0), std::move(e0), nf, ne};
}

PlaneSide hyperplane_classify(const HermitianOperator& w, const HermitianOperator& rho,
                              double tol) {
  const double v = hs_inner(w, rho);
  if (v < -tol) return PlaneSide::Negative;
  if (v > tol) return PlaneSide::Positive;
  return PlaneSide::OnPlane;
}

PlaneSide hyperplane_classify(const HermitianOperator& w, const DensityOperator& rho,
                              double tol) {
  return hyperplane_classify(w, rho.op(), tol);
}

const char* to_string(PptStatus s) noexcept {
  return s == PptStatus::Ppt ? "PPT" : "NPT-entangled";
}

const char* to_string(Conclusion c) noexcept {
  switch (c) {
    case Conclusion::Violates: return "VIOLATES";
    case Conclusion::Consistent: return "CONSISTENT";
    case Conclusion::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

const char* to_string(NptSide s) noexcept {
  switch (s) {
    case NptSide::None: return "none";
    case NptSide::W: return "W";
    case NptSide::WGamma: return "W^Gamma";
  }
  return "none";
}

const char* to_string(PlaneSide s) noexcept {
  switch (s) {
    case PlaneSide::Negative: return "negative-side";
    case PlaneSide::OnPlane: return "on-plane";
    case PlaneSide::Positive: return "positive-side";
  }
  return "on-plane";
}

}  // namespace witkit
