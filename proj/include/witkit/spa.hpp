#pragma once

#include <optional>
#include <string>

#include "witkit/operator.hpp"
#include "witkit/states.hpp"
#include "witkit/witness.hpp"

namespace witkit {

/// Default absolute tolerance for eigenvalue comparisons.
inline constexpr double kEigTol = 1e-8;

/// Structural physical approximation W + sI with the smallest s >= 0 that
/// makes it positive.
struct SpaResult {
  double s;
  HermitianOperator spa_operator;
  DensityOperator normalized_state;
  bool rank_deficient_shortcut;
};

enum class PptStatus { NptEntangled, Ppt };

struct PptVerdict {
  double min_pt_eigenvalue;             ///< of the input as given
  double min_pt_eigenvalue_normalized;  ///< after dividing by the trace (if > 0)
  PptStatus status;
  /// PPT and dAB <= 6, where PPT implies separability.
  bool conclusive_separability;
};

enum class Conclusion { Violates, Consistent, Inconclusive };

struct SigmaVerdict {
  bool condition_holds;
  double lambda0_sigma;
  double lambda0_sigma_pt;
  PptVerdict spa_ppt;
  Conclusion conclusion;
  std::string assertion_note;
};

enum class NptSide { None, W, WGamma };

/// Eigenvalue-gap test between W and W^Gamma and PPT evidence for both SPAs.
struct GapVerdict {
  bool condition_holds;
  double lambda0_w;
  double lambda0_w_pt;
  double gap;  ///< |lambda0_w - lambda0_w_pt|
  double s_w;
  double s_w_pt;
  PptVerdict spa_w_ppt;     ///< PPT check of SPA(W)
  PptVerdict spa_w_pt_ppt;  ///< PPT check of SPA(W^Gamma)
  NptSide npt_side;
  Conclusion conclusion;
  std::string assertion_note;
};

/// Throws ZeroTrace when the shifted operator cannot be normalized.
SpaResult spa(const HermitianOperator& w);

/// SPA read off the sigma-form: sigma - lambda0(sigma) I. Rank-deficient sigma
/// takes lambda0 = 0 and returns sigma itself.
SpaResult spa_sigma_form(const SigmaFormWitness& w);

PptVerdict ppt_check(const HermitianOperator& op, double tol = kEigTol);

/// `asserted_onew`: caller vouches that W is optimal and nondecomposable;
/// only then can the conclusion be Violates.
SigmaVerdict sigma_condition(const SigmaFormWitness& w, bool asserted_onew,
                             double tol = kEigTol);

/// Throws NotNegative if lambda_min(W) >= 0.
GapVerdict gap_condition(const HermitianOperator& w, bool asserted_onew = false,
                         double tol = kEigTol);

struct ExtremalProjectors {
  HermitianOperator f0_proj;  ///< ground eigenspace of sigma
  HermitianOperator e0_proj;  ///< ground eigenspace of sigma^Gamma
  int f0_degeneracy;
  int e0_degeneracy;
};

ExtremalProjectors extremal_projectors(const DensityOperator& sigma, double tol = kEigTol);

/// Projector onto the eigenspace of `a` belonging to its smallest eigenvalue
/// (eigenvalues within tol of it); second member is the multiplicity.
std::pair<HermitianOperator, int> ground_projector(const HermitianOperator& a,
                                                   double tol = kEigTol);

enum class PlaneSide { Negative, OnPlane, Positive };

PlaneSide hyperplane_classify(const HermitianOperator& w, const HermitianOperator& rho,
                              double tol = 1e-10);
PlaneSide hyperplane_classify(const HermitianOperator& w, const DensityOperator& rho,
                              double tol = 1e-10);

const char* to_string(PptStatus s) noexcept;
const char* to_string(Conclusion c) noexcept;
const char* to_string(NptSide s) noexcept;
const char* to_string(PlaneSide s) noexcept;

}  // namespace witkit
