#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "witkit/scan.hpp"
#include "witkit/spa.hpp"

namespace witkit {

enum class SampleKind { RandomDensity, SeparableEnsemble, GroundProjector };

const char* to_string(SampleKind k) noexcept;

/// One point of the witness-vs-state-space picture.
struct GeometryRow {
  SampleKind kind;
  int index;
  double witness_value;  ///< tr(W rho)
  double min_pt_eig;     ///< lambda_min(rho^Gamma)
  double purity;         ///< tr(rho^2)
  PlaneSide side;
};

struct GeometryOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

/// `samples` Hilbert-Schmidt random states, `samples` random separable
/// ensembles, then the normalized ground projector of W.
std::vector<GeometryRow> sample_geometry(const HermitianOperator& w, const GeometryOptions& opts,
                                         int threads = 0);
std::vector<GeometryRow> sample_geometry_serial(const HermitianOperator& w,
                                                const GeometryOptions& opts);

/// The state used for row (kind, index); lets callers recompute a row.
DensityOperator geometry_state(const HermitianOperator& w, SampleKind kind, int index,
                               std::uint64_t seed);

void write_geometry_csv(std::ostream& os, const std::vector<GeometryRow>& rows,
                        const ReportOptions& opts = {});

}  // namespace witkit
