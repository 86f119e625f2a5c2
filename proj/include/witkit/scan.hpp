#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "witkit/hakye.hpp"
#include "witkit/spa.hpp"

namespace witkit {

/// key=start:stop:N, N >= 1 points including both ends (N = 1 gives start).
struct GridAxis {
  std::string key;  ///< a, b, c or theta
  double start;
  double stop;
  int count;

  double value(int k) const;
};

/// Throws InvalidGrid on malformed text, unknown key or N < 1.
GridAxis parse_grid_axis(const std::string& spec);

struct ScanSpec {
  HaKyeParams base;              ///< values for keys not on the grid
  std::vector<GridAxis> axes;    ///< ordered a, b, c, theta after normalization
  bool cos_scaling = false;    ///< a, b, c follow 4/3 cos, 2/3 cos, 0 of theta
  double oracle_tol = 1e-8;
  double tol = kEigTol;
};

/// Sorts axes into the canonical key order and rejects duplicates/conflicts.
ScanSpec normalize(ScanSpec spec);

/// Grid points in lexicographic order (last axis fastest).
std::vector<HaKyeParams> grid_points(const ScanSpec& spec);

struct ScanRow {
  HaKyeParams params;
  double lambda0_w;
  double lambda0_w_pt;
  double gap;
  bool condition_holds;
  double spa_min_pt_eig;  ///< min over both SPAs of their PT minimum eigenvalue
  NptSide npt_side;
  double oracle_max_dev;  ///< largest |numeric - closed form| over both spectra
  bool oracle_mismatch;
  std::string verdict;    ///< violation | no-violation | not-a-witness | oracle-mismatch | invalid-params
  std::string note;       ///< label remark for the reference instance, else empty
};

/// Remark attached to rows at the reference instance.
extern const std::string_view kReferenceLabelNote;

/// One grid point: numeric path plus closed-form oracles. Parameters outside
/// the family's domain give an invalid-params row with NaN numerics.
ScanRow analyze_point(const HaKyeParams& p, const ScanSpec& spec);

/// Parallel over grid points; rows always in grid order.
std::vector<ScanRow> run_scan(const ScanSpec& spec, int threads = 0);
std::vector<ScanRow> run_scan_serial(const ScanSpec& spec);

struct ReportOptions {
  bool reproducible = false;
};

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows,
                    const ReportOptions& opts = {});
void write_scan_json(std::ostream& os, const std::vector<ScanRow>& rows,
                     const ReportOptions& opts = {});

/// "# witkit-report schema_version=1 kind=<kind>" plus an optional timestamp line.
void write_csv_preamble(std::ostream& os, const std::string& kind, const ReportOptions& opts);

}  // namespace witkit
