#include "witkit/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <limits>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "witkit/error.hpp"
#include "witkit/io.hpp"
#include "witkit/parallel.hpp"

namespace witkit {

namespace {

constexpr const char* kKeyOrder[] = {"a", "b", "c", "theta"};

int key_rank(const std::string& key) {
  for (int k = 0; k < 4; ++k) {
    if (key == kKeyOrder[k]) return k;
  }
  return -1;
}

double parse_number(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidGrid, "bad number '" + text + "' in '" + spec + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidGrid, "bad number '" + text + "' in '" + spec + "'");
  }
  return v;
}

void set_key(HaKyeParams& p, const std::string& key, double v) {
  if (key == "a") p.a = v;
  else if (key == "b") p.b = v;
  else if (key == "c") p.c = v;
  else p.theta = v;
}

double max_dev(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

double GridAxis::value(int k) const {
  if (count == 1) return start;
  return start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1);
}

GridAxis parse_grid_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::InvalidGrid, "expected key=start:stop:N, got '" + spec + "'");
  }
  GridAxis axis;
  axis.key = spec.substr(0, eq);
  if (key_rank(axis.key) < 0) {
    throw Error(ErrorKind::InvalidGrid, "unknown scan key '" + axis.key + "'");
  }
  std::vector<std::string> parts;
  std::stringstream rest(spec.substr(eq + 1));
  for (std::string part; std::getline(rest, part, ':');) parts.push_back(part);
  if (parts.size() != 3) {
    throw Error(ErrorKind::InvalidGrid, "expected key=start:stop:N, got '" + spec + "'");
  }
  axis.start = parse_number(parts[0], spec);
  axis.stop = parse_number(parts[1], spec);
  const double n = parse_number(parts[2], spec);
  if (n < 1 || n != std::floor(n) || n > 1e7) {
    throw Error(ErrorKind::InvalidGrid, "point count must be a positive integer in '" + spec + "'");
  }
  axis.count = static_cast<int>(n);
  return axis;
}

ScanSpec normalize(ScanSpec spec) {
  std::stable_sort(spec.axes.begin(), spec.axes.end(), [](const GridAxis& x, const GridAxis& y) {
    return key_rank(x.key) < key_rank(y.key);
  });
  for (std::size_t k = 0; k < spec.axes.size(); ++k) {
    if (key_rank(spec.axes[k].key) < 0) {
      throw Error(ErrorKind::InvalidGrid, "unknown scan key '" + spec.axes[k].key + "'");
    }
    if (spec.axes[k].count < 1) throw Error(ErrorKind::InvalidGrid, "point count must be >= 1");
    if (k > 0 && spec.axes[k].key == spec.axes[k - 1].key) {
      throw Error(ErrorKind::InvalidGrid, "axis '" + spec.axes[k].key + "' given twice");
    }
    if (spec.cos_scaling && spec.axes[k].key != "theta") {
      throw Error(ErrorKind::InvalidGrid, "cos scaling fixes a, b, c; only theta may be scanned");
    }
  }
  return spec;
}

std::vector<HaKyeParams> grid_points(const ScanSpec& spec) {
  std::size_t total = 1;
  for (const auto& ax : spec.axes) total *= static_cast<std::size_t>(ax.count);
  std::vector<HaKyeParams> points;
  points.reserve(total);
  std::vector<int> idx(spec.axes.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    HaKyeParams p = spec.base;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) {
      set_key(p, spec.axes[k].key, spec.axes[k].value(idx[k]));
    }
    if (spec.cos_scaling) p = HaKyeParams::cos_scaled(p.theta);
    points.push_back(p);
    for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
      if (++idx[k] < spec.axes[k].count) break;
      idx[k] = 0;
    }
  }
  return points;
}

const std::string_view kReferenceLabelNote =
    "commonly quoted labels assign -0.7286 to lambda0_W and -0.6440 to lambda0_WGamma; for this "
    "matrix layout lambda0_W = a - 2cos(theta) and lambda0_WGamma = (b+c)/2 - "
    "sqrt(((b-c)/2)^2 + 1), i.e. the labels are swapped (the unordered pair agrees)";

ScanRow analyze_point(const HaKyeParams& p, const ScanSpec& spec) {
  try {
    validate(p);
  } catch (const Error&) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return ScanRow{p, nan, nan, nan, false, nan, NptSide::None, nan, false, "invalid-params", ""};
  }
  const HermitianOperator w = hakye_witness(p);
  const std::vector<double> ev = eigenvalues(w);
  const std::vector<double> ev_pt = eigenvalues(partial_transpose(w));
  const double dev = std::max(max_dev(ev, hakye_spectrum_closed_form(p)),
                              max_dev(ev_pt, hakye_pt_spectrum_closed_form(p)));

  ScanRow row{p, ev.front(), ev_pt.front(), std::abs(ev.front() - ev_pt.front()), false, 0.0,
              NptSide::None, dev, dev > spec.oracle_tol, "", ""};
  if (ev.front() < 0.0) {
    const GapVerdict v = gap_condition(w, false, spec.tol);
    row.condition_holds = v.condition_holds;
    row.spa_min_pt_eig =
        std::min(v.spa_w_ppt.min_pt_eigenvalue, v.spa_w_pt_ppt.min_pt_eigenvalue);
    row.npt_side = v.npt_side;
  } else {
    row.spa_min_pt_eig = ev_pt.front();
  }
  if (row.oracle_mismatch) row.verdict = "oracle-mismatch";
  else if (ev.front() >= 0.0) row.verdict = "not-a-witness";
  else if (row.condition_holds && row.spa_min_pt_eig < -spec.tol) row.verdict = "violation";
  else row.verdict = "no-violation";
  if (is_reference_instance(p)) row.note = std::string(kReferenceLabelNote);
  return row;
}

std::vector<ScanRow> run_scan(const ScanSpec& raw, int threads) {
  const ScanSpec spec = normalize(raw);
  const std::vector<HaKyeParams> points = grid_points(spec);
  const int n = static_cast<int>(points.size());
  std::vector<ScanRow> rows(n);
  const int nt = resolve_threads(threads);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
  for (int k = 0; k < n; ++k) {
    try {
      rows[k] = analyze_point(points[k], spec);
    } catch (...) {
#pragma omp critical(witkit_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<ScanRow> run_scan_serial(const ScanSpec& raw) {
  const ScanSpec spec = normalize(raw);
  std::vector<ScanRow> rows;
  for (const HaKyeParams& p : grid_points(spec)) rows.push_back(analyze_point(p, spec));
  return rows;
}

void write_csv_preamble(std::ostream& os, const std::string& kind, const ReportOptions& opts) {
  os << "# witkit-report schema_version=" << kReportSchemaVersion << " kind=" << kind << "\r\n";
  if (!opts.reproducible) os << "# generated=" << utc_timestamp() << "\r\n";
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows,
                    const ReportOptions& opts) {
  write_csv_preamble(os, "hakye-scan", opts);
  os << "a,b,c,theta,lambda0_W,lambda0_WGamma,gap,condition_holds,spa_min_pt_eig,npt_side,"
        "oracle_max_dev,verdict,note\r\n";
  for (const ScanRow& r : rows) {
    os << format_double(r.params.a) << ',' << format_double(r.params.b) << ','
       << format_double(r.params.c) << ',' << format_double(r.params.theta) << ','
       << format_double(r.lambda0_w) << ',' << format_double(r.lambda0_w_pt) << ','
       << format_double(r.gap) << ',' << (r.condition_holds ? "true" : "false") << ','
       << format_double(r.spa_min_pt_eig) << ',' << csv_field(to_string(r.npt_side)) << ','
       << format_double(r.oracle_max_dev) << ',' << r.verdict << ',' << csv_field(r.note)
       << "\r\n";
  }
}

void write_scan_json(std::ostream& os, const std::vector<ScanRow>& rows, const ReportOptions&) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ScanRow& r : rows) {
    arr.push_back({{"schema_version", kReportSchemaVersion},
                   {"a", r.params.a},
                   {"b", r.params.b},
                   {"c", r.params.c},
                   {"theta", r.params.theta},
                   {"lambda0_W", r.lambda0_w},
                   {"lambda0_WGamma", r.lambda0_w_pt},
                   {"gap", r.gap},
                   {"condition_holds", r.condition_holds},
                   {"spa_min_pt_eig", r.spa_min_pt_eig},
                   {"npt_side", to_string(r.npt_side)},
                   {"oracle_max_dev", r.oracle_max_dev},
                   {"verdict", r.verdict},
                   {"note", r.note}});
  }
  os << arr.dump(2) << '\n';
}

}  // namespace witkit
