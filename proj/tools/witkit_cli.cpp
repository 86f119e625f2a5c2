// witkit: command-line front end for witness analysis, Ha-Kye scans, c_max
// estimation and geometry sampling.
//
// Exit codes: 0 clean, 1 input/validation error, 2 numerical failure,
// 3 a violation condition was found (analyze).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "witkit/error.hpp"
#include "witkit/geometry.hpp"
#include "witkit/hakye.hpp"
#include "witkit/io.hpp"
#include "witkit/scan.hpp"
#include "witkit/spa.hpp"
#include "witkit/witness.hpp"

namespace {

using namespace witkit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitViolation = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConvergenceFailure:
    case ErrorKind::NonRealResult:
    case ErrorKind::ZeroTrace:
      return kExitNumeric;
    default:
      return kExitInput;
  }
}

/// SPA_WITNESS_THREADS caps the worker count; unset means OpenMP default.
int worker_threads() {
  const char* env = std::getenv("SPA_WITNESS_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 4096) {
    throw Error(ErrorKind::InvalidParams, "SPA_WITNESS_THREADS must be a positive integer");
  }
  return static_cast<int>(n);
}

/// Writes to `path`, or stdout when empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::IoError, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

json ppt_json(const PptVerdict& v) {
  return {{"min_pt_eig", v.min_pt_eigenvalue},
          {"min_pt_eig_normalized", v.min_pt_eigenvalue_normalized},
          {"status", to_string(v.status)},
          {"conclusive_separability", v.conclusive_separability}};
}

json vector_json(const CVector& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back({v(k).real(), v(k).imag()});
  return arr;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string path;
  double tol = kEigTol;
  bool assert_onew = false;
  bool as_json = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
  const OperatorFile file = load_operator_file(args.path);
  const HermitianOperator& w = file.op;
  const GapVerdict v = gap_condition(w, args.assert_onew, args.tol);

  json out = {{"schema_version", kReportSchemaVersion},
              {"kind", "analyze"},
              {"dims", {{"dA", w.dims().dA()}, {"dB", w.dims().dB()}}},
              {"tol", args.tol},
              {"lambda0_W", v.lambda0_w},
              {"lambda0_WGamma", v.lambda0_w_pt},
              {"gap", v.gap},
              {"condition_holds", v.condition_holds},
              {"spa_W", {{"s", v.s_w}, {"ppt", ppt_json(v.spa_w_ppt)}}},
              {"spa_WGamma", {{"s", v.s_w_pt}, {"ppt", ppt_json(v.spa_w_pt_ppt)}}},
              {"npt_side", to_string(v.npt_side)},
              {"conclusion", to_string(v.conclusion)},
              {"assertion_note", v.assertion_note}};

  // The sigma-form view needs a recast; inputs failing the product-state
  // spot check are reported without it.
  try {
    const RecastWitness rw = sigma_form_from_matrix(w);
    const SigmaVerdict sv = sigma_condition(rw.witness, args.assert_onew, args.tol);
    out["sigma_form"] = {{"scale", rw.scale},
                         {"c", rw.witness.c()},
                         {"sigma_provenance", to_string(rw.witness.sigma().provenance())},
                         {"lambda0_sigma", sv.lambda0_sigma},
                         {"lambda0_sigma_pt", sv.lambda0_sigma_pt},
                         {"condition_holds", sv.condition_holds},
                         {"spa_ppt", ppt_json(sv.spa_ppt)},
                         {"conclusion", to_string(sv.conclusion)}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAWitness) throw;
    out["sigma_form"] = nullptr;
    out["sigma_form_error"] = e.what();
  }

  if (args.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "lambda0_W            " << format_double(v.lambda0_w) << '\n'
              << "lambda0_WGamma       " << format_double(v.lambda0_w_pt) << '\n'
              << "gap                  " << format_double(v.gap) << '\n'
              << "SPA(W)       s       " << format_double(v.s_w) << "  "
              << to_string(v.spa_w_ppt.status) << "  min PT eig "
              << format_double(v.spa_w_ppt.min_pt_eigenvalue) << '\n'
              << "SPA(W^Gamma) s       " << format_double(v.s_w_pt) << "  "
              << to_string(v.spa_w_pt_ppt.status) << "  min PT eig "
              << format_double(v.spa_w_pt_ppt.min_pt_eigenvalue) << '\n'
              << "condition            " << (v.condition_holds ? "holds" : "does not hold") << '\n'
              << "NPT side             " << to_string(v.npt_side) << '\n'
              << "conclusion           " << to_string(v.conclusion) << '\n'
              << "note                 " << v.assertion_note << '\n';
  }
  const bool npt = v.npt_side != NptSide::None;
  return v.condition_holds && npt ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------- hakye

struct HakyeArgs {
  std::optional<double> a, b, c, theta;
  std::vector<std::string> scans;
  bool cos_scaling = false;
  std::string out;
  std::string format = "csv";
  std::string save_operator;
  bool reproducible = false;
};

int cmd_hakye(const HakyeArgs& args) {
  ScanSpec spec;
  spec.base = HaKyeParams::reference_instance();
  if (args.a) spec.base.a = *args.a;
  if (args.b) spec.base.b = *args.b;
  if (args.c) spec.base.c = *args.c;
  if (args.theta) spec.base.theta = *args.theta;
  spec.cos_scaling = args.cos_scaling;
  if (spec.cos_scaling && (args.a || args.b || args.c)) {
    throw Error(ErrorKind::InvalidGrid, "--cos-scaling derives a, b, c from theta");
  }
  for (const std::string& s : args.scans) spec.axes.push_back(parse_grid_axis(s));
  spec = normalize(spec);

  if (!args.save_operator.empty()) {
    if (!spec.axes.empty()) {
      throw Error(ErrorKind::InvalidGrid, "--save-operator needs a single parameter point");
    }
    HaKyeParams p = spec.cos_scaling ? HaKyeParams::cos_scaled(spec.base.theta) : spec.base;
    std::ostringstream label;
    label << "W[a,b,c;theta] a=" << format_double(p.a) << " b=" << format_double(p.b)
          << " c=" << format_double(p.c) << " theta=" << format_double(p.theta);
    save_operator(hakye_witness(p), args.save_operator, {label.str(), std::nullopt});
  }

  const std::vector<ScanRow> rows = run_scan(spec, worker_threads());
  Output out(args.out);
  const ReportOptions ropts{args.reproducible};
  if (args.format == "json") write_scan_json(out.stream(), rows, ropts);
  else write_scan_csv(out.stream(), rows, ropts);

  for (const ScanRow& r : rows) {
    if (r.oracle_mismatch) {
      std::cerr << "oracle mismatch at a=" << r.params.a << " b=" << r.params.b
                << " c=" << r.params.c << " theta=" << r.params.theta
                << " (deviation " << r.oracle_max_dev << ")\n";
      return kExitNumeric;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- cmax

struct CmaxArgs {
  std::string path;
  int restarts = 32;
  int max_iter = 500;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  bool as_json = false;
};

int cmd_cmax(const CmaxArgs& args) {
  const OperatorFile file = load_operator_file(args.path);
  const DensityOperator sigma(file.op, file.metadata.provenance.value_or(Provenance::Unknown));
  SeeSawOptions opts;
  opts.restarts = args.restarts;
  opts.max_iter = args.max_iter;
  opts.tol = args.tol;
  opts.seed = args.seed;
  opts.threads = worker_threads();
  const CmaxEstimate est = c_sigma_max(sigma, opts);
  const double lambda0 = min_eigenvalue(sigma.op());

  if (args.as_json) {
    json out = {{"schema_version", kReportSchemaVersion},
                {"kind", "cmax"},
                {"value", est.value},
                {"lambda0_sigma", lambda0},
                {"certificate", {{"muA", vector_json(est.argmin.muA())},
                                 {"nuB", vector_json(est.argmin.nuB())}}},
                {"restarts", est.restarts},
                {"iterations", est.iterations},
                {"converged", est.converged},
                {"seed", args.seed}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "c_max estimate  " << format_double(est.value) << '\n'
              << "lambda0_sigma   " << format_double(lambda0) << '\n'
              << "restarts        " << est.restarts << '\n'
              << "iterations      " << est.iterations << '\n'
              << "converged       " << (est.converged ? "yes" : "no") << '\n'
              << "certificate muA " << vector_json(est.argmin.muA()).dump() << '\n'
              << "certificate nuB " << vector_json(est.argmin.nuB()).dump() << '\n';
  }
  return est.converged ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------- geometry

struct GeometryArgs {
  std::string path;
  int samples = 1000;
  std::uint64_t seed = 0;
  std::string out;
  bool reproducible = false;
};

int cmd_geometry(const GeometryArgs& args) {
  const HermitianOperator w = load_operator(args.path);
  GeometryOptions opts;
  opts.samples = args.samples;
  opts.seed = args.seed;
  const auto rows = sample_geometry(w, opts, worker_threads());
  Output out(args.out);
  write_geometry_csv(out.stream(), rows, ReportOptions{args.reproducible});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement witnesses in sigma-form, their SPA, and PPT-based violation checks"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Eigenvalue gap of W vs W^Gamma and SPA PPT evidence");
  analyze->add_option("witness", an.path, "operator file (JSON)")->required();
  analyze->add_option("--tol", an.tol, "eigenvalue comparison tolerance");
  analyze->add_flag("--assert-onew", an.assert_onew,
                    "assert W is optimal and nondecomposable (enables VIOLATES)");
  analyze->add_flag("--json", an.as_json, "JSON report");

  HakyeArgs hk;
  auto* hakye = app.add_subcommand("hakye", "Analyze or scan the W[a,b,c;theta] family");
  hakye->add_option("--a", hk.a);
  hakye->add_option("--b", hk.b);
  hakye->add_option("--c", hk.c);
  hakye->add_option("--theta", hk.theta, "radians");
  hakye->add_option("--scan", hk.scans, "key=start:stop:N (repeatable; keys a, b, c, theta)");
  hakye->add_flag("--cos-scaling", hk.cos_scaling,
                  "a = 4/3 cos(theta), b = 2/3 cos(theta), c = 0 at every point");
  hakye->add_option("--out", hk.out, "report path (default stdout)");
  hakye->add_option("--format", hk.format)->check(CLI::IsMember({"csv", "json"}));
  hakye->add_option("--save-operator", hk.save_operator, "also write W as an operator file");
  hakye->add_flag("--reproducible", hk.reproducible, "omit the timestamp line");

  CmaxArgs cm;
  auto* cmax = app.add_subcommand("cmax", "See-saw estimate of inf <mu nu|sigma|mu nu>");
  cmax->add_option("sigma", cm.path, "density operator file (JSON)")->required();
  cmax->add_option("--restarts", cm.restarts)->check(CLI::PositiveNumber);
  cmax->add_option("--max-iter", cm.max_iter)->check(CLI::PositiveNumber);
  cmax->add_option("--tol", cm.tol)->check(CLI::NonNegativeNumber);
  cmax->add_option("--seed", cm.seed);
  cmax->add_flag("--json", cm.as_json);
  bool cmax_repro = false;
  cmax->add_flag("--reproducible", cmax_repro, "accepted for symmetry; output has no timestamp");

  GeometryArgs geo;
  auto* geometry = app.add_subcommand("geometry", "Scatter data: witness value vs PT and purity");
  geometry->add_option("witness", geo.path, "operator file (JSON)")->required();
  geometry->add_option("--samples", geo.samples)->check(CLI::NonNegativeNumber);
  geometry->add_option("--seed", geo.seed);
  geometry->add_option("--out", geo.out, "CSV path (default stdout)");
  geometry->add_flag("--reproducible", geo.reproducible, "omit the timestamp line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*hakye) return cmd_hakye(hk);
    if (*cmax) return cmd_cmax(cm);
    if (*geometry) return cmd_geometry(geo);
  } catch (const Error& e) {
    std::cerr << "witkit: " << e.what() << '\n';
    if (e.kind() == ErrorKind::NotNegative) std::cerr << "witkit: not a witness candidate\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "witkit: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
