#include "witkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "witkit/error.hpp"
#include "witkit/parallel.hpp"

namespace witkit {

namespace {

struct GroundState {
  double value;
  CVector vec;
};

GroundState ground(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "conditioned eigenproblem failed");
  }
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

void check_dims(const Dims& a, const Dims& b, const char* what) {
  if (!(a == b)) throw Error(ErrorKind::DimensionMismatch, what);
}

SeeSawRun restart_run(const HermitianOperator& a, const SeeSawOptions& opts, int r) {
  const ProductVector start =
      random_product_vector(a.dims(), opts.seed + static_cast<std::uint64_t>(r));
  return see_saw_run(a, start, opts.max_iter, opts.tol);
}

CmaxEstimate reduce_runs(const std::vector<SeeSawRun>& runs) {
  std::size_t best = 0;
  int total_iter = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    total_iter += runs[r].iterations;
    if (runs[r].value < runs[best].value) best = r;
  }
  return CmaxEstimate{runs[best].value, runs[best].argmin, static_cast<int>(runs.size()),
                      total_iter, runs[best].converged};
}

void check_options(const SeeSawOptions& opts) {
  if (opts.restarts < 1 || opts.max_iter < 1 || !(opts.tol >= 0.0)) {
    throw Error(ErrorKind::InvalidParams, "see-saw needs restarts >= 1, max_iter >= 1, tol >= 0");
  }
}

}  // namespace

double product_expectation(const HermitianOperator& a, const ProductVector& pv) {
  check_dims(a.dims(), pv.dims(), "product_expectation");
  return expectation(a, pv.kron());
}

double product_expectation(const DensityOperator& sigma, const ProductVector& pv) {
  return product_expectation(sigma.op(), pv);
}

CMatrix condition_on_b(const HermitianOperator& a, const CVector& nu) {
  const Dims& d = a.dims();
  if (nu.size() != d.dB()) throw Error(ErrorKind::DimensionMismatch, "condition_on_b");
  CMatrix m = CMatrix::Zero(d.dA(), d.dA());
  for (int i = 0; i < d.dA(); ++i) {
    for (int k = 0; k < d.dA(); ++k) {
      const auto block = a.matrix().block(i * d.dB(), k * d.dB(), d.dB(), d.dB());
      m(i, k) = nu.dot(block * nu);
    }
  }
  return 0.5 * (m + m.adjoint());
}

CMatrix condition_on_a(const HermitianOperator& a, const CVector& mu) {
  const Dims& d = a.dims();
  if (mu.size() != d.dA()) throw Error(ErrorKind::DimensionMismatch, "condition_on_a");
  CMatrix m = CMatrix::Zero(d.dB(), d.dB());
  for (int i = 0; i < d.dA(); ++i) {
    for (int k = 0; k < d.dA(); ++k) {
      m += std::conj(mu(i)) * mu(k) * a.matrix().block(i * d.dB(), k * d.dB(), d.dB(), d.dB());
    }
  }
  return 0.5 * (m + m.adjoint());
}

SeeSawRun see_saw_run(const HermitianOperator& a, const ProductVector& start, int max_iter,
                      double tol) {
  check_dims(a.dims(), start.dims(), "see_saw_run");
  CVector mu = start.muA();
  CVector nu = start.nuB();
  double value = expectation(a, start.kron());
  std::vector<double> trace{value};
  bool converged = false;
  int it = 0;
  while (it < max_iter) {
    ++it;
    const double before = value;
    GroundState gs = ground(condition_on_b(a, nu));
    mu = gs.vec;
    trace.push_back(gs.value);
    gs = ground(condition_on_a(a, mu));
    nu = gs.vec;
    trace.push_back(gs.value);
    value = gs.value;
    if (before - value < tol) {
      converged = true;
      break;
    }
  }
  ProductVector argmin(mu, nu);
  // Report the value actually attained by the returned vector.
  const double attained = product_expectation(a, argmin);
  return SeeSawRun{attained, std::move(argmin), it, converged, std::move(trace)};
}

CmaxEstimate min_product_expectation(const HermitianOperator& a, const SeeSawOptions& opts) {
  check_options(opts);
  std::vector<SeeSawRun> runs(opts.restarts, SeeSawRun{0.0, ProductVector::basis(a.dims(), 0, 0), 0, false, {}});
  const int threads = resolve_threads(opts.threads);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int r = 0; r < opts.restarts; ++r) {
    try {
      runs[r] = restart_run(a, opts, r);
    } catch (...) {
#pragma omp critical(witkit_seesaw_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce_runs(runs);
}

CmaxEstimate c_sigma_max(const DensityOperator& sigma, const SeeSawOptions& opts) {
  return min_product_expectation(sigma.op(), opts);
}

CmaxEstimate c_sigma_max_serial(const DensityOperator& sigma, const SeeSawOptions& opts) {
  check_options(opts);
  std::vector<SeeSawRun> runs;
  runs.reserve(opts.restarts);
  for (int r = 0; r < opts.restarts; ++r) runs.push_back(restart_run(sigma.op(), opts, r));
  return reduce_runs(runs);
}

SigmaFormWitness build_witness(const DensityOperator& sigma, double c) {
  const double lambda0 = min_eigenvalue(sigma.op());
  if (!(c > lambda0)) {
    std::ostringstream os;
    os << "c = " << c << " <= lambda_min(sigma) = " << lambda0 << "; sigma - cI is positive";
    throw Error(ErrorKind::NotAWitness, os.str());
  }
  return SigmaFormWitness(sigma, c, lambda0, std::nullopt);
}

SigmaFormWitness build_witness(const DensityOperator& sigma, double c, const CmaxEstimate& cmax) {
  if (!(cmax.argmin.dims() == sigma.dims())) {
    throw Error(ErrorKind::DimensionMismatch, "c_max estimate belongs to other dims");
  }
  SigmaFormWitness w = build_witness(sigma, c);
  if (c > cmax.value + kCmaxTol) {
    std::ostringstream os;
    os << "c = " << c << " exceeds the achieved product expectation " << cmax.value;
    throw Error(ErrorKind::ExceedsCmax, os.str());
  }
  w.cmax_ = cmax;
  return w;
}

SigmaFormWitness weakly_optimal_witness(const DensityOperator& sigma, const SeeSawOptions& opts) {
  const CmaxEstimate est = c_sigma_max(sigma, opts);
  return build_witness(sigma, est.value, est);
}

RecastWitness sigma_form_from_matrix(const HermitianOperator& w_raw, double margin_rel,
                                     int product_samples, std::uint64_t seed) {
  const Dims& d = w_raw.dims();
  const double lmin = min_eigenvalue(w_raw);
  if (!(lmin < 0.0)) {
    std::ostringstream os;
    os << "lambda_min = " << lmin << " >= 0; not a witness candidate";
    throw Error(ErrorKind::NotNegative, os.str());
  }
  const double norm = hs_norm(w_raw);
  Rng rng(seed);
  for (int k = 0; k < product_samples; ++k) {
    const ProductVector pv = random_product_vector(d, rng);
    const double v = product_expectation(w_raw, pv);
    if (v < -1e-10 * std::max(1.0, norm)) {
      std::ostringstream os;
      os << "product state expectation " << v << " < 0";
      throw Error(ErrorKind::NotAWitness, os.str());
    }
  }
  const double eps = margin_rel * norm;
  // Covering the partial transpose's negativity too keeps sigma PPT; with
  // only -lmin the recast sigma is NPT whenever lambda_min(W^Gamma) < lmin.
  const double lmin_pt = min_eigenvalue(partial_transpose(w_raw));
  const double shift = std::max(-lmin, -lmin_pt) + eps;
  const double gamma = 1.0 / (w_raw.trace() + d.dAB() * shift);
  const double c = gamma * shift;
  HermitianOperator sigma_op = (w_raw * gamma).shifted(c);
  DensityOperator sigma(std::move(sigma_op), Provenance::Asserted);
  return RecastWitness{build_witness(sigma, c), gamma};
}

TauForm to_tau_form(const SigmaFormWitness& w) {
  return TauForm{w.sigma(), w.c() * w.dims().dAB()};
}

double c_from_tau_form(double c_prime, Dims dims) { return c_prime / dims.dAB(); }

WeakOptimality is_weakly_optimal(const SigmaFormWitness& w, double tol) {
  if (!w.cmax()) throw Error(ErrorKind::EstimateMissing, "witness has no c_max estimate");
  const bool ok = std::abs(w.c() - w.cmax()->value) <= tol;
  if (!ok) return {false, std::nullopt};
  return {true, w.cmax()->argmin};
}

double witness_value(const SigmaFormWitness& w, const HermitianOperator& rho) {
  check_dims(w.dims(), rho.dims(), "witness_value");
  return hs_inner(rho, w.op());
}

double witness_value(const SigmaFormWitness& w, const DensityOperator& rho) {
  return witness_value(w, rho.op());
}

bool detects(const SigmaFormWitness& w, const DensityOperator& rho, double tol) {
  return witness_value(w, rho) < -tol;
}

Fineness finer_than(const SigmaFormWitness& w2, const SigmaFormWitness& w1) {
  check_dims(w1.dims(), w2.dims(), "finer_than");
  if (w1.sigma().op().max_abs_diff(w2.sigma().op()) > 1e-12) {
    throw Error(ErrorKind::DifferentSigma, "finer_than only compares witnesses sharing sigma");
  }
  if (w2.c() > w1.c()) return Fineness::Finer;
  if (w2.c() == w1.c()) return Fineness::Equal;
  return Fineness::Incomparable;
}

bool verify_decomposition(const HermitianOperator& w, const HermitianOperator& p,
                          const HermitianOperator& q, double tol) {
  check_dims(w.dims(), p.dims(), "verify_decomposition");
  check_dims(w.dims(), q.dims(), "verify_decomposition");
  if (min_eigenvalue(p) < -tol || min_eigenvalue(q) < -tol) return false;
  return hs_norm(w - (p + partial_transpose(q))) <= tol;
}

}  // namespace witkit
