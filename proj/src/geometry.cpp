#include "witkit/geometry.hpp"

#include <exception>
#include <ostream>

#include "witkit/error.hpp"
#include "witkit/io.hpp"
#include "witkit/parallel.hpp"

namespace witkit {

namespace {

GeometryRow make_row(const HermitianOperator& w, SampleKind kind, int index,
                     const GeometryOptions& opts) {
  const DensityOperator rho = geometry_state(w, kind, index, opts.seed);
  return GeometryRow{kind,
                     index,
                     hs_inner(w, rho.op()),
                     min_eigenvalue(partial_transpose(rho.op())),
                     rho.purity(),
                     hyperplane_classify(w, rho, opts.tol)};
}

void check(const GeometryOptions& opts) {
  if (opts.samples < 0) throw Error(ErrorKind::InvalidParams, "samples must be >= 0");
}

}  // namespace

const char* to_string(SampleKind k) noexcept {
  switch (k) {
    case SampleKind::RandomDensity: return "random-density";
    case SampleKind::SeparableEnsemble: return "separable-ensemble";
    case SampleKind::GroundProjector: return "ground-projector";
  }
  return "random-density";
}

DensityOperator geometry_state(const HermitianOperator& w, SampleKind kind, int index,
                               std::uint64_t seed) {
  const Dims& d = w.dims();
  const auto k = static_cast<std::uint64_t>(index);
  switch (kind) {
    case SampleKind::RandomDensity:
      return random_density(d, derive_seed(seed, 1, k));
    case SampleKind::SeparableEnsemble: {
      const std::uint64_t s = derive_seed(seed, 2, k);
      const int terms = 1 + static_cast<int>(s % static_cast<std::uint64_t>(d.dAB() + 2));
      return ensemble_density(random_ensemble(d, terms, s));
    }
    case SampleKind::GroundProjector: {
      auto [proj, mult] = ground_projector(w);
      return DensityOperator(proj * (1.0 / mult), Provenance::Unknown);
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown sample kind");
}

std::vector<GeometryRow> sample_geometry(const HermitianOperator& w, const GeometryOptions& opts,
                                         int threads) {
  check(opts);
  const int n = opts.samples;
  std::vector<GeometryRow> rows(2 * n + 1);
  const int nt = resolve_threads(threads);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) num_threads(nt)
  for (int k = 0; k < 2 * n; ++k) {
    try {
      rows[k] = k < n ? make_row(w, SampleKind::RandomDensity, k, opts)
                      : make_row(w, SampleKind::SeparableEnsemble, k - n, opts);
    } catch (...) {
#pragma omp critical(witkit_geometry_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  rows[2 * n] = make_row(w, SampleKind::GroundProjector, 0, opts);
  return rows;
}

std::vector<GeometryRow> sample_geometry_serial(const HermitianOperator& w,
                                                const GeometryOptions& opts) {
  check(opts);
  std::vector<GeometryRow> rows;
  rows.reserve(2 * opts.samples + 1);
  for (int k = 0; k < opts.samples; ++k) {
    rows.push_back(make_row(w, SampleKind::RandomDensity, k, opts));
  }
  for (int k = 0; k < opts.samples; ++k) {
    rows.push_back(make_row(w, SampleKind::SeparableEnsemble, k, opts));
  }
  rows.push_back(make_row(w, SampleKind::GroundProjector, 0, opts));
  return rows;
}

void write_geometry_csv(std::ostream& os, const std::vector<GeometryRow>& rows,
                        const ReportOptions& opts) {
  write_csv_preamble(os, "geometry", opts);
  os << "kind,index,witness_value,min_pt_eig,purity,classification\r\n";
  for (const GeometryRow& r : rows) {
    os << to_string(r.kind) << ',' << r.index << ',' << format_double(r.witness_value) << ','
       << format_double(r.min_pt_eig) << ',' << format_double(r.purity) << ','
       << to_string(r.side) << "\r\n";
  }
}

}  // namespace witkit
