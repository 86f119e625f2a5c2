#include <doctest.h>

#include <cmath>
#include <sstream>

#include "witkit/error.hpp"
#include "witkit/geometry.hpp"
#include "witkit/scan.hpp"

using namespace witkit;

TEST_CASE("grid axis parsing") {
  const GridAxis ax = parse_grid_axis("theta=0:1.5708:50");
  CHECK(ax.key == "theta");
  CHECK(ax.count == 50);
  CHECK(ax.value(0) == 0.0);
  CHECK(ax.value(49) == 1.5708);
  CHECK(parse_grid_axis("a=1:2:1").value(0) == 1.0);

  for (const char* bad : {"theta", "q=0:1:3", "a=0:1", "a=0:1:0", "a=0:x:3", "a=0:1:2.5"}) {
    try {
      parse_grid_axis(bad);
      FAIL("accepted ", bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidGrid);
    }
  }
  ScanSpec dup;
  dup.axes = {parse_grid_axis("a=0:1:2"), parse_grid_axis("a=0:1:3")};
  CHECK_THROWS_AS(normalize(dup), Error);
  ScanSpec conflict;
  conflict.cos_scaling = true;
  conflict.axes = {parse_grid_axis("b=0:1:2")};
  CHECK_THROWS_AS(normalize(conflict), Error);
}

TEST_CASE("grid order is lexicographic over a, b, c, theta") {
  ScanSpec spec;
  spec.base = HaKyeParams::reference_instance();
  spec.axes = {parse_grid_axis("theta=0:1:3"), parse_grid_axis("a=1:2:2")};
  const auto pts = grid_points(normalize(spec));
  REQUIRE(pts.size() == 6);
  CHECK(pts[0].a == 1.0);
  CHECK(pts[0].theta == 0.0);
  CHECK(pts[1].theta == 0.5);
  CHECK(pts[3].a == 2.0);
  CHECK(pts[3].theta == 0.0);
  CHECK(pts[5].b == spec.base.b);
}

TEST_CASE("single point, N=1 scan, and the reference row") {
  ScanSpec single;
  single.base = HaKyeParams::reference_instance();
  const auto one = run_scan(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].verdict == "violation");
  CHECK(one[0].condition_holds);
  CHECK_FALSE(one[0].oracle_mismatch);
  CHECK(std::abs(one[0].gap - 0.0846) <= 2e-3);
  CHECK(std::abs(one[0].spa_min_pt_eig + 0.0846) <= 2e-3);
  CHECK_FALSE(one[0].note.empty());

  ScanSpec degenerate = single;
  degenerate.axes = {parse_grid_axis("theta=0.2617993877991494:3:1")};
  const auto d = run_scan(degenerate);
  REQUIRE(d.size() == 1);
  CHECK(d[0].lambda0_w == one[0].lambda0_w);
  CHECK(d[0].gap == one[0].gap);
}

TEST_CASE("cos-scaled theta scan follows the closed-form gap") {
  ScanSpec spec;
  spec.cos_scaling = true;
  spec.axes = {parse_grid_axis("theta=0:1.5708:50")};
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 50);
  // 1.5708 is just past pi/2, so the cos-scaled a, b turn negative there.
  CHECK(rows.back().verdict == "invalid-params");
  CHECK(std::isnan(rows.back().gap));
  for (const ScanRow& r : rows) {
    if (r.verdict == "invalid-params") continue;
    CHECK_FALSE(r.oracle_mismatch);
    const double th = r.params.theta;
    const double a = 4.0 / 3.0 * std::cos(th), b = 2.0 / 3.0 * std::cos(th);
    const double l0 = std::min({a - 2 * std::cos(th), a - 2 * std::cos(th + 2 * M_PI / 3),
                                a - 2 * std::cos(th + 4 * M_PI / 3), b, 0.0});
    const double l0pt = std::min(a, b / 2 - std::sqrt(b * b / 4 + 1));
    CHECK(std::abs(r.gap - std::abs(l0 - l0pt)) <= 1e-10);
  }
}

TEST_CASE("parallel scan equals the serial reference") {
  ScanSpec spec;
  spec.base = HaKyeParams::reference_instance();
  spec.axes = {parse_grid_axis("b=0:1:7"), parse_grid_axis("theta=0:3:9")};
  const auto par = run_scan(spec, 4);
  const auto ser = run_scan_serial(spec);
  std::ostringstream a, b;
  write_scan_csv(a, par, {true});
  write_scan_csv(b, ser, {true});
  CHECK(a.str() == b.str());
  std::ostringstream ja, jb;
  write_scan_json(ja, par);
  write_scan_json(jb, ser);
  CHECK(ja.str() == jb.str());
}

TEST_CASE("geometry sampling") {
  const auto w = hakye_witness(HaKyeParams::reference_instance());
  GeometryOptions opts;
  opts.samples = 200;
  opts.seed = 3;
  const auto rows = sample_geometry(w, opts, 3);
  const auto serial = sample_geometry_serial(w, opts);
  REQUIRE(rows.size() == 401);
  bool negative = false;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const GeometryRow& r = rows[k];
    CHECK(r.witness_value == serial[k].witness_value);
    if (r.kind == SampleKind::SeparableEnsemble) {
      CHECK(r.witness_value >= -1e-10);
      CHECK(r.min_pt_eig >= -1e-12);
    }
    const auto rho = geometry_state(w, r.kind, r.index, opts.seed);
    CHECK(hyperplane_classify(w, rho, opts.tol) == r.side);
    negative = negative || r.side == PlaneSide::Negative;
  }
  CHECK(negative);
  CHECK(rows.back().kind == SampleKind::GroundProjector);
  CHECK(rows.back().side == PlaneSide::Negative);

  std::ostringstream csv;
  write_geometry_csv(csv, rows, {true});
  CHECK(csv.str().rfind("# witkit-report schema_version=1 kind=geometry\r\n"
                        "kind,index,witness_value,min_pt_eig,purity,classification\r\n", 0) == 0);
}
