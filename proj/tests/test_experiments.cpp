#include <cmath>

#include "cuspforge/errors.hpp"
#include "cuspforge/experiments.hpp"
#include "doctest.h"

using namespace cuspforge;

TEST_CASE("flat-region triangles have angle sum pi") {
  GraphSurfaceMetric s;
  TriangleReport rep = gauss_bonnet_triangle(s, {-6.0, -6.0, 0, 0},
                                             {-5.2, -6.1, 0, 0},
                                             {-5.6, -5.3, 0, 0}, 250000);
  CHECK(rep.angle_sum == doctest::Approx(M_PI).epsilon(1e-4));
  CHECK(std::fabs(rep.curvature_integral) < 1e-6);
  CHECK(rep.residual < 1e-3);
  CHECK(rep.cells_inside > 0);
}

TEST_CASE("curved triangles balance angle defect against curvature mass") {
  GraphSurfaceMetric s;
  GeodesicState p1{-0.8, -0.6, 0, 0}, p2{0.7, -0.4, 0, 0}, p3{0.1, 0.9, 0, 0};
  TriangleReport rep = gauss_bonnet_triangle(s, p1, p2, p3, 1000000);
  CHECK(rep.curvature_integral < 0.0);
  CHECK(rep.angle_sum < M_PI);
  CHECK(rep.residual < 1e-3);

  // quadrature error is boundary-cell dominated: 4x cells halves it
  TriangleReport fine = gauss_bonnet_triangle(s, p1, p2, p3, 4000000);
  CHECK(fine.residual <= 0.75 * rep.residual + 1e-6);
}

TEST_CASE("visibility rows rise with the ray arcs and respect the floor") {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  std::vector<std::pair<double, double>> arcs = {
      {4.0, 4.0}, {8.0, 8.0}, {12.0, 12.0}, {16.0, 16.0}};
  VisibilityReport rep =
      visibility_experiment(horn, 1.0, 0.0, 0.3, arcs, 1e-8);
  REQUIRE(rep.rows.size() == 4);
  CHECK(rep.monotone);
  CHECK(rep.above_floor);
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const VisibilityRow& r = rep.rows[i];
    CHECK(r.n == (int)i + 1);
    CHECK(r.min_z >= r.endpoint_floor - 1e-8);
    if (i > 0) CHECK(r.min_z > rep.rows[i - 1].min_z);
  }
}

TEST_CASE("asymmetric pairs bottom out at the lower endpoint") {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  VisibilityReport rep =
      visibility_experiment(horn, 1.0, 0.0, 0.3, {{4.0, 6.0}}, 1e-8);
  REQUIRE(rep.rows.size() == 1);
  const VisibilityRow& r = rep.rows[0];
  CHECK(r.endpoint_floor ==
        doctest::Approx(std::min(r.z1, r.z2)).epsilon(1e-12));
  CHECK(r.min_z >= r.endpoint_floor - 1e-8);
  CHECK(r.min_z <= r.endpoint_floor + 1e-3);
}

TEST_CASE("trapped base rays are rejected") {
  RevolutionSurface horn = RevolutionSurface::exp_horn();
  CHECK_THROWS_AS(
      visibility_experiment(horn, 1.0, 0.0, 1.5, {{4.0, 4.0}}, 1e-8),
      DomainError);
}

TEST_CASE("far angles never collapse under a small curvature budget") {
  GraphSurfaceMetric s;
  double sep = M_PI / 100.0;
  InvisibilityReport rep = invisibility_witness(s, sep, {5.0, 10.0});
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.separation == doctest::Approx(sep).epsilon(1e-12));
  CHECK(rep.lower_bound ==
        doctest::Approx(M_PI - sep - 0.09869604401089357).epsilon(1e-12));
  CHECK(rep.all_above_bound);
  double b2 = s.slope_budget() * s.slope_budget();
  CHECK(rep.max_abs_integral <= b2);
  for (const auto& row : rep.rows) {
    CHECK(row.far_angle_sum >= rep.lower_bound);
    CHECK(row.base_angle == doctest::Approx(sep).epsilon(1e-9));
    // triangle Gauss-Bonnet consistency of the quadrature
    CHECK(row.residual < 1e-3);
  }
}
