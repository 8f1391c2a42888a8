// The G-function engine: elementary-reduction identities, cross-agreement of
// the residue series and the contour integral, frozen high-precision anchors
// on production-shaped parameter blocks, and the documented error contracts.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rfso/specfun/meijer_g.hpp"

namespace {

using rfso::specfun::ConvergenceError;
using rfso::specfun::meijer_g;
using rfso::specfun::meijer_g_contour;
using rfso::specfun::meijer_g_series;
using rfso::specfun::MeijerGSpec;
using rfso::specfun::QuadratureConfig;
using rfso::specfun::SeriesError;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

// Parameter block of the distribution-function kernel at turbulence shapes
// (2.1, 3.5) and misalignment ratio xi: one upper parameter xi^2/2 + 1 and
// lower parameters (xi^2/2, 1.05, 1.55, 1.75, 2.25, 0).
MeijerGSpec cdf_kernel_spec(double xi) {
  const double h = 0.5 * xi * xi;
  return MeijerGSpec{{h + 1.0}, {h, 1.05, 1.55, 1.75, 2.25, 0.0}, 6, 0};
}

}  // namespace

TEST_CASE("exponential reduction: single lower parameter") {
  const MeijerGSpec spec{{}, {0.0}, 1, 0};
  for (double z : {0.1, 1.0, 10.0}) {
    CAPTURE(z);
    const double want = std::exp(-z);
    CHECK(rel_err(meijer_g_contour(spec, z), want) <= 1e-10);
    CHECK(rel_err(meijer_g(spec, z), want) <= 1e-10);
  }
  // The raw series is accurate while the alternating sum is tame ...
  for (double z : {0.1, 1.0, 2.0}) {
    CAPTURE(z);
    CHECK(rel_err(meijer_g_series(spec, z), std::exp(-z)) <= 1e-12);
  }
  // ... and refuses once cancellation would eat more than six digits
  // (exp(-10) against terms of size ~2.8e3); the dispatcher covered z = 10
  // through the contour above.
  CHECK_THROWS_AS(meijer_g_series(spec, 10.0), SeriesError);
}

TEST_CASE("reciprocal-argument exponential: single upper parameter") {
  const MeijerGSpec spec{{1.0}, {}, 0, 1};
  for (double z : {0.1, 1.0, 10.0}) {
    CAPTURE(z);
    const double want = std::exp(-1.0 / z);
    CHECK(rel_err(meijer_g_contour(spec, z), want) <= 1e-10);
    CHECK(rel_err(meijer_g(spec, z), want) <= 1e-10);
  }
  // No lower parameters: the residue series has nothing to sum over.
  CHECK_THROWS_AS(meijer_g_series(spec, 1.0), SeriesError);
}

TEST_CASE("binomial reduction: one upper and one lower parameter") {
  for (double b : {0.5, 1.0, 2.5}) {
    const MeijerGSpec spec{{1.0 - b}, {0.0}, 1, 1};
    for (double z : {0.1, 1.0, 10.0}) {
      CAPTURE(b);
      CAPTURE(z);
      const double want = std::tgamma(b) * std::pow(1.0 + z, -b);
      CHECK(rel_err(meijer_g(spec, z), want) <= 1e-10);
    }
  }
}

TEST_CASE("series diverges outside its region and the dispatcher falls back") {
  // Equal upper/lower counts: the residue series converges only for z < 1.
  const double b = 0.5;
  const MeijerGSpec spec{{1.0 - b}, {0.0}, 1, 1};
  CHECK_THROWS_AS(meijer_g_series(spec, 10.0), SeriesError);
  const double want = std::tgamma(b) * std::pow(11.0, -b);
  CHECK(rel_err(meijer_g(spec, 10.0), want) <= 1e-10);
  // Inside the disc the series is the fast path and matches.
  CHECK(rel_err(meijer_g_series(spec, 0.3),
                std::tgamma(b) * std::pow(1.3, -b)) <= 1e-10);
}

TEST_CASE("equal lower parameters are rejected by the series") {
  // Both lower parameters coincide: the poles are double, residues are not
  // simple, and the series must refuse rather than perturb.
  const MeijerGSpec spec{{}, {0.5, 0.5}, 2, 0};
  CHECK_THROWS_AS(meijer_g_series(spec, 1.0), SeriesError);
  // The contour path handles it; the value is the modified-Bessel reduction
  // 2 sqrt(z) K_0(2 sqrt(z)).
  const double want = 2.0 * std::cyl_bessel_k(0.0, 2.0);
  CHECK(rel_err(meijer_g(spec, 1.0), want) <= 1e-9);
}

TEST_CASE("lower parameters separated by one: series refuses, contour works") {
  // Gap of exactly one with no surplus lower gammas: the omitted residues
  // scale like z itself, so the per-argument negligibility guard must fire
  // at any ordinary argument and the dispatcher must fall back.
  const MeijerGSpec spec{{}, {1.0, 0.0}, 2, 0};
  CHECK_THROWS_AS(meijer_g_series(spec, 0.5), SeriesError);
  const double root = 2.0 * std::sqrt(0.5);
  const double want = std::sqrt(0.5) * 2.0 * std::cyl_bessel_k(1.0, root);
  CHECK(rel_err(meijer_g(spec, 0.5), want) <= 1e-9);
}

TEST_CASE("huge integer gap between lower parameters: series stays usable") {
  // At severe misalignment the first lower parameter sits an exact integer
  // (1250) above the last one.  The dropped chain's leading term carries
  // z^1250 against a five-fold factorial, so the series remains valid and
  // must agree with the contour integral.
  const MeijerGSpec spec = cdf_kernel_spec(50.0);
  const struct {
    double z;
    double want;  // frozen from an independent 60-digit evaluation
  } cases[] = {
      {0.101292, 0.000595648224899043374},
      {0.0184168, 0.000677363446270643949},
      {0.000202382, 0.000719529226751272964},
  };
  for (const auto& c : cases) {
    CAPTURE(c.z);
    const double series = meijer_g_series(spec, c.z);
    const double contour = meijer_g_contour(spec, c.z);
    CHECK(rel_err(series, contour) <= 1e-9);
    CHECK(rel_err(series, c.want) <= 1e-9);
  }
}

TEST_CASE("frozen anchors on the production parameter blocks") {
  // Turbulence shapes (2.1, 3.5), misalignment ratio 1, relay constant 0.6,
  // second-hop scale 10; all values frozen from a 30-digit run.
  const double kB = 0.202584375;  // (alpha beta)^2 C / (16 gbar2)
  const MeijerGSpec cdf_spec = cdf_kernel_spec(1.0);
  CHECK(rel_err(meijer_g(cdf_spec, 0.37), 0.689252660656127731) <= 1e-9);

  const MeijerGSpec mgf_spec{
      {0.0, 1.5}, {0.5, 1.05, 1.55, 1.75, 2.25, 0.0}, 6, 1};
  CHECK(rel_err(meijer_g(mgf_spec, kB / 11.0), 1.41729574796582014) <= 1e-9);

  const MeijerGSpec nopoint_spec{{}, {1.05, 1.55, 1.75, 2.25, 0.0}, 5, 0};
  CHECK(rel_err(meijer_g(nopoint_spec, 0.37), 0.599734978253969758) <= 1e-9);

  const MeijerGSpec moment_spec{
      {-1.0, 1.5}, {0.5, 1.05, 1.55, 1.75, 2.25, 0.0}, 6, 1};
  CHECK(rel_err(meijer_g(moment_spec, kB), 0.733937349633261147) <= 1e-9);
}

TEST_CASE("series and contour agree on production-shaped blocks") {
  // Includes the three-lower-parameter optical fade kernel (lower list
  // (xi^2, alpha, beta), upper xi^2 + 1).
  const std::vector<MeijerGSpec> specs = {
      cdf_kernel_spec(1.0),
      cdf_kernel_spec(6.7),
      {{2.0}, {1.0, 2.1, 3.5}, 3, 0},
      {{0.0, 1.5}, {0.5, 1.05, 1.55, 1.75, 2.25, 0.0}, 6, 1},
  };
  for (const auto& spec : specs) {
    for (double z : {0.05, 0.37, 0.9}) {
      CAPTURE(spec.a.size());
      CAPTURE(z);
      const double series = meijer_g_series(spec, z);
      const double contour = meijer_g_contour(spec, z);
      CHECK(rel_err(series, contour) <= 1e-9);
    }
  }
}

TEST_CASE("prepared series reuses cached coefficients across arguments") {
  rfso::specfun::detail::PreparedSeries prepared(cdf_kernel_spec(1.0));
  // Ascending z grows the cached chains; descending z reuses them.
  for (double z : {0.01, 0.2, 0.9, 0.5, 0.05}) {
    CAPTURE(z);
    const double direct = meijer_g_series(cdf_kernel_spec(1.0), z);
    CHECK(prepared.evaluate(z) == doctest::Approx(direct).epsilon(1e-13));
  }
}

TEST_CASE("contour robustness under tolerance halving") {
  const MeijerGSpec spec = cdf_kernel_spec(1.0);
  QuadratureConfig tight;
  tight.contour_truncation_tol = 0.5e-12;
  const double base = meijer_g_contour(spec, 0.37);
  const double refined = meijer_g_contour(spec, 0.37, tight);
  CHECK(std::abs(base - refined) / std::abs(refined) < 1e-12);
}

TEST_CASE("order validation and contour feasibility errors") {
  MeijerGSpec bad{{}, {0.0}, 2, 0};  // m exceeds the lower-list length
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = MeijerGSpec{{0.5}, {0.0}, 1, 2};  // n exceeds the upper-list length
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  // Left bound (2) to the right of the right bound (1): no vertical line
  // separates the pole families.
  const MeijerGSpec infeasible{{0.0}, {-2.0}, 1, 1};
  CHECK_THROWS_AS(infeasible.contour_interval(), std::invalid_argument);
  CHECK_THROWS_AS(meijer_g_contour(infeasible, 1.0), std::invalid_argument);

  // Zero convergence margin: the vertical-line integral cannot converge.
  const MeijerGSpec flat{{0.5}, {0.0}, 1, 0};
  CHECK(flat.delta() == doctest::Approx(0.0));
  CHECK_THROWS_AS(meijer_g_contour(flat, 0.5), ConvergenceError);

  CHECK_THROWS_AS(meijer_g(cdf_kernel_spec(1.0), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(meijer_g(cdf_kernel_spec(1.0), 0.0), std::invalid_argument);
}
