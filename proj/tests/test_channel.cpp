// The physical link model: parameter validation, derived constants,
// modulation descriptors, sampler distributions, and the relay combiner.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rfso/channel.hpp"
#include "rfso/rng.hpp"

namespace {

using namespace rfso::channel;
using rfso::rng::RandomStream;

constexpr double kInf = std::numeric_limits<double>::infinity();

LinkParams reference_link(double xi, double gbar) {
  LinkParams p;
  p.alpha = 2.1;
  p.beta = 3.5;
  p.xi = xi;
  p.relay_gain_c = 0.6;
  p.gbar1 = gbar;
  p.gbar2 = gbar;
  return p;
}

}  // namespace

TEST_CASE("parameter validation accepts the reference link and rejects junk") {
  CHECK_NOTHROW(reference_link(1.0, 10.0).validate());
  CHECK_NOTHROW(reference_link(kInf, 10.0).validate());
  CHECK(reference_link(1.0, 10.0).has_pointing_error());
  CHECK_FALSE(reference_link(kInf, 10.0).has_pointing_error());

  LinkParams p = reference_link(1.0, 10.0);
  p.alpha = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_link(1.0, 10.0);
  p.gbar1 = -3.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_link(1.0, 10.0);
  p.xi = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = reference_link(1.0, 10.0);
  p.gbar2 = kInf;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("derived constants match their closed forms") {
  const DerivedConstants dc = derive_constants(reference_link(1.0, 10.0));
  // Frozen from a 30-digit evaluation of the prefactor expression.
  CHECK(dc.pointing_prefactor ==
        doctest::Approx(0.554904885563745363).epsilon(1e-12));
  // The misalignment factor contributes exactly xi^2 / 2 relative to the
  // misalignment-free prefactor.
  CHECK(dc.pointing_prefactor / dc.base_prefactor ==
        doctest::Approx(0.5).epsilon(1e-12));
  // (alpha beta)^2 C / (16 gbar2).
  CHECK(dc.arg_scale == doctest::Approx(0.202584375).epsilon(1e-12));
  CHECK(dc.pointing_upper == doctest::Approx(1.5));
  const std::vector<double> full{0.5, 1.05, 1.55, 1.75, 2.25, 0.0};
  const std::vector<double> base{1.05, 1.55, 1.75, 2.25, 0.0};
  const std::vector<double> shifted{0.05, 0.55, 0.75, 1.25, 0.0};
  REQUIRE(dc.full_lower.size() == full.size());
  REQUIRE(dc.base_lower.size() == base.size());
  REQUIRE(dc.shifted_lower.size() == shifted.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(dc.full_lower[i] == doctest::Approx(full[i]).epsilon(1e-12));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(dc.base_lower[i] == doctest::Approx(base[i]).epsilon(1e-12));
    CHECK(dc.shifted_lower[i] ==
          doctest::Approx(shifted[i]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("named binary schemes carry their defining constants") {
  CHECK(cbfsk().p == 0.5);
  CHECK(cbfsk().q == 0.5);
  CHECK(cbpsk().p == 0.5);
  CHECK(cbpsk().q == 1.0);
  CHECK(nbfsk().p == 1.0);
  CHECK(nbfsk().q == 0.5);
  CHECK(dbpsk().p == 1.0);
  CHECK(dbpsk().q == 1.0);
}

TEST_CASE("modulation parsing round-trips and rejects malformed input") {
  for (const char* name : {"cbfsk", "cbpsk", "nbfsk", "dbpsk"}) {
    const ModulationSpec spec = parse_modulation(name);
    CHECK(label(spec) == name);
    const auto& scheme = std::get<BinaryScheme>(spec);
    CHECK(scheme.name == name);
  }
  CHECK(label(parse_modulation("mpsk:8")) == "8psk");
  CHECK(label(parse_modulation("mam:4")) == "4am");
  CHECK(label(parse_modulation("MQAM:16")) == "16qam");  // case-insensitive
  CHECK(std::get<Mpsk>(parse_modulation("mpsk:2")).m == 2);
  CHECK(std::get<Mqam>(parse_modulation("mqam:64")).m == 64);

  CHECK_THROWS_AS(parse_modulation("qpsk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulation("mpsk:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulation("mqam:8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulation("mqam:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulation("mpsk:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_modulation(""), std::invalid_argument);
}

TEST_CASE("first-hop sampler matches the exponential law") {
  RandomStream stream(42, 0);
  const int n = 1'000'000;

  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample_rf_snr(1.0, stream);
  const double mean = sum / n;
  CHECK(mean > 0.995);
  CHECK(mean < 1.005);

  // Distribution value at the mean: 1 - e^{-1} within three binomial
  // standard errors.
  int below = 0;
  RandomStream stream2(43, 0);
  for (int i = 0; i < n; ++i) {
    if (sample_rf_snr(10.0, stream2) <= 10.0) ++below;
  }
  const double frac = static_cast<double>(below) / n;
  const double want = 1.0 - std::exp(-1.0);
  const double se = std::sqrt(want * (1.0 - want) / n);
  CHECK(std::abs(frac - want) <= 3.0 * se);

  // Second raw moment of the exponential: 2 gbar^2, within one percent.
  RandomStream stream3(44, 0);
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double draw = sample_rf_snr(5.0, stream3);
    sq += draw * draw;
  }
  CHECK(std::abs(sq / n - 50.0) <= 0.5);
}

TEST_CASE("misalignment fraction has distribution u^(xi^2)") {
  RandomStream stream(7, 0);
  const int n = 1'000'000;
  const double xi = 2.0;
  int below = 0;
  for (int i = 0; i < n; ++i) {
    const double draw = sample_pointing_fraction(xi, stream);
    CHECK(draw > 0.0);
    CHECK(draw <= 1.0);
    if (draw <= 0.7) ++below;
  }
  const double want = std::pow(0.7, xi * xi);
  const double se = std::sqrt(want * (1.0 - want) / n);
  CHECK(std::abs(static_cast<double>(below) / n - want) <= 3.0 * se);
}

TEST_CASE("severe misalignment converges to the misalignment-free sampler") {
  // Two-sample sup-distance between the second-hop draws at xi = 50 and at
  // xi = infinity.
  const int n = 1'000'000;
  std::vector<double> tight(n), free_branch(n);
  const LinkParams p50 = reference_link(50.0, 10.0);
  const LinkParams pinf = reference_link(kInf, 10.0);
  RandomStream s1(11, 0);
  RandomStream s2(11, 1);
  for (int i = 0; i < n; ++i) tight[i] = sample_fso_snr(p50, s1);
  for (int i = 0; i < n; ++i) free_branch[i] = sample_fso_snr(pinf, s2);
  std::sort(tight.begin(), tight.end());
  std::sort(free_branch.begin(), free_branch.end());
  double ks = 0.0;
  std::size_t i = 0, j = 0;
  while (i < tight.size() && j < free_branch.size()) {
    const double v = std::min(tight[i], free_branch[j]);
    while (i < tight.size() && tight[i] <= v) ++i;
    while (j < free_branch.size() && free_branch[j] <= v) ++j;
    ks = std::max(ks, std::abs(static_cast<double>(i) / n -
                               static_cast<double>(j) / n));
  }
  CHECK(ks <= 0.01);
}

TEST_CASE("relay combiner arithmetic, bounds, and monotonicity") {
  CHECK(end_to_end_snr(5.0, 0.0, 0.6) == 0.0);
  CHECK(end_to_end_snr(0.0, 3.0, 0.6) == 0.0);
  CHECK(end_to_end_snr(2.0, 3.0, 0.6) == doctest::Approx(2.0 * 3.0 / 3.6));
  // Large second-hop SNR saturates at the first-hop value.
  CHECK(end_to_end_snr(5.0, 1e12, 0.6) == doctest::Approx(5.0).epsilon(1e-9));

  RandomStream stream(99, 0);
  for (int i = 0; i < 1000; ++i) {
    const double g1 = 20.0 * stream.uniform();
    const double g2 = 20.0 * stream.uniform();
    const double c = 0.1 + 2.0 * stream.uniform();
    const double base = end_to_end_snr(g1, g2, c);
    CHECK(base <= g1 + 1e-15);
    CHECK(end_to_end_snr(g1 * 1.1, g2, c) >= base);
    CHECK(end_to_end_snr(g1, g2 * 1.1, c) >= base);
  }
}

TEST_CASE("combined draws never exceed the first-hop average in mean") {
  const LinkParams p = reference_link(1.0, 10.0);
  RandomStream stream(5, 0);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += sample_end_to_end_snr(p, stream);
  const double mean = sum / n;
  CHECK(mean > 0.0);
  CHECK(mean <= p.gbar1);  // far below; the bound is pointwise
}

TEST_CASE("conditional error rate: anchors and strict decrease") {
  CHECK(conditional_ber(1.0, 1.0, 0.0) == doctest::Approx(0.5));
  CHECK(conditional_ber(1.0, 1.0, 1.0) ==
        doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-13));
  // Coherent antipodal scheme at snr 4: half the complementary error
  // function of 2.
  CHECK(conditional_ber(0.5, 1.0, 4.0) ==
        doctest::Approx(0.5 * std::erfc(2.0)).epsilon(1e-12));
  double prev = 0.5;
  for (double snr : {0.1, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double v = conditional_ber(cbpsk(), snr);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
}
