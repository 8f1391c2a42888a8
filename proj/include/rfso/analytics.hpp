#pragma once

// Closed-form performance metrics of the dual-hop link as deterministic
// functions of LinkParams: distribution functions, transform-domain
// statistics, moments and amount of fading, average error rates of binary
// and M-ary schemes, and ergodic capacity, each with the misalignment-free
// branch selected automatically when xi is infinite.  A single-integral
// capacity oracle built on the univariate engine cross-checks the bivariate
// capacity path.

#include <optional>
#include <vector>

#include "rfso/channel.hpp"
#include "rfso/curve.hpp"
#include "rfso/specfun/meijer_g.hpp"

namespace rfso::analytics {

// Distribution function of the end-to-end SNR.  Clamped to [0, 1]; a raw
// value outside [-1e-9, 1 + 1e-9] throws (engine inconsistency).
double cdf(const channel::LinkParams& params, double snr);

// Complementary distribution function, computed directly rather than as
// 1 - cdf so the deep tail keeps full relative accuracy.
double ccdf(const channel::LinkParams& params, double snr);

// Density of the end-to-end SNR; tiny negative round-off is clamped to 0.
double pdf(const channel::LinkParams& params, double snr);

// E[exp(-s * snr)] for s >= 0.
double mgf(const channel::LinkParams& params, double s);

// E[snr^order] for order >= 1.
double moment(const channel::LinkParams& params, int order);

// Amount of fading of the given order: E[snr^n] / E[snr]^n - 1.
// Exactly 0 for order 1.
double af(const channel::LinkParams& params, int order);

// Average bit error rate of a binary scheme (conditional rate
// Q(p, q*snr)/2 averaged over the SNR distribution).
double avg_ber_binary(const channel::LinkParams& params,
                      const channel::BinaryScheme& scheme);

// Average symbol error rates via the MGF single integral over the phase
// variable, evaluated with the fixed-node Chebyshev rule plus a doubled-node
// self-check that escalates to adaptive quadrature on disagreement.
double avg_ser_mpsk(const channel::LinkParams& params, int m_order);
double avg_ser_mam(const channel::LinkParams& params, int m_order);
double avg_ser_mqam(const channel::LinkParams& params, int m_order);

// Dispatch over the modulation variant (binary schemes use avg_ber_binary).
double avg_ser(const channel::LinkParams& params,
               const channel::ModulationSpec& modulation);

// Ergodic capacity E[log2(1 + snr)] via the bivariate contour kernel.
double ergodic_capacity(const channel::LinkParams& params);

// Independent capacity evaluation: (1/ln 2) times the adaptive integral of
// the complementary CDF against 1/(1 + snr).
double capacity_oracle(const channel::LinkParams& params);

// Reusable fast evaluator of cdf at fixed parameters for large grids
// (prepared residue series with contour fallback).  Not thread-safe.
class CdfEvaluator {
 public:
  explicit CdfEvaluator(const channel::LinkParams& params);
  double operator()(double snr);
  double ccdf(double snr);

 private:
  channel::LinkParams params_;
  channel::DerivedConstants dc_;
  double prefactor_;
  specfun::MeijerGSpec spec_;
  std::optional<specfun::detail::PreparedSeries> series_;
};

enum class Metric { kCdf, kPdf, kMgf, kMoment, kAf, kBer, kSer, kCapacity };

// One metric evaluated over a grid.  For kCdf/kPdf the grid holds SNR
// values (linear); for every other metric it holds first-hop average SNR
// values in dB.  The per-metric scalar lives in the matching optional.
struct MetricRequest {
  channel::LinkParams params;
  Metric metric = Metric::kCdf;
  std::vector<double> grid;
  std::optional<channel::ModulationSpec> modulation;  // kBer / kSer
  std::optional<int> moment_order;                    // kMoment
  std::optional<int> af_order;                        // kAf
  std::optional<double> mgf_point;                    // kMgf: the s value

  // Grid nonempty and strictly increasing; exactly the option matching the
  // metric is set.  Throws std::invalid_argument.
  void validate() const;
};

// Evaluates the request into a single-column curve (column named after the
// metric and its modifier).
Curve evaluate_metric(const MetricRequest& request);

}  // namespace rfso::analytics
