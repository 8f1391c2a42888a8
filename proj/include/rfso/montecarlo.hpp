#pragma once

// Monte-Carlo estimation of every quantity the closed-form layer computes,
// built on deterministic counter-based substreams so results are exactly
// reproducible for a given seed and sample budget.

#include <cstdint>
#include <functional>
#include <vector>

#include "rfso/channel.hpp"

namespace rfso::montecarlo {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  int batches = 32;

  // Throws std::invalid_argument unless samples >= batches >= 2.
  void validate() const;
};

// A point estimate with its batch-means (or binomial) standard error and the
// provenance needed to reproduce it.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Empirical distribution of the end-to-end SNR at each grid point (grid must
// be strictly increasing).  Standard errors are binomial.
std::vector<Estimate> empirical_cdf(const channel::LinkParams& params,
                                    const std::vector<double>& grid,
                                    const McConfig& cfg);

// Semi-analytic average bit error rate: the exact conditional error
// probability averaged over simulated SNR draws.
Estimate estimate_ber(const channel::LinkParams& params,
                      const channel::BinaryScheme& scheme, const McConfig& cfg);

// Mechanism-level average bit error rate: per draw, the detector itself is
// simulated (Gaussian threshold for coherent schemes, envelope comparison for
// noncoherent ones, Bernoulli thinning otherwise).
Estimate estimate_ber_direct(const channel::LinkParams& params,
                             const channel::BinaryScheme& scheme,
                             const McConfig& cfg);

// Semi-analytic average symbol error rate for any supported modulation.
Estimate estimate_ser(const channel::LinkParams& params,
                      const channel::ModulationSpec& modulation,
                      const McConfig& cfg);

// Average of log2(1 + snr).
Estimate estimate_capacity(const channel::LinkParams& params,
                           const McConfig& cfg);

// Raw moment E[snr^order]; orders >= 3 emit a heavy-tail variance warning on
// stderr.
Estimate estimate_moment(const channel::LinkParams& params, int order,
                         const McConfig& cfg);

// Amount-of-fading statistic E[snr^order] / E[snr]^order - 1 with a
// batch-means standard error (order 1 is exactly zero).
Estimate estimate_af(const channel::LinkParams& params, int order,
                     const McConfig& cfg);

// Kolmogorov-Smirnov distance between a sample (sorted internally) and a
// reference distribution function.
double ks_distance(std::vector<double> draws,
                   const std::function<double(double)>& cdf);

}  // namespace rfso::montecarlo
