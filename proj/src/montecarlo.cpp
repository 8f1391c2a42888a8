#include "rfso/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <variant>

#include "rfso/rng.hpp"

namespace rfso::montecarlo {

namespace {

using channel::LinkParams;

std::uint64_t batch_draws(const McConfig& cfg, int b) {
  const std::uint64_t base = cfg.samples / static_cast<std::uint64_t>(cfg.batches);
  const std::uint64_t extra = cfg.samples % static_cast<std::uint64_t>(cfg.batches);
  return base + (static_cast<std::uint64_t>(b) < extra ? 1 : 0);
}

double batch_means_std_error(const std::vector<double>& means) {
  const std::size_t nb = means.size();
  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= static_cast<double>(nb);
  double ss = 0.0;
  for (double m : means) ss += (m - mean) * (m - mean);
  return std::sqrt(ss / (static_cast<double>(nb) *
                         static_cast<double>(nb - 1)));
}

// One substream per batch; the estimate is the exact overall mean, the
// standard error comes from the spread of the batch means.
template <class PerDraw>
Estimate mean_estimate(const McConfig& cfg, PerDraw&& per_draw) {
  cfg.validate();
  std::vector<double> means(static_cast<std::size_t>(cfg.batches));
  double total = 0.0;
  for (int b = 0; b < cfg.batches; ++b) {
    rng::RandomStream stream(cfg.seed, static_cast<std::uint64_t>(b));
    const std::uint64_t n = batch_draws(cfg, b);
    double sum = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) sum += per_draw(stream);
    means[static_cast<std::size_t>(b)] = sum / static_cast<double>(n);
    total += sum;
  }
  Estimate est;
  est.value = total / static_cast<double>(cfg.samples);
  est.std_error = batch_means_std_error(means);
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  return est;
}

// Conditional symbol error probability as a function of the instantaneous
// SNR, resolved once per modulation.
class ConditionalSep {
 public:
  explicit ConditionalSep(const channel::ModulationSpec& modulation) {
    struct Builder {
      ConditionalSep& self;
      void operator()(const channel::BinaryScheme& s) const {
        self.kind_ = Kind::kBinary;
        self.p_ = s.p;
        self.q_ = s.q;
      }
      void operator()(const channel::Mpsk& s) const {
        const double m = static_cast<double>(s.m);
        const double g =
            std::sin(std::numbers::pi / m) * std::sin(std::numbers::pi / m);
        if (s.m == 2) {
          self.kind_ = Kind::kScaledErfc;
          self.scale_ = 0.5;
          self.arg_ = g;  // g = 1
        } else if (s.m == 4) {
          self.kind_ = Kind::kQpsk;
          self.arg_ = g;  // g = 1/2
        } else {
          self.kind_ = Kind::kPhaseNodes;
          const double upper = (m - 1.0) * std::numbers::pi / m;
          const int nodes = 48;
          self.node_rate_.resize(nodes);
          self.node_weight_.resize(nodes);
          const double half = 0.5 * upper;
          for (int i = 1; i <= nodes; ++i) {
            const double theta =
                (2.0 * i - 1.0) * std::numbers::pi / (2.0 * nodes);
            const double x = std::cos(theta);
            const double phi = half * (x + 1.0);
            const double sp = std::sin(phi);
            self.node_rate_[i - 1] = g / (sp * sp);
            self.node_weight_[i - 1] = std::numbers::pi / nodes *
                                       std::sin(theta) * half /
                                       std::numbers::pi;
          }
        }
      }
      void operator()(const channel::Mam& s) const {
        const double m = static_cast<double>(s.m);
        self.kind_ = Kind::kScaledErfc;
        self.scale_ = (m - 1.0) / m;
        self.arg_ = 3.0 / (m * m - 1.0);
      }
      void operator()(const channel::Mqam& s) const {
        const double m = static_cast<double>(s.m);
        self.kind_ = Kind::kQam;
        self.scale_ = 1.0 - 1.0 / std::sqrt(m);
        self.arg_ = 3.0 / (2.0 * (m - 1.0));
      }
    };
    std::visit(Builder{*this}, modulation);
  }

  double operator()(double snr) const {
    switch (kind_) {
      case Kind::kBinary:
        return channel::conditional_ber(p_, q_, snr);
      case Kind::kScaledErfc:
        return scale_ * std::erfc(std::sqrt(arg_ * snr));
      case Kind::kQpsk: {
        const double q = 0.5 * std::erfc(std::sqrt(arg_ * snr));
        return 2.0 * q - q * q;
      }
      case Kind::kQam: {
        const double e = std::erfc(std::sqrt(arg_ * snr));
        return 2.0 * scale_ * e - scale_ * scale_ * e * e;
      }
      case Kind::kPhaseNodes: {
        double sum = 0.0;
        for (std::size_t i = 0; i < node_rate_.size(); ++i) {
          sum += node_weight_[i] * std::exp(-snr * node_rate_[i]);
        }
        return sum;
      }
    }
    return 0.0;
  }

 private:
  enum class Kind { kBinary, kScaledErfc, kQpsk, kQam, kPhaseNodes };
  Kind kind_ = Kind::kBinary;
  double p_ = 0.0;
  double q_ = 0.0;
  double scale_ = 0.0;
  double arg_ = 0.0;
  std::vector<double> node_rate_;
  std::vector<double> node_weight_;
};

}  // namespace

void McConfig::validate() const {
  if (batches < 2) {
    throw std::invalid_argument("McConfig: need at least 2 batches");
  }
  if (samples < static_cast<std::uint64_t>(batches)) {
    throw std::invalid_argument("McConfig: need at least one draw per batch");
  }
}

std::vector<Estimate> empirical_cdf(const LinkParams& params,
                                    const std::vector<double>& grid,
                                    const McConfig& cfg) {
  cfg.validate();
  params.validate();
  if (grid.empty()) {
    throw std::invalid_argument("empirical_cdf: grid must be nonempty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(
          "empirical_cdf: grid must be strictly increasing");
    }
  }
  std::vector<std::uint64_t> hist(grid.size() + 1, 0);
  for (int b = 0; b < cfg.batches; ++b) {
    rng::RandomStream stream(cfg.seed, static_cast<std::uint64_t>(b));
    const std::uint64_t n = batch_draws(cfg, b);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double snr = channel::sample_end_to_end_snr(params, stream);
      const auto it = std::lower_bound(grid.begin(), grid.end(), snr);
      ++hist[static_cast<std::size_t>(it - grid.begin())];
    }
  }
  std::vector<Estimate> out(grid.size());
  std::uint64_t below = 0;
  const double n = static_cast<double>(cfg.samples);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    below += hist[i];
    const double p = static_cast<double>(below) / n;
    out[i].value = p;
    out[i].std_error = std::sqrt(p * (1.0 - p) / n);
    out[i].samples = cfg.samples;
    out[i].seed = cfg.seed;
  }
  return out;
}

Estimate estimate_ber(const LinkParams& params,
                      const channel::BinaryScheme& scheme,
                      const McConfig& cfg) {
  params.validate();
  return mean_estimate(cfg, [&](rng::RandomStream& stream) {
    return channel::conditional_ber(scheme,
                                    channel::sample_end_to_end_snr(params, stream));
  });
}

Estimate estimate_ber_direct(const LinkParams& params,
                             const channel::BinaryScheme& scheme,
                             const McConfig& cfg) {
  params.validate();
  const double p = scheme.p;
  const double q = scheme.q;
  return mean_estimate(cfg, [&, p, q](rng::RandomStream& stream) {
    const double snr = channel::sample_end_to_end_snr(params, stream);
    bool error = false;
    if (p == 0.5) {
      // Coherent detection: a unit-variance Gaussian crossing the decision
      // threshold, P(N > sqrt(2 q snr)).
      error = stream.normal() > std::sqrt(2.0 * q * snr);
    } else if (p == 1.0) {
      // Noncoherent envelope comparison: P(Exp(1) > q snr) / 2.
      error = stream.exponential(1.0) > q * snr && stream.uniform() < 0.5;
    } else {
      error = stream.uniform() < channel::conditional_ber(p, q, snr);
    }
    return error ? 1.0 : 0.0;
  });
}

Estimate estimate_ser(const LinkParams& params,
                      const channel::ModulationSpec& modulation,
                      const McConfig& cfg) {
  params.validate();
  const ConditionalSep sep(modulation);
  return mean_estimate(cfg, [&](rng::RandomStream& stream) {
    return sep(channel::sample_end_to_end_snr(params, stream));
  });
}

Estimate estimate_capacity(const LinkParams& params, const McConfig& cfg) {
  params.validate();
  return mean_estimate(cfg, [&](rng::RandomStream& stream) {
    return std::log1p(channel::sample_end_to_end_snr(params, stream)) /
           std::numbers::ln2;
  });
}

Estimate estimate_moment(const LinkParams& params, int order,
                         const McConfig& cfg) {
  params.validate();
  if (order < 1) {
    throw std::invalid_argument("estimate_moment: order must be positive");
  }
  if (order >= 3) {
    std::fprintf(stderr,
                 "estimate_moment: warning: order %d moments of a heavy-tailed "
                 "SNR converge slowly; the standard error may be optimistic\n",
                 order);
  }
  return mean_estimate(cfg, [&, order](rng::RandomStream& stream) {
    return std::pow(channel::sample_end_to_end_snr(params, stream),
                    static_cast<double>(order));
  });
}

Estimate estimate_af(const LinkParams& params, int order, const McConfig& cfg) {
  params.validate();
  cfg.validate();
  if (order < 1) {
    throw std::invalid_argument("estimate_af: order must be positive");
  }
  if (order == 1) {
    return Estimate{0.0, 0.0, cfg.samples, cfg.seed};
  }
  std::vector<double> af_means(static_cast<std::size_t>(cfg.batches));
  double total_m1 = 0.0;
  double total_mn = 0.0;
  for (int b = 0; b < cfg.batches; ++b) {
    rng::RandomStream stream(cfg.seed, static_cast<std::uint64_t>(b));
    const std::uint64_t n = batch_draws(cfg, b);
    double sum1 = 0.0;
    double sumn = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double snr = channel::sample_end_to_end_snr(params, stream);
      sum1 += snr;
      sumn += std::pow(snr, static_cast<double>(order));
    }
    const double m1 = sum1 / static_cast<double>(n);
    const double mn = sumn / static_cast<double>(n);
    af_means[static_cast<std::size_t>(b)] =
        mn / std::pow(m1, static_cast<double>(order)) - 1.0;
    total_m1 += sum1;
    total_mn += sumn;
  }
  Estimate est;
  const double m1 = total_m1 / static_cast<double>(cfg.samples);
  const double mn = total_mn / static_cast<double>(cfg.samples);
  est.value = mn / std::pow(m1, static_cast<double>(order)) - 1.0;
  est.std_error = batch_means_std_error(af_means);
  est.samples = cfg.samples;
  est.seed = cfg.seed;
  return est;
}

double ks_distance(std::vector<double> draws,
                   const std::function<double(double)>& cdf) {
  if (draws.empty()) {
    throw std::invalid_argument("ks_distance: need at least one draw");
  }
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = cdf(draws[i]);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - f;
    d = std::max(d, std::max(lo, hi));
  }
  return d;
}

}  // namespace rfso::montecarlo
