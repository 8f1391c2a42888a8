#include "rfso/specfun/meijer_g.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "rfso/specfun/gamma.hpp"

namespace rfso::specfun {

namespace {

constexpr double kSeriesRelTol = 1e-16;
constexpr double kCancellationLimit = 1e6;
constexpr int kMaxSeriesTerms = 10000;
constexpr double kChainCollisionTol = 1e-6;
// ln(1e-30): terms dropped because of colliding chains must sit at least
// this far (in log scale) below the retained leading term.
constexpr double kCollisionNegligibleLog = -69.0;
constexpr double kContourStartWindow = 32.0;
constexpr double kContourMaxWindow = 4096.0;
constexpr double kImagTolRel = 1e-9;
constexpr double kImagTolAbs = 1e-12;

bool near_integer(double x, double tol) {
  return std::abs(x - std::round(x)) < tol;
}

}  // namespace

void MeijerGSpec::validate() const {
  if (m < 0 || n < 0) {
    throw std::invalid_argument("MeijerGSpec: m and n must be non-negative");
  }
  if (m > q()) {
    throw std::invalid_argument("MeijerGSpec: m exceeds the number of b parameters");
  }
  if (n > p()) {
    throw std::invalid_argument("MeijerGSpec: n exceeds the number of a parameters");
  }
  if (m + n == 0) {
    throw std::invalid_argument("MeijerGSpec: m + n must be at least 1");
  }
  for (double v : a) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("MeijerGSpec: non-finite a parameter");
    }
  }
  for (double v : b) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("MeijerGSpec: non-finite b parameter");
    }
  }
}

std::pair<double, double> MeijerGSpec::contour_interval() const {
  validate();
  double left = -std::numeric_limits<double>::infinity();
  double right = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    left = std::max(left, -b[j]);
  }
  for (int i = 0; i < n; ++i) {
    right = std::min(right, 1.0 - a[i]);
  }
  if (m == 0) {
    left = right - 1.0;
  }
  if (n == 0) {
    right = left + 1.0;
  }
  if (!(left < right)) {
    throw std::invalid_argument(
        "MeijerGSpec: left and right pole families overlap; no separating "
        "contour exists");
  }
  return {left, right};
}

namespace detail {

PreparedSeries::PreparedSeries(MeijerGSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.m == 0) {
    throw SeriesError("residue series needs at least one left pole chain (m >= 1)");
  }
  // Colliding chains (b_j - b_l integral for j != l <= m) produce
  // higher-order poles from some index on, so their residues are not plain
  // power series.  Equal b_j are degenerate from the start and unusable.
  // A nonzero integer gap N only degrades the poles of the lower chain at
  // indices >= N; the pure-power part below that stays exact, and the
  // omitted remainder carries z^{b_low + N} with at least (q - p)-fold
  // factorial suppression in N, so we drop the higher chain, cap the lower
  // one at N coefficients, and let evaluate() verify per argument that the
  // omitted scale is negligible.
  std::vector<bool> suppressed(static_cast<std::size_t>(spec_.m), false);
  std::vector<int> gap(static_cast<std::size_t>(spec_.m), 0);
  std::vector<int> cap(static_cast<std::size_t>(spec_.m), -1);
  for (int j = 0; j < spec_.m; ++j) {
    for (int l = j + 1; l < spec_.m; ++l) {
      const double diff = spec_.b[j] - spec_.b[l];
      if (!near_integer(diff, kChainCollisionTol)) continue;
      const int offset = static_cast<int>(std::llround(diff));
      if (offset == 0) {
        throw SeriesError("left pole chains coincide; residues are not simple");
      }
      const int hi = offset > 0 ? j : l;
      const int lo = offset > 0 ? l : j;
      const int n_gap = std::abs(offset);
      suppressed[hi] = true;
      gap[hi] = gap[hi] == 0 ? n_gap : std::min(gap[hi], n_gap);
      cap[lo] = cap[lo] < 0 ? n_gap : std::min(cap[lo], n_gap);
    }
  }
  const int p = spec_.p();
  const int q = spec_.q();
  chains_.reserve(spec_.m);
  for (int j = 0; j < spec_.m; ++j) {
    Chain chain;
    chain.index = j;
    chain.b = spec_.b[j];
    if (suppressed[j]) {
      // No residue data: the leading coefficient involves Gamma at a
      // non-positive integer.  evaluate() bounds the dropped contribution.
      chain.suppressed = true;
      chain.gap = gap[j];
      chains_.push_back(std::move(chain));
      continue;
    }
    chain.max_terms = cap[j];
    double log_abs = 0.0;
    double sign = 1.0;
    bool zero = false;
    auto numerator = [&](double x) {
      // A numerator pole means a left and a right pole chain coincide; the
      // simple-residue expansion does not exist there.
      SignedLogGamma g = log_gamma_signed(x);  // may throw GammaPoleError
      log_abs += g.log_abs;
      sign *= g.sign;
    };
    try {
      for (int l = 0; l < spec_.m; ++l) {
        if (l != j) numerator(spec_.b[l] - spec_.b[j]);
      }
      for (int i = 0; i < spec_.n; ++i) {
        numerator(1.0 - spec_.a[i] + spec_.b[j]);
      }
    } catch (const GammaPoleError&) {
      throw SeriesError("pole in a residue numerator; series inapplicable");
    }
    for (int l = spec_.m; l < q; ++l) {
      const double x = 1.0 - spec_.b[l] + spec_.b[j];
      try {
        SignedLogGamma g = log_gamma_signed(x);
        log_abs -= g.log_abs;
        sign *= g.sign;
      } catch (const GammaPoleError&) {
        // 1/Gamma vanishes at k = 0 but the argument grows with k, so the
        // chain resumes at a later index; that bookkeeping is not
        // implemented and the contour handles such specs instead.
        throw SeriesError(
            "denominator pole with recovering argument; series inapplicable");
      }
    }
    for (int i = spec_.n; i < p; ++i) {
      const double x = spec_.a[i] - spec_.b[j];
      try {
        SignedLogGamma g = log_gamma_signed(x);
        log_abs -= g.log_abs;
        sign *= g.sign;
      } catch (const GammaPoleError&) {
        // The argument only decreases with k, staying on non-positive
        // integers, so every term of this chain vanishes.
        zero = true;
      }
    }
    chain.identically_zero = zero;
    chain.log_scale = log_abs;
    chain.sign = sign;
    if (!zero) {
      chain.tau.push_back(sign >= 0.0 ? 1.0 : -1.0);
    }
    chains_.push_back(std::move(chain));
  }
}

double PreparedSeries::ratio_factor(const Chain& chain, int k) const {
  // tau_{k+1} / tau_k = -z * num / den with z factored out by the caller.
  const int p = spec_.p();
  const int q = spec_.q();
  const double bj = chain.b;
  double num = 1.0;
  for (int i = 0; i < spec_.n; ++i) {
    num *= 1.0 - spec_.a[i] + bj + k;
  }
  for (int i = spec_.n; i < p; ++i) {
    num *= spec_.a[i] - bj - k - 1.0;
  }
  double den = k + 1.0;
  for (int l = 0; l < spec_.m; ++l) {
    if (l != chain.index) den *= spec_.b[l] - bj - k - 1.0;
  }
  for (int l = spec_.m; l < q; ++l) {
    den *= 1.0 - spec_.b[l] + bj + k;
  }
  return -num / den;
}

void PreparedSeries::extend_chain(Chain& chain, std::size_t needed) {
  while (chain.tau.size() < needed && !chain.terminated) {
    if (chain.max_terms >= 0 &&
        chain.tau.size() >= static_cast<std::size_t>(chain.max_terms)) {
      // The next ratio denominator vanishes (a colliding chain sits
      // max_terms above this one); the terms from here on are covered by
      // the negligibility guard in evaluate(), so the chain ends here.
      chain.terminated = true;
      break;
    }
    const int k = static_cast<int>(chain.tau.size()) - 1;
    const double next = chain.tau.back() * ratio_factor(chain, k);
    if (next == 0.0) {
      chain.terminated = true;
      break;
    }
    if (!std::isfinite(next)) {
      throw SeriesError("residue coefficient overflowed");
    }
    chain.tau.push_back(next);
  }
}

double PreparedSeries::evaluate(double z) {
  if (!(z > 0.0)) {
    throw std::invalid_argument("meijer_g: argument must be positive");
  }
  const int p = spec_.p();
  const int q = spec_.q();
  if (p > q || (p == q && z >= 1.0)) {
    throw SeriesError("left closure of the contour diverges for this argument");
  }
  const double lz = std::log(z);
  double total = 0.0;
  double total_abs = 0.0;
  for (Chain& chain : chains_) {
    if (chain.suppressed) {
      // Everything dropped for this collision pair (the whole upper chain
      // and the lower chain's terms past its cap) scales like
      // z^{b_low + gap} with at least (q - p)-fold factorial decay in the
      // index, while the retained lower chain leads with z^{b_low}.  The
      // collision tolerance adds at most a 1/kChainCollisionTol factor for
      // near-integer gaps, and intra-sum cancellation is already capped at
      // kCancellationLimit, so demanding 1e-30 here leaves the final result
      // with ~1e-18 headroom.
      const double omitted_rel_log =
          chain.gap * lz -
          std::max(q - p, 0) * log_gamma_signed(chain.gap + 1.0).log_abs;
      if (!(omitted_rel_log <= kCollisionNegligibleLog)) {
        throw SeriesError(
            "colliding pole chains are not negligible at this argument");
      }
      continue;
    }
    if (chain.identically_zero) continue;
    const double log_lead = chain.log_scale + chain.b * lz;
    if (log_lead < -745.0) continue;  // scale underflows; chain contributes 0
    if (log_lead > 700.0) {
      throw SeriesError("residue chain overflows; contour evaluation required");
    }
    const double scale = std::exp(log_lead);
    double sum = 0.0;
    double abs_sum = 0.0;
    double zk = 1.0;  // z^k
    int small_streak = 0;
    std::size_t k = 0;
    while (true) {
      if (k >= chain.tau.size()) {
        if (chain.terminated) break;
        if (k >= static_cast<std::size_t>(kMaxSeriesTerms)) {
          throw SeriesError("residue series did not converge");
        }
        extend_chain(chain, k + 1);
        if (k >= chain.tau.size()) break;  // terminated exactly at k
      }
      const double term = chain.tau[k] * zk;
      sum += term;
      abs_sum += std::abs(term);
      if (std::abs(term) <= kSeriesRelTol * std::abs(sum)) {
        if (++small_streak >= 2) break;
      } else {
        small_streak = 0;
      }
      zk *= z;
      if (!std::isfinite(zk)) {
        throw SeriesError("power overflow in residue series");
      }
      ++k;
    }
    total += scale * sum;
    total_abs += scale * abs_sum;
  }
  if (!std::isfinite(total) || !std::isfinite(total_abs)) {
    throw SeriesError("residue series overflowed");
  }
  if (total == 0.0) {
    if (total_abs == 0.0) return 0.0;
    throw SeriesError("complete cancellation between residue chains");
  }
  if (total_abs > kCancellationLimit * std::abs(total)) {
    throw SeriesError("catastrophic cancellation between residue chains");
  }
  return total;
}

}  // namespace detail

double meijer_g_series(const MeijerGSpec& spec, double z) {
  detail::PreparedSeries prepared(spec);
  return prepared.evaluate(z);
}

double meijer_g_contour(const MeijerGSpec& spec, double z,
                        const QuadratureConfig& cfg) {
  spec.validate();
  cfg.validate();
  if (!(z > 0.0)) {
    throw std::invalid_argument("meijer_g: argument must be positive");
  }
  if (spec.delta() <= 0.0) {
    throw ConvergenceError(
        "vertical contour integral does not converge (m + n <= (p + q)/2)");
  }
  const auto [left, right] = spec.contour_interval();
  const double c = 0.5 * (left + right);
  const double lz = std::log(z);
  const int p = spec.p();
  const int q = spec.q();
  double max_mag = 0.0;
  auto integrand = [&](double t) -> std::complex<double> {
    const std::complex<double> s(c, t);
    std::complex<double> log_sum = -s * lz;
    try {
      for (int j = 0; j < spec.m; ++j) {
        log_sum += log_gamma(spec.b[j] + s);
      }
      for (int i = 0; i < spec.n; ++i) {
        log_sum += log_gamma(1.0 - spec.a[i] - s);
      }
    } catch (const GammaPoleError&) {
      throw ImaginaryResidueError(
          "contour passes through a pole of a numerator gamma factor");
    }
    try {
      for (int l = spec.m; l < q; ++l) {
        log_sum -= log_gamma(1.0 - spec.b[l] - s);
      }
      for (int i = spec.n; i < p; ++i) {
        log_sum -= log_gamma(spec.a[i] + s);
      }
    } catch (const GammaPoleError&) {
      // A denominator gamma pole makes the integrand vanish there.
      return {0.0, 0.0};
    }
    const std::complex<double> value = std::exp(log_sum);
    max_mag = std::max(max_mag, std::abs(value));
    return value;
  };
  double window = kContourStartWindow;
  while (true) {
    max_mag = 0.0;
    const std::complex<double> integral =
        adaptive_integrate_complex(integrand, -window, window, cfg);
    const double tail_scale =
        std::max(max_mag, std::numeric_limits<double>::min());
    const double edge = std::max(std::abs(integrand(window)),
                                 std::abs(integrand(-window)));
    if (edge <= cfg.contour_truncation_tol * tail_scale) {
      const std::complex<double> g = integral / (2.0 * std::numbers::pi);
      if (std::abs(g.imag()) > kImagTolRel * std::abs(g.real()) &&
          std::abs(g.imag()) > kImagTolAbs) {
        throw ImaginaryResidueError(
            "contour integral has a non-negligible imaginary part");
      }
      return g.real();
    }
    window *= 2.0;
    if (window > kContourMaxWindow) {
      throw ConvergenceError("contour truncation window exceeded its ceiling");
    }
  }
}

double meijer_g(const MeijerGSpec& spec, double z, const QuadratureConfig& cfg) {
  try {
    return meijer_g_series(spec, z);
  } catch (const SeriesError&) {
    return meijer_g_contour(spec, z, cfg);
  }
}

}  // namespace rfso::specfun
