#include "rfso/channel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rfso/specfun/gamma.hpp"

namespace rfso::channel {

bool LinkParams::has_pointing_error() const { return std::isfinite(xi); }

void LinkParams::validate() const {
  auto positive_finite = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("LinkParams: ") + what +
                                  " must be positive and finite");
    }
  };
  positive_finite(alpha, "alpha");
  positive_finite(beta, "beta");
  positive_finite(relay_gain_c, "relay_gain_c");
  positive_finite(gbar1, "gbar1");
  positive_finite(gbar2, "gbar2");
  if (!(xi > 0.0)) {  // +infinity allowed
    throw std::invalid_argument("LinkParams: xi must be positive");
  }
}

DerivedConstants derive_constants(const LinkParams& params) {
  params.validate();
  DerivedConstants dc;
  const double a = params.alpha;
  const double b = params.beta;
  const double log_gammas = std::lgamma(a) + std::lgamma(b);
  const double pow2 = std::pow(2.0, a + b);
  dc.arg_scale =
      (a * b) * (a * b) * params.relay_gain_c / (16.0 * params.gbar2);
  dc.base_lower = {a / 2.0, (a + 1.0) / 2.0, b / 2.0, (b + 1.0) / 2.0, 0.0};
  dc.shifted_lower = {a / 2.0 - 1.0, (a - 1.0) / 2.0, b / 2.0 - 1.0,
                      (b - 1.0) / 2.0, 0.0};
  dc.base_prefactor = pow2 / (4.0 * std::numbers::pi) * std::exp(-log_gammas);
  if (params.has_pointing_error()) {
    const double xi2 = params.xi * params.xi;
    dc.pointing_prefactor =
        xi2 * pow2 / (8.0 * std::numbers::pi) * std::exp(-log_gammas);
    dc.pointing_upper = xi2 / 2.0 + 1.0;
    dc.full_lower = {xi2 / 2.0,       a / 2.0, (a + 1.0) / 2.0,
                     b / 2.0, (b + 1.0) / 2.0, 0.0};
  } else {
    dc.pointing_prefactor = std::numeric_limits<double>::quiet_NaN();
    dc.pointing_upper = std::numeric_limits<double>::quiet_NaN();
  }
  return dc;
}

BinaryScheme cbfsk() { return {0.5, 0.5, "cbfsk"}; }
BinaryScheme cbpsk() { return {0.5, 1.0, "cbpsk"}; }
BinaryScheme nbfsk() { return {1.0, 0.5, "nbfsk"}; }
BinaryScheme dbpsk() { return {1.0, 1.0, "dbpsk"}; }

namespace {

std::string lower_copy(const std::string& text) {
  std::string out = text;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

int parse_order(const std::string& text, const std::string& full) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("unrecognized modulation: " + full);
  }
  if (used != text.size()) {
    throw std::invalid_argument("unrecognized modulation: " + full);
  }
  return value;
}

bool perfect_square(int v) {
  const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  return r * r == v;
}

}  // namespace

ModulationSpec parse_modulation(const std::string& text) {
  const std::string t = lower_copy(text);
  if (t == "cbfsk") return cbfsk();
  if (t == "cbpsk") return cbpsk();
  if (t == "nbfsk") return nbfsk();
  if (t == "dbpsk") return dbpsk();
  const std::size_t colon = t.find(':');
  if (colon != std::string::npos) {
    const std::string kind = t.substr(0, colon);
    const int m = parse_order(t.substr(colon + 1), text);
    if (kind == "mpsk") {
      if (m < 2) throw std::invalid_argument("mpsk order must be >= 2");
      return Mpsk{m};
    }
    if (kind == "mam") {
      if (m < 2) throw std::invalid_argument("mam order must be >= 2");
      return Mam{m};
    }
    if (kind == "mqam") {
      if (m < 4 || !perfect_square(m)) {
        throw std::invalid_argument("mqam order must be a perfect square >= 4");
      }
      return Mqam{m};
    }
  }
  throw std::invalid_argument("unrecognized modulation: " + text);
}

std::string label(const ModulationSpec& spec) {
  struct Visitor {
    std::string operator()(const BinaryScheme& s) const { return s.name; }
    std::string operator()(const Mpsk& s) const {
      return std::to_string(s.m) + "psk";
    }
    std::string operator()(const Mam& s) const {
      return std::to_string(s.m) + "am";
    }
    std::string operator()(const Mqam& s) const {
      return std::to_string(s.m) + "qam";
    }
  };
  return std::visit(Visitor{}, spec);
}

double sample_rf_snr(double gbar1, rng::RandomStream& stream) {
  return stream.exponential(gbar1);
}

double sample_rf_snr(const LinkParams& params, rng::RandomStream& stream) {
  return sample_rf_snr(params.gbar1, stream);
}

double sample_pointing_fraction(double xi, rng::RandomStream& stream) {
  return std::pow(stream.uniform_pos(), 1.0 / (xi * xi));
}

double sample_fso_snr(const LinkParams& params, rng::RandomStream& stream) {
  const double turbulence = stream.gamma_unit_mean(params.alpha) *
                            stream.gamma_unit_mean(params.beta);
  double fade = turbulence;
  if (params.has_pointing_error()) {
    fade *= sample_pointing_fraction(params.xi, stream);
  }
  return params.gbar2 * fade * fade;
}

double end_to_end_snr(double snr1, double snr2, double relay_gain_c) {
  return snr1 * snr2 / (snr2 + relay_gain_c);
}

double sample_end_to_end_snr(const LinkParams& params,
                             rng::RandomStream& stream) {
  const double snr1 = sample_rf_snr(params, stream);
  const double snr2 = sample_fso_snr(params, stream);
  return end_to_end_snr(snr1, snr2, params.relay_gain_c);
}

double conditional_ber(double p, double q, double snr) {
  if (snr <= 0.0) return 0.5;
  return 0.5 * specfun::reg_gamma_q(p, q * snr);
}

double conditional_ber(const BinaryScheme& scheme, double snr) {
  return conditional_ber(scheme.p, scheme.q, snr);
}

}  // namespace rfso::channel
