#include "rfso/analytics.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "rfso/specfun/egbmgf.hpp"
#include "rfso/specfun/gamma.hpp"
#include "rfso/specfun/quadrature.hpp"

namespace rfso::analytics {

namespace {

using channel::DerivedConstants;
using channel::LinkParams;
using specfun::MeijerGSpec;

constexpr double kCdfBandTol = 1e-9;
constexpr double kSerEscalateRelTol = 1e-5;

double active_prefactor(const LinkParams& params, const DerivedConstants& dc) {
  return params.has_pointing_error() ? dc.pointing_prefactor
                                     : dc.base_prefactor;
}

// G spec whose value (scaled by the prefactor and the exponential factor)
// is the complementary CDF.
MeijerGSpec ccdf_spec(const LinkParams& params, const DerivedConstants& dc) {
  if (params.has_pointing_error()) {
    return MeijerGSpec{{dc.pointing_upper}, dc.full_lower, 6, 0};
  }
  return MeijerGSpec{{}, dc.base_lower, 5, 0};
}

// G spec appearing in every Laplace-domain quantity (transform, moments,
// average error rates); extra_a is the leading upper parameter.
MeijerGSpec laplace_spec(const LinkParams& params, const DerivedConstants& dc,
                         double extra_a) {
  if (params.has_pointing_error()) {
    return MeijerGSpec{{extra_a, dc.pointing_upper}, dc.full_lower, 6, 1};
  }
  return MeijerGSpec{{extra_a}, dc.base_lower, 5, 1};
}

// Series evaluation with automatic contour fallback at fixed spec.
class GEval {
 public:
  explicit GEval(MeijerGSpec spec) : spec_(std::move(spec)) {
    try {
      series_.emplace(spec_);
    } catch (const specfun::SeriesError&) {
      // Fall back to the contour for every argument.
    }
  }

  double operator()(double z) {
    if (series_) {
      try {
        return series_->evaluate(z);
      } catch (const specfun::SeriesError&) {
      }
    }
    return specfun::meijer_g_contour(spec_, z);
  }

 private:
  MeijerGSpec spec_;
  std::optional<specfun::detail::PreparedSeries> series_;
};

// E[exp(-s*snr)] evaluated through a reusable G evaluator; shared by the
// transform itself and the symbol-error integrals.
class LaplaceEval {
 public:
  explicit LaplaceEval(const LinkParams& params)
      : gbar1_(params.gbar1),
        dc_(channel::derive_constants(params)),
        prefactor_(active_prefactor(params, dc_)),
        g_(laplace_spec(params, dc_, 0.0)) {}

  double operator()(double s) {
    if (!(s >= 0.0)) {
      throw std::invalid_argument("mgf: s must be nonnegative");
    }
    if (s == 0.0) return 1.0;
    const double z = dc_.arg_scale / (s * gbar1_ + 1.0);
    const double value =
        1.0 - s * prefactor_ / (s + 1.0 / gbar1_) * g_(z);
    return std::min(std::max(value, 0.0), 1.0);
  }

 private:
  double gbar1_;
  DerivedConstants dc_;
  double prefactor_;
  GEval g_;
};

// Fixed-node phase integral with doubled-node self-check; escalates to the
// adaptive integrator when the node doubling moves the estimate.
double ser_phase_integral(const std::function<double(double)>& f, double lo,
                          double hi) {
  const specfun::QuadratureConfig cfg{};
  const specfun::GcqResult r = specfun::gcq_integrate(f, lo, hi, cfg.gcq_nodes);
  if (r.refinement_delta <=
      kSerEscalateRelTol * std::max(std::abs(r.value), 1e-300)) {
    return r.value;
  }
  return specfun::adaptive_integrate(f, lo, hi, cfg);
}

int require_order(const std::optional<int>& value, const char* what) {
  if (!value || *value < 1) {
    throw std::invalid_argument(std::string("MetricRequest: ") + what +
                                " must be a positive integer");
  }
  return *value;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

CdfEvaluator::CdfEvaluator(const LinkParams& params)
    : params_(params),
      dc_(channel::derive_constants(params)),
      prefactor_(active_prefactor(params, dc_)),
      spec_(ccdf_spec(params, dc_)) {
  try {
    series_.emplace(spec_);
  } catch (const specfun::SeriesError&) {
  }
}

double CdfEvaluator::operator()(double snr) { return 1.0 - ccdf(snr); }

double CdfEvaluator::ccdf(double snr) {
  if (!(snr >= 0.0)) {
    throw std::invalid_argument("cdf: snr must be nonnegative");
  }
  if (snr == 0.0) return 1.0;
  const double decay = std::exp(-snr / params_.gbar1);
  if (decay == 0.0) return 0.0;
  const double z = dc_.arg_scale * snr / params_.gbar1;
  double g = 0.0;
  bool done = false;
  if (series_) {
    try {
      g = series_->evaluate(z);
      done = true;
    } catch (const specfun::SeriesError&) {
    }
  }
  if (!done) g = specfun::meijer_g_contour(spec_, z);
  const double raw = prefactor_ * decay * g;
  if (raw < -kCdfBandTol || raw > 1.0 + kCdfBandTol) {
    throw std::runtime_error(
        "cdf: raw complementary value " + std::to_string(raw) +
        " escaped the unit interval beyond tolerance (snr=" +
        std::to_string(snr) + ")");
  }
  return std::min(std::max(raw, 0.0), 1.0);
}

double cdf(const LinkParams& params, double snr) {
  CdfEvaluator eval(params);
  return eval(snr);
}

double ccdf(const LinkParams& params, double snr) {
  CdfEvaluator eval(params);
  return eval.ccdf(snr);
}

double pdf(const LinkParams& params, double snr) {
  const DerivedConstants dc = channel::derive_constants(params);
  if (!(snr > 0.0)) {
    throw std::invalid_argument("pdf: snr must be positive");
  }
  const double decay = std::exp(-snr / params.gbar1);
  if (decay == 0.0) return 0.0;
  const double z = dc.arg_scale * snr / params.gbar1;
  const double pref = active_prefactor(params, dc);
  double value = 0.0;
  if (params.has_pointing_error()) {
    GEval g_full(ccdf_spec(params, dc));
    GEval g_base(MeijerGSpec{{}, dc.base_lower, 5, 0});
    const double xi2 = params.xi * params.xi;
    value = pref * decay *
            ((1.0 / params.gbar1 - xi2 / (2.0 * snr)) * g_full(z) +
             g_base(z) / snr);
  } else {
    GEval g_base(MeijerGSpec{{}, dc.base_lower, 5, 0});
    GEval g_shift(MeijerGSpec{{}, dc.shifted_lower, 5, 0});
    value = pref * decay *
            (g_base(z) / params.gbar1 +
             dc.arg_scale / params.gbar1 * g_shift(z));
  }
  return value < 0.0 ? 0.0 : value;
}

double mgf(const LinkParams& params, double s) {
  LaplaceEval eval(params);
  return eval(s);
}

double moment(const LinkParams& params, int order) {
  if (order < 1) {
    throw std::invalid_argument("moment: order must be a positive integer");
  }
  const DerivedConstants dc = channel::derive_constants(params);
  const double pref = active_prefactor(params, dc);
  GEval g(laplace_spec(params, dc, 1.0 - order));
  return order * pref * std::pow(params.gbar1, order) * g(dc.arg_scale);
}

double af(const LinkParams& params, int order) {
  if (order < 1) {
    throw std::invalid_argument("af: order must be a positive integer");
  }
  if (order == 1) return 0.0;
  const double m1 = moment(params, 1);
  const double mn = moment(params, order);
  return mn / std::pow(m1, order) - 1.0;
}

double avg_ber_binary(const LinkParams& params,
                      const channel::BinaryScheme& scheme) {
  if (!(scheme.p > 0.0) || !(scheme.q > 0.0)) {
    throw std::invalid_argument("avg_ber_binary: p and q must be positive");
  }
  const DerivedConstants dc = channel::derive_constants(params);
  const double pref = active_prefactor(params, dc);
  GEval g(laplace_spec(params, dc, 1.0 - scheme.p));
  const double z = dc.arg_scale / (scheme.q * params.gbar1 + 1.0);
  const double coef =
      pref * std::pow(scheme.q, scheme.p) /
      (2.0 * std::tgamma(scheme.p) *
       std::pow(scheme.q + 1.0 / params.gbar1, scheme.p));
  const double value = 0.5 - coef * g(z);
  return std::min(std::max(value, 0.0), 0.5);
}

double avg_ser_mpsk(const LinkParams& params, int m_order) {
  if (m_order < 2) {
    throw std::invalid_argument("avg_ser_mpsk: order must be >= 2");
  }
  LaplaceEval transform(params);
  const double m = static_cast<double>(m_order);
  const double g = std::sin(std::numbers::pi / m) * std::sin(std::numbers::pi / m);
  auto f = [&](double phi) {
    const double sp = std::sin(phi);
    return transform(g / (sp * sp));
  };
  const double upper = (m - 1.0) * std::numbers::pi / m;
  return ser_phase_integral(f, 0.0, upper) / std::numbers::pi;
}

double avg_ser_mam(const LinkParams& params, int m_order) {
  if (m_order < 2) {
    throw std::invalid_argument("avg_ser_mam: order must be >= 2");
  }
  LaplaceEval transform(params);
  const double m = static_cast<double>(m_order);
  const double g = 3.0 / (m * m - 1.0);
  auto f = [&](double phi) {
    const double sp = std::sin(phi);
    return transform(g / (sp * sp));
  };
  const double integral = ser_phase_integral(f, 0.0, std::numbers::pi / 2.0);
  return 2.0 * (m - 1.0) / (m * std::numbers::pi) * integral;
}

double avg_ser_mqam(const LinkParams& params, int m_order) {
  const int root = static_cast<int>(std::lround(std::sqrt(m_order)));
  if (m_order < 4 || root * root != m_order) {
    throw std::invalid_argument(
        "avg_ser_mqam: order must be a perfect square >= 4");
  }
  LaplaceEval transform(params);
  const double m = static_cast<double>(m_order);
  const double k = 1.0 - 1.0 / std::sqrt(m);
  const double g = 3.0 / (2.0 * (m - 1.0));
  auto f = [&](double phi) {
    const double sp = std::sin(phi);
    return transform(g / (sp * sp));
  };
  const double half = ser_phase_integral(f, 0.0, std::numbers::pi / 2.0);
  const double quarter = ser_phase_integral(f, 0.0, std::numbers::pi / 4.0);
  const double value = 4.0 * k / std::numbers::pi * half -
                       4.0 * k * k / std::numbers::pi * quarter;
  return std::min(std::max(value, 0.0), 1.0);
}

double avg_ser(const LinkParams& params,
               const channel::ModulationSpec& modulation) {
  struct Visitor {
    const LinkParams& params;
    double operator()(const channel::BinaryScheme& s) const {
      return avg_ber_binary(params, s);
    }
    double operator()(const channel::Mpsk& s) const {
      return avg_ser_mpsk(params, s.m);
    }
    double operator()(const channel::Mam& s) const {
      return avg_ser_mam(params, s.m);
    }
    double operator()(const channel::Mqam& s) const {
      return avg_ser_mqam(params, s.m);
    }
  };
  return std::visit(Visitor{params}, modulation);
}

double ergodic_capacity(const LinkParams& params) {
  const DerivedConstants dc = channel::derive_constants(params);
  specfun::EgbmgfSpec spec;
  spec.outer = MeijerGSpec{{0.0}, {}, 0, 1};
  spec.inner1 = MeijerGSpec{{0.0}, {0.0}, 1, 1};
  spec.inner2 = ccdf_spec(params, dc);
  const double kernel = specfun::egbmgf(spec, params.gbar1, dc.arg_scale);
  return active_prefactor(params, dc) * params.gbar1 / std::numbers::ln2 *
         kernel;
}

double capacity_oracle(const LinkParams& params) {
  CdfEvaluator eval(params);
  auto integrand = [&eval](double snr) { return eval.ccdf(snr) / (1.0 + snr); };
  const double integral = specfun::adaptive_integrate(
      integrand, 0.0, std::numeric_limits<double>::infinity());
  return integral / std::numbers::ln2;
}

void MetricRequest::validate() const {
  params.validate();
  if (grid.empty()) {
    throw std::invalid_argument("MetricRequest: grid must be nonempty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(
          "MetricRequest: grid must be strictly increasing");
    }
  }
  const bool needs_modulation = metric == Metric::kBer || metric == Metric::kSer;
  if (needs_modulation != modulation.has_value()) {
    throw std::invalid_argument(
        "MetricRequest: modulation must be set exactly for error-rate metrics");
  }
  if ((metric == Metric::kMoment) != moment_order.has_value()) {
    throw std::invalid_argument(
        "MetricRequest: moment_order must be set exactly for the moment metric");
  }
  if ((metric == Metric::kAf) != af_order.has_value()) {
    throw std::invalid_argument(
        "MetricRequest: af_order must be set exactly for the fading metric");
  }
  if ((metric == Metric::kMgf) != mgf_point.has_value()) {
    throw std::invalid_argument(
        "MetricRequest: mgf_point must be set exactly for the transform metric");
  }
  if (metric == Metric::kBer &&
      !std::holds_alternative<channel::BinaryScheme>(*modulation)) {
    throw std::invalid_argument(
        "MetricRequest: the bit-error metric needs a binary scheme");
  }
  if (metric == Metric::kMoment) require_order(moment_order, "moment_order");
  if (metric == Metric::kAf) require_order(af_order, "af_order");
  if (metric == Metric::kMgf && !(*mgf_point >= 0.0)) {
    throw std::invalid_argument("MetricRequest: mgf_point must be >= 0");
  }
}

Curve evaluate_metric(const MetricRequest& request) {
  request.validate();
  Curve curve;
  curve.x = request.grid;
  const bool snr_grid =
      request.metric == Metric::kCdf || request.metric == Metric::kPdf;
  curve.x_label = snr_grid ? "snr" : "gbar1_db";
  Column column;
  std::vector<double>& values = column.values;
  values.reserve(request.grid.size());
  switch (request.metric) {
    case Metric::kCdf: {
      column.name = "cdf";
      CdfEvaluator eval(request.params);
      for (double snr : request.grid) values.push_back(eval(snr));
      break;
    }
    case Metric::kPdf: {
      column.name = "pdf";
      for (double snr : request.grid) values.push_back(pdf(request.params, snr));
      break;
    }
    case Metric::kMgf: {
      column.name = "mgf";
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(mgf(p, *request.mgf_point));
      }
      break;
    }
    case Metric::kMoment: {
      column.name = "moment" + std::to_string(*request.moment_order);
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(moment(p, *request.moment_order));
      }
      break;
    }
    case Metric::kAf: {
      column.name = "af" + std::to_string(*request.af_order);
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(af(p, *request.af_order));
      }
      break;
    }
    case Metric::kBer: {
      column.name = "ber_" + channel::label(*request.modulation);
      const auto& scheme = std::get<channel::BinaryScheme>(*request.modulation);
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(avg_ber_binary(p, scheme));
      }
      break;
    }
    case Metric::kSer: {
      column.name = "ser_" + channel::label(*request.modulation);
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(avg_ser(p, *request.modulation));
      }
      break;
    }
    case Metric::kCapacity: {
      column.name = "capacity";
      for (double db : request.grid) {
        LinkParams p = request.params;
        p.gbar1 = db_to_linear(db);
        values.push_back(ergodic_capacity(p));
      }
      break;
    }
  }
  curve.columns.push_back(std::move(column));
  return curve;
}

}  // namespace rfso::analytics
