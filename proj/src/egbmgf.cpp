#include "rfso/specfun/egbmgf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "rfso/specfun/gamma.hpp"

namespace rfso::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTailLogDrop = -41.45;  // ln(1e-18)
constexpr double kMaxWindow = 400.0;
constexpr double kStepStart = 0.25;
constexpr double kStepMin = 1.0 / 256.0;
constexpr double kRefineRelTol = 1e-6;
constexpr double kRefineAbsTol = 1e-14;

// Admissible open interval for the real part of a block's variable in the
// "plus" convention: Gamma(b_j - sigma) (j < m) forces Re sigma < b_j and
// Gamma(1 - a_i + sigma) (i < n) forces Re sigma > a_i - 1.
struct Bounds {
  double lo = -kInf;
  double hi = kInf;
};

Bounds block_bounds(const MeijerGSpec& sp) {
  Bounds r;
  for (int i = 0; i < sp.n; ++i) {
    r.lo = std::max(r.lo, sp.a[i] - 1.0);
  }
  for (int j = 0; j < sp.m; ++j) {
    r.hi = std::min(r.hi, sp.b[j]);
  }
  return r;
}

// Log of the block value at sigma.  A pole of a denominator gamma makes the
// block vanish; that is signalled through *vanished.
std::complex<double> block_log(const MeijerGSpec& sp, std::complex<double> sigma,
                               bool* vanished) {
  *vanished = false;
  std::complex<double> sum = 0.0;
  const int p = sp.p();
  const int q = sp.q();
  for (int j = 0; j < sp.m; ++j) {
    sum += log_gamma(sp.b[j] - sigma);
  }
  for (int i = 0; i < sp.n; ++i) {
    sum += log_gamma(1.0 - sp.a[i] + sigma);
  }
  try {
    for (int l = sp.m; l < q; ++l) {
      sum -= log_gamma(1.0 - sp.b[l] + sigma);
    }
    for (int i = sp.n; i < p; ++i) {
      sum -= log_gamma(sp.a[i] - sigma);
    }
  } catch (const GammaPoleError&) {
    *vanished = true;
    return {0.0, 0.0};
  }
  return sum;
}

double slack(double c1, double c2, const Bounds& b1, const Bounds& b2,
             const Bounds& bs) {
  double s = kInf;
  auto feed = [&s](double v) { s = std::min(s, v); };
  if (std::isfinite(b1.lo)) feed(c1 - b1.lo);
  if (std::isfinite(b1.hi)) feed(b1.hi - c1);
  if (std::isfinite(b2.lo)) feed(c2 - b2.lo);
  if (std::isfinite(b2.hi)) feed(b2.hi - c2);
  if (std::isfinite(bs.lo)) feed(c1 + c2 - bs.lo);
  if (std::isfinite(bs.hi)) feed(bs.hi - (c1 + c2));
  return s;
}

std::pair<double, double> search_box(const Bounds& b) {
  double lo = b.lo;
  double hi = b.hi;
  if (!std::isfinite(lo)) lo = std::isfinite(hi) ? hi - 3.0 : -3.0;
  if (!std::isfinite(hi)) hi = std::isfinite(b.lo) ? b.lo + 3.0 : 3.0;
  return {lo, hi};
}

std::pair<double, double> place_contours(const Bounds& b1, const Bounds& b2,
                                         const Bounds& bs) {
  auto [lo1, hi1] = search_box(b1);
  auto [lo2, hi2] = search_box(b2);
  double best1 = 0.5 * (lo1 + hi1);
  double best2 = 0.5 * (lo2 + hi2);
  double best = -kInf;
  for (int round = 0; round < 3; ++round) {
    const int cells = round == 0 ? 60 : 20;
    const double step1 = (hi1 - lo1) / cells;
    const double step2 = (hi2 - lo2) / cells;
    for (int i = 0; i <= cells; ++i) {
      for (int j = 0; j <= cells; ++j) {
        const double c1 = lo1 + step1 * i;
        const double c2 = lo2 + step2 * j;
        const double s = slack(c1, c2, b1, b2, bs);
        if (s > best) {
          best = s;
          best1 = c1;
          best2 = c2;
        }
      }
    }
    lo1 = best1 - step1;
    hi1 = best1 + step1;
    lo2 = best2 - step2;
    hi2 = best2 + step2;
  }
  if (!(best > 0.0)) {
    throw std::invalid_argument(
        "egbmgf: no contour placement separates all pole families");
  }
  return {best1, best2};
}

// Half-window on one axis beyond which the axis block (whose modulus decays
// like a product of |Gamma| factors, monotone in |Im|) has dropped by 1e18
// relative to its on-axis peak.
double axis_window(const MeijerGSpec& sp, double c) {
  bool vanished = false;
  const double peak = block_log(sp, {c, 0.0}, &vanished).real();
  if (vanished) {
    throw std::invalid_argument("egbmgf: contour sits on a block zero");
  }
  for (double t = 1.0; t <= kMaxWindow; t += 1.0) {
    const double mag = block_log(sp, {c, t}, &vanished).real();
    if (!vanished && mag - peak < kTailLogDrop) {
      return t;
    }
  }
  throw ConvergenceError("egbmgf: axis truncation window exceeded its ceiling");
}

// Fills values[k + count] = exp(block_log(c + i k h) + (c + i k h) log(arg))
// for k in [-count, count].
std::vector<std::complex<double>> axis_values(const MeijerGSpec& sp, double c,
                                              double h, int count,
                                              double log_arg) {
  std::vector<std::complex<double>> values(2 * count + 1);
  for (int k = -count; k <= count; ++k) {
    const std::complex<double> sigma(c, k * h);
    bool vanished = false;
    const std::complex<double> lg = block_log(sp, sigma, &vanished);
    values[k + count] =
        vanished ? std::complex<double>(0.0, 0.0) : std::exp(lg + sigma * log_arg);
  }
  return values;
}

}  // namespace

double egbmgf(const EgbmgfSpec& spec, double x, double y,
              EgbmgfDiagnostics* diagnostics) {
  // An empty outer block means no coupling (the outer factor is identically
  // one and the double integral factorizes); anything else must be a valid
  // parameter block.
  const bool outer_empty = spec.outer.a.empty() && spec.outer.b.empty() &&
                           spec.outer.m == 0 && spec.outer.n == 0;
  if (!outer_empty) spec.outer.validate();
  spec.inner1.validate();
  spec.inner2.validate();
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::invalid_argument("egbmgf: arguments must be positive");
  }
  const Bounds b1 = block_bounds(spec.inner1);
  const Bounds b2 = block_bounds(spec.inner2);
  const Bounds bs = block_bounds(spec.outer);
  const auto [c1, c2] = place_contours(b1, b2, bs);
  const double t1 = axis_window(spec.inner1, c1);
  const double t2 = axis_window(spec.inner2, c2);
  const double lx = std::log(x);
  const double ly = std::log(y);

  auto value_at_step = [&](double h) {
    const int k1 = static_cast<int>(std::ceil(t1 / h));
    const int k2 = static_cast<int>(std::ceil(t2 / h));
    const std::vector<std::complex<double>> in1 =
        axis_values(spec.inner1, c1, h, k1, lx);
    const std::vector<std::complex<double>> in2 =
        axis_values(spec.inner2, c2, h, k2, ly);
    // Outer block sampled once per attainable s + t value.
    const int ks = k1 + k2;
    std::vector<std::complex<double>> out(2 * ks + 1);
    for (int mde = -ks; mde <= ks; ++mde) {
      const std::complex<double> sigma(c1 + c2, mde * h);
      bool vanished = false;
      const std::complex<double> lg = block_log(spec.outer, sigma, &vanished);
      out[mde + ks] = vanished ? std::complex<double>(0.0, 0.0) : std::exp(lg);
    }
    std::complex<double> sum = 0.0;
    for (int k = -k1; k <= k1; ++k) {
      const std::complex<double> f1 = in1[k + k1];
      if (f1 == std::complex<double>(0.0, 0.0)) continue;
      std::complex<double> row = 0.0;
      for (int l = -k2; l <= k2; ++l) {
        row += in2[l + k2] * out[k + l + ks];
      }
      sum += f1 * row;
    }
    return sum * (h * h / (4.0 * std::numbers::pi * std::numbers::pi));
  };

  double h = kStepStart;
  std::complex<double> value = value_at_step(h);
  double delta = kInf;
  while (true) {
    const double next_h = 0.5 * h;
    const std::complex<double> refined = value_at_step(next_h);
    delta = std::abs(refined - value);
    value = refined;
    h = next_h;
    if (delta <= std::max(kRefineRelTol * std::abs(refined), kRefineAbsTol)) {
      break;
    }
    if (next_h <= kStepMin) {
      throw ConvergenceError("egbmgf: step refinement did not converge");
    }
  }
  if (diagnostics != nullptr) {
    diagnostics->c1 = c1;
    diagnostics->c2 = c2;
    diagnostics->window1 = t1;
    diagnostics->window2 = t2;
    diagnostics->step = h;
    diagnostics->last_refinement_delta = delta;
  }
  if (std::abs(value.imag()) > 1e-9 * std::abs(value.real()) &&
      std::abs(value.imag()) > 1e-12) {
    throw ImaginaryResidueError("egbmgf: result is not numerically real");
  }
  return value.real();
}

}  // namespace rfso::specfun
