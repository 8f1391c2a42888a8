#pragma once

// Meijer G-function for real parameters and positive real argument.
//
// The function is defined by the Mellin-Barnes contour integral
//
//   G^{m,n}_{p,q}(z | a; b) =
//     (1/2*pi*i) Int_L  [ prod_{j<=m} Gamma(b_j + s) prod_{i<=n} Gamma(1 - a_i - s) ]
//                       / [ prod_{j>m} Gamma(1 - b_j - s) prod_{i>n} Gamma(a_i + s) ]
//                       * z^{-s} ds
//
// over a vertical line separating the ascending pole chains of the
// Gamma(b_j + s) factors (left family) from those of Gamma(1 - a_i - s)
// (right family).  Two evaluation strategies are provided:
//
//   * meijer_g_series  - sum of residues over the left pole family; valid
//     when m >= 1 and the left closure converges (p < q, or p == q with
//     z < 1).  Two b_j (j <= m) differing by a nonzero integer N make the
//     poles beyond index N-1 of the lower chain second order; those residues
//     are not plain powers, but they carry z^{b+N} with N-fold factorial
//     suppression, so the series is still usable whenever that scale is
//     negligible (checked per argument; otherwise SeriesError).  Equal b_j
//     always raise SeriesError.  Fast; used on hot paths.
//   * meijer_g_contour - direct numerical integration along the vertical
//     line; slower but works whenever m + n - (p + q)/2 > 0.
//   * meijer_g         - series first, contour fallback.
//
// detail::PreparedSeries caches the argument-independent residue data for
// repeated evaluations at many z with fixed parameters.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rfso/specfun/quadrature.hpp"

namespace rfso::specfun {

struct MeijerGSpec {
  std::vector<double> a;  // size p; the first n entries form the upper-left group
  std::vector<double> b;  // size q; the first m entries form the lower-left group
  int m = 0;
  int n = 0;

  int p() const { return static_cast<int>(a.size()); }
  int q() const { return static_cast<int>(b.size()); }

  // m + n - (p + q)/2; the vertical-contour integral converges (for
  // positive real z) when this is positive.
  double delta() const { return m + n - 0.5 * (p() + q()); }

  // Throws std::invalid_argument when the orders are inconsistent.
  void validate() const;

  // Open interval of admissible contour abscissae (Re s).  When one side is
  // unconstrained (n == 0 or m == 0) it is placed one unit away from the
  // other.  Throws std::invalid_argument if the interval is empty.
  std::pair<double, double> contour_interval() const;
};

class MeijerGError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The residue series is inapplicable or lost too much precision.
class SeriesError : public MeijerGError {
 public:
  using MeijerGError::MeijerGError;
};

// The contour integral failed to converge within the truncation budget.
class ConvergenceError : public MeijerGError {
 public:
  using MeijerGError::MeijerGError;
};

// The contour integral returned a value with a non-negligible imaginary
// part, indicating a conventions or placement bug.
class ImaginaryResidueError : public MeijerGError {
 public:
  using MeijerGError::MeijerGError;
};

namespace detail {

// Argument-independent residue data for one spec, reusable across many z.
// evaluate() extends the cached coefficient arrays on demand, so it is not
// const; instances are not thread-safe.
class PreparedSeries {
 public:
  // Throws SeriesError when the residue series cannot represent this spec
  // (m == 0, two equal b_j among the left chains, or a pole in a residue
  // numerator).  Left chains whose b_j differ by a nonzero integer are
  // handled by dropping the higher chain and capping the lower one; the
  // omitted terms are bounded per argument inside evaluate().
  explicit PreparedSeries(MeijerGSpec spec);

  // Throws SeriesError when the left closure diverges for this z, when
  // cancellation between residue chains destroys the result, or when the
  // terms omitted because of colliding chains are not provably negligible
  // at this argument.
  double evaluate(double z);

  const MeijerGSpec& spec() const { return spec_; }

 private:
  struct Chain {
    int index = 0;             // position of this chain's b_j within b
    double b = 0.0;            // exponent of the leading z^{b} factor
    double log_scale = 0.0;    // log |t_0|
    double sign = 1.0;         // sign of t_0
    bool identically_zero = false;
    // A lower chain sits a nonzero near-integer below this b: the chain is
    // dropped, justified per argument by the negligibility guard.
    bool suppressed = false;
    int gap = 0;               // smallest such integer offset (suppressed only)
    // A higher chain sits a near-integer above this b: the recursion's
    // denominator vanishes at index max_terms - 1, so only tau_0 ..
    // tau_{max_terms - 1} exist as simple residues.  -1 means no cap.
    int max_terms = -1;
    // Normalized coefficients tau_k (tau_0 = +/-1): term_k = scale * tau_k z^k.
    std::vector<double> tau;
    bool terminated = false;   // a zero ratio or the collision cap ended the chain
  };

  // Ratio tau_{k+1}/tau_k divided by (-z); purely rational in k.
  double ratio_factor(const Chain& chain, int k) const;
  void extend_chain(Chain& chain, std::size_t needed);

  MeijerGSpec spec_;
  std::vector<Chain> chains_;
};

}  // namespace detail

// Residue-series evaluation (see PreparedSeries).  Throws SeriesError when
// the series is inapplicable.
double meijer_g_series(const MeijerGSpec& spec, double z);

// Vertical-contour evaluation.  Throws ConvergenceError when delta() <= 0 or
// when the truncation window exceeds its ceiling, ImaginaryResidueError when
// the result fails the realness check.
double meijer_g_contour(const MeijerGSpec& spec, double z,
                        const QuadratureConfig& cfg = {});

// Series when admissible, contour otherwise.
double meijer_g(const MeijerGSpec& spec, double z,
                const QuadratureConfig& cfg = {});

}  // namespace rfso::specfun
