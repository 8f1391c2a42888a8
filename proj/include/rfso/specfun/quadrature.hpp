#pragma once

// Numerical integration building blocks: a fixed-node Chebyshev-Gauss rule
// with a node-doubling self-check, and a globally adaptive Gauss-Kronrod
// integrator for finite and semi-infinite intervals (real- or
// complex-valued integrands).

#include <complex>
#include <functional>
#include <stdexcept>

namespace rfso::specfun {

struct QuadratureConfig {
  int gcq_nodes = 30;
  double adaptive_rel_tol = 1e-10;
  double adaptive_abs_tol = 1e-14;
  double contour_truncation_tol = 1e-12;

  // Throws std::invalid_argument unless every tolerance is positive and the
  // node count is at least 2.
  void validate() const;
};

// Thrown when the adaptive integrator exhausts its subdivision budget; the
// best available estimate and its error bound ride along.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), error_bound(err) {}
  double best_estimate;
  double error_bound;
};

struct GcqResult {
  double value;             // estimate at 2*nodes (the refined rule)
  double refinement_delta;  // |estimate(2*nodes) - estimate(nodes)|
};

// Chebyshev-Gauss rule on a finite interval.  The interval is first graded
// by the odd polynomial map s(x) = (315x - 420x^3 + 378x^5 - 180x^7 +
// 35x^9)/128, whose derivative (315/128)(1-x^2)^4 vanishes to fourth order
// at both ends; the classical first-kind rule (nodes x_i = cos((2i-1)pi/2n))
// is then applied in the graded variable, where the flattened Jacobian
// absorbs the Chebyshev weight together with any algebraic endpoint
// behavior of f.  Smooth integrands converge spectrally, and integrands
// with fractional-power endpoint asymptotics (the shape of the
// symbol-error kernels) still converge at high algebraic order.  Nodes are
// strictly interior, so endpoint singularities or removable endpoint
// limits are never sampled.  The rule is evaluated at `nodes` and
// `2*nodes` points; the refined value and the difference between the two
// estimates are both returned.
GcqResult gcq_integrate(const std::function<double(double)>& f, double lo,
                        double hi, int nodes);

// Globally adaptive Gauss7/Kronrod15 integration.  `hi` may be +infinity, in
// which case the tail is folded in by the substitution x = lo + t/(1-t).
// Terminates when the accumulated error estimate drops below
// max(abs_tol, rel_tol * |integral|); throws QuadratureError otherwise.
// A non-finite integrand sample raises std::runtime_error immediately.
double adaptive_integrate(const std::function<double(double)>& f, double lo,
                          double hi, const QuadratureConfig& cfg = {});

// Same machinery for a complex-valued integrand on a finite interval (used
// by the contour evaluator; error control uses the complex modulus).
std::complex<double> adaptive_integrate_complex(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    const QuadratureConfig& cfg = {});

}  // namespace rfso::specfun
