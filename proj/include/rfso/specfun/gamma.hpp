#pragma once

// Gamma-family special functions used by the contour and series evaluators:
// the principal branch of log Gamma on the complex plane, a sign-tracked
// real log Gamma, and the (regularized) upper incomplete gamma function.

#include <complex>
#include <stdexcept>

namespace rfso::specfun {

// Argument within 1e-12 of a pole of Gamma (a non-positive integer).
class GammaPoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Principal branch of log Gamma (the analytic continuation that is real on
// the positive real axis), evaluated by the Stirling asymptotic series after
// an upward recurrence pushes the argument into its region of fast
// convergence.  On the cut (negative real axis) the limit from above is
// returned.  Relative accuracy ~1e-14 for |Re z| <= 50, |Im z| <= 200.
std::complex<double> log_gamma(std::complex<double> z);

// log |Gamma(x)| together with the sign of Gamma(x) on the real axis.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma log_gamma_signed(double x);

// Upper incomplete gamma Gamma(a, x) and its regularized form
// Q(a, x) = Gamma(a, x) / Gamma(a).  Requires a > 0, x >= 0.
double upper_incomplete_gamma(double a, double x);
double reg_gamma_q(double a, double x);

}  // namespace rfso::specfun
