#pragma once

// Bivariate Mellin-Barnes integral of Meijer-G type in two arguments:
//
//   E(x, y) = (1/(2*pi*i)^2) Int Int  phi_out(s + t) phi_1(s) phi_2(t)
//                                     x^{s} y^{t}  ds dt
//
// where each phi block is a ratio of gamma products described by a
// MeijerGSpec in the "plus" convention:
//
//   phi(sigma) = [ prod_{j<m} Gamma(b_j - sigma) prod_{i<n} Gamma(1 - a_i + sigma) ]
//              / [ prod_{l>=m} Gamma(1 - b_l + sigma) prod_{i>=n} Gamma(a_i - sigma) ]
//
// (note the reflected signs relative to the univariate z^{-s} kernel).  The
// contours are vertical lines Re s = c1, Re t = c2 chosen so that every
// gamma argument in every block keeps the pole families on the correct
// side.  Evaluation uses a uniform tensor trapezoid rule with automatic
// truncation and step refinement; the outer block is evaluated on the
// (2K+1)-point grid of attainable s + t values rather than per cell.

#include "rfso/specfun/meijer_g.hpp"

namespace rfso::specfun {

struct EgbmgfSpec {
  // Block in s + t.  A default-constructed (empty) block means no coupling:
  // phi_out is identically one and E(x, y) factorizes into the product of
  // the two univariate integrals.
  MeijerGSpec outer;
  MeijerGSpec inner1;  // block in s (argument x)
  MeijerGSpec inner2;  // block in t (argument y)
};

struct EgbmgfDiagnostics {
  double c1 = 0.0;       // contour abscissa on the s axis
  double c2 = 0.0;       // contour abscissa on the t axis
  double window1 = 0.0;  // truncation half-window on the s axis
  double window2 = 0.0;  // truncation half-window on the t axis
  double step = 0.0;     // final grid step
  double last_refinement_delta = 0.0;
};

// Evaluates E(x, y) for positive x, y.  Throws ConvergenceError when the
// step refinement or truncation search fails, ImaginaryResidueError when
// the result is not numerically real, std::invalid_argument for infeasible
// contour constraints.
double egbmgf(const EgbmgfSpec& spec, double x, double y,
              EgbmgfDiagnostics* diagnostics = nullptr);

}  // namespace rfso::specfun
