#pragma once

// Mixed dual-hop link model: an exponential-SNR first hop feeding a
// fixed-gain relay into a turbulence-plus-misalignment optical second hop
// with intensity detection.  This header holds the parameter set, the
// derived closed-form constants shared by all analytic expressions, the
// modulation descriptors, and the per-draw channel samplers used by the
// simulation side.

#include <string>
#include <variant>
#include <vector>

#include "rfso/rng.hpp"

namespace rfso::channel {

struct LinkParams {
  double alpha = 0.0;         // large-scale turbulence shape
  double beta = 0.0;          // small-scale turbulence shape
  double xi = 0.0;            // misalignment severity; +infinity disables it
  double relay_gain_c = 0.0;  // fixed-gain relay constant
  double gbar1 = 0.0;         // first-hop average SNR (linear)
  double gbar2 = 0.0;         // second-hop average SNR scale (linear)

  bool has_pointing_error() const;

  // Throws std::invalid_argument unless alpha, beta, relay_gain_c, gbar1,
  // gbar2 are positive and finite and xi is positive (possibly infinite).
  void validate() const;
};

// Constants appearing in every closed-form expression for the link.
//   pointing_prefactor - multiplies e^{-snr/gbar1} G(...) when misalignment
//                        is modeled (NaN when xi is infinite)
//   base_prefactor     - same role for the misalignment-free branch (always
//                        computable)
//   arg_scale   - scales the G-function argument: z = arg_scale * snr / gbar1
//   pointing_upper / full_lower - upper/lower parameter lists with
//                                 misalignment included (finite xi only)
//   base_lower  - lower parameter list without misalignment
//   shifted_lower - base_lower with the four turbulence entries lowered by
//                   one; appears in the density when misalignment is absent
struct DerivedConstants {
  double pointing_prefactor = 0.0;
  double base_prefactor = 0.0;
  double arg_scale = 0.0;
  double pointing_upper = 0.0;
  std::vector<double> full_lower;
  std::vector<double> base_lower;
  std::vector<double> shifted_lower;
};

DerivedConstants derive_constants(const LinkParams& params);

// Binary scheme with conditional error rate Q(p, q*snr) / 2 in terms of the
// regularized upper incomplete gamma function Q.
struct BinaryScheme {
  double p = 0.0;
  double q = 0.0;
  std::string name;
};

BinaryScheme cbfsk();  // coherent binary FSK:   p = 1/2, q = 1/2
BinaryScheme cbpsk();  // coherent binary PSK:   p = 1/2, q = 1
BinaryScheme nbfsk();  // non-coherent FSK:      p = 1,   q = 1/2
BinaryScheme dbpsk();  // differential PSK:      p = 1,   q = 1

struct Mpsk {
  int m = 0;
};
struct Mam {
  int m = 0;
};
struct Mqam {
  int m = 0;  // must be a perfect square >= 4
};

using ModulationSpec = std::variant<BinaryScheme, Mpsk, Mam, Mqam>;

// Accepts "cbfsk", "cbpsk", "nbfsk", "dbpsk", "mpsk:M", "mam:M", "mqam:M"
// (case-insensitive).  Throws std::invalid_argument otherwise.
ModulationSpec parse_modulation(const std::string& text);

std::string label(const ModulationSpec& spec);

// One draw of the first-hop instantaneous SNR (exponential with mean gbar1).
double sample_rf_snr(double gbar1, rng::RandomStream& stream);
double sample_rf_snr(const LinkParams& params, rng::RandomStream& stream);

// One draw of the misalignment fade fraction, distributed as U^{1/xi^2} on
// (0, 1] (its CDF is u^{xi^2}).
double sample_pointing_fraction(double xi, rng::RandomStream& stream);

// One draw of the second-hop instantaneous SNR: gbar2 times the squared
// product of the turbulence fade (product of two unit-mean gamma factors)
// and, when xi is finite, the misalignment fade fraction.  The fade is
// normalized by the maximum pointing gain, not by its mean; the simulation
// cross-checks in the validation suite pin this convention against the
// closed forms.
double sample_fso_snr(const LinkParams& params, rng::RandomStream& stream);

// Fixed-gain relay combining of the two per-hop SNRs.
double end_to_end_snr(double snr1, double snr2, double relay_gain_c);

double sample_end_to_end_snr(const LinkParams& params,
                             rng::RandomStream& stream);

// Conditional bit error rate of a binary scheme at instantaneous SNR:
// half the regularized upper incomplete gamma function Q(p, q * snr).
double conditional_ber(double p, double q, double snr);
double conditional_ber(const BinaryScheme& scheme, double snr);

}  // namespace rfso::channel
