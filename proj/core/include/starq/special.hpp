#pragma once

#include <cstddef>

#include "starq/series.hpp"

namespace starq {

/// Width of the window around alpha = 1/2 inside which the logarithmic
/// closed forms replace the power forms.
inline constexpr double kDeltaHalf = 1e-8;

/// Exclusion window around theta = 0 for boundary quantities (z = 1 is a
/// boundary singularity of q_alpha).
inline constexpr double kEpsTheta = 1e-3;

/// Order parameter of the function classes; the valid range is [0, 1).
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }
  bool near_half() const { return near_half_; }

 private:
  double value_;
  bool near_half_;
};

/// Named constants attached to one alpha.
struct ClassConstants {
  double q_min;            // min over the disk of Re q_alpha = q_alpha(-1)
  double gamma;            // gamma(alpha), the Re f/z lower bound
  double macgregor_order;  // starlikeness order of the convex class; == q_min
  double order_gamma_lo;   // starlike-order radius problems need gamma in
  double order_gamma_hi;   // (order_gamma_lo, order_gamma_hi)
};

/// Growth / distortion / rotation bounds at radius r.
struct Envelope {
  double growth_lo, growth_hi;
  double distortion_lo, distortion_hi;
  double rotation_max;
};

enum class BranchClass { Exp, SG };

struct QDerivatives {
  Complex q;
  Complex dq;
  Complex d2q;
};

/// q_alpha(z); total on the disk, with the removable singularity at z = 0
/// evaluated from a short series.
Complex q_alpha_eval(Alpha a, Complex z);

/// q_alpha with its first two derivatives (closed-form logarithmic
/// derivative chain).
QDerivatives q_alpha_derivatives(Alpha a, Complex z);

/// Taylor series of q_alpha, computed by series division of (1-2a)z by
/// (1-z)(1-(1-z)^{1-2a}) rather than from hand-coded coefficients.
TruncatedSeries q_alpha_series(Alpha a, std::size_t order);

/// Extremal function f_alpha(z).
Complex f_alpha_eval(Alpha a, Complex z);

/// Series of f_alpha built through pow_one_minus_z.
TruncatedSeries f_alpha_series(Alpha a, std::size_t order);

/// Product-formula coefficient of z^n in f_alpha (n >= 2).
double f_alpha_coeff(Alpha a, std::size_t n);

/// q_alpha(-1); also the MacGregor starlikeness order of the convex class.
double q_min(Alpha a);

/// gamma(alpha) in (0, 1/2].
double gamma_alpha(Alpha a);

ClassConstants class_constants(Alpha a);

/// The alpha at which the Exp/SG radius root crosses r = sqrt(2)-1,
/// obtained by solving the branch equation at that radius (never
/// hard-coded).
double branch_threshold(BranchClass c);

/// Convolution multiplier lambda(theta); |theta| >= kEpsTheta.
Complex lambda_theta(Alpha a, double theta);

/// Coefficient multiplier rho(theta) at index n >= 2; |theta| >= kEpsTheta.
Complex rho_theta(Alpha a, double theta, std::size_t n);

/// Growth/distortion envelopes at radius r in (0,1); rotation_max by dense
/// sampling plus golden-section refinement.
Envelope envelope(Alpha a, double r);

}  // namespace starq
