#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starq/series.hpp"
#include "starq/special.hpp"

namespace starq {

struct FeketeParams {
  Alpha alpha;
  double t;  // functional weight in |a3 - t a2^2|
};

struct CoefficientReport {
  double bound;
  std::optional<double> attained;  // value at the named extremal fixture
  int branch;                      // 1-based piecewise case
};

struct InverseCoeffBounds {
  double b2;
  double b3;
  int b3_branch;
};

struct LogCoeffBound {
  double bound;
  bool conditional;  // alpha outside the numerically-scanned convex set
};

struct ZfCoeffReport {
  bool holds;           // partial sum < 1 - alpha
  double partial_sum;   // sum of (n + alpha - 2) Re c_n, n = 2..n_check
  double rhs;           // 1 - alpha
  bool hypothesis_met;  // every c_n real and nonnegative
  double last_term;     // |(n_check + alpha - 2) c_{n_check}|, convergence diagnostic
};

struct RhoSufficiencyReport {
  bool sufficient;  // sup over the theta grid of the truncated sum < 1
  double sup_sum;
  double argmax_theta;
  double last_term;
};

/// Piecewise Fekete-Szego bound for |a3 - t a2^2| with the attained value
/// at the branch's extremal fixture.
CoefficientReport fekete_szego_bound(const FeketeParams& p);

/// |a2| <= 1 - alpha.
double a2_bound(Alpha a);

/// Piecewise |a3| bound (branches meet at alpha = 3/4).
CoefficientReport a3_bound(Alpha a);

/// Inverse-coefficient bounds |b2|, |b3| (b3 branches at alpha = 3/8;
/// equals the Fekete-Szego bound at t = 2).
InverseCoeffBounds inverse_coeff_bounds(Alpha a);

/// |beta_n| <= (1-alpha)/(2n); conditional when the convexity scan
/// does not certify the image convex for this alpha.
LogCoeffBound log_coeff_bound(Alpha a, std::size_t n);

/// beta_k = half the k-th coefficient of log(f/z); f normalized,
/// upto <= order - 1.
std::vector<Complex> log_coeffs(const TruncatedSeries& f, std::size_t upto);

/// Necessary coefficient condition on c_n from z/f':
/// sum (n + alpha - 2) c_n < 1 - alpha, truncated at n_check.
ZfCoeffReport zf_coeff_condition(const TruncatedSeries& f, Alpha a,
                                 std::size_t n_check = 32);

/// Sufficient condition sup_theta sum |rho(theta)| |a_n| < 1, truncated at
/// n_check, sampled on a theta grid excluding the kEpsTheta window.
RhoSufficiencyReport rho_sufficiency(const TruncatedSeries& f, Alpha a,
                                     std::size_t theta_grid = 512,
                                     std::size_t n_check = 32);

/// sqrt(f(z^2)) for normalized f; the odd extremal fixture attaining the
/// middle Fekete-Szego branch.
TruncatedSeries sqrt_transform(const TruncatedSeries& f);

}  // namespace starq
