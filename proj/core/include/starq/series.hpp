#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "starq/errors.hpp"

namespace starq {

using Complex = std::complex<double>;

/// Default truncation order used by the coefficient machinery.
inline constexpr std::size_t kDefaultOrder = 64;

/// Divisor constant terms below this magnitude count as non-units.
inline constexpr double kDivTolerance = 1e-13;

/// Complex power series truncated at a fixed order N:
///   c_0 + c_1 z + ... + c_N z^N.
///
/// Values are immutable once constructed and every coefficient is finite.
/// All binary operations require equal orders; truncation is explicit and
/// never a silent reindexing.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit TruncatedSeries(std::size_t order);

  /// Takes ownership of c_0..c_N; order becomes coeffs.size()-1.
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries one(std::size_t order);       // 1
  static TruncatedSeries identity(std::size_t order);  // z

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_normalized(double tol = kDivTolerance) const;  // c0 = 0, c1 = 1

 private:
  std::vector<Complex> coeffs_;
};

/// Evaluation point inside the disk together with the radius used for the
/// tail-error estimate; requires |z| <= radius_cap < 1.
struct EvalPoint {
  Complex z;
  double radius_cap;
  EvalPoint(Complex z, double radius_cap);
};

/// Horner value plus the geometric-decay tail proxy
/// |c_N| cap^{N+1} / (1 - cap).  The estimate is a diagnostic, not a
/// certified bound.
struct SeriesValue {
  Complex value;
  double tail_estimate;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

/// Cauchy product truncated to the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient q with mul(q, b) = a to the common order; b must be a unit
/// (|b.c_0| >= kDivTolerance).
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients n*c_n shifted down one index; the top slot is padded with
/// zero (it is not determined by order-N input).
TruncatedSeries differentiate(const TruncatedSeries& a);

/// z f'(z) / f(z) for normalized f (c_0 = 0, c_1 = 1); constant term 1.
/// The top coefficient is padded (undetermined at this order).
TruncatedSeries z_log_derivative(const TruncatedSeries& f);

/// Binomial series of (1 - z)^c on the principal branch.
TruncatedSeries pow_one_minus_z(double exponent, std::size_t order);

/// log f for f with constant term 1, via the ODE (log f)' = f'/f.
TruncatedSeries log_unit(const TruncatedSeries& f);

/// exp f for f with zero constant term; inverse of log_unit.
TruncatedSeries exp_series(const TruncatedSeries& f);

/// Compositional inverse g with f(g(w)) = w to the declared order;
/// f must be normalized.
TruncatedSeries revert(const TruncatedSeries& f);

/// outer(inner(z)) truncated to the common order; inner must vanish at 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Index-wise coefficient product (Hadamard convolution).
TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g);

SeriesValue eval(const TruncatedSeries& f, const EvalPoint& p);

}  // namespace starq
