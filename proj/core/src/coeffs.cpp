#include "starq/coeffs.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "starq/membership.hpp"

namespace starq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kFixtureOrder = 8;
constexpr std::size_t kConvexityScanSamples = 1024;
constexpr double kConvexityTol = -1e-6;

double fekete_value(double a2, double a3, double t) {
  return std::abs(a3 - t * a2 * a2);
}

// |a3 - t a2^2| evaluated on the f_alpha series.
double attained_falpha(Alpha a, double t) {
  const TruncatedSeries f = f_alpha_series(a, kFixtureOrder);
  return fekete_value(f[2].real(), f[3].real(), t);
}

// |a3 - t a2^2| evaluated on the sqrt-transform fixture.
double attained_sqrt_fixture(Alpha a, double t) {
  const TruncatedSeries f = sqrt_transform(f_alpha_series(a, kFixtureOrder));
  return fekete_value(f[2].real(), f[3].real(), t);
}

}  // namespace

CoefficientReport fekete_szego_bound(const FeketeParams& p) {
  const double a = p.alpha.value();
  const double t = p.t;
  const double t1 = (3.0 - 4.0 * a) / (6.0 * (1.0 - a));
  const double t2 = (9.0 - 4.0 * a) / (6.0 * (1.0 - a));
  const double outer = (3.0 - 2.0 * a) * (1.0 - a) / 3.0;
  if (t <= t1) {
    const double sq = (1.0 - a) * (1.0 - a);
    return CoefficientReport{outer - t * sq, attained_falpha(p.alpha, t), 1};
  }
  if (t >= t2) {
    const double sq = (1.0 - a) * (1.0 - a);
    return CoefficientReport{t * sq - outer, attained_falpha(p.alpha, t), 3};
  }
  return CoefficientReport{(1.0 - a) / 2.0, attained_sqrt_fixture(p.alpha, t), 2};
}

double a2_bound(Alpha a) { return 1.0 - a.value(); }

CoefficientReport a3_bound(Alpha a) {
  const double v = a.value();
  if (v <= 0.75) {
    const double bound = (2.0 * v - 3.0) * (v - 1.0) / 3.0;
    return CoefficientReport{bound, std::abs(f_alpha_coeff(a, 3)), 1};
  }
  const TruncatedSeries f = sqrt_transform(f_alpha_series(a, kFixtureOrder));
  return CoefficientReport{(1.0 - v) / 2.0, std::abs(f[3]), 2};
}

InverseCoeffBounds inverse_coeff_bounds(Alpha a) {
  const double v = a.value();
  const double b2 = 1.0 - v;
  if (v <= 0.375) {
    const double b3 = 2.0 * (1.0 - v) * (1.0 - v) - (3.0 - 2.0 * v) * (1.0 - v) / 3.0;
    return InverseCoeffBounds{b2, b3, 1};
  }
  return InverseCoeffBounds{b2, (1.0 - v) / 2.0, 2};
}

LogCoeffBound log_coeff_bound(Alpha a, std::size_t n) {
  if (n < 1) throw InvalidParams("log_coeff_bound: index must be >= 1");
  const ScanResult scan = convexity_scan(a, kConvexityScanSamples);
  return LogCoeffBound{(1.0 - a.value()) / (2.0 * double(n)),
                       scan.minimum < kConvexityTol};
}

std::vector<Complex> log_coeffs(const TruncatedSeries& f, std::size_t upto) {
  if (!f.is_normalized()) throw NotNormalized("log_coeffs: requires c_0 = 0, c_1 = 1");
  if (upto + 1 > f.order()) {
    throw InvalidParams("log_coeffs: upto must be at most order - 1");
  }
  const std::size_t n = f.order();
  std::vector<Complex> g(n + 1, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) g[j] = f[j + 1];  // f / z
  const TruncatedSeries L = log_unit(TruncatedSeries(std::move(g)));
  std::vector<Complex> beta(upto);
  for (std::size_t k = 1; k <= upto; ++k) beta[k - 1] = 0.5 * L[k];
  return beta;
}

ZfCoeffReport zf_coeff_condition(const TruncatedSeries& f, Alpha a,
                                 std::size_t n_check) {
  if (!f.is_normalized()) {
    throw NotNormalized("zf_coeff_condition: requires c_0 = 0, c_1 = 1");
  }
  if (n_check < 2 || n_check > f.order()) {
    throw InvalidParams("zf_coeff_condition: n_check must lie in [2, order]");
  }
  const TruncatedSeries c = div(TruncatedSeries::identity(f.order()), differentiate(f));
  const double alpha = a.value();
  double sum = 0.0;
  bool hypothesis = true;
  double last = 0.0;
  for (std::size_t n = 2; n <= n_check; ++n) {
    const Complex cn = c[n];
    if (cn.real() < -1e-12 || std::abs(cn.imag()) > 1e-12) hypothesis = false;
    const double w = double(n) + alpha - 2.0;
    sum += w * cn.real();
    last = std::abs(w * cn);
  }
  const double rhs = 1.0 - alpha;
  return ZfCoeffReport{sum < rhs, sum, rhs, hypothesis, last};
}

RhoSufficiencyReport rho_sufficiency(const TruncatedSeries& f, Alpha a,
                                     std::size_t theta_grid, std::size_t n_check) {
  if (!f.is_normalized()) {
    throw NotNormalized("rho_sufficiency: requires c_0 = 0, c_1 = 1");
  }
  if (n_check < 2 || n_check > f.order()) {
    throw InvalidParams("rho_sufficiency: n_check must lie in [2, order]");
  }
  if (theta_grid < 64) throw InvalidParams("rho_sufficiency: theta grid too coarse");
  double sup = -std::numeric_limits<double>::infinity();
  double arg = 0.0;
  for (std::size_t k = 0; k < theta_grid; ++k) {
    const double theta = -kPi + 2.0 * kPi * double(k) / double(theta_grid);
    if (std::abs(theta) < kEpsTheta) continue;
    double sum = 0.0;
    for (std::size_t n = 2; n <= n_check; ++n) {
      const double an = std::abs(f[n]);
      if (an == 0.0) continue;
      sum += std::abs(rho_theta(a, theta, n)) * an;
    }
    if (sum > sup) {
      sup = sum;
      arg = theta;
    }
  }
  const double last = std::abs(rho_theta(a, arg, n_check)) * std::abs(f[n_check]);
  return RhoSufficiencyReport{sup < 1.0, sup, arg, last};
}

TruncatedSeries sqrt_transform(const TruncatedSeries& f) {
  if (!f.is_normalized()) throw NotNormalized("sqrt_transform: requires c_0 = 0, c_1 = 1");
  const std::size_t n = f.order();
  // h = f(z^2)/z^2 has unit constant term; result is z sqrt(h).
  std::vector<Complex> h(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; 2 * (k - 1) <= n; ++k) h[2 * (k - 1)] = f[k];
  const TruncatedSeries s =
      exp_series(scale(log_unit(TruncatedSeries(std::move(h))), 0.5));
  std::vector<Complex> out(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k <= n; ++k) out[k] = s[k - 1];
  return TruncatedSeries(std::move(out));
}

}  // namespace starq
