#include "starq/special.hpp"

#include <cmath>
#include <numbers>

#include "detail.hpp"

namespace starq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSeriesRegion = 1e-4;  // |z| below which q_alpha uses its series
constexpr std::size_t kSeriesOrder = 8;

Complex pow_principal(Complex base, double e) { return std::pow(base, e); }

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value < 1.0)) {
    throw InvalidParams("alpha must lie in [0,1)");
  }
  near_half_ = std::abs(value - 0.5) < kDeltaHalf;
}

Complex q_alpha_eval(Alpha a, Complex z) {
  if (std::abs(z) < kSeriesRegion) {
    const TruncatedSeries s = q_alpha_series(a, kSeriesOrder);
    Complex acc = s[kSeriesOrder];
    for (std::size_t k = kSeriesOrder; k-- > 0;) acc = acc * z + s[k];
    return acc;
  }
  const Complex om = 1.0 - z;
  if (a.near_half()) {
    return -z / (om * std::log(om));
  }
  const double c = 1.0 - 2.0 * a.value();
  return c * z / (om * (1.0 - pow_principal(om, c)));
}

QDerivatives q_alpha_derivatives(Alpha a, Complex z) {
  if (std::abs(z) < kSeriesRegion) {
    const TruncatedSeries s = q_alpha_series(a, kSeriesOrder + 2);
    const TruncatedSeries s1 = differentiate(s);
    const TruncatedSeries s2 = differentiate(s1);
    auto horner = [&z](const TruncatedSeries& t, std::size_t top) {
      Complex acc = t[top];
      for (std::size_t k = top; k-- > 0;) acc = acc * z + t[k];
      return acc;
    };
    return QDerivatives{horner(s, kSeriesOrder + 2), horner(s1, kSeriesOrder + 1),
                        horner(s2, kSeriesOrder)};
  }
  const Complex om = 1.0 - z;
  Complex q, g, gp;  // g = q'/q
  if (a.near_half()) {
    const Complex L = std::log(om);
    q = -z / (om * L);
    g = 1.0 / z + 1.0 / om + 1.0 / (om * L);
    gp = -1.0 / (z * z) + 1.0 / (om * om) + (L + 1.0) / ((om * L) * (om * L));
  } else {
    const double c = 1.0 - 2.0 * a.value();
    const Complex u = pow_principal(om, c);
    const Complex omu = 1.0 - u;
    q = c * z / (om * omu);
    g = 1.0 / z + 1.0 / om - c * pow_principal(om, c - 1.0) / omu;
    gp = -1.0 / (z * z) + 1.0 / (om * om) +
         c * ((c - 1.0) * pow_principal(om, c - 2.0) * omu +
              c * pow_principal(om, 2.0 * c - 2.0)) /
             (omu * omu);
  }
  return QDerivatives{q, q * g, q * (g * g + gp)};
}

TruncatedSeries q_alpha_series(Alpha a, std::size_t order) {
  const std::size_t n1 = order + 1;
  TruncatedSeries den(n1);
  Complex num0;
  if (a.near_half()) {
    // -z / ((1-z) log(1-z))
    std::vector<Complex> L(n1 + 1, Complex{0.0, 0.0});
    for (std::size_t k = 1; k <= n1; ++k) L[k] = -1.0 / double(k);
    den = mul(pow_one_minus_z(1.0, n1), TruncatedSeries(std::move(L)));
    num0 = -1.0;
  } else {
    const double c = 1.0 - 2.0 * a.value();
    den = mul(pow_one_minus_z(1.0, n1),
              TruncatedSeries::one(n1) - pow_one_minus_z(c, n1));
    num0 = c;
  }
  // Both numerator and denominator vanish at 0; divide through by z.
  std::vector<Complex> num_sh(order + 1, Complex{0.0, 0.0});
  num_sh[0] = num0;
  std::vector<Complex> den_sh(order + 1);
  for (std::size_t j = 0; j <= order; ++j) den_sh[j] = den[j + 1];
  return div(TruncatedSeries(std::move(num_sh)), TruncatedSeries(std::move(den_sh)));
}

Complex f_alpha_eval(Alpha a, Complex z) {
  const Complex om = 1.0 - z;
  if (a.near_half()) return -std::log(om);
  const double d = 2.0 * a.value() - 1.0;
  return (1.0 - pow_principal(om, d)) / d;
}

TruncatedSeries f_alpha_series(Alpha a, std::size_t order) {
  if (a.near_half()) {
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    for (std::size_t k = 1; k <= order; ++k) c[k] = 1.0 / double(k);
    return TruncatedSeries(std::move(c));
  }
  const double d = 2.0 * a.value() - 1.0;
  return scale(TruncatedSeries::one(order) - pow_one_minus_z(d, order), 1.0 / d);
}

double f_alpha_coeff(Alpha a, std::size_t n) {
  if (n < 2) throw InvalidParams("f_alpha_coeff: index must be >= 2");
  double p = 1.0;
  for (std::size_t j = 2; j <= n; ++j) {
    p *= (double(j) - 2.0 * a.value()) / double(j);
  }
  return p;
}

double q_min(Alpha a) {
  if (a.near_half()) return 1.0 / std::log(4.0);
  const double v = a.value();
  return (2.0 * v - 1.0) / (2.0 - std::pow(2.0, 2.0 * (1.0 - v)));
}

double gamma_alpha(Alpha a) {
  if (a.near_half()) {
    const double l4 = std::log(4.0);
    return 2.0 * (1.0 - l4) / (2.0 - 3.0 * l4);
  }
  const double v = a.value();
  return (3.0 - 2.0 * v - std::pow(2.0, 2.0 * (1.0 - v))) /
         (4.0 - 2.0 * v - 3.0 * std::pow(2.0, 1.0 - 2.0 * v));
}

ClassConstants class_constants(Alpha a) {
  const double qm = q_min(a);
  return ClassConstants{qm, gamma_alpha(a), qm, qm, 1.0};
}

double branch_threshold(BranchClass c) {
  const double rs = std::sqrt(2.0) - 1.0;
  std::function<double(double)> f;
  if (c == BranchClass::Exp) {
    f = [rs](double a) { return std::exp(-rs) - a - rs; };
  } else {
    f = [rs](double a) {
      return (1.0 + std::exp(-rs)) * (2.0 - a * (1.0 + std::exp(rs))) -
             rs * (1.0 + std::exp(rs));
    };
  }
  return detail::bisect(f, 0.0, 1.0, f(0.0), f(1.0), 1e-14);
}

namespace {

void require_theta(double theta) {
  if (std::abs(theta) < kEpsTheta) {
    throw ThetaTooClose("theta within the excluded window around 0");
  }
  if (std::abs(theta) > kPi + 1e-9) {
    throw InvalidParams("theta must lie in [-pi, pi]");
  }
}

// K(theta) = (e^{-i theta} - 1)(1 - (1 - e^{i theta})^{1-2a}), the recurring
// factor of the convolution multiplier.
Complex conv_factor(double alpha, double theta) {
  const Complex eit = std::polar(1.0, theta);
  const Complex emt = std::polar(1.0, -theta);
  return (emt - 1.0) * (1.0 - std::pow(1.0 - eit, 1.0 - 2.0 * alpha));
}

Complex log_factor(double theta) {
  const Complex eit = std::polar(1.0, theta);
  const Complex emt = std::polar(1.0, -theta);
  return (1.0 - emt) * std::log(1.0 - eit);
}

}  // namespace

Complex lambda_theta(Alpha a, double theta) {
  require_theta(theta);
  if (a.near_half()) return 1.0 / (1.0 - log_factor(theta));
  const double c = 1.0 - 2.0 * a.value();
  return c / (c - conv_factor(a.value(), theta));
}

Complex rho_theta(Alpha a, double theta, std::size_t n) {
  require_theta(theta);
  if (n < 2) throw InvalidParams("rho_theta: index must be >= 2");
  const double dn = double(n);
  if (a.near_half()) {
    const Complex L = log_factor(theta);
    return (L * dn - 1.0) / (1.0 - L);
  }
  const double c = 1.0 - 2.0 * a.value();
  const Complex K = conv_factor(a.value(), theta);
  return (K * dn - c) / (c - K);
}

Envelope envelope(Alpha a, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidParams("envelope: r must lie in (0,1)");
  const double v = a.value();
  double glo, ghi;
  if (a.near_half()) {
    glo = std::log(1.0 + r);
    ghi = -std::log(1.0 - r);
  } else {
    const double d = 2.0 * v - 1.0;
    glo = (std::pow(1.0 + r, d) - 1.0) / d;
    ghi = (1.0 - std::pow(1.0 - r, d)) / d;
  }
  const double dlo = std::pow(1.0 + r, 2.0 * (v - 1.0));
  const double dhi = std::pow(1.0 - r, 2.0 * (v - 1.0));

  auto rot = [&](double theta) {
    const Complex z = std::polar(r, theta);
    return std::abs(std::arg(f_alpha_eval(a, z) / z));
  };
  const std::size_t m = 4096;
  double best = 0.0, best_theta = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double theta = -kPi + 2.0 * kPi * double(k) / double(m);
    const double val = rot(theta);
    if (val > best) {
      best = val;
      best_theta = theta;
    }
  }
  // golden-section refinement around the best sample
  const double step = 2.0 * kPi / double(m);
  double lo = best_theta - step, hi = best_theta + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = rot(x1), f2 = rot(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {  // maximize
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = rot(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = rot(x1);
    }
  }
  best = std::max(best, std::max(f1, f2));
  return Envelope{glo, ghi, dlo, dhi, best};
}

}  // namespace starq
