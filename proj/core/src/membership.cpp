#include "starq/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

namespace starq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTol = 1e-12;        // |f(z)| below this is a zero of f
constexpr std::size_t kPhiOrder = kDefaultOrder;

std::vector<Complex> derivative_poly(const std::vector<Complex>& c) {
  std::vector<Complex> d(c.size() > 1 ? c.size() - 1 : 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = double(k) * c[k];
  return d;
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

// phi series for the structural-formula extremals; constant term 1.
TruncatedSeries phi_series(PhiFamily family, std::size_t order) {
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  switch (family) {
    case PhiFamily::SL: {  // sqrt(1+z)
      TruncatedSeries p = pow_one_minus_z(0.5, order);
      for (std::size_t k = 0; k <= order; ++k) {
        c[k] = (k % 2 == 0) ? p[k] : -p[k];
      }
      break;
    }
    case PhiFamily::Log:  // 1 - log(1+z)
      c[0] = 1.0;
      for (std::size_t k = 1; k <= order; ++k) {
        c[k] = ((k % 2 == 0) ? 1.0 : -1.0) / double(k);
      }
      break;
    case PhiFamily::Exp: {  // e^z
      double fact = 1.0;
      c[0] = 1.0;
      for (std::size_t k = 1; k <= order; ++k) {
        fact *= double(k);
        c[k] = 1.0 / fact;
      }
      break;
    }
    case PhiFamily::SG: {  // 2/(1+e^{-z})
      std::vector<Complex> den(order + 1, Complex{0.0, 0.0});
      double fact = 1.0;
      den[0] = 2.0;
      for (std::size_t k = 1; k <= order; ++k) {
        fact *= double(k);
        den[k] = ((k % 2 == 0) ? 1.0 : -1.0) / fact;
      }
      return div(scale(TruncatedSeries::one(order), 2.0),
                 TruncatedSeries(std::move(den)));
    }
    case PhiFamily::Sin: {  // 1 + sin z
      c[0] = 1.0;
      double fact = 1.0;
      for (std::size_t k = 1; k <= order; ++k) {
        fact *= double(k);
        if (k % 2 == 1) c[k] = ((k / 2) % 2 == 0 ? 1.0 : -1.0) / fact;
      }
      break;
    }
    case PhiFamily::Cardioid:  // 1 + 4z/3 + 2z^2/3
      c[0] = 1.0;
      c[1] = 4.0 / 3.0;
      if (order >= 2) c[2] = 2.0 / 3.0;
      break;
  }
  return TruncatedSeries(std::move(c));
}

const char* phi_name(PhiFamily family) {
  switch (family) {
    case PhiFamily::SL: return "phi:sl";
    case PhiFamily::Log: return "phi:log";
    case PhiFamily::Exp: return "phi:exp";
    case PhiFamily::SG: return "phi:sg";
    case PhiFamily::Sin: return "phi:sin";
    case PhiFamily::Cardioid: return "phi:cardioid";
  }
  return "phi";
}

}  // namespace

FunctionHandle::FunctionHandle(Kind kind, std::string name)
    : kind_(kind), name_(std::move(name)) {}

FunctionHandle FunctionHandle::identity() {
  return FunctionHandle(Kind::Identity, "identity");
}

FunctionHandle FunctionHandle::koebe() { return FunctionHandle(Kind::Koebe, "koebe"); }

FunctionHandle FunctionHandle::f_alpha(Alpha a) {
  std::ostringstream os;
  os << "falpha:" << a.value();
  FunctionHandle h(Kind::FAlpha, os.str());
  h.alpha_ = a.value();
  h.alpha_near_half_ = a.near_half();
  return h;
}

FunctionHandle FunctionHandle::gamma_poly(Complex gamma) {
  std::ostringstream os;
  os << "fgamma:" << gamma.real();
  if (gamma.imag() != 0.0) os << (gamma.imag() > 0 ? "+" : "") << gamma.imag() << "i";
  FunctionHandle h(Kind::GammaPoly, os.str());
  h.gamma_ = gamma;
  return h;
}

FunctionHandle FunctionHandle::sl_sharp() {
  return FunctionHandle(Kind::SLSharp, "slsharp");
}

FunctionHandle FunctionHandle::phi_extremal(PhiFamily family) {
  const TruncatedSeries phi = phi_series(family, kPhiOrder);
  // f = z exp(G) with G the integral of (phi(t)-1)/t, so G_k = phi_k / k.
  std::vector<Complex> g(kPhiOrder + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k <= kPhiOrder; ++k) g[k] = phi[k] / double(k);
  const TruncatedSeries e = exp_series(TruncatedSeries(std::move(g)));
  std::vector<Complex> f(kPhiOrder + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k <= kPhiOrder; ++k) f[k] = e[k - 1];
  FunctionHandle h(Kind::Series, phi_name(family));
  h.c0_ = std::move(f);
  h.c1_ = derivative_poly(h.c0_);
  h.c2_ = derivative_poly(h.c1_);
  return h;
}

FunctionHandle FunctionHandle::from_series(TruncatedSeries s) {
  if (!s.is_normalized()) {
    throw NotNormalized("from_series: requires c_0 = 0, c_1 = 1");
  }
  FunctionHandle h(Kind::Series, "series");
  h.c0_ = s.coeffs();
  h.c1_ = derivative_poly(h.c0_);
  h.c2_ = derivative_poly(h.c1_);
  return h;
}

Complex FunctionHandle::value(Complex z) const {
  switch (kind_) {
    case Kind::Identity: return z;
    case Kind::Koebe: {
      const Complex om = 1.0 - z;
      return z / (om * om);
    }
    case Kind::FAlpha: {
      if (alpha_near_half_) return -std::log(1.0 - z);
      const double d = 2.0 * alpha_ - 1.0;
      return (1.0 - std::pow(1.0 - z, d)) / d;
    }
    case Kind::GammaPoly: return z + gamma_ * z * z;
    case Kind::SLSharp: {
      if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
      const Complex s = std::sqrt(1.0 + z);
      return 4.0 * z * std::exp(2.0 * (s - 1.0)) / ((1.0 + s) * (1.0 + s));
    }
    case Kind::Series: return horner(c0_, z);
  }
  return {0.0, 0.0};
}

Complex FunctionHandle::deriv1(Complex z) const {
  switch (kind_) {
    case Kind::Identity: return {1.0, 0.0};
    case Kind::Koebe: {
      const Complex om = 1.0 - z;
      return (1.0 + z) / (om * om * om);
    }
    case Kind::FAlpha: {
      if (alpha_near_half_) return 1.0 / (1.0 - z);
      return std::pow(1.0 - z, 2.0 * alpha_ - 2.0);
    }
    case Kind::GammaPoly: return 1.0 + 2.0 * gamma_ * z;
    case Kind::SLSharp: {
      if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
      return value(z) * std::sqrt(1.0 + z) / z;
    }
    case Kind::Series: return horner(c1_, z);
  }
  return {0.0, 0.0};
}

Complex FunctionHandle::deriv2(Complex z) const {
  switch (kind_) {
    case Kind::Identity: return {0.0, 0.0};
    case Kind::Koebe: {
      const Complex om = 1.0 - z;
      return (4.0 + 2.0 * z) / (om * om * om * om);
    }
    case Kind::FAlpha: {
      if (alpha_near_half_) {
        const Complex om = 1.0 - z;
        return 1.0 / (om * om);
      }
      return (2.0 - 2.0 * alpha_) * std::pow(1.0 - z, 2.0 * alpha_ - 3.0);
    }
    case Kind::GammaPoly: return 2.0 * gamma_;
    case Kind::SLSharp: {
      if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
      const Complex s = std::sqrt(1.0 + z);
      return value(z) * (s * s - s + z / (2.0 * s)) / (z * z);
    }
    case Kind::Series: return horner(c2_, z);
  }
  return {0.0, 0.0};
}

SampleGrid::SampleGrid(std::vector<double> radii_, std::size_t angular_count_)
    : radii(std::move(radii_)), angular_count(angular_count_) {
  if (radii.empty()) throw InvalidParams("SampleGrid: radii list is empty");
  double prev = 0.0;
  for (double r : radii) {
    if (!(r > prev && r < 1.0)) {
      throw InvalidParams("SampleGrid: radii must be strictly increasing in (0,1)");
    }
    prev = r;
  }
  if (angular_count < 64) throw InvalidParams("SampleGrid: angular count must be >= 64");
}

SampleGrid SampleGrid::standard() {
  return SampleGrid({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99}, 1024);
}

double SampleGrid::theta(std::size_t k) const {
  return -kPi + 2.0 * kPi * double(k) / double(angular_count);
}

namespace {

struct MarginSample {
  double margin;
  double lhs;
  double rhs;
};

// Fixed traversal (radii ascending, theta index ascending) with a strict-min
// reduction: identical inputs always yield the identical witness.
template <typename Fn>
MembershipReport run_grid_check(const FunctionHandle& h, const SampleGrid& g, Fn&& fn) {
  double worst = std::numeric_limits<double>::infinity();
  Witness wit{Complex{0.0, 0.0}, 0.0, 0.0};
  for (double r : g.radii) {
    for (std::size_t k = 0; k < g.angular_count; ++k) {
      const Complex z = std::polar(r, g.theta(k));
      const Complex f = h.value(z);
      if (std::abs(f) < kZeroTol) {
        std::ostringstream os;
        os << h.name() << " vanishes at z = (" << z.real() << "," << z.imag() << ")";
        throw ZeroOfF(os.str());
      }
      const Complex d1 = h.deriv1(z);
      const Complex d2 = h.deriv2(z);
      const Complex w = z * d1 / f;
      const Complex cq = 1.0 + z * d2 / d1;
      const MarginSample m = fn(z, f, w, cq);
      if (m.margin < worst) {
        worst = m.margin;
        wit = Witness{z, m.lhs, m.rhs};
      }
    }
  }
  return MembershipReport{worst < 0.0 ? Verdict::Violated : Verdict::HoldsOnGrid,
                          worst, wit, g, 0};
}

}  // namespace

MembershipReport check_sq_inequality(const FunctionHandle& h, Alpha a,
                                     const SampleGrid& g) {
  const double alpha = a.value();
  return run_grid_check(h, g, [alpha](Complex, Complex, Complex w, Complex cq) {
    const double lhs = w.real();
    const double rhs = std::abs(cq - w - alpha);
    return MarginSample{lhs - rhs, lhs, rhs};
  });
}

BoundaryCurve boundary_polygon(Alpha a, std::size_t samples) {
  if (samples < 256) throw InvalidParams("boundary_polygon: need at least 256 samples");
  std::vector<Complex> v;
  v.reserve(samples + 1);
  const double lo = kEpsTheta, hi = 2.0 * kPi - kEpsTheta;
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = lo + (hi - lo) * double(j) / double(samples - 1);
    Complex w = q_alpha_eval(a, std::polar(1.0, theta));
    const double mag = std::abs(w);
    if (mag > kCapRadius) w *= kCapRadius / mag;
    v.push_back(w);
  }
  // Bridge the excluded window with a far cap vertex on the unbounded side.
  v.push_back(Complex{kCapRadius, 0.0});
  return BoundaryCurve{std::move(v), samples, q_min(a), a.value()};
}

int winding_number(Complex p, std::span<const Complex> polygon) {
  const std::size_t n = polygon.size();
  int wn = 0;
  auto is_left = [&p](Complex a, Complex b) {
    return (b.real() - a.real()) * (p.imag() - a.imag()) -
           (p.real() - a.real()) * (b.imag() - a.imag());
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = polygon[i];
    const Complex b = polygon[(i + 1) % n];
    if (a.imag() <= p.imag()) {
      if (b.imag() > p.imag() && is_left(a, b) > 0.0) ++wn;
    } else if (b.imag() <= p.imag() && is_left(a, b) < 0.0) {
      --wn;
    }
  }
  return wn;
}

double polygon_distance(Complex p, std::span<const Complex> polygon,
                        std::size_t* nearest_edge) {
  const std::size_t n = polygon.size();
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_edge = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = polygon[i];
    const Complex b = polygon[(i + 1) % n];
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    const double d = std::abs(p - (a + t * ab));
    if (d < best) {
      best = d;
      best_edge = i;
    }
  }
  if (nearest_edge) *nearest_edge = best_edge;
  return best;
}

MembershipReport check_subordination_qalpha(const FunctionHandle& h, Alpha a,
                                            const SampleGrid& g,
                                            const BoundaryCurve& curve) {
  if (std::abs(curve.alpha - a.value()) > 1e-12) {
    throw InvalidParams("check_subordination_qalpha: curve built for a different alpha");
  }
  double worst = std::numeric_limits<double>::infinity();
  Witness wit{Complex{0.0, 0.0}, 0.0, 0.0};
  std::size_t low_conf = 0;
  const std::span<const Complex> poly(curve.vertices);
  for (double r : g.radii) {
    for (std::size_t k = 0; k < g.angular_count; ++k) {
      const Complex z = std::polar(r, g.theta(k));
      const Complex f = h.value(z);
      if (std::abs(f) < kZeroTol) {
        std::ostringstream os;
        os << h.name() << " vanishes at z = (" << z.real() << "," << z.imag() << ")";
        throw ZeroOfF(os.str());
      }
      const Complex w = z * h.deriv1(z) / f;
      std::size_t edge = 0;
      const double dist = polygon_distance(w, poly, &edge);
      const bool inside = winding_number(w, poly) != 0;
      // Points within tolerance of the polyline count as outside.
      const double margin = (inside ? dist : -dist) - kInclusionTol;
      if (std::abs(w) > kNearCapFlag || edge + 1 >= curve.sample_count) ++low_conf;
      if (margin < worst) {
        worst = margin;
        wit = Witness{z, inside ? dist : -dist, kInclusionTol};
      }
    }
  }
  return MembershipReport{worst < 0.0 ? Verdict::Violated : Verdict::HoldsOnGrid,
                          worst, wit, g, low_conf};
}

MembershipReport check_convex_order(const FunctionHandle& h, Alpha a,
                                    const SampleGrid& g) {
  const double alpha = a.value();
  return run_grid_check(h, g, [alpha](Complex, Complex, Complex, Complex cq) {
    return MarginSample{cq.real() - alpha, cq.real(), alpha};
  });
}

MembershipReport check_gb(const FunctionHandle& h, double b, const SampleGrid& g) {
  if (!(b > 0.0 && b <= 1.0)) throw InvalidParams("check_gb: b must lie in (0,1]");
  return run_grid_check(h, g, [b](Complex, Complex, Complex w, Complex cq) {
    const double lhs = std::abs(cq / w - 1.0);
    return MarginSample{b - lhs, lhs, b};
  });
}

MembershipReport check_rho_convex(const FunctionHandle& h, double rho,
                                  const SampleGrid& g) {
  return run_grid_check(h, g, [rho](Complex, Complex, Complex w, Complex cq) {
    const double lhs = (rho * cq + (1.0 - rho) * w).real();
    return MarginSample{lhs, lhs, 0.0};
  });
}

MembershipReport check_re_f_over_z(const FunctionHandle& h, double gamma,
                                   const SampleGrid& g) {
  return run_grid_check(h, g, [gamma](Complex z, Complex f, Complex, Complex) {
    const double lhs = (f / z).real();
    return MarginSample{lhs - gamma, lhs, gamma};
  });
}

MembershipReport check_m_beta(const FunctionHandle& h, double beta,
                              const SampleGrid& g) {
  if (!(beta > 1.0)) throw InvalidParams("check_m_beta: beta must exceed 1");
  return run_grid_check(h, g, [beta](Complex, Complex, Complex w, Complex) {
    return MarginSample{beta - w.real(), w.real(), beta};
  });
}

MembershipReport check_starlike_order(const FunctionHandle& h, double gamma,
                                      const SampleGrid& g) {
  return run_grid_check(h, g, [gamma](Complex, Complex, Complex w, Complex) {
    return MarginSample{w.real() - gamma, w.real(), gamma};
  });
}

MembershipReport check_zf_ratio_disk(const FunctionHandle& h, double beta,
                                     const SampleGrid& g) {
  if (!(beta >= 1.0)) throw InvalidParams("check_zf_ratio_disk: beta must be >= 1");
  return run_grid_check(h, g, [beta](Complex, Complex, Complex w, Complex) {
    const double lhs = std::abs(w - 1.0);
    return MarginSample{beta - lhs, lhs, beta};
  });
}

namespace {

template <typename Fn>
ScanResult run_boundary_scan(std::size_t samples, Fn&& fn) {
  if (samples < 64) throw InvalidParams("scan: need at least 64 samples");
  const double rho = 1.0 - 1e-6;
  double best = std::numeric_limits<double>::infinity();
  double arg = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = -kPi + 2.0 * kPi * double(k) / double(samples);
    if (std::abs(theta) < kEpsTheta) continue;
    const double v = fn(std::polar(rho, theta));
    if (v < best) {
      best = v;
      arg = theta;
    }
  }
  return ScanResult{best, arg};
}

}  // namespace

ScanResult starlike_scan(Alpha a, std::size_t samples) {
  return run_boundary_scan(samples, [a](Complex z) {
    const QDerivatives d = q_alpha_derivatives(a, z);
    return (z * d.dq / (d.q - 1.0)).real();
  });
}

ScanResult convexity_scan(Alpha a, std::size_t samples) {
  return run_boundary_scan(samples, [a](Complex z) {
    const QDerivatives d = q_alpha_derivatives(a, z);
    return (1.0 + z * d.d2q / d.dq).real();
  });
}

}  // namespace starq
