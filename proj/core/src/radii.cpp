#include "starq/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "detail.hpp"

namespace starq {

namespace {

constexpr double kScanLo = 1e-6;
constexpr double kScanHi = 1.0 - 1e-6;
constexpr double kScanStep = 1e-3;
constexpr double kBisectTol = 1e-13;

double exp_threshold() {
  static const double t = branch_threshold(BranchClass::Exp);
  return t;
}

double sg_threshold() {
  static const double t = branch_threshold(BranchClass::SG);
  return t;
}

bool needs_param(RadiusClass tag) {
  return tag == RadiusClass::StarlikeOrder || tag == RadiusClass::MBeta ||
         tag == RadiusClass::Rad2;
}

void validate(const RadiusProblem& p) {
  switch (p.tag) {
    case RadiusClass::Cardioid:
      if (p.alpha.value() >= 0.75) {
        throw InvalidParams("Cardioid radius problem requires alpha < 3/4");
      }
      break;
    case RadiusClass::StarlikeOrder: {
      if (!p.gamma) throw InvalidParams("StarlikeOrder requires gamma");
      const double lo = q_min(p.alpha);
      if (!(*p.gamma > lo && *p.gamma < 1.0)) {
        throw InvalidParams(
            "StarlikeOrder: gamma must lie in (q_min(alpha), 1); below q_min "
            "the inclusion already covers the whole disk");
      }
      break;
    }
    case RadiusClass::MBeta:
      if (!p.beta || !(*p.beta > 1.0)) {
        throw InvalidParams("MBeta requires beta > 1");
      }
      break;
    case RadiusClass::Rad2:
      if (!p.beta || !(*p.beta >= 1.0)) {
        throw InvalidParams("Rad2 requires beta >= 1");
      }
      break;
    default:
      break;
  }
}

}  // namespace

RadiusProblem::RadiusProblem(RadiusClass tag_, Alpha alpha_)
    : tag(tag_), alpha(alpha_) {
  if (needs_param(tag)) {
    throw InvalidParams("this radius problem requires a gamma/beta parameter");
  }
  validate(*this);
}

RadiusProblem::RadiusProblem(RadiusClass tag_, Alpha alpha_, double param)
    : tag(tag_), alpha(alpha_) {
  if (!needs_param(tag)) {
    throw InvalidParams("this radius problem takes no gamma/beta parameter");
  }
  if (tag == RadiusClass::StarlikeOrder) {
    gamma = param;
  } else {
    beta = param;
  }
  validate(*this);
}

double residual(const RadiusProblem& p, double r) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidParams("residual: r must lie in (0,1)");
  const double a = p.alpha.value();
  switch (p.tag) {
    case RadiusClass::SL:
      return 2.0 * (1.0 - r) * (std::sqrt(1.0 - r) - a) - r;
    case RadiusClass::LogClass: {
      const double l = 1.0 - std::log1p(r);
      return l * (1.0 - r) * (l - a) - r;
    }
    case RadiusClass::Exp: {
      if (a >= exp_threshold()) return std::exp(-r) - a - r;
      const double s = 1.0 + r * r;
      return 4.0 * (1.0 - r * r) * (std::exp(-r) - a) - s * s;
    }
    case RadiusClass::SG: {
      const double ep = std::exp(r), em = std::exp(-r);
      if (a >= sg_threshold()) {
        return (1.0 + em) * (2.0 - a * (1.0 + ep)) - r * (1.0 + ep);
      }
      const double s = 1.0 + r * r;
      return 4.0 * (1.0 - r * r) * (1.0 + em) * (2.0 - a * (1.0 + ep)) -
             s * s * (1.0 + ep);
    }
    case RadiusClass::Sin:
      return (1.0 - std::sin(r)) * (1.0 - std::sin(r) * std::cosh(r) - a) -
             r * std::cosh(r);
    case RadiusClass::Cardioid:
      return (3.0 - 2.0 * r * r) * (1.0 - r * r - 2.0 * a) -
             6.0 * std::sqrt(3.0) * r * (1.0 + r);
    case RadiusClass::StarlikeOrder: {
      const double g = *p.gamma;
      if (p.alpha.near_half()) return r - g * (1.0 + r) * std::log1p(r);
      return (2.0 * a - 1.0) * r -
             g * (1.0 + r) * (1.0 - std::pow(1.0 + r, 1.0 - 2.0 * a));
    }
    case RadiusClass::MBeta: {
      const double b = *p.beta;
      if (p.alpha.near_half()) return r + b * (1.0 - r) * std::log(1.0 - r);
      return (1.0 - 2.0 * a) * r -
             b * (1.0 - r) * (1.0 - std::pow(1.0 - r, 1.0 - 2.0 * a));
    }
    case RadiusClass::Rad2: {
      const double b = *p.beta;
      const double g = gamma_alpha(p.alpha);
      return 2.0 * (1.0 - g) * r - b * (1.0 - r) * (1.0 - std::abs(1.0 - 2.0 * g) * r);
    }
    case RadiusClass::Example1: {
      // Radical margin form; the denominator (1-2r)^2(1-r)^2 vanishes at
      // r = 1/2 where the margin diverges to -inf.
      const double num = a * a + r * r - 6.0 * a * r * r + 13.0 * a * a * r * r +
                         4.0 * a * a * std::pow(r, 4) +
                         2.0 * a * (1.0 - 3.0 * a) * r * (1.0 + 2.0 * r * r);
      const double den =
          1.0 + 13.0 * r * r + 4.0 * std::pow(r, 4) - 6.0 * (r + 2.0 * r * r * r);
      if (den <= 0.0) return -std::numeric_limits<double>::infinity();
      return (2.0 * r - 1.0) / (r - 1.0) - std::sqrt(std::max(num, 0.0) / den);
    }
  }
  throw InvalidParams("residual: unknown radius class");
}

RadiusResult solve(const RadiusProblem& p) {
  const auto f = [&p](double r) { return residual(p, r); };

  // Uniform scan for the first sign change (smallest-root semantics).
  double lo = kScanLo;
  double flo = f(lo);
  double hi = 0.0, fhi = 0.0;
  bool bracketed = false;
  double min_abs = std::abs(flo), min_abs_at = lo;
  for (double r = kScanLo + kScanStep; r < kScanHi + kScanStep; r += kScanStep) {
    const double rr = std::min(r, kScanHi);
    const double fr = f(rr);
    if (std::abs(fr) < min_abs) {
      min_abs = std::abs(fr);
      min_abs_at = rr;
    }
    if (std::isfinite(fr) && std::isfinite(flo) && (fr < 0.0) != (flo < 0.0)) {
      hi = rr;
      fhi = fr;
      bracketed = true;
      break;
    }
    lo = rr;
    flo = fr;
    if (rr >= kScanHi) break;
  }

  if (!bracketed) {
    if (p.tag == RadiusClass::MBeta) {
      // No constraint below 1: the inequality holds on the whole disk.
      return RadiusResult{1.0, f(kScanHi), 0.0, 1.0, std::nullopt, true, ""};
    }
    std::ostringstream os;
    os << "no sign change on (0,1): residual(" << kScanLo << ") = " << f(kScanLo)
       << ", residual(" << kScanHi << ") = " << f(kScanHi)
       << ", min |residual| = " << min_abs << " at r = " << min_abs_at;
    throw NoRootError(os.str());
  }

  const double bracket_lo = lo, bracket_hi = hi;
  double root = detail::bisect(f, lo, hi, flo, fhi, kBisectTol);

  // Newton polish with a numeric derivative.
  for (int it = 0; it < 3; ++it) {
    const double fr = f(root);
    if (std::abs(fr) < 1e-15) break;
    const double h = 1e-7 * std::max(1.0, std::abs(root));
    const double d = (f(std::min(root + h, kScanHi)) - f(std::max(root - h, kScanLo))) /
                     (std::min(root + h, kScanHi) - std::max(root - h, kScanLo));
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = root - fr / d;
    if (!(next > bracket_lo && next < bracket_hi)) break;
    if (std::abs(f(next)) >= std::abs(fr)) break;
    root = next;
  }

  std::optional<RootBranch> branch;
  if (p.tag == RadiusClass::Exp) {
    branch = p.alpha.value() >= exp_threshold() ? RootBranch::BelowThreshold
                                                : RootBranch::AboveThreshold;
  } else if (p.tag == RadiusClass::SG) {
    branch = p.alpha.value() >= sg_threshold() ? RootBranch::BelowThreshold
                                               : RootBranch::AboveThreshold;
  }
  std::string note;
  if (p.tag == RadiusClass::Example1) {
    note = "residual uses the radical margin form of the admissibility bound";
  }
  return RadiusResult{root, f(root), bracket_lo, bracket_hi, branch, false,
                      std::move(note)};
}

namespace {

SampleGrid restrict_radii(const SampleGrid& g, double threshold) {
  std::vector<double> radii;
  for (double r : g.radii) {
    if (r < threshold) radii.push_back(r);
  }
  if (radii.empty() || radii.back() < threshold) radii.push_back(threshold);
  return SampleGrid(std::move(radii), g.angular_count);
}

FunctionHandle extremal_handle(const RadiusProblem& p, double root) {
  switch (p.tag) {
    case RadiusClass::SL: return FunctionHandle::sl_sharp();
    case RadiusClass::LogClass: return FunctionHandle::phi_extremal(PhiFamily::Log);
    case RadiusClass::Exp: return FunctionHandle::phi_extremal(PhiFamily::Exp);
    case RadiusClass::SG: return FunctionHandle::phi_extremal(PhiFamily::SG);
    case RadiusClass::Sin: return FunctionHandle::phi_extremal(PhiFamily::Sin);
    case RadiusClass::Cardioid:
      return FunctionHandle::phi_extremal(PhiFamily::Cardioid);
    case RadiusClass::StarlikeOrder:
    case RadiusClass::MBeta:
    case RadiusClass::Rad2: return FunctionHandle::f_alpha(p.alpha);
    case RadiusClass::Example1:
      return FunctionHandle::gamma_poly(Complex{root * (1.0 - 1e-3), 0.0});
  }
  throw InvalidParams("extremal_handle: unknown radius class");
}

MembershipReport inside_check(const RadiusProblem& p, const FunctionHandle& h,
                              const SampleGrid& g) {
  switch (p.tag) {
    case RadiusClass::StarlikeOrder: return check_starlike_order(h, *p.gamma, g);
    case RadiusClass::MBeta: return check_m_beta(h, *p.beta, g);
    case RadiusClass::Rad2: return check_zf_ratio_disk(h, *p.beta, g);
    default: return check_sq_inequality(h, p.alpha, g);
  }
}

}  // namespace

VerifyOutcome verify(const RadiusProblem& p, const RadiusResult& res,
                     const SampleGrid& g) {
  const FunctionHandle h = extremal_handle(p, res.root);
  const double inner = res.whole_disk ? 0.999 : res.root * (1.0 - 1e-3);

  // Example1's radius lives in the coefficient, not in |z|: the handle is
  // built just inside the root and checked on the full grid.
  const SampleGrid inner_grid =
      p.tag == RadiusClass::Example1 ? g : restrict_radii(g, inner);
  MembershipReport inside = inside_check(p, h, inner_grid);

  std::optional<MembershipReport> boundary;
  bool boundary_equality = false;
  if (p.tag == RadiusClass::SL && !res.whole_disk) {
    SampleGrid edge({res.root}, g.angular_count);
    MembershipReport rep = check_sq_inequality(h, p.alpha, edge);
    boundary_equality = std::abs(rep.worst_margin) < 1e-6;
    boundary = std::move(rep);
  } else if ((p.tag == RadiusClass::StarlikeOrder || p.tag == RadiusClass::MBeta) &&
             !res.whole_disk) {
    const double outer = std::min(res.root * 1.02, 0.9995);
    if (outer > res.root) {
      SampleGrid edge({outer}, g.angular_count);
      boundary = inside_check(p, h, edge);
    }
  }
  return VerifyOutcome{std::move(inside), std::move(boundary), boundary_equality};
}

}  // namespace starq
