#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starq/series.hpp"
#include "starq/special.hpp"

namespace starq {

/// Target curve families for the structural-formula extremals
/// (z f'/f = phi with phi one of the catalog curves).
enum class PhiFamily { SL, Log, Exp, SG, Sin, Cardioid };

/// A normalized analytic function on the disk (f(0) = 0, f'(0) = 1) with
/// value and two derivatives, either from the closed-form catalog or backed
/// by a truncated series.
class FunctionHandle {
 public:
  static FunctionHandle identity();
  static FunctionHandle koebe();
  static FunctionHandle f_alpha(Alpha a);
  static FunctionHandle gamma_poly(Complex gamma);  // z + gamma z^2
  static FunctionHandle sl_sharp();                 // 4z e^{2(sqrt(1+z)-1)}/(1+sqrt(1+z))^2
  static FunctionHandle phi_extremal(PhiFamily family);
  static FunctionHandle from_series(TruncatedSeries s);

  Complex value(Complex z) const;
  Complex deriv1(Complex z) const;
  Complex deriv2(Complex z) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { Identity, Koebe, FAlpha, GammaPoly, SLSharp, Series };

  FunctionHandle(Kind kind, std::string name);

  Kind kind_;
  std::string name_;
  double alpha_ = 0.0;
  bool alpha_near_half_ = false;
  Complex gamma_{0.0, 0.0};
  std::vector<Complex> c0_, c1_, c2_;  // series-backed value/derivative polynomials
};

/// Deterministic sampling grid: the listed radii, each sampled at
/// theta_k = -pi + 2 pi k / M.
struct SampleGrid {
  std::vector<double> radii;
  std::size_t angular_count;

  SampleGrid(std::vector<double> radii, std::size_t angular_count);
  static SampleGrid standard();  // radii {0.1,...,0.9,0.99}, M = 1024
  double theta(std::size_t k) const;
};

/// Closed polyline sampling of q_alpha(e^{i theta}).  vertices[0..sample_count)
/// are the curve samples in increasing theta in (0, 2 pi); the remainder is
/// the large-|w| cap bridging the excluded window around theta = 0.
struct BoundaryCurve {
  std::vector<Complex> vertices;
  std::size_t sample_count;
  double a_min;  // q_alpha(-1)
  double alpha;
};

enum class Verdict { HoldsOnGrid, Violated };

struct Witness {
  Complex z;
  double lhs;
  double rhs;
};

/// Grid verdict with the worst-margin witness.  HoldsOnGrid is a statement
/// about the sampled points only, never a proof.
struct MembershipReport {
  Verdict verdict;
  double worst_margin;
  Witness witness;
  SampleGrid grid;
  std::size_t low_confidence = 0;  // near-cap containment verdicts (subordination)
};

struct ScanResult {
  double minimum;
  double argmin_theta;
};

/// Cap radius closing the boundary polygon where the curve is unbounded.
inline constexpr double kCapRadius = 1e6;
/// |w| beyond which containment verdicts are flagged low-confidence.
inline constexpr double kNearCapFlag = 1e3;
/// Distance to the polyline below which a point counts as outside
/// (conservative containment).
inline constexpr double kInclusionTol = 1e-9;

/// Standard crossing-number winding count; nonzero means inside.
int winding_number(Complex p, std::span<const Complex> polygon);

/// Distance from p to the closed polygon boundary; optionally reports the
/// nearest edge index (edge i joins vertex i to vertex i+1 mod size).
double polygon_distance(Complex p, std::span<const Complex> polygon,
                        std::size_t* nearest_edge = nullptr);

/// Defining inequality margin Re(zf'/f) - |1 + zf''/f' - zf'/f - alpha|.
MembershipReport check_sq_inequality(const FunctionHandle& h, Alpha a,
                                     const SampleGrid& g);

/// Closed boundary polygon of q_alpha (samples >= 256).
BoundaryCurve boundary_polygon(Alpha a, std::size_t samples);

/// Subordination z f'/f < q_alpha tested by winding-number containment of
/// the image samples in the boundary polygon.
MembershipReport check_subordination_qalpha(const FunctionHandle& h, Alpha a,
                                            const SampleGrid& g,
                                            const BoundaryCurve& curve);

/// Convexity of order alpha: margin Re(1 + zf''/f') - alpha.
MembershipReport check_convex_order(const FunctionHandle& h, Alpha a,
                                    const SampleGrid& g);

/// Silverman-type class: margin b - |(1 + zf''/f')/(zf'/f) - 1|.
MembershipReport check_gb(const FunctionHandle& h, double b, const SampleGrid& g);

/// Mocanu linear combination: margin Re(rho(1+zf''/f') + (1-rho) zf'/f).
MembershipReport check_rho_convex(const FunctionHandle& h, double rho,
                                  const SampleGrid& g);

/// margin Re(f(z)/z) - gamma.
MembershipReport check_re_f_over_z(const FunctionHandle& h, double gamma,
                                   const SampleGrid& g);

/// Bounded-turning upper class: margin beta - Re(zf'/f), beta > 1.
MembershipReport check_m_beta(const FunctionHandle& h, double beta,
                              const SampleGrid& g);

/// Starlikeness of order gamma: margin Re(zf'/f) - gamma.
MembershipReport check_starlike_order(const FunctionHandle& h, double gamma,
                                      const SampleGrid& g);

/// Disk condition |zf'/f - 1| < beta: margin beta - |zf'/f - 1|.
MembershipReport check_zf_ratio_disk(const FunctionHandle& h, double beta,
                                     const SampleGrid& g);

/// Minimum over theta of Re(z q'/(q-1)) at |z| = 1 - 1e-6 (image
/// starlikeness about 1); theta excludes the kEpsTheta window.
ScanResult starlike_scan(Alpha a, std::size_t samples);

/// Minimum over theta of Re(1 + z q''/q') at |z| = 1 - 1e-6 (image
/// convexity probe for the open problem).
ScanResult convexity_scan(Alpha a, std::size_t samples);

}  // namespace starq
