#pragma once

#include <optional>
#include <string>

#include "starq/membership.hpp"
#include "starq/special.hpp"

namespace starq {

enum class RadiusClass {
  SL,             // sqrt(1+z) class into the defining inequality
  LogClass,       // 1 - log(1+z) class
  Exp,            // e^z class (branch split)
  SG,             // sigmoid class (branch split)
  Sin,            // 1 + sin z class
  Cardioid,       // cardioid class, alpha < 3/4
  StarlikeOrder,  // starlike of order gamma, gamma in (q_min(alpha), 1)
  MBeta,          // Re zf'/f < beta, beta > 1; may hold on the whole disk
  Rad2,           // |zf'/f - 1| < beta, beta >= 1
  Example1,       // z + gamma z^2 admissibility radius
};

/// One radius equation instance.  gamma parametrizes StarlikeOrder, beta
/// parametrizes MBeta and Rad2; the remaining tags take alpha only.
struct RadiusProblem {
  RadiusClass tag;
  Alpha alpha;
  std::optional<double> gamma;
  std::optional<double> beta;

  RadiusProblem(RadiusClass tag, Alpha alpha);
  RadiusProblem(RadiusClass tag, Alpha alpha, double param);
};

/// Which side of r = sqrt(2)-1 the root lies on (Exp/SG branch split).
enum class RootBranch { BelowThreshold, AboveThreshold };

struct RadiusResult {
  double root;
  double residual;
  double bracket_lo;
  double bracket_hi;
  std::optional<RootBranch> branch;
  bool whole_disk = false;  // no constraint below 1 (root reported as 1)
  std::string note;
};

/// Signed residual of the problem's radius equation at r in (0,1).
double residual(const RadiusProblem& p, double r);

/// Smallest positive root by uniform scan then bisection with a Newton
/// polish; |residual| <= 1e-12 at the root unless whole_disk.
RadiusResult solve(const RadiusProblem& p);

/// Empirical verification of a solved radius against the membership module:
/// the problem's extremal handle must satisfy the target inequality on
/// radii below root*(1 - 1e-3).  For SL the boundary report pins the
/// equality at z = -root; StarlikeOrder/MBeta report the first violating
/// circle just outside the root.
struct VerifyOutcome {
  MembershipReport inside;
  std::optional<MembershipReport> boundary;
  bool boundary_equality = false;
};

VerifyOutcome verify(const RadiusProblem& p, const RadiusResult& res,
                     const SampleGrid& g);

}  // namespace starq
