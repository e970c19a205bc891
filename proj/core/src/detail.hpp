#pragma once

#include <cmath>
#include <functional>

#include "starq/errors.hpp"

namespace starq::detail {

// Plain bisection on a bracketing interval; f(lo) and f(hi) must have
// opposite signs. Returns the midpoint once the bracket width drops
// below xtol.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double flo, double fhi, double xtol) {
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw InvalidParams("bisect: endpoints do not bracket a sign change");
  }
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at representable limit
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace starq::detail
