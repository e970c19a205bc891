#include "starq/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

namespace starq {

namespace {

void require_finite(const std::vector<Complex>& c) {
  for (const Complex& v : c) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidParams("TruncatedSeries: non-finite coefficient");
    }
  }
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                        const char* op) {
  if (a.order() != b.order()) {
    throw OrderMismatch(std::string(op) + ": orders " +
                        std::to_string(a.order()) + " and " +
                        std::to_string(b.order()) + " differ");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order)
    : coeffs_(order + 1, Complex{0.0, 0.0}) {
  if (order < 1) throw InvalidParams("TruncatedSeries: order must be >= 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InvalidParams("TruncatedSeries: order must be >= 1");
  require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[1] = 1.0;
  return s;
}

bool TruncatedSeries::is_normalized(double tol) const {
  return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

EvalPoint::EvalPoint(Complex z_, double radius_cap_) : z(z_), radius_cap(radius_cap_) {
  if (!(radius_cap > 0.0 && radius_cap < 1.0)) {
    throw InvalidParams("EvalPoint: radius_cap must lie in (0,1)");
  }
  if (std::abs(z) > radius_cap) {
    throw PointOutsideCap("EvalPoint: |z| exceeds radius_cap");
  }
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "add");
  std::vector<Complex> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "sub");
  std::vector<Complex> c(a.coeffs());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
  std::vector<Complex> c(a.coeffs());
  for (Complex& v : c) v *= factor;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "mul");
  const std::size_t n = a.order();
  std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == Complex{0.0, 0.0}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b, "div");
  if (std::abs(b[0]) < kDivTolerance) {
    throw DivisionByNonUnit("div: |b.c_0| below unit tolerance");
  }
  const std::size_t n = a.order();
  std::vector<Complex> q(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex s = a[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b[j] * q[k - j];
    q[k] = s / b[0];
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) c[k] = double(k + 1) * a[k + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries z_log_derivative(const TruncatedSeries& f) {
  if (!f.is_normalized()) {
    throw NotNormalized("z_log_derivative: requires c_0 = 0, c_1 = 1");
  }
  const std::size_t n = f.order();
  // Divide z f' and f by z, then take the quotient; both shifted series are
  // exact through index n-1.
  std::vector<Complex> num(n + 1, Complex{0.0, 0.0});
  std::vector<Complex> den(n + 1, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    num[j] = double(j + 1) * f[j + 1];
    den[j] = f[j + 1];
  }
  TruncatedSeries q = div(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(den)));
  // the top coefficient would need f's order n+1 data; pad it like differentiate
  std::vector<Complex> c = q.coeffs();
  c[n] = Complex{0.0, 0.0};
  return TruncatedSeries(std::move(c));
}

TruncatedSeries pow_one_minus_z(double exponent, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    c[k] = c[k - 1] * ((double(k - 1) - exponent) / double(k));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries log_unit(const TruncatedSeries& f) {
  if (std::abs(f[0] - 1.0) > kDivTolerance) {
    throw NonUnitConstantTerm("log_unit: requires c_0 = 1");
  }
  const TruncatedSeries ratio = div(differentiate(f), f);
  const std::size_t n = f.order();
  std::vector<Complex> L(n + 1, Complex{0.0, 0.0});
  for (std::size_t k = 1; k <= n; ++k) L[k] = ratio[k - 1] / double(k);
  return TruncatedSeries(std::move(L));
}

TruncatedSeries exp_series(const TruncatedSeries& f) {
  if (std::abs(f[0]) > kDivTolerance) {
    throw NotNormalized("exp_series: requires c_0 = 0");
  }
  const std::size_t n = f.order();
  // E' = E f' termwise: E_n = (1/n) sum_{k=1..n} k f_k E_{n-k}.
  std::vector<Complex> e(n + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (std::size_t m = 1; m <= n; ++m) {
    Complex s{0.0, 0.0};
    for (std::size_t k = 1; k <= m; ++k) s += double(k) * f[k] * e[m - k];
    e[m] = s / double(m);
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  require_same_order(outer, inner, "compose");
  if (std::abs(inner[0]) > kDivTolerance) {
    throw NotNormalized("compose: inner series must vanish at 0");
  }
  const std::size_t n = outer.order();
  std::vector<Complex> top(n + 1, Complex{0.0, 0.0});
  top[0] = outer[n];
  TruncatedSeries r(std::move(top));
  for (std::size_t k = n; k-- > 0;) {
    TruncatedSeries t = mul(r, inner);
    std::vector<Complex> c(t.coeffs());
    c[0] += outer[k];
    r = TruncatedSeries(std::move(c));
  }
  return r;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (!f.is_normalized()) {
    throw NotNormalized("revert: requires c_0 = 0, c_1 = 1");
  }
  const std::size_t n = f.order();
  const TruncatedSeries id = TruncatedSeries::identity(n);
  const TruncatedSeries fp = differentiate(f);
  // Newton iteration on composition; the number of correct coefficients
  // doubles each step, so ceil(log2 n) + 2 steps saturate order n.
  int iters = 2;
  for (std::size_t m = 1; m < n; m <<= 1) ++iters;
  TruncatedSeries g = id;
  for (int iter = 0; iter < iters; ++iter) {
    const TruncatedSeries num = compose(f, g) - id;
    bool all_zero = true;
    for (const Complex& v : num.coeffs()) {
      if (v != Complex{0.0, 0.0}) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) break;
    g = g - div(num, compose(fp, g));
  }
  return g;
}

TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "hadamard");
  std::vector<Complex> c(f.order() + 1);
  for (std::size_t k = 0; k <= f.order(); ++k) c[k] = f[k] * g[k];
  return TruncatedSeries(std::move(c));
}

SeriesValue eval(const TruncatedSeries& f, const EvalPoint& p) {
  const std::size_t n = f.order();
  Complex acc = f[n];
  for (std::size_t k = n; k-- > 0;) acc = acc * p.z + f[k];
  const double r = p.radius_cap;
  const double tail = std::abs(f[n]) * std::pow(r, double(n + 1)) / (1.0 - r);
  return SeriesValue{acc, tail};
}

}  // namespace starq
