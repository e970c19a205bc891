#pragma once

#include <complex>
#include <random>
#include <vector>

#include "starq/series.hpp"

namespace testutil {

using starq::Complex;
using starq::TruncatedSeries;

// Fixed seed: every randomized suite must reproduce byte-identically.
inline constexpr unsigned kSeed = 0x5eed5u;

// Unit series with |c_0| = 1 and mildly decaying higher coefficients, so the
// division recursion stays well conditioned at the tested orders.
inline TruncatedSeries random_unit_series(std::mt19937& gen, std::size_t order,
                                          double decay = 0.8) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(order + 1);
  c[0] = std::polar(1.0, u(gen));
  double s = 1.0;
  for (std::size_t k = 1; k <= order; ++k) {
    s *= decay;
    c[k] = Complex{u(gen) * s, u(gen) * s};
  }
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries random_normalized_series(std::mt19937& gen, std::size_t order,
                                                double decay = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[1] = Complex{1.0, 0.0};
  double s = 1.0;
  for (std::size_t k = 2; k <= order; ++k) {
    s *= decay;
    c[k] = Complex{u(gen) * s, u(gen) * s};
  }
  return TruncatedSeries(std::move(c));
}

inline double max_coeff_dist(const TruncatedSeries& a, const TruncatedSeries& b) {
  double m = 0.0;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    m = std::max(m, std::abs(a[k] - b[k]));
  }
  return m;
}

// Test-side polynomial multiply truncated at the input length; kept separate
// from the library path on purpose.
inline std::vector<Complex> naive_mul(const std::vector<Complex>& a,
                                      const std::vector<Complex>& b) {
  std::vector<Complex> c(a.size(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Substitution oracle: outer(inner) by summing outer_k * inner^k.
inline std::vector<Complex> naive_compose(const std::vector<Complex>& outer,
                                          const std::vector<Complex>& inner) {
  std::vector<Complex> acc(outer.size(), Complex{0.0, 0.0});
  acc[0] = outer[0];
  std::vector<Complex> pw(outer.size(), Complex{0.0, 0.0});
  pw[0] = Complex{1.0, 0.0};
  for (std::size_t k = 1; k < outer.size(); ++k) {
    pw = naive_mul(pw, inner);
    for (std::size_t j = 0; j < outer.size(); ++j) acc[j] += outer[k] * pw[j];
  }
  return acc;
}

// Catalan numbers C_n = binom(2n, n)/(n+1); the Koebe inverse coefficients
// are (-1)^{n-1} C_n.
inline double catalan(std::size_t n) {
  double c = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    c = c * 2.0 * double(2 * k + 1) / double(k + 2);
  }
  return c;
}

// Generalized binomial coefficient binom(c, k) as a product.
inline double binom_real(double c, std::size_t k) {
  double v = 1.0;
  for (std::size_t j = 0; j < k; ++j) v *= (c - double(j)) / double(j + 1);
  return v;
}

}  // namespace testutil
