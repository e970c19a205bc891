#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "starq/coeffs.hpp"
#include "starq/membership.hpp"
#include "test_util.hpp"

using namespace starq;
using namespace testutil;

namespace {

constexpr double kPi = std::numbers::pi;

double fekete_t1(double a) { return (3 - 4 * a) / (6 * (1 - a)); }
double fekete_t2(double a) { return (9 - 4 * a) / (6 * (1 - a)); }

TruncatedSeries f0(std::size_t order) {
  std::vector<Complex> c(order + 1, Complex{1.0, 0.0});
  c[0] = 0.0;
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("fekete_szego_bound") {
  SUBCASE("worked values") {
    const CoefficientReport r0 = fekete_szego_bound({Alpha(0.0), 0.0});
    CHECK(r0.bound == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r0.branch == 1);
    const CoefficientReport r1 = fekete_szego_bound({Alpha(0.0), 1.0});
    CHECK(r1.bound == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(r1.branch == 2);
    const CoefficientReport r2 = fekete_szego_bound({Alpha(0.25), 1.0});
    CHECK(r2.bound == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(r2.branch == 2);
  }
  SUBCASE("continuity at both breakpoints on an alpha grid") {
    for (double a = 0.0; a < 0.95; a += 0.1) {
      for (double tb : {fekete_t1(a), fekete_t2(a)}) {
        const double left = fekete_szego_bound({Alpha(a), tb - 1e-14}).bound;
        const double right = fekete_szego_bound({Alpha(a), tb + 1e-14}).bound;
        CHECK(std::abs(left - right) < 1e-12);
      }
    }
  }
  SUBCASE("attained never exceeds the bound") {
    for (double a = 0.0; a < 0.95; a += 0.15) {
      for (double t = -1.0; t <= 3.0; t += 0.25) {
        const CoefficientReport r = fekete_szego_bound({Alpha(a), t});
        REQUIRE(r.attained.has_value());
        CHECK(*r.attained <= r.bound + 1e-10);
      }
    }
  }
  SUBCASE("extremal attainment is exact on the first branch") {
    for (double a = 0.0; a < 0.95; a += 0.1) {
      for (double frac : {0.0, 0.5, 1.0}) {
        const double t = fekete_t1(a) * frac - (frac == 0.0 ? 0.3 : 0.0);
        const CoefficientReport r = fekete_szego_bound({Alpha(a), t});
        if (r.branch != 1) continue;
        REQUIRE(r.attained.has_value());
        CHECK(std::abs(*r.attained - r.bound) < 1e-12);
      }
    }
  }
  SUBCASE("middle branch attained by the sqrt-transform fixture") {
    const CoefficientReport r = fekete_szego_bound({Alpha(0.3), 1.0});
    CHECK(r.branch == 2);
    REQUIRE(r.attained.has_value());
    CHECK(std::abs(*r.attained - r.bound) < 1e-12);
  }
}

TEST_CASE("a2_bound") {
  CHECK(a2_bound(Alpha(0.0)) == 1.0);
  CHECK(a2_bound(Alpha(0.5)) == 0.5);
  CHECK(a2_bound(Alpha(0.999)) == doctest::Approx(0.001));
  // attained by f_alpha
  for (double a : {0.0, 0.5, 0.9}) {
    CHECK(std::abs(f_alpha_coeff(Alpha(a), 2) - a2_bound(Alpha(a))) < 1e-14);
  }
}

TEST_CASE("a3_bound") {
  const CoefficientReport r0 = a3_bound(Alpha(0.0));
  CHECK(r0.bound == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r0.branch == 1);
  REQUIRE(r0.attained.has_value());
  CHECK(*r0.attained == doctest::Approx(1.0).epsilon(1e-14));

  // both branches meet at alpha = 3/4 with value 1/8
  const double left = a3_bound(Alpha(0.75 - 1e-13)).bound;
  const double right = a3_bound(Alpha(0.75 + 1e-13)).bound;
  CHECK(left == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(right == doctest::Approx(0.125).epsilon(1e-10));
  CHECK(std::abs(left - right) < 1e-12);

  const CoefficientReport r9 = a3_bound(Alpha(0.9));
  CHECK(r9.bound == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(r9.branch == 2);
  REQUIRE(r9.attained.has_value());
  CHECK(*r9.attained == doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("inverse_coeff_bounds") {
  SUBCASE("continuity at alpha = 3/8") {
    const double left = inverse_coeff_bounds(Alpha(0.375 - 1e-13)).b3;
    const double right = inverse_coeff_bounds(Alpha(0.375 + 1e-13)).b3;
    CHECK(left == doctest::Approx(0.3125).epsilon(1e-10));
    CHECK(std::abs(left - right) < 1e-12);
  }
  SUBCASE("alpha = 0 values and the reversion cross-check") {
    const InverseCoeffBounds b = inverse_coeff_bounds(Alpha(0.0));
    CHECK(b.b2 == 1.0);
    CHECK(b.b3 == doctest::Approx(1.0).epsilon(1e-14));
    // f_0^{-1}(w) = w/(1+w): revert gives |b3| = 1
    const TruncatedSeries inv = revert(f0(16));
    CHECK(std::abs(inv[2] + 1.0) < 1e-12);
    CHECK(std::abs(inv[3] - 1.0) < 1e-12);
  }
  SUBCASE("identity with the fekete bound at t = 2") {
    for (double a = 0.0; a < 0.95; a += 0.05) {
      const double fk = fekete_szego_bound({Alpha(a), 2.0}).bound;
      CHECK(std::abs(fk - inverse_coeff_bounds(Alpha(a)).b3) < 1e-13);
    }
  }
}

TEST_CASE("log_coeff_bound") {
  const LogCoeffBound b1 = log_coeff_bound(Alpha(0.0), 1);
  CHECK(b1.bound == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_FALSE(b1.conditional);  // the half-plane image is convex
  CHECK(log_coeff_bound(Alpha(0.0), 5).bound == doctest::Approx(0.1).epsilon(1e-14));
  const LogCoeffBound bh = log_coeff_bound(Alpha(0.5), 1);
  CHECK(bh.bound == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(bh.conditional);  // convexity scan is negative at alpha = 1/2
  CHECK_FALSE(log_coeff_bound(Alpha(0.9), 2).conditional);
  CHECK_THROWS_AS(log_coeff_bound(Alpha(0.3), 0), InvalidParams);
}

TEST_CASE("log_coeffs") {
  SUBCASE("f_0 has beta_k = 1/(2k), attaining the bound at alpha = 0") {
    const std::vector<Complex> beta = log_coeffs(f0(24), 16);
    for (std::size_t k = 1; k <= 16; ++k) {
      CHECK(std::abs(beta[k - 1] - 1.0 / (2.0 * double(k))) < 1e-12);
    }
  }
  SUBCASE("identity has all-zero logarithmic coefficients") {
    const std::vector<Complex> beta = log_coeffs(TruncatedSeries::identity(12), 8);
    for (const Complex& b : beta) CHECK(std::abs(b) < 1e-15);
  }
  SUBCASE("koebe has beta_k = 1/k") {
    std::vector<Complex> c(25);
    for (std::size_t k = 0; k <= 24; ++k) c[k] = double(k);
    const std::vector<Complex> beta = log_coeffs(TruncatedSeries(std::move(c)), 12);
    for (std::size_t k = 1; k <= 12; ++k) {
      CHECK(std::abs(beta[k - 1] - 1.0 / double(k)) < 1e-12);
    }
  }
  SUBCASE("first-order identity beta_1 = a2/2") {
    std::mt19937 gen(kSeed);
    for (int t = 0; t < 20; ++t) {
      TruncatedSeries f = random_normalized_series(gen, 12, 0.7);
      const std::vector<Complex> beta = log_coeffs(f, 4);
      CHECK(std::abs(beta[0] - 0.5 * f[2]) < 1e-12);
    }
  }
  CHECK_THROWS_AS(log_coeffs(f0(8), 8), InvalidParams);
}

TEST_CASE("zf_coeff_condition") {
  SUBCASE("identity: empty sum") {
    const ZfCoeffReport r = zf_coeff_condition(TruncatedSeries::identity(16), Alpha(0.3), 8);
    CHECK(r.holds);
    CHECK(r.partial_sum == 0.0);
    CHECK(r.rhs == doctest::Approx(0.7));
    CHECK(r.hypothesis_met);
  }
  SUBCASE("f_0 has c_2 = -2: hypothesis flagged") {
    const ZfCoeffReport r = zf_coeff_condition(f0(16), Alpha(0.0), 8);
    CHECK_FALSE(r.hypothesis_met);
    // z/f_0' = z(1-z)^2 = z - 2z^2 + z^3
  }
  SUBCASE("z + 0.05 z^2: partial sum against the hand oracle") {
    std::vector<Complex> c(33, Complex{0, 0});
    c[1] = 1.0;
    c[2] = 0.05;
    const ZfCoeffReport r = zf_coeff_condition(TruncatedSeries(std::move(c)), Alpha(0.0), 16);
    // z/f' = z/(1+0.1z): c_n = (-0.1)^{n-1}
    double expect = 0.0;
    for (std::size_t n = 2; n <= 16; ++n) {
      expect += (double(n) - 2.0) * std::pow(-0.1, double(n - 1));
    }
    CHECK(r.partial_sum == doctest::Approx(expect).epsilon(1e-12));
    CHECK(r.holds);
    CHECK_FALSE(r.hypothesis_met);  // alternating signs
  }
  SUBCASE("z - 0.05 z^2 keeps the hypothesis and holds") {
    std::vector<Complex> c(33, Complex{0, 0});
    c[1] = 1.0;
    c[2] = -0.05;
    const ZfCoeffReport r = zf_coeff_condition(TruncatedSeries(std::move(c)), Alpha(0.0), 16);
    CHECK(r.hypothesis_met);
    CHECK(r.holds);
    CHECK(r.last_term < 1e-10);
  }
}

TEST_CASE("rho_sufficiency") {
  SUBCASE("identity: zero sum, sufficient") {
    const RhoSufficiencyReport r =
        rho_sufficiency(TruncatedSeries::identity(16), Alpha(0.0), 512, 8);
    CHECK(r.sufficient);
    CHECK(r.sup_sum == 0.0);
  }
  SUBCASE("z + eps z^2 threshold at alpha = 0: sup = 3 eps") {
    auto series_eps = [](double eps) {
      std::vector<Complex> c(kDefaultOrder + 1, Complex{0, 0});
      c[1] = 1.0;
      c[2] = eps;
      return TruncatedSeries(std::move(c));
    };
    const RhoSufficiencyReport ok = rho_sufficiency(series_eps(0.2), Alpha(0.0), 512, 8);
    CHECK(ok.sufficient);
    CHECK(ok.sup_sum == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(std::abs(std::abs(ok.argmax_theta) - kPi) < 0.05);
    const RhoSufficiencyReport no = rho_sufficiency(series_eps(0.4), Alpha(0.0), 512, 8);
    CHECK_FALSE(no.sufficient);
    CHECK(no.sup_sum == doctest::Approx(1.2).epsilon(1e-9));
  }
  SUBCASE("paired assertion: sufficient inputs pass subordination") {
    std::vector<Complex> c(kDefaultOrder + 1, Complex{0, 0});
    c[1] = 1.0;
    c[2] = 0.2;
    const TruncatedSeries f(std::move(c));
    const RhoSufficiencyReport r = rho_sufficiency(f, Alpha(0.0), 512, 8);
    REQUIRE(r.sufficient);
    const BoundaryCurve curve = boundary_polygon(Alpha(0.0), 4096);
    const MembershipReport rep = check_subordination_qalpha(
        FunctionHandle::from_series(f), Alpha(0.0), SampleGrid::standard(), curve);
    CHECK(rep.verdict == Verdict::HoldsOnGrid);
  }
}

TEST_CASE("sqrt_transform") {
  for (double a : {0.0, 0.3, 0.75}) {
    const TruncatedSeries ft = sqrt_transform(f_alpha_series(Alpha(a), 16));
    CHECK(ft.is_normalized());
    CHECK(std::abs(ft[2]) < 1e-14);                          // a2 = 0
    CHECK(std::abs(ft[3] - (1.0 - a) / 2.0) < 1e-13);        // a3 = (1-alpha)/2
    CHECK(std::abs(ft[4]) < 1e-13);                          // odd function
  }
}

TEST_CASE("oracle duality: reversion reproduces the inverse-coefficient algebra") {
  std::mt19937 gen(kSeed);
  int trials = 0;
  while (trials < 1000) {
    const TruncatedSeries f = random_normalized_series(gen, 8);
    const TruncatedSeries g = revert(f);
    const Complex a2 = f[2], a3 = f[3];
    CHECK(std::abs(std::abs(g[2]) - std::abs(a2)) < 1e-10);
    CHECK(std::abs(std::abs(g[3]) - std::abs(2.0 * a2 * a2 - a3)) < 1e-10);
    ++trials;
  }
}
