#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <vector>

#include "gcoul/error.hpp"
#include "gcoul/params.hpp"

using namespace gcoul;

namespace {
ErrorCode code_of(const PotentialParams& p) {
  try {
    validate(p);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("validate accepts and rejects") {
  CHECK_NOTHROW(validate(PotentialParams{1, 1, 1, 1.5, 3, 0}));
  CHECK(code_of({-1, 1, 1, 1.5, 3, 0}) == ErrorCode::NonPositiveC);
  CHECK(code_of({1, -0.5, 1, 1.5, 3, 0}) == ErrorCode::NegativeTheta);
  CHECK(code_of({1, 1, 1, 0, 3, 0}) == ErrorCode::NonPositiveBeta);
  CHECK(code_of({1, 1, NAN, 1.5, 3, 0}) == ErrorCode::InvalidArgument);
  CHECK(code_of({1, 1, 1, 1.5, 0, 0}) == ErrorCode::InvalidArgument);
  CHECK(code_of({1, 1, 1, 1.5, 3, -1}) == ErrorCode::InvalidArgument);
}

TEST_CASE("r_of_h closed form") {
  CHECK(r_of_h(0.0, 1.0, 1.0) == 0.0);
  CHECK(r_of_h(1.0, 1.0, 1.0) == doctest::Approx(2.295587149392638).epsilon(1e-14));
  for (double h : {1e-3, 0.7, 12.0, 3e4}) CHECK(r_of_h(h, 4.0, 0.0) == doctest::Approx(h / 2.0).epsilon(1e-15));
}

TEST_CASE("h_of_r inverts r_of_h") {
  CHECK(h_of_r(0.0, 1.0, 1.0).h == 0.0);
  for (double C : {0.25, 1.0, 4.0})
    for (double theta : {0.0, 1e-9, 0.01, 1.0, 100.0, 1e6})
      for (int i = 0; i <= 120; ++i) {
        const double h = std::pow(10.0, -6.0 + 12.0 * i / 120.0);
        const double back = h_of_r(r_of_h(h, C, theta), C, theta).h;
        CHECK(std::abs(back - h) <= 1e-12 * h);
      }
}

TEST_CASE("small-r quadratic behaviour") {
  const double r = 1e-3;
  CHECK(h_of_r(r, 1.0, 1.0).h == doctest::Approx(r * r / 4.0).epsilon(0.01));
}

TEST_CASE("monotone map") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-6.0, 4.0);
  for (double theta : {0.0, 0.1, 1.0, 50.0}) {
    std::vector<double> rs(500);
    for (auto& r : rs) r = std::pow(10.0, u(gen));
    std::sort(rs.begin(), rs.end());
    double prev = -1.0;
    for (double r : rs) {
      const double h = h_of_r(r, 1.0, theta).h;
      CHECK(h > prev);
      prev = h;
    }
  }
}

TEST_CASE("derivative matches finite differences") {
  for (double theta : {0.0, 0.3, 1.0, 20.0})
    for (double r : {0.01, 0.1, 1.0, 5.0, 40.0}) {
      const double step = 1e-5 * r;
      const double fd = (h_of_r(r + step, 2.0, theta).h - h_of_r(r - step, 2.0, theta).h) / (2 * step);
      CHECK(h_of_r(r, 2.0, theta).dh_dr == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("linear asymptote") {
  const double r = 1e4;
  CHECK(h_of_r(r, 1.0, 1.0).h / r == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("centrifugal and singular strengths") {
  PotentialParams p{1, 1, 1, 1.5, 3, 0};
  CHECK(p.centrifugal_strength() == 0.0);
  CHECK(p.singular_strength() == 0.0);
  p.l = 2;
  p.D = 5;
  CHECK(p.centrifugal_strength() == doctest::Approx(3.0 * 4.0));
  p.beta = 0.75;
  CHECK(p.singular_strength() == doctest::Approx(0.25 * -0.75));
}
