#include <cmath>
#include <initializer_list>
#include <numbers>

#include <stdexcept>

#include "doctest.h"
#include "fracalg/gamma.hpp"

using fracalg::gamma_fn;

TEST_CASE("gamma matches tgamma to 1e-13 relative on [1e-3, 150]") {
  double worst = 0.0;
  for (double x = 1e-3; x <= 150.0; x *= 1.003) {
    worst = std::max(worst, std::fabs(gamma_fn(x) / std::tgamma(x) - 1.0));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("gamma special values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("gamma is exact at small positive integers") {
  double f = 1.0;
  for (int k = 1; k <= 23; ++k) {
    CHECK(gamma_fn(k) == f);
    f *= k;
  }
  CHECK(gamma_fn(24.0) == doctest::Approx(f).epsilon(1e-13));
}

TEST_CASE("gamma recurrence x Gamma(x) = Gamma(x + 1)") {
  for (double x : {0.013, 0.31, 0.77, 2.4, 9.9, 33.3}) {
    CHECK(x * gamma_fn(x) == doctest::Approx(gamma_fn(x + 1.0)).epsilon(1e-13));
  }
}
