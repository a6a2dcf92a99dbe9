#include <doctest.h>

#include <cmath>
#include <random>

#include "bps/solar.hpp"

using namespace bps;

namespace {
constexpr double pi = 3.14159265358979323846;
constexpr double deg = pi / 180.0;
}  // namespace

TEST_CASE("declination stays inside the tropics and peaks near solstices") {
  double lo = 1e9, hi = -1e9;
  for (int n = 1; n <= 365; ++n) {
    double d = solar::declination(n);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  CHECK(hi == doctest::Approx(23.45 * deg).epsilon(1e-3));
  CHECK(lo == doctest::Approx(-23.45 * deg).epsilon(1e-3));
  // Winter solstice region: strongly negative.
  CHECK(solar::declination(355) < -23.0 * deg);
  // Summer solstice region: strongly positive.
  CHECK(solar::declination(172) > 23.0 * deg);
  // Equinox neighbourhoods: near zero.
  CHECK(std::abs(solar::declination(81)) < 1.0 * deg);
}

TEST_CASE("equation of time stays within the known annual envelope") {
  for (int n = 1; n <= 365; ++n) {
    double e = solar::equation_of_time(n);
    CHECK(e > -15.0);
    CHECK(e < 17.5);
  }
  // Early November is the positive extreme, mid February the negative one.
  CHECK(solar::equation_of_time(307) > 15.0);
  CHECK(solar::equation_of_time(45) < -13.0);
}

TEST_CASE("solar time reduces to clock time on the standard meridian") {
  // On the 15 deg meridian with EoT == 0 the correction vanishes.
  for (int n : {81, 172, 355}) {
    double eot = solar::equation_of_time(n);
    double got = solar::solar_time_s(43200, n, 15.0, 1.0);
    CHECK(got == doctest::Approx(43200.0 + 60.0 * eot).epsilon(1e-12));
  }
}

TEST_CASE("longitude shifts solar time by four minutes per degree") {
  int n = 100;
  double base = solar::solar_time_s(43200, n, 15.0, 1.0);
  double east = solar::solar_time_s(43200, n, 16.0, 1.0);
  CHECK(east - base == doctest::Approx(240.0).epsilon(1e-9));
}

TEST_CASE("hour angle is zero at solar noon and symmetric") {
  CHECK(solar::hour_angle(43200.0) == doctest::Approx(0.0));
  CHECK(solar::hour_angle(43200.0 + 3600.0) ==
        doctest::Approx(15.0 * deg).epsilon(1e-12));
  CHECK(solar::hour_angle(43200.0 - 3600.0) ==
        doctest::Approx(-15.0 * deg).epsilon(1e-12));
}

TEST_CASE("zenith at solar noon equals latitude minus declination") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lat(-60.0 * deg, 60.0 * deg);
  std::uniform_real_distribution<double> dec(-23.45 * deg, 23.45 * deg);
  for (int i = 0; i < 500; ++i) {
    double la = lat(rng), de = dec(rng);
    double z = solar::zenith(la, de, 0.0);
    CHECK(z == doctest::Approx(std::abs(la - de)).epsilon(1e-9));
  }
}

TEST_CASE("sun is below the horizon at solar midnight in mid-latitudes") {
  double z = solar::zenith(49.0 * deg, solar::declination(15),
                           solar::hour_angle(0.0));
  CHECK(z > pi / 2.0);
}

TEST_CASE("azimuth passes through south at solar noon in the north") {
  double az = solar::azimuth(49.0 * deg, solar::declination(15), 0.0);
  CHECK(az == doctest::Approx(pi).epsilon(1e-9));
  // Morning sun eastward, afternoon westward.
  double am = solar::azimuth(49.0 * deg, solar::declination(15),
                             solar::hour_angle(43200.0 - 4.0 * 3600.0));
  double pm = solar::azimuth(49.0 * deg, solar::declination(15),
                             solar::hour_angle(43200.0 + 4.0 * 3600.0));
  CHECK(am < pi);
  CHECK(pm > pi);
  CHECK(am > 0.0);
  CHECK(pm < 2.0 * pi);
}

TEST_CASE("horizontal plane irradiance recovers the global horizontal sum") {
  // tilt 0: beam projects with cos(zenith), sky view factor is 1.
  double zen = 60.0 * deg;
  double got = solar::plane_irradiance(800.0, 100.0, zen, pi, 0.0, pi);
  CHECK(got == doctest::Approx(800.0 * std::cos(zen) + 100.0).epsilon(1e-12));
}

TEST_CASE("vertical plane facing away from the sun sees only diffuse") {
  double zen = 60.0 * deg;
  double got = solar::plane_irradiance(800.0, 100.0, zen, pi, pi / 2.0, 0.0);
  CHECK(got == doctest::Approx(100.0 * 0.5).epsilon(1e-12));
}

TEST_CASE("vertical plane facing the sun sees beam and half the sky") {
  double zen = 60.0 * deg;
  double got = solar::plane_irradiance(800.0, 100.0, zen, pi, pi / 2.0, pi);
  CHECK(got ==
        doctest::Approx(800.0 * std::sin(zen) + 50.0).epsilon(1e-12));
}

TEST_CASE("plane irradiance is never negative") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    double got = solar::plane_irradiance(
        1000.0 * u01(rng), 400.0 * u01(rng), pi * u01(rng),
        2.0 * pi * u01(rng), pi / 2.0 * u01(rng), 2.0 * pi * u01(rng));
    CHECK(got >= 0.0);
  }
}

TEST_CASE("tilting toward the low sun increases the beam share") {
  double zen = 75.0 * deg;  // winter sun, low in the south
  double flat = solar::plane_irradiance(700.0, 80.0, zen, pi, 0.0, pi);
  double tilted = solar::plane_irradiance(700.0, 80.0, zen, pi, 60.0 * deg, pi);
  CHECK(tilted > flat);
}
