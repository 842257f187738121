#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "su21/errors.hpp"
#include "su21/json_io.hpp"

using namespace su21;

namespace {
const Eisenstein zeta = Eisenstein::zeta();
const Eisenstein s3 = Eisenstein::sqrt_minus3();

bool close(std::complex<double> x, std::complex<double> y, double rel) {
  return std::abs(x - y) <= rel * std::max(1.0, std::abs(y));
}
}  // namespace

TEST_CASE("ring operations") {
  CHECK(zeta * zeta == Eisenstein(-1, -1));
  CHECK(Eisenstein(1, 2) * Eisenstein(1, 2) == Eisenstein(-3));
  CHECK(Eisenstein(2, 1) + Eisenstein(-2, -1) == Eisenstein(0));
  CHECK(mul(zeta, mul(zeta, zeta)) == Eisenstein(1));
  CHECK(neg(zeta) == Eisenstein(0, -1));
}

TEST_CASE("conj, norm, trace") {
  CHECK(conj(Eisenstein(5)) == Eisenstein(5));
  CHECK(conj(zeta) == Eisenstein(-1, -1));
  CHECK(conj(s3) == Eisenstein(-1, -2));
  CHECK(norm(Eisenstein(1)) == 1);
  CHECK(norm(s3) == 3);
  CHECK(trace(zeta) == -1);
  CHECK(norm(Eisenstein(0)) == 0);
}

TEST_CASE("sqrt(-3) and exact division") {
  CHECK(sqrt_minus3() == Eisenstein(1, 2));
  // (sqrt(-3))^2 = -3, so -3 / sqrt(-3) = sqrt(-3); it is +3 whose quotient is -1-2 zeta.
  CHECK(div_exact(Eisenstein(-3), s3) == s3);
  CHECK(div_exact(Eisenstein(3), s3) == Eisenstein(-1, -2));
  CHECK(div_exact(s3, s3) == Eisenstein(1));
  CHECK_THROWS_AS(div_exact(Eisenstein(1), s3), NotDivisible);
  CHECK_THROWS_AS(div_exact(Eisenstein(1), Eisenstein(0)), NotDivisible);
  CHECK(divides(Eisenstein(0), Eisenstein(0)));
  CHECK_FALSE(divides(Eisenstein(0), Eisenstein(1)));
}

TEST_CASE("residues") {
  CHECK(residue_mod_sqrt_minus3(zeta) == 1);
  CHECK(residue_mod_sqrt_minus3(s3) == 0);
  CHECK(residue_mod_3(Eisenstein(4, 5)) == std::pair<int, int>(1, 2));
  CHECK(residue_mod_3(Eisenstein(-1, -5)) == std::pair<int, int>(2, 1));
  CHECK(mod3(mpz_class(-7)) == 2);
}

TEST_CASE("complex embedding") {
  CHECK(embed(Eisenstein(1)) == std::complex<double>(1.0, 0.0));
  CHECK(close(embed(zeta), {-0.5, std::sqrt(3.0) / 2}, 1e-15));
  CHECK(close(embed(s3), {0.0, std::sqrt(3.0)}, 1e-15));
}

TEST_CASE("units and printing") {
  int units = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) units += is_unit(Eisenstein(a, b));
  CHECK(units == 6);
  CHECK(to_string(Eisenstein(-1, 1)) == "-1+z");
  CHECK(to_string(Eisenstein(0, -2)) == "-2z");
  CHECK(to_string(Eisenstein(3)) == "3");
}

TEST_CASE("fractions") {
  EisensteinFraction half(Eisenstein(1), 2);
  CHECK(half.real() == mpq_class(1, 2));
  EisensteinFraction x = EisensteinFraction(s3) / EisensteinFraction(Eisenstein(2));
  CHECK(x.imag_over_sqrt3() == mpq_class(1, 2));
  CHECK(x.real() == 0);
  CHECK(norm(x) == mpq_class(3, 4));
  CHECK(EisensteinFraction(Eisenstein(2, 4), 2) == EisensteinFraction(Eisenstein(1, 2)));
  CHECK((EisensteinFraction(Eisenstein(1)) / EisensteinFraction(zeta)) * EisensteinFraction(zeta) ==
        EisensteinFraction(Eisenstein(1)));
  CHECK_THROWS_AS(half / EisensteinFraction(), DomainError);
}

TEST_CASE("JSON round trip, including integers beyond 64 bits") {
  Eisenstein big(mpz_class("123456789012345678901234567890"), mpz_class(-5));
  auto j = to_json(big);
  CHECK(j[0].is_string());
  CHECK(eisenstein_from_json(j) == big);
  CHECK(eisenstein_from_json(nlohmann::json::parse("[3, -4]")) == Eisenstein(3, -4));
  CHECK_THROWS_AS(eisenstein_from_json(nlohmann::json::parse("[1]")), ParseError);
  CHECK_THROWS_AS(eisenstein_from_json(nlohmann::json::parse("[1.5, 2]")), ParseError);
}

TEST_CASE("random properties (10^4 samples)") {
  auto rng = oracles::make_rng(1);
  for (int t = 0; t < 10000; ++t) {
    Eisenstein z = oracles::random_eisenstein(rng, 1000000);
    Eisenstein w = oracles::random_eisenstein(rng, 1000000);
    REQUIRE(close(embed(z * w), embed(z) * embed(w), 1e-9));
    REQUIRE(norm(z * w) == norm(z) * norm(w));
    REQUIRE(conj(conj(z)) == z);
    REQUIRE(conj(z * w) == conj(z) * conj(w));
    REQUIRE(conj(z + w) == conj(z) + conj(w));
    REQUIRE((z + conj(z)) == Eisenstein(trace(z), 0));
    REQUIRE(norm(z) >= 0);
    REQUIRE((norm(z) == 0) == z.is_zero());
    // residue mod sqrt(-3) is a ring homomorphism onto F3
    REQUIRE(residue_mod_sqrt_minus3(z * w) ==
            (residue_mod_sqrt_minus3(z) * residue_mod_sqrt_minus3(w)) % 3);
    REQUIRE(residue_mod_sqrt_minus3(z + w) ==
            (residue_mod_sqrt_minus3(z) + residue_mod_sqrt_minus3(w)) % 3);
    bool divisible = true;
    try {
      Eisenstein q = div_exact(z, s3);
      REQUIRE(q * s3 == z);
    } catch (const NotDivisible&) {
      divisible = false;
    }
    REQUIRE(divisible == (residue_mod_sqrt_minus3(z) == 0));
  }
}
