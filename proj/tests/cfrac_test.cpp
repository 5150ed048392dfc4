// Continued fractions and weight expansions. W(p/q) comes from the Euclidean
// algorithm, so sum W_i = p + q - 1 and sum W_i^2 = pq hold exactly; both are
// checked on hardcoded cases and on a coprime sweep. Periodic expansions give
// quadratic irrationals, e.g. [5;{1,4}] = 3 + 2*sqrt(2).

#include "staircase/cfrac.hpp"

#include "doctest.h"

#include <numeric>

using namespace staircase;

namespace {

Integer gcd_int(Integer a, Integer b) {
  while (b != 0) {
    const Integer r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

TEST_CASE("continued fraction expansion") {
  CHECK_EQ(cf_to_string(cf_expand(6, 1)), "[6]");
  CHECK_EQ(cf_to_string(cf_expand(35, 6)), "[5;1,5]");
  CHECK_EQ(cf_to_string(cf_expand(239, 41)), "[5;1,4,1,6]");
  CHECK_EQ(cf_to_string(cf_expand(29, 4)), "[7;4]");
  CHECK_EQ(cf_to_string(cf_expand(1, 1)), "[1]");
  CHECK_THROWS_AS(cf_expand(1, 2), DomainError);
  CHECK_THROWS_AS(cf_expand(6, 0), DomainError);
  CHECK_THROWS_AS(cf_expand(4, 2), DomainError);
}

TEST_CASE("continued fraction value round trip") {
  for (long p = 2; p <= 60; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd_int(p, q) != 1) {
        continue;
      }
      const auto [np, nq] = cf_value(cf_expand(p, q));
      CHECK_EQ(np, p);
      CHECK_EQ(nq, q);
    }
  }
}

TEST_CASE("canonical form ends in a coefficient >= 2") {
  ContinuedFraction cf;
  cf.coefficients = {5, 1, 4, 1, 1};
  CHECK_EQ(cf_to_string(cf_normalize(cf)), "[5;1,4,2]");
  ContinuedFraction single;
  single.coefficients = {1};
  CHECK_EQ(cf_to_string(cf_normalize(single)), "[1]");
  // The expansion itself is already canonical.
  for (long p = 2; p <= 40; ++p) {
    const auto cfp = cf_expand(p, p - 1);
    CHECK(cfp.coefficients.back() >= 2);
  }
}

TEST_CASE("parser with repeated blocks") {
  CHECK_EQ(cf_to_string(cf_parse("[7;{5,1}^2,3]")), "[7;5,1,5,1,3]");
  CHECK_EQ(cf_to_string(cf_parse("[6]")), "[6]");
  const auto cf = cf_parse("[5;1,5]");
  const auto [p, q] = cf_value(cf);
  CHECK_EQ(p, 35);
  CHECK_EQ(q, 6);
}

TEST_CASE("weight expansion of 29/4") {
  const auto w = weight_expansion(29, 4);
  REQUIRE_EQ(w.entries.size(), 11);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK_EQ(w.entries[i], 4);
  }
  for (std::size_t i = 7; i < 11; ++i) {
    CHECK_EQ(w.entries[i], 1);
  }
}

TEST_CASE("weight expansion identities") {
  for (long p = 2; p <= 50; ++p) {
    for (long q = 1; q < p; ++q) {
      if (gcd_int(p, q) != 1) {
        continue;
      }
      const auto w = weight_expansion(p, q);
      CHECK_EQ(w.entries.front(), q);
      CHECK_EQ(w.entries.back(), 1);
      Integer sum = 0, sumsq = 0;
      for (const Integer& e : w.entries) {
        CHECK(e >= 1);
        sum += e;
        sumsq += e * e;
      }
      CHECK_EQ(sum, Integer(p) + q - 1);
      CHECK_EQ(sumsq, Integer(p) * q);
      for (std::size_t i = 1; i < w.entries.size(); ++i) {
        CHECK(w.entries[i] <= w.entries[i - 1]);
      }
    }
  }
}

TEST_CASE("periodic expansions are quadratic irrationals") {
  // [5;{1,4}] solves x = 5 + 1/(1 + 1/(4 + 1/(x - 5 + ...))), giving the
  // accumulation point 3 + 2*sqrt(2).
  CHECK_EQ(periodic_cf_value({Integer(5)}, {Integer(1), Integer(4)}).str(),
           "3 + 2*sqrt(2)");
  CHECK_EQ(periodic_cf_value({Integer(1)}, {Integer(2)}).str(), "1*sqrt(2)");
  CHECK_EQ(periodic_cf_value({}, {Integer(6)}).str(), "3 + 1*sqrt(10)");
}
