// Obstruction functions and center-blocking. The class (3,2,6,1,3,+1) at its
// own parameter b = 5/11 gives mu = 66/23 against the volume bound 11/4, so
// it blocks. Its blocked interval is bounded by the two staircases
// accumulating on it, with hand-checked limits like z = (5 + 3*sqrt(5))/2 on
// the ascending side.

#include "staircase/obstruct.hpp"

#include "doctest.h"

using namespace staircase;

TEST_CASE("obstruction value of a class") {
  const QuasiPerfect b0 = from_pq(6, 1);
  const QuadExt third{Rational(1, 3)};
  CHECK_EQ(mu(b0, third, QuadExt(5)).str(), "15/7");   // q z/(d - m b)
  CHECK_EQ(mu(b0, third, QuadExt(7)).str(), "18/7");   // p/(d - m b)
  CHECK_EQ(mu(b0, third, QuadExt(6)).str(), "18/7");   // both agree at p/q
  CHECK_THROWS_AS(mu(b0, QuadExt(2), QuadExt(5)), DomainError);
}

TEST_CASE("center blocking at the class's own parameter") {
  const QuasiPerfect b0 = from_pq(6, 1);
  CHECK_EQ(own_b(b0).str(), "5/11");
  CHECK_EQ(mu(b0, own_b(b0), QuadExt(6)).str(), "66/23");
  const PosRoot bound = vol(own_b(b0), QuadExt(6));
  CHECK_EQ(bound.value().rational_value(), Rational(11, 4));
  CHECK(is_obstructive(b0, own_b(b0), QuadExt(6)));
  CHECK(is_center_blocking(b0));
  CHECK_EQ(center_blocking_report(b0), "CENTER-BLOCKING ok: (3,2,6,1,3,+1)");
}

TEST_CASE("own parameter follows the eps branch") {
  // eps = -1 classes take the lower branch of the inverse.
  const QuasiPerfect bl1 = from_pq(13, 2);
  CHECK_EQ(own_b(bl1).str(), "78/251 - 15/251*sqrt(17)");
  CHECK(acc_equation_check(own_b(bl1), QuadExt(Rational(13, 2))));
  CHECK(is_center_blocking(bl1));
}

TEST_CASE("break point at b = m/d") {
  CHECK_EQ(break_point_at_own_b(from_pq(6, 1)), Rational(37, 5));   // (36+1)/(6-1)
  CHECK_EQ(break_point_at_own_b(from_pq(13, 2)), Rational(34, 5));  // (169+1)/(26-1)
  // The formal corner class with pq = 1 has no break point.
  CHECK_THROWS_AS(break_point_at_own_b(make_quasi_perfect(1, 1, 1, 1, 2, 1)),
                  DomainError);
}

TEST_CASE("live candidate window") {
  const QuasiPerfect b0 = from_pq(6, 1);
  CHECK(live_candidate(b0, own_b(b0)));
  CHECK_FALSE(live_candidate(b0, QuadExt(Rational(1, 3))));
}

TEST_CASE("blocked interval of the first blocking class") {
  const auto asc = build_staircase(
      make_family(compose(group_S(), group_R()), Branch::U), 0, Side::lower, 8);
  const auto desc =
      build_staircase(make_family(group_id(), Branch::U), 0, Side::upper, 8);
  const BlockedInterval bi = blocked_interval(from_pq(6, 1), asc, desc);
  CHECK_EQ(bi.b_lo.str(), "3/2 - 1/2*sqrt(5)");
  CHECK_EQ(bi.b_hi.str(), "21/44 + 3/44*sqrt(5)");
  CHECK_EQ(bi.z_lo.str(), "5/2 + 3/2*sqrt(5)");
  CHECK_EQ(bi.z_hi.str(), "13/2 + 3/10*sqrt(5)");
  CHECK(bi.b_lo < bi.b_hi);
  // The interval contains the class's own parameter.
  CHECK(bi.b_lo < own_b(bi.block));
  CHECK(own_b(bi.block) < bi.b_hi);
  // The z window covers the ladder interval [41/7, 7] around the center 6.
  CHECK(bi.z_lo <= QuadExt(Rational(41, 7)));
  CHECK(bi.z_hi >= QuadExt(7));
  // Staircases of a different blocking class are rejected.
  CHECK_THROWS_AS(blocked_interval(from_pq(8, 1), asc, desc), DomainError);
}
