// Quasi-perfect classes. from_pq solves the Diophantine system
// 8d = 3(p+q) + eps*t, 8m = (p+q) + 3*eps*t with t^2 = sigma + 8, so each
// expected tuple below can be recomputed by hand from its center. Centers 3
// and 7 admit no class (t = 0, respectively non-integral d), which the
// constructor reports as NoSolution.

#include "staircase/classes.hpp"

#include "doctest.h"

using namespace staircase;

TEST_CASE("classes from their centers") {
  const QuasiPerfect b0 = from_pq(6, 1);
  CHECK_EQ(b0.str(), "(3,2,6,1,3,+1)");
  CHECK(b0.geometric);
  CHECK_EQ(b0.center(), Rational(6));
  CHECK_EQ(from_pq(10, 1).str(), "(5,4,10,1,7,+1)");
  CHECK_EQ(from_pq(13, 2).str(), "(5,0,13,2,5,-1)");
  CHECK_EQ(from_pq(25, 4).str(), "(10,1,25,4,7,-1)");
  CHECK_EQ(from_pq(2, 1).str(), "(1,0,2,1,1,-1)");
  CHECK_EQ(from_pq(4, 1).str(), "(2,1,4,1,1,+1)");
  CHECK_EQ(from_pq(5, 1).str(), "(2,0,5,1,2,-1)");
}

TEST_CASE("centers without a class") {
  CHECK_THROWS_AS(from_pq(3, 1), NoSolution);   // t would be 0
  CHECK_THROWS_AS(from_pq(7, 1), NoSolution);   // (d,m) not integral
  CHECK_THROWS_AS(from_pq(8, 3), NoSolution);   // t^2 negative
  CHECK_THROWS_AS(from_pq(1, 1), DomainError);  // needs p > q
  CHECK_THROWS_AS(from_pq(6, 2), DomainError);  // needs coprime
}

TEST_CASE("constructor validates the Diophantine system") {
  const QuasiPerfect c = make_quasi_perfect(3, 2, 6, 1, 3, 1);
  CHECK(c.geometric);
  CHECK_EQ(c, from_pq(6, 1));
  CHECK_THROWS_AS(make_quasi_perfect(3, 2, 6, 1, 3, -1), DomainError);
  CHECK_THROWS_AS(make_quasi_perfect(3, 1, 6, 1, 3, 1), DomainError);
  CHECK_THROWS_AS(make_quasi_perfect(3, 2, 6, 1, 3, 2), DomainError);
  CHECK_THROWS_AS(make_quasi_perfect(1, 0, 3, 1, 0, 1), DomainError);
}

TEST_CASE("formal tuples are non-geometric") {
  const QuasiPerfect formal = make_quasi_perfect(0, -1, 1, 0, 3, -1);
  CHECK_FALSE(formal.geometric);
  CHECK_FALSE(formal.has_center());
  CHECK_THROWS_AS(formal.center(), DomainError);
  CHECK_EQ(formal.str(), "(0,-1,1,0,3,-1)");
  const QuasiPerfect seed = make_quasi_perfect(-2, 0, -5, -1, 2, 1);
  CHECK_FALSE(seed.geometric);
  CHECK_EQ(seed.center(), Rational(5));  // (-5)/(-1)
}

TEST_CASE("eps matches the side of m/d = 1/3") {
  CHECK_EQ(from_pq(6, 1).eps, 1);    // 2/3 > 1/3
  CHECK_EQ(from_pq(2, 1).eps, -1);   // 0 < 1/3
  CHECK_EQ(from_pq(29, 5).eps, 1);   // 5/13 > 1/3
  CHECK_EQ(from_pq(13, 2).eps, -1);  // 0 < 1/3
}

TEST_CASE("quasi-perfect predicate") {
  CHECK(is_quasi_perfect(3, 2, 6, 1));
  CHECK(is_quasi_perfect(14, 9, 29, 4));
  CHECK_FALSE(is_quasi_perfect(3, 1, 6, 1));
  CHECK_FALSE(is_quasi_perfect(4, 2, 6, 1));
}

TEST_CASE("vector form for reduction") {
  const ClassVector v0 = to_vector(from_pq(6, 1));
  CHECK_EQ(v0.str(), "(3; 2,1,1,1,1,1,1)");
  const ClassVector v1 = to_vector(from_pq(29, 4));
  REQUIRE_EQ(v1.coefficients.size(), 12);
  CHECK_EQ(v1.d, 14);
  CHECK_EQ(v1.coefficients[0], 9);
  for (std::size_t i = 1; i <= 7; ++i) {
    CHECK_EQ(v1.coefficients[i], 4);
  }
  for (std::size_t i = 8; i < 12; ++i) {
    CHECK_EQ(v1.coefficients[i], 1);
  }
}
