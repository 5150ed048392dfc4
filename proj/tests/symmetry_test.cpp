// The shift and reflection matrices, the monoid they generate, the y/v/w
// ladders, the sharp action on tuples, and the degree matrices. Fixed points
// anchor the checks: R fixes w_1 = 7 and the reflection refl(i) = S^(2i-3) R
// fixes v_i. Degree matrices are checked against hand-multiplied values.

#include "staircase/symmetry.hpp"

#include "staircase/accum.hpp"

#include "doctest.h"

using namespace staircase;

TEST_CASE("generator matrices") {
  CHECK_EQ(shift_matrix().str(), "(6,-1;1,0)");
  CHECK_EQ(reflect_matrix().str(), "(6,-35;1,-6)");
  CHECK_EQ(shift_matrix().det(), 1);
  CHECK_EQ(reflect_matrix().det(), -1);
  const Mat2 r2 = reflect_matrix() * reflect_matrix();
  CHECK_EQ(r2, (Mat2{1, 0, 0, 1}));
}

TEST_CASE("fractional-linear action") {
  const Mat2 s = shift_matrix();
  const Mat2 r = reflect_matrix();
  CHECK_EQ(s.act(Rational(6)).value(), Rational(35, 6));
  CHECK_EQ(s.act(ExtRational::infinity()).value(), Rational(6));
  CHECK(r.act(Rational(6)).is_infinite());
  CHECK_EQ(r.act(Rational(7)).value(), Rational(7));  // R fixes w_1
  CHECK_EQ(r.act(ExtRational::infinity()).value(), Rational(6));
  CHECK_EQ(s.apply(1, 0), (std::pair<Integer, Integer>{6, 1}));
  CHECK_THROWS_AS(ExtRational::infinity().value(), DomainError);
  CHECK(ExtRational(Rational(100)) < ExtRational::infinity());
  // A negative lower-left entry still sends infinity to a/c.
  const Mat2 neg{-10, 15, -3, 4};
  CHECK_EQ(neg.act(ExtRational::infinity()).value(), Rational(10, 3));
}

TEST_CASE("ladders") {
  const Integer expect[] = {0, 1, 6, 35, 204, 1189, 6930};
  for (unsigned long i = 0; i < 7; ++i) {
    CHECK_EQ(y_seq(i), expect[i]);
  }
  CHECK_EQ(y_seq(7), 6 * 6930 - 1189);
  CHECK(v_ladder(1).is_infinite());
  CHECK_EQ(v_ladder(2).value(), Rational(6));
  CHECK_EQ(v_ladder(3).value(), Rational(35, 6));
  CHECK_EQ(w_ladder(1), Rational(7));
  CHECK_EQ(w_ladder(2), Rational(41, 7));
  CHECK_EQ(w_ladder(3), Rational(239, 41));
  CHECK_EQ(w_ladder(4), Rational(1393, 239));
  CHECK_EQ(w_ladder(5), Rational(8119, 1393));
  // Interleaving: w_k < v_k < w_(k-1) for k >= 2.
  for (unsigned long k = 2; k <= 8; ++k) {
    CHECK(ExtRational(w_ladder(k)) < v_ladder(k));
    CHECK(v_ladder(k) < ExtRational(w_ladder(k - 1)));
  }
}

TEST_CASE("monoid composition") {
  CHECK_EQ(compose(group_S(2), group_S(1)), group_S(3));
  // S^2 R * S R = S^(2-1) R^(1+1) = S.
  const GroupElem s2r{2, 1};
  const GroupElem sr{1, 1};
  CHECK_EQ(compose(s2r, sr), group_S(1));
  CHECK_EQ(compose(s2r, sr).matrix(), s2r.matrix() * sr.matrix());
  CHECK_EQ(compose(group_R(), group_R()), group_id());
  CHECK_EQ(compose(sr, group_S(1)), group_R());  // S R * S = S^(1-1) R
  // S R * S^2 would need a negative shift power.
  CHECK_THROWS_AS(compose(sr, group_S(2)), DomainError);
}

TEST_CASE("monoid parsing and printing") {
  CHECK_EQ(group_id().str(), "id");
  CHECK_EQ(group_S(1).str(), "S");
  CHECK_EQ(group_S(2).str(), "S^2");
  CHECK_EQ(group_R().str(), "R");
  CHECK_EQ((GroupElem{1, 1}).str(), "S R");
  for (const char* text : {"id", "S", "S^3", "R", "S^2 R", "S^2R"}) {
    const GroupElem g = parse_group_elem(text);
    CHECK_EQ(parse_group_elem(g.str()), g);
  }
  CHECK_EQ(parse_group_elem("S^2R"), (GroupElem{2, 1}));
  CHECK_THROWS_AS(parse_group_elem("S^-1"), DomainError);
  CHECK_THROWS_AS(parse_group_elem("Q"), DomainError);
}

TEST_CASE("eps factor of the sharp action") {
  CHECK_EQ(group_id().eps_factor(), 1);
  CHECK_EQ(group_S(1).eps_factor(), -1);
  CHECK_EQ((GroupElem{1, 1}).eps_factor(), 1);
  CHECK_EQ((GroupElem{2, 1}).eps_factor(), -1);
}

TEST_CASE("sharp action on tuples") {
  const QuasiPerfect b0 = from_pq(6, 1);
  CHECK_EQ(sharp(group_S(1), b0).str(), "(15,4,35,6,3,-1)");
  CHECK_EQ(sharp(group_R(), b0).str(), "(0,-1,1,0,3,-1)");
  CHECK_EQ(sharp(group_id(), b0), b0);
  // t and sigma are invariant, eps flips with the factor.
  for (unsigned long i = 0; i <= 4; ++i) {
    for (int delta = 0; delta <= 1; ++delta) {
      const GroupElem t{i, delta};
      const QuasiPerfect img = sharp(t, b0);
      CHECK_EQ(img.t, b0.t);
      CHECK_EQ(sigma(img.p, img.q), sigma(b0.p, b0.q));
      CHECK_EQ(img.eps, t.eps_factor() * b0.eps);
    }
  }
}

TEST_CASE("reflections fixing the v ladder") {
  // refl(i) = S^(2i-3) R fixes v_i.
  CHECK_EQ(refl(2), shift_matrix() * reflect_matrix());
  CHECK_EQ(refl(2).str(), "(35,-204;6,-35)");
  for (unsigned long i = 2; i <= 5; ++i) {
    const Mat2 m = refl(i);
    CHECK_EQ(m.act(v_ladder(i)), v_ladder(i));
    CHECK_EQ(m * m, (Mat2{1, 0, 0, 1}));
  }
  CHECK_THROWS_AS(refl(1), DomainError);
}

TEST_CASE("degree matrices of the shift powers") {
  CHECK_EQ(deg_matrix_B(group_S(1)).str(), "(5,0;2,-1)");
  CHECK_EQ(deg_matrix_B(group_S(2)).str(), "(28,3;9,2)");
  CHECK_EQ(deg_matrix_B(group_S(3)).str(), "(164,15;55,4)");
  CHECK_EQ(deg_matrix_B(group_S(4)).str(), "(955,90;318,31)");
  CHECK_EQ(deg_matrix_B(group_R()).str(), "(-10,15;-3,4)");
  // The degree action is not multiplicative in the shift power.
  CHECK(deg_matrix_B(group_S(4)) !=
        deg_matrix_B(group_S(2)) * deg_matrix_B(group_S(2)));
  // It does take the degree pair of each blocking class to its image.
  for (unsigned long n = 0; n <= 4; ++n) {
    const QuasiPerfect b = from_pq(2 * n + 6, 1);
    const QuasiPerfect img = sharp(group_S(1), b);
    const auto [d, m] = deg_matrix_B(group_S(1)).apply(b.d, b.m);
    CHECK_EQ(d, img.d);
    CHECK_EQ(m, img.m);
  }
}

TEST_CASE("degree matrices of the reflections") {
  const RatMat2 b2 = deg_matrix_refl(2, DegFlavor::B);
  CHECK(b2.is_integral());
  CHECK_EQ(b2.to_integral(), (Mat2{4, -15, 1, -4}));
  CHECK_EQ(b2 * b2, to_rational(Mat2{1, 0, 0, 1}));
  const RatMat2 p2 = deg_matrix_refl(2, DegFlavor::P);
  CHECK_EQ(p2, to_rational(Mat2{-59, 90, -20, 31}));
}
