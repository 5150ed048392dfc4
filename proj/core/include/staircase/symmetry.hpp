// The shift S = (6,-1;1,0), the reflection R = (6,-35;1,-6), the acting
// monoid G = {S^i R^delta, i >= 0}, the y/v/w ladders, the sharp action on
// extended tuples, and the degree matrices.
//
// Matrices act fractionally on centers, z -> (az+b)/(cz+d), with infinity
// handled projectively. The sharp action T#(d,m,p,q,t,eps) keeps t, maps
// (p,q) by T, flips eps by (-1)^(i+delta), and recovers (d,m) from
// 8d = 3(p+q) + eps*t, 8m = (p+q) + 3*eps*t.

#pragma once

#include "staircase/classes.hpp"

#include <optional>

namespace staircase {

// Rational with a point at infinity, for fractional-linear actions.
class ExtRational {
 public:
  ExtRational() : finite_(0), infinite_(false) {}
  ExtRational(const Rational& r) : finite_(r), infinite_(false) {}  // NOLINT
  static ExtRational infinity() {
    ExtRational x;
    x.infinite_ = true;
    return x;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  friend bool operator==(const ExtRational& x, const ExtRational& y) {
    return x.infinite_ == y.infinite_ &&
           (x.infinite_ || x.finite_ == y.finite_);
  }
  friend bool operator!=(const ExtRational& x, const ExtRational& y) {
    return !(x == y);
  }
  // Total order with infinity greater than every rational.
  friend bool operator<(const ExtRational& x, const ExtRational& y) {
    if (x.infinite_) {
      return false;
    }
    if (y.infinite_) {
      return true;
    }
    return x.finite_ < y.finite_;
  }

  std::string str() const;

 private:
  Rational finite_;
  bool infinite_;
};

struct Mat2 {
  Integer a, b, c, d;  // (a,b;c,d)

  Integer det() const { return a * d - b * c; }

  std::pair<Integer, Integer> apply(const Integer& p, const Integer& q) const {
    return {a * p + b * q, c * p + d * q};
  }

  // z -> (az+b)/(cz+d), taking infinity to a/c.
  ExtRational act(const ExtRational& z) const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  std::string str() const;  // "(a,b;c,d)"
};

Mat2 shift_matrix();       // S
Mat2 reflect_matrix();     // R

struct RatMat2 {
  Rational a, b, c, d;

  Rational det() const { return a * d - b * c; }
  bool is_integral() const;
  Mat2 to_integral() const;  // DomainError if not integral
  RatMat2 inverse() const;   // DivisionError on singular

  friend RatMat2 operator*(const RatMat2& x, const RatMat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const RatMat2& x, const RatMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const RatMat2& x, const RatMat2& y) {
    return !(x == y);
  }

  std::string str() const;
};

RatMat2 to_rational(const Mat2& m);

// T = S^i R^delta with i >= 0, delta in {0,1}.
struct GroupElem {
  unsigned long i = 0;
  int delta = 0;

  Mat2 matrix() const;
  int eps_factor() const { return (i + delta) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.i == y.i && x.delta == y.delta;
  }
  friend bool operator!=(const GroupElem& x, const GroupElem& y) {
    return !(x == y);
  }

  std::string str() const;  // "id", "S^2", "S R", ...
};

GroupElem group_id();
GroupElem group_S(unsigned long i = 1);
GroupElem group_R();

// Composition in G; products that leave {S^i R^delta, i >= 0} (which happens
// for S^i R * S^j ... with i < j) are rejected with DomainError.
GroupElem compose(const GroupElem& lhs, const GroupElem& rhs);

// Parses "id", "S", "S^3", "R", "S^2 R", "S^2R".
GroupElem parse_group_elem(const std::string& text);

Integer y_seq(unsigned long i);            // 0, 1, 6, 35, 204, ...
ExtRational v_ladder(unsigned long i);     // y_i / y_{i-1}, v_1 = infinity
Rational w_ladder(unsigned long i);        // (y_{i+1}+y_i)/(y_i+y_{i-1})

QuasiPerfect sharp(const GroupElem& T, const QuasiPerfect& c);

// The reflection R_{v_i} = S^{2i-3} R fixing v_i, for i >= 2.
Mat2 refl(unsigned long i);

enum class DegFlavor { B, P };

// Integer matrix taking the degree pair (d,m) of B^U_n to that of
// sharp(T, B^U_n) for every n.
Mat2 deg_matrix_B(const GroupElem& T);

// Degree action of the reflection R_{v_i}: flavor B is
// (S^{i-1})*B o ((S^{i-2}R)*B)^{-1} (order two, integral); flavor P is
// (S^{i-1}R)*B o ((S^{i-2})*B)^{-1} (not integral in general).
RatMat2 deg_matrix_refl(unsigned long i, DegFlavor flavor);

}  // namespace staircase
