// Exact arithmetic: arbitrary-precision rationals and real quadratic-field
// elements a + b*sqrt(D) with D squarefree.
//
// Everything downstream (accumulation points, staircase limits, obstruction
// comparisons) reduces to sign determinations in a single field Q(sqrt(D)),
// so this module keeps radicands canonical and computes signs by comparing
// squares, never through floating point. Decimal output is display-only and
// produced by exact integer square roots with a stated digit count.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace staircase {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct FieldError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionError : std::domain_error {
  using std::domain_error::domain_error;
};

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);

// Floor of the real square root; DomainError on negative input.
Integer isqrt_floor(const Integer& n);

bool is_square(const Integer& n);
bool is_square(const Rational& r);

// Exact square root of a perfect-square rational; DomainError otherwise.
Rational sqrt_exact(const Rational& r);

// Largest s with s*s dividing n, so n = s^2 * k with k squarefree (n > 0).
Integer square_part(const Integer& n);

// Writes r = coeff^2 * radicand with radicand a squarefree positive integer.
std::pair<Rational, Integer> sqrt_decompose(const Rational& r);

enum class QuadOp { add, sub, mul, div };

// Element a + b*sqrt(D) of Q(sqrt(D)), canonical: D squarefree, D = 0 when
// the value is rational. Mixed-radicand arithmetic is rejected; rational
// operands (D = 0) combine with any field.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}  // NOLINT: implicit
  QuadExt(const Integer& a) : a_(Rational(a)), b_(0), d_(0) {}
  QuadExt(long a) : a_(Rational(a)), b_(0), d_(0) {}
  QuadExt(int a) : a_(Rational(a)), b_(0), d_(0) {}
  QuadExt(const Rational& a, const Rational& b, const Integer& radicand);

  // coeff * sqrt(r) as a field element, for rational r >= 0.
  static QuadExt sqrt_of(const Rational& r);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  // Rational value; DomainError when the element is irrational.
  Rational rational_value() const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  int sign() const;

  QuadExt conjugate() const;       // a - b*sqrt(D)
  Rational norm() const;           // a^2 - b^2 D
  QuadExt inverse() const;         // DivisionError on zero

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) {
    return !(x == y);
  }
  friend bool operator<(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() > 0;
  }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) {
    return (x - y).sign() >= 0;
  }

  // Largest integer <= value, computed exactly.
  Integer floor() const;

  // Exact form "a + b*sqrt(D)", e.g. "21/10 + 8/5*sqrt(2)"; plain "a" when
  // rational.
  std::string str() const;

  // Truncated decimal with `digits` places after the point.
  std::string decimal(unsigned digits) const;

  // Exact form followed by a truncated decimal, separated by " ≈ ".
  std::string approx(unsigned digits) const;

 private:
  Rational a_, b_;
  Integer d_;

  void require_same_field(const QuadExt& o) const;
};

int quad_sign(const QuadExt& x);
QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op);

std::string decimal_string(const Rational& r, unsigned digits);

// Positive square root of a non-negative field element, kept as its exact
// square. sqrt of a quadratic element generally leaves the field, so
// comparisons are done by squaring with sign bookkeeping.
class PosRoot {
 public:
  explicit PosRoot(QuadExt square);

  const QuadExt& square() const { return sq_; }

  // Whether the root stays in Q(sqrt(D)); value() is then exact.
  bool representable() const;
  QuadExt value() const;

  // Sign of (this root) - rhs.
  int compare(const QuadExt& rhs) const;
  int compare(const PosRoot& rhs) const;

  std::string decimal(unsigned digits) const;

 private:
  QuadExt sq_;
};

}  // namespace staircase
