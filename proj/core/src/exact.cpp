#include "staircase/exact.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace staircase {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

Integer pow10(unsigned digits) {
  Integer p = 1;
  for (unsigned i = 0; i < digits; ++i) {
    p *= 10;
  }
  return p;
}

// Sign of A + B*sqrt(D) for integers A, B and squarefree D >= 0.
int sign_int_pair(const Integer& A, const Integer& B, const Integer& D) {
  const Integer Bd = B * B * D;
  if (Bd == 0) {
    return A.sign();
  }
  if (A == 0) {
    return B.sign();
  }
  if (A.sign() == B.sign()) {
    return A.sign();
  }
  const Integer Aa = A * A;
  if (Aa == Bd) {
    return 0;
  }
  if (A > 0) {  // B < 0
    return Aa > Bd ? 1 : -1;
  }
  return Aa > Bd ? -1 : 1;  // A < 0, B > 0
}

bool probably_prime(const Integer& n) {
  static thread_local std::mt19937_64 gen(0x51a1bca5eULL);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
  if (n % 2 == 0) {
    return 2;
  }
  while (true) {
    Integer y = Integer(rng()) % (n - 1) + 1;
    Integer c = Integer(rng()) % (n - 1) + 1;
    Integer x = y, ys = y, g = 1, q = 1, r = 1;
    const long m = 128;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) {
        y = (y * y + c) % n;
      }
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        const Integer lim = std::min<Integer>(Integer(m), r - k);
        for (Integer i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) {
      return g;
    }
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out,
                 std::mt19937_64& rng) {
  if (n <= 1) {
    return;
  }
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  if (is_square(n)) {
    const Integer r = isqrt_floor(n);
    std::map<Integer, unsigned> half;
    factor_into(r, half, rng);
    for (const auto& [p, e] : half) {
      out[p] += 2 * e;
    }
    return;
  }
  const Integer d = pollard_brent(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

std::map<Integer, unsigned> factor(Integer n) {
  std::map<Integer, unsigned> out;
  for (Integer p : {Integer(2), Integer(3), Integer(5)}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  // 2/3/5 wheel up to 10^4, then probabilistic splitting.
  static const int wheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
  Integer p = 7;
  int w = 0;
  while (p <= 10000 && p * p <= n) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
    p += wheel[w];
    w = (w + 1) % 8;
  }
  if (n > 1 && p * p > n) {
    ++out[n];
    return out;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  factor_into(n, out, rng);
  return out;
}

std::string format_decimal(int sign, const Integer& scaled, unsigned digits) {
  const Integer scale = pow10(digits);
  const Integer ip = scaled / scale;
  const Integer fp = scaled % scale;
  std::string s = sign < 0 ? "-" : "";
  s += ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    s += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return s;
}

}  // namespace

Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) {
    throw DomainError("isqrt_floor: negative input");
  }
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) {
    return false;
  }
  const Integer r = isqrt_floor(n);
  return r * r == n;
}

bool is_square(const Rational& r) {
  return r >= 0 && is_square(numerator(r)) && is_square(denominator(r));
}

Rational sqrt_exact(const Rational& r) {
  if (!is_square(r)) {
    throw DomainError("sqrt_exact: not a perfect square");
  }
  return Rational(isqrt_floor(numerator(r)), isqrt_floor(denominator(r)));
}

Integer square_part(const Integer& n) {
  if (n <= 0) {
    throw DomainError("square_part: non-positive input");
  }
  Integer s = 1;
  for (const auto& [p, e] : factor(n)) {
    for (unsigned i = 0; i < e / 2; ++i) {
      s *= p;
    }
  }
  return s;
}

std::pair<Rational, Integer> sqrt_decompose(const Rational& r) {
  if (r <= 0) {
    throw DomainError("sqrt_decompose: non-positive input");
  }
  const Integer num = numerator(r), den = denominator(r);
  // sqrt(num/den) = sqrt(num*den)/den keeps everything integral.
  const Integer m = num * den;
  const Integer s = square_part(m);
  return {Rational(s, den), m / (s * s)};
}

QuadExt::QuadExt(const Rational& a, const Rational& b, const Integer& radicand)
    : a_(a), b_(b), d_(radicand) {
  if (d_ < 0) {
    throw DomainError("QuadExt: negative radicand");
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  const Integer s = square_part(d_);
  if (s != 1) {
    b_ *= Rational(s);
    d_ /= s * s;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
  if (r < 0) {
    throw DomainError("sqrt_of: negative input");
  }
  if (r == 0) {
    return QuadExt();
  }
  const auto [coeff, radicand] = sqrt_decompose(r);
  return QuadExt(Rational(0), coeff, radicand);
}

Rational QuadExt::rational_value() const {
  if (!is_rational()) {
    throw DomainError("rational_value: irrational element");
  }
  return a_;
}

int QuadExt::sign() const {
  if (b_ == 0) {
    return a_.sign();
  }
  if (a_ == 0) {
    return b_.sign();
  }
  if (a_.sign() == b_.sign()) {
    return a_.sign();
  }
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) {
    return 0;
  }
  if (a_ > 0) {  // b < 0
    return lhs > rhs ? 1 : -1;
  }
  return lhs > rhs ? -1 : 1;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r(*this);
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) {
    throw DivisionError("inverse of zero");
  }
  const Rational n = norm();
  QuadExt r(*this);
  r.a_ /= n;
  r.b_ = -r.b_ / n;
  return r;
}

QuadExt QuadExt::operator-() const {
  QuadExt r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

void QuadExt::require_same_field(const QuadExt& o) const {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) {
    throw FieldError("mixed radicands " + d_.str() + " and " + o.d_.str());
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) {
    d_ = o.d_;
  }
  if (b_ == 0) {
    d_ = 0;
  }
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (d_ == 0) {
    d_ = o.d_;
  }
  if (b_ == 0) {
    d_ = 0;
  }
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_field(o);
  const Integer d = d_ != 0 ? d_ : o.d_;
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = b == 0 ? Integer(0) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) {
    throw DivisionError("division by zero");
  }
  return *this *= o.inverse();
}

Integer QuadExt::floor() const {
  const Integer an = numerator(a_), ad = denominator(a_);
  const Integer bn = numerator(b_), bd = denominator(b_);
  const Integer L = ad * bd;
  const Integer P = an * bd;
  const Integer R = bn * ad;
  if (R == 0) {
    return floor_div(P, L);
  }
  // (P + R*sqrt(D))/L; bracket R*sqrt(D) by integer square roots, then
  // correct the candidate with exact comparisons.
  const Integer t = isqrt_floor(R * R * d_);
  Integer f = floor_div(R > 0 ? Integer(P + t) : Integer(P - t - 1), L);
  auto value_minus = [&](const Integer& g) {
    return sign_int_pair(P - L * g, R, d_);
  };
  while (value_minus(f) < 0) {
    --f;
  }
  while (value_minus(f + 1) >= 0) {
    ++f;
  }
  return f;
}

namespace {

std::string rational_str(const Rational& r) {
  const Integer num = numerator(r), den = denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

}  // namespace

std::string QuadExt::str() const {
  if (is_rational()) {
    return rational_str(a_);
  }
  const std::string root =
      rational_str(boost::multiprecision::abs(b_)) + "*sqrt(" + d_.str() + ")";
  if (a_ == 0) {
    return (b_ < 0 ? "-" : "") + root;
  }
  return rational_str(a_) + (b_ < 0 ? " - " : " + ") + root;
}

std::string QuadExt::decimal(unsigned digits) const {
  const int s = sign();
  if (s == 0) {
    return format_decimal(0, Integer(0), digits);
  }
  const QuadExt abs_scaled =
      (s < 0 ? -*this : *this) * QuadExt(Rational(pow10(digits)));
  return format_decimal(s, abs_scaled.floor(), digits);
}

std::string QuadExt::approx(unsigned digits) const {
  return str() + " ≈ " + decimal(digits);
}

int quad_sign(const QuadExt& x) { return x.sign(); }

QuadExt quad_arith(const QuadExt& x, const QuadExt& y, QuadOp op) {
  switch (op) {
    case QuadOp::add:
      return x + y;
    case QuadOp::sub:
      return x - y;
    case QuadOp::mul:
      return x * y;
    case QuadOp::div:
      return x / y;
  }
  throw DomainError("quad_arith: bad op");
}

std::string decimal_string(const Rational& r, unsigned digits) {
  const int s = r.sign();
  const Rational a = s < 0 ? Rational(-r) : r;
  const Integer scaled =
      floor_div(numerator(a) * pow10(digits), denominator(a));
  return format_decimal(s, scaled, digits);
}

PosRoot::PosRoot(QuadExt square) : sq_(std::move(square)) {
  if (sq_.sign() < 0) {
    throw DomainError("PosRoot: negative square");
  }
}

bool PosRoot::representable() const { return sq_.is_rational(); }

QuadExt PosRoot::value() const {
  if (!representable()) {
    throw DomainError("PosRoot: root leaves the field");
  }
  return QuadExt::sqrt_of(sq_.rational_value());
}

int PosRoot::compare(const QuadExt& rhs) const {
  const int rs = rhs.sign();
  if (sq_.is_zero()) {
    return rs > 0 ? -1 : (rs == 0 ? 0 : 1);
  }
  if (rs <= 0) {
    return 1;
  }
  return (sq_ - rhs * rhs).sign();
}

int PosRoot::compare(const PosRoot& rhs) const {
  return (sq_ - rhs.sq_).sign();
}

std::string PosRoot::decimal(unsigned digits) const {
  const QuadExt scaled_sq =
      sq_ * QuadExt(Rational(pow10(digits) * pow10(digits)));
  Integer t = isqrt_floor(scaled_sq.floor());
  auto square_cmp = [&](const Integer& g) {
    return (QuadExt(Rational(g * g)) - scaled_sq).sign();
  };
  while (square_cmp(t) > 0) {
    --t;
  }
  while (square_cmp(t + 1) <= 0) {
    ++t;
  }
  return format_decimal(t == 0 ? 0 : 1, t, digits);
}

}  // namespace staircase
