#include "staircase/accum.hpp"

namespace staircase {

Integer sigma(const Integer& p, const Integer& q) {
  return p * p - 6 * p * q + q * q;
}

QuadExt acc(const Rational& b) {
  if (b < 0 || b >= 1) {
    throw DomainError("acc: b must lie in [0,1)");
  }
  const Rational c =
      (3 - b) * (3 - b) / (1 - b * b) - 2;  // trace of the equation
  // z = (c + sqrt(c^2-4))/2; c >= 6 on [0,1) so the radicand is >= 0.
  return QuadExt(c / 2) + QuadExt::sqrt_of(c * c / 4 - 1);
}

AccPoint acc_point(const Rational& b) { return {QuadExt(b), acc(b)}; }

QuadExt acc_inv(const Integer& p, const Integer& q, Branch branch) {
  if (q < 1 || p <= q) {
    throw DomainError("acc_inv: needs p > q >= 1");
  }
  if (gcd(p, q) != 1) {
    throw DomainError("acc_inv: needs gcd(p,q) = 1");
  }
  const Integer s = sigma(p, q);
  if (s <= 0) {
    throw DomainError("acc_inv: center " + p.str() + "/" + q.str() +
                      " is not above 3+2*sqrt(2)");
  }
  if (branch == Branch::L) {
    // p/q <= (7+3*sqrt(5))/2 means 2p-7q < 3*sqrt(5)*q; equality cannot
    // occur since 45 is not a square.
    const Integer e = 2 * p - 7 * q;
    if (e > 0 && e * e > 45 * q * q) {
      throw DomainError("acc_inv: center " + p.str() + "/" + q.str() +
                        " is beyond the lower-branch domain");
    }
  }
  const Rational den(p * p + q * q + 3 * p * q);
  const Rational a = Rational(3 * p * q) / den;
  Rational c = Rational(p + q) / den;
  if (branch == Branch::L) {
    c = -c;
  }
  return QuadExt(a, c, s);
}

PosRoot vol(const QuadExt& b, const QuadExt& z) {
  if (b.sign() < 0 || (b - QuadExt(1)).sign() >= 0) {
    throw DomainError("vol: b must lie in [0,1)");
  }
  if ((z - QuadExt(1)).sign() < 0) {
    throw DomainError("vol: z must be >= 1");
  }
  return PosRoot(z / (QuadExt(1) - b * b));
}

bool acc_equation_check(const QuadExt& b, const QuadExt& z) {
  const QuadExt one(1);
  const QuadExt bb = one - b * b;
  const QuadExt tr = (QuadExt(3) - b) * (QuadExt(3) - b) - QuadExt(2) * bb;
  return (z * z * bb - tr * z + bb).is_zero();
}

}  // namespace staircase
