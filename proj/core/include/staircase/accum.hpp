// The accumulation function acc(b), its two inverse branches, the volume
// constraint, and the quadratic invariant sigma.
//
// acc(b) is the root > 1 of z^2 - ((3-b)^2/(1-b^2) - 2) z + 1 = 0. Its
// inverse at a center p/q splits into an upper branch (b > 1/3) and a lower
// branch (b < 1/3):
//   b = (3pq +- (p+q) sqrt(sigma)) / (p^2 + q^2 + 3pq),
// with sigma = p^2 - 6pq + q^2. The volume constraint V_b(z) = sqrt(z/(1-b^2))
// is kept as its exact square and compared by squaring.

#pragma once

#include "staircase/exact.hpp"

namespace staircase {

enum class Branch { U, L };

struct AccPoint {
  QuadExt b;
  QuadExt z;
};

Integer sigma(const Integer& p, const Integer& q);

// Root > 1 of the accumulation equation, for rational b in [0,1).
QuadExt acc(const Rational& b);

AccPoint acc_point(const Rational& b);

// The b with acc(b) = p/q on the given branch. Domain: p/q > 3+2*sqrt(2) for
// U, and additionally p/q < (7+3*sqrt(5))/2 for L.
QuadExt acc_inv(const Integer& p, const Integer& q, Branch branch);

// V_b(z) as a positive root; V^2 = z/(1-b^2) exactly.
PosRoot vol(const QuadExt& b, const QuadExt& z);

// Whether (b,z) satisfies z^2 - ((3-b)^2/(1-b^2) - 2) z + 1 = 0 exactly,
// in denominator-cleared form. Used to verify staircase limits.
bool acc_equation_check(const QuadExt& b, const QuadExt& z);

}  // namespace staircase
