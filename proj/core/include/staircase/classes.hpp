// Quasi-perfect classes (d,m,p,q,t,eps) and their vector form.
//
// A quasi-perfect class satisfies the Diophantine system
//   3d = p + q + m,        d^2 - m^2 = pq - 1,
//   t^2 = p^2 - 6pq + q^2 + 8,
//   8d = 3(p+q) + eps*t,   8m = (p+q) + 3*eps*t,
// with t >= 1 and eps in {+1,-1}. Tuples with non-positive d, p or q
// (formal seeds of the recursion) are permitted but flagged non-geometric.

#pragma once

#include "staircase/cfrac.hpp"

#include <vector>

namespace staircase {

struct NoSolution : std::domain_error {
  using std::domain_error::domain_error;
};

struct QuasiPerfect {
  Integer d, m, p, q, t;
  int eps = 1;
  bool geometric = false;

  // Center p/q; DomainError when q = 0 (formal ray).
  Rational center() const;
  bool has_center() const { return q != 0; }

  std::string str() const;  // "(d,m,p,q,t,+1)"

  friend bool operator==(const QuasiPerfect& x, const QuasiPerfect& y) {
    return x.d == y.d && x.m == y.m && x.p == y.p && x.q == y.q &&
           x.t == y.t && x.eps == y.eps;
  }
  friend bool operator!=(const QuasiPerfect& x, const QuasiPerfect& y) {
    return !(x == y);
  }
};

// Validates the full Diophantine system (DomainError on violation), rejects
// t < 1, and for geometric tuples additionally checks gcd(p,q) = 1 and that
// eps = +1 exactly when m/d > 1/3.
QuasiPerfect make_quasi_perfect(Integer d, Integer m, Integer p, Integer q,
                                Integer t, int eps);

// The unique quasi-perfect class with center p/q, if any (Diophantine
// integrality singles out at most one eps).
QuasiPerfect from_pq(const Integer& p, const Integer& q);

bool is_quasi_perfect(const Integer& d, const Integer& m, const Integer& p,
                      const Integer& q);

// (d; n_1, ..., n_N) integer vector, for Cremona reduction. For a
// quasi-perfect source the coefficients are m followed by W(p/q).
struct ClassVector {
  Integer d;
  std::vector<Integer> coefficients;

  std::string str() const;  // "(d; n1,n2,...)"

  friend bool operator==(const ClassVector& x, const ClassVector& y) {
    return x.d == y.d && x.coefficients == y.coefficients;
  }
  friend bool operator!=(const ClassVector& x, const ClassVector& y) {
    return !(x == y);
  }
};

ClassVector to_vector(const QuasiPerfect& c);

}  // namespace staircase
