#include "staircase/classes.hpp"

#include <sstream>

namespace staircase {

Rational QuasiPerfect::center() const {
  if (q == 0) {
    throw DomainError("center: formal tuple with q = 0");
  }
  // Both p and q are negative on the formal upper seeds; the two-argument
  // rational constructor rejects negative denominators.
  return q > 0 ? Rational(p, q) : Rational(-p, -q);
}

std::string QuasiPerfect::str() const {
  std::ostringstream out;
  out << "(" << d << "," << m << "," << p << "," << q << "," << t << ","
      << (eps > 0 ? "+1" : "-1") << ")";
  return out.str();
}

QuasiPerfect make_quasi_perfect(Integer d, Integer m, Integer p, Integer q,
                                Integer t, int eps) {
  if (eps != 1 && eps != -1) {
    throw DomainError("quasi-perfect: eps must be +1 or -1");
  }
  if (t < 1) {
    throw DomainError("quasi-perfect: t must be positive");
  }
  if (3 * d != p + q + m) {
    throw DomainError("quasi-perfect: 3d = p+q+m fails");
  }
  if (d * d - m * m != p * q - 1) {
    throw DomainError("quasi-perfect: d^2-m^2 = pq-1 fails");
  }
  if (t * t != p * p - 6 * p * q + q * q + 8) {
    throw DomainError("quasi-perfect: t^2 = p^2-6pq+q^2+8 fails");
  }
  if (8 * d != 3 * (p + q) + eps * t || 8 * m != (p + q) + 3 * eps * t) {
    throw DomainError("quasi-perfect: (d,m) do not match eps and t");
  }
  QuasiPerfect c{std::move(d), std::move(m), std::move(p), std::move(q),
                 std::move(t), eps, false};
  c.geometric = c.d > 0 && c.p > 0 && c.q > 0 && c.m >= 0;
  if (c.geometric) {
    if (gcd(c.p, c.q) != 1) {
      throw DomainError("quasi-perfect: geometric tuple needs gcd(p,q) = 1");
    }
    if ((c.eps > 0) != (3 * c.m > c.d)) {
      throw DomainError("quasi-perfect: eps must match the side of m/d = 1/3");
    }
  }
  return c;
}

QuasiPerfect from_pq(const Integer& p, const Integer& q) {
  if (q < 1 || p <= q) {
    throw DomainError("from_pq: needs p > q >= 1");
  }
  if (gcd(p, q) != 1) {
    throw DomainError("from_pq: needs gcd(p,q) = 1");
  }
  const Integer t2 = p * p - 6 * p * q + q * q + 8;
  if (t2 < 0) {
    throw NoSolution("from_pq: t^2 = " + t2.str() + " < 0 at " + p.str() +
                     "/" + q.str());
  }
  const Integer t = isqrt_floor(t2);
  if (t * t != t2 || t == 0) {
    throw NoSolution("from_pq: t^2 = " + t2.str() + " is not a positive square");
  }
  for (const int eps : {1, -1}) {
    const Integer d8 = 3 * (p + q) + eps * t;
    const Integer m8 = (p + q) + 3 * eps * t;
    if (d8 % 8 == 0 && m8 % 8 == 0) {
      return make_quasi_perfect(d8 / 8, m8 / 8, p, q, t, eps);
    }
  }
  throw NoSolution("from_pq: neither eps gives integral (d,m) at " + p.str() +
                   "/" + q.str());
}

bool is_quasi_perfect(const Integer& d, const Integer& m, const Integer& p,
                      const Integer& q) {
  return 3 * d == p + q + m && d * d - m * m == p * q - 1;
}

std::string ClassVector::str() const {
  std::ostringstream out;
  out << "(" << d << ";";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out << (i == 0 ? " " : ",") << coefficients[i];
  }
  out << ")";
  return out.str();
}

ClassVector to_vector(const QuasiPerfect& c) {
  if (!c.geometric) {
    throw DomainError("to_vector: non-geometric tuple");
  }
  ClassVector v;
  v.d = c.d;
  v.coefficients.push_back(c.m);
  for (const Integer& w : weight_expansion(c.p, c.q).entries) {
    v.coefficients.push_back(w);
  }
  return v;
}

}  // namespace staircase
