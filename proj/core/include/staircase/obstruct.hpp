// Obstruction functions of quasi-perfect classes. A geometric class (d,m,p,q)
// obstructs the embedding problem at (b,z) through
//   mu(b,z) = q z / (d - m b)   for z <= p/q,
//             p   / (d - m b)   for z >= p/q,
// and it blocks when mu exceeds the volume bound sqrt(z/(1-b^2)). A class is
// center-blocking when this happens at its own accumulation point, i.e. at
// b with acc(b) = p/q on the branch matching eps.

#pragma once

#include "staircase/accum.hpp"
#include "staircase/classes.hpp"
#include "staircase/families.hpp"

#include <string>

namespace staircase {

// Obstruction value of a geometric class at (b,z); needs d - m b > 0,
// b in [0,1), z >= 1.
QuadExt mu(const QuasiPerfect& c, const QuadExt& b, const QuadExt& z);

// Whether mu exceeds the volume bound at (b,z), compared exactly.
bool is_obstructive(const QuasiPerfect& c, const QuadExt& b, const QuadExt& z);

// The b at which the class's own center is the accumulation point, i.e.
// acc_inv(p, q, U) for eps = +1 and acc_inv(p, q, L) for eps = -1.
// Needs sigma(p,q) > 0.
QuadExt own_b(const QuasiPerfect& c);

// Whether the class obstructs at (own_b, p/q).
bool is_center_blocking(const QuasiPerfect& c);

// One-line verdict for reports: "CENTER-BLOCKING ok: (d,m,p,q,t,eps)".
std::string center_blocking_report(const QuasiPerfect& c);

// z where the obstruction meets the volume bound at b = m/d, in closed form
// (p^2+1)/(pq-1); needs pq > 1.
Rational break_point_at_own_b(const QuasiPerfect& c);

// Whether a perfect class can still contribute an obstruction at b:
// (b d - m)^2 < 1 - b^2.
bool live_candidate(const QuasiPerfect& c, const QuadExt& b);

// The interval around a blocking class where it beats the volume bound,
// bounded by the two staircases accumulating on it from below and above.
struct BlockedInterval {
  QuasiPerfect block;
  QuadExt b_lo, b_hi;  // accumulation b of the two staircases, ordered
  QuadExt z_lo, z_hi;  // z limits of the ascending / descending staircase
};

// Checks that asc and desc are the two staircases of the given blocking
// class (matching block, directions, and the step relations
// m_B m_k = d_B d_k - q_B p_k ascending, m_B m_k = d_B d_k - p_B q_k
// descending) and returns the interval data. DomainError on mismatch.
BlockedInterval blocked_interval(const QuasiPerfect& block,
                                 const PreStaircase& asc,
                                 const PreStaircase& desc);

}  // namespace staircase
