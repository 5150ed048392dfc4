// Pre-staircase families. A family is a pair (T, base) with T in the shift
// monoid and base one of the two seed ladders (U or L). It carries a ladder
// of blocking classes blocking(n) = T#(B_n) and two staircase seeds per
// blocking class. A pre-staircase is the componentwise Diophantine recursion
// x_{k+1} = nu*x_k - x_{k-1} on (d,m,p,q,t) started from the side seed and
// the adjacent blocking class, with nu = t of the blocked class.
//
// limits() gives the accumulation data (z and b limits in Q(sqrt(nu^2-4))),
// monotonicity() the trend of the ratios m_k/d_k, and liveness() the
// arithmetic criterion deciding Live / Unknown.

#pragma once

#include "staircase/accum.hpp"
#include "staircase/classes.hpp"
#include "staircase/symmetry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace staircase {

// Raised when a staircase has constant ratios m_k/d_k and no trend exists.
struct Degenerate : std::domain_error {
  using std::domain_error::domain_error;
};

// The (p,q,t) part of a class, carrying the quadratic form data of the
// recursion.
struct SeedTriple {
  Integer p, q, t;

  static SeedTriple of(const QuasiPerfect& c) { return {c.p, c.q, c.t}; }

  friend bool operator==(const SeedTriple& x, const SeedTriple& y) {
    return x.p == y.p && x.q == y.q && x.t == y.t;
  }
  friend bool operator!=(const SeedTriple& x, const SeedTriple& y) {
    return !(x == y);
  }
};

// -p^2 - q^2 + 6pq + t^2; equals 8 on every quasi-perfect tuple.
Integer quad_form(const SeedTriple& x);

// Polarization -p1*p0 - q1*q0 + 3(p1*q0 + q1*p0) + t1*t0; equals 4*nu for
// consecutive members of a nu-recursion.
Integer quad_pair(const SeedTriple& x, const SeedTriple& y);

// x0, x1, then count further terms of x_{k+1} = nu*x_k - x_{k-1}.
std::vector<Integer> recurse(const Integer& x0, const Integer& x1,
                             const Integer& nu, std::size_t count);
std::vector<SeedTriple> recurse(const SeedTriple& x0, const SeedTriple& x1,
                                const Integer& nu, std::size_t count);

// Side of the blocking class a staircase lives on.
enum class Side { lower, upper };

// Trend of the step centers p_k/q_k in a staircase.
enum class Direction { ascending, descending };

std::string str(Side s);
std::string str(Direction d);

// B^U_n = (n+3, n+2, 2n+6, 1, 2n+3, +1), n >= 0.
QuasiPerfect upper_blocking(unsigned long n);
// B^L_n = (5n, n-1, 12n+1, 2n, 2n+3, -1); n = 0 gives the formal tuple
// (0, -1, 1, 0, 3, -1).
QuasiPerfect lower_blocking(unsigned long n);
QuasiPerfect base_blocking(Branch base, unsigned long n);

// The four staircase seeds of the two base families.
QuasiPerfect base_seed(Branch base, Side side);

struct Family {
  GroupElem T;
  Branch base = Branch::U;
  QuasiPerfect seed_lower, seed_upper;
  // Whether the centers of blocking(n) increase with n.
  bool centers_ascend = true;

  QuasiPerfect blocking(unsigned long n) const;

  // The element U with blocking(n) = U#(B^U_n): T itself for base U, T*R
  // for base L. Classifies which ladder interval the limits fall into.
  GroupElem effective_shift() const;

  std::string str() const;  // "(S^2 R, U)"
};

Family make_family(const GroupElem& T, Branch base);

struct Provenance {
  Branch base = Branch::U;
  Side side = Side::lower;
  unsigned long n = 0;
  GroupElem T;
};

struct PreStaircase {
  Integer nu;
  QuasiPerfect seed0, seed1;
  Direction direction = Direction::ascending;
  QuasiPerfect block;
  // seed0, seed1, then the recursed steps; length count + 2.
  std::vector<QuasiPerfect> steps;
  Provenance provenance;
};

// Staircase on the given side of blocking(n). The second seed is the
// neighbouring blocking class on that side; at the bottom of the ladder
// (no neighbour) this throws DomainError.
PreStaircase build_staircase(const Family& fam, unsigned long n, Side side,
                             std::size_t count);

// Limit data of the recursion in Q(sqrt(sigma)), sigma = nu^2 - 4. Each
// coordinate x_k = X*lambda^k + conj, lambda = (nu + sqrt(sigma))/2, with
// leading coefficient X = x0/2 + (2*x1 - nu*x0)/(2*sigma) * sqrt(sigma).
struct StaircaseLimits {
  QuadExt d_coeff, m_coeff, p_coeff, q_coeff;
  QuadExt z_inf;  // p_coeff / q_coeff, limit of the centers
  QuadExt b_inf;  // m_coeff / d_coeff, limit of m_k/d_k
  bool z_irrational = false;
};

StaircaseLimits limits(const PreStaircase& sc);

enum class Monotone { increasing, decreasing };

// Trend of m_k/d_k, read off the constant Wronskian m1*d0 - m0*d1.
// Degenerate when the Wronskian vanishes.
Monotone monotonicity(const PreStaircase& sc);

// For z-descending staircases: (3D - M)*sqrt(sigma) + W*(3M - D) > 0 with
// D, M the limit coefficients and W = m1*d0 - m0*d1 the Wronskian. The one
// historical staircase needing the sharper constant 34/35 on the Wronskian
// term gets it here, so this public check holds for every family staircase.
bool slope_condition(const PreStaircase& sc);

enum class Liveness { Live, Unknown };

std::string str(Liveness l);

// Arithmetic liveness: Live when all steps are perfect (caller-supplied),
// nu >= 3, the limit z is irrational, the ratios m_k/d_k trend toward 1/3
// from the correct side, and (for z-descending staircases) the plain slope
// bound holds. Anything else is Unknown; the criterion never rules out.
Liveness liveness(const PreStaircase& sc, bool all_perfect);

// Strand s of the ladder accumulating at b = 1/3: the shift orbit of the
// class with center 2, 4 or 5 (s = 0, 1, 2).
std::vector<QuasiPerfect> one_third_strand(unsigned long strand,
                                           std::size_t count);

// The backbone ladder at b = 1/3: classes.size() = rows iterated from
// (1,1,1,1,2,+1) under the shift, with g one entry longer so that row k has
// center g[k+1]/g[k].
struct OneThirdTable {
  std::vector<Integer> g;
  std::vector<QuasiPerfect> classes;
};

OneThirdTable one_third_table(std::size_t rows);

}  // namespace staircase
