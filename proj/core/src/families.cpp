#include "staircase/families.hpp"

#include <utility>

namespace staircase {

Integer quad_form(const SeedTriple& x) {
  return -x.p * x.p - x.q * x.q + 6 * x.p * x.q + x.t * x.t;
}

Integer quad_pair(const SeedTriple& x, const SeedTriple& y) {
  return -y.p * x.p - y.q * x.q + 3 * (y.p * x.q + y.q * x.p) + y.t * x.t;
}

std::vector<Integer> recurse(const Integer& x0, const Integer& x1,
                             const Integer& nu, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count + 2);
  out.push_back(x0);
  out.push_back(x1);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(nu * out[out.size() - 1] - out[out.size() - 2]);
  }
  return out;
}

std::vector<SeedTriple> recurse(const SeedTriple& x0, const SeedTriple& x1,
                                const Integer& nu, std::size_t count) {
  std::vector<SeedTriple> out;
  out.reserve(count + 2);
  out.push_back(x0);
  out.push_back(x1);
  for (std::size_t k = 0; k < count; ++k) {
    const SeedTriple& a = out[out.size() - 2];
    const SeedTriple& b = out[out.size() - 1];
    out.push_back({nu * b.p - a.p, nu * b.q - a.q, nu * b.t - a.t});
  }
  return out;
}

std::string str(Side s) { return s == Side::lower ? "lower" : "upper"; }

std::string str(Direction d) {
  return d == Direction::ascending ? "ascending" : "descending";
}

std::string str(Liveness l) { return l == Liveness::Live ? "Live" : "Unknown"; }

QuasiPerfect upper_blocking(unsigned long n) {
  const Integer k(n);
  return make_quasi_perfect(k + 3, k + 2, 2 * k + 6, 1, 2 * k + 3, 1);
}

QuasiPerfect lower_blocking(unsigned long n) {
  const Integer k(n);
  return make_quasi_perfect(5 * k, k - 1, 12 * k + 1, 2 * k, 2 * k + 3, -1);
}

QuasiPerfect base_blocking(Branch base, unsigned long n) {
  return base == Branch::U ? upper_blocking(n) : lower_blocking(n);
}

QuasiPerfect base_seed(Branch base, Side side) {
  if (base == Branch::U) {
    return side == Side::lower ? make_quasi_perfect(1, 1, 1, 1, 2, 1)
                               : make_quasi_perfect(-2, 0, -5, -1, 2, 1);
  }
  return side == Side::lower ? make_quasi_perfect(2, 0, 5, 1, 2, -1)
                             : make_quasi_perfect(-13, -5, -29, -5, 2, -1);
}

QuasiPerfect Family::blocking(unsigned long n) const {
  return sharp(T, base_blocking(base, n));
}

GroupElem Family::effective_shift() const {
  return base == Branch::U ? T : compose(T, group_R());
}

std::string Family::str() const {
  return "(" + T.str() + ", " + (base == Branch::U ? "U" : "L") + ")";
}

Family make_family(const GroupElem& T, Branch base) {
  Family fam;
  fam.T = T;
  fam.base = base;
  // Reflections swap which seed sits below and which above the ladder.
  const bool swap = T.delta != 0;
  fam.seed_lower =
      sharp(T, base_seed(base, swap ? Side::upper : Side::lower));
  fam.seed_upper =
      sharp(T, base_seed(base, swap ? Side::lower : Side::upper));
  fam.centers_ascend = (base == Branch::U) != (T.delta != 0);
  return fam;
}

PreStaircase build_staircase(const Family& fam, unsigned long n, Side side,
                             std::size_t count) {
  // The second seed is the neighbouring blocking class on the chosen side:
  // index n-1 when that side is where the smaller indices accumulate.
  const bool neighbour_below = (side == Side::lower) == fam.centers_ascend;
  if (neighbour_below && n == 0) {
    throw DomainError("build_staircase: family " + fam.str() +
                      " has no blocking class below index 0");
  }
  const unsigned long adjacent = neighbour_below ? n - 1 : n + 1;

  PreStaircase sc;
  sc.block = fam.blocking(n);
  sc.nu = sc.block.t;
  sc.seed0 = side == Side::lower ? fam.seed_lower : fam.seed_upper;
  sc.seed1 = fam.blocking(adjacent);
  if (sc.seed0.eps != sc.seed1.eps) {
    throw DomainError("build_staircase: seed signs differ in " + fam.str());
  }
  sc.direction =
      side == Side::lower ? Direction::ascending : Direction::descending;
  sc.provenance = Provenance{fam.base, side, n, fam.T};

  sc.steps.reserve(count + 2);
  sc.steps.push_back(sc.seed0);
  sc.steps.push_back(sc.seed1);
  for (std::size_t k = 0; k < count; ++k) {
    const QuasiPerfect& a = sc.steps[sc.steps.size() - 2];
    const QuasiPerfect& b = sc.steps[sc.steps.size() - 1];
    sc.steps.push_back(make_quasi_perfect(
        sc.nu * b.d - a.d, sc.nu * b.m - a.m, sc.nu * b.p - a.p,
        sc.nu * b.q - a.q, sc.nu * b.t - a.t, sc.seed0.eps));
  }
  return sc;
}

namespace {

// Leading coefficient of x_k = X*lambda^k + conjugate for the nu-recursion,
// lambda = (nu + sqrt(sigma))/2.
QuadExt leading_coeff(const Integer& x0, const Integer& x1, const Integer& nu,
                      const Integer& sigma) {
  return QuadExt(Rational(x0, 2), Rational(2 * x1 - nu * x0, 2 * sigma),
                 sigma);
}

}  // namespace

StaircaseLimits limits(const PreStaircase& sc) {
  if (sc.nu < 3) {
    throw DomainError("limits: recursion parameter must be at least 3");
  }
  const Integer sigma = sc.nu * sc.nu - 4;
  const QuasiPerfect& s0 = sc.steps.at(0);
  const QuasiPerfect& s1 = sc.steps.at(1);
  StaircaseLimits lim;
  lim.d_coeff = leading_coeff(s0.d, s1.d, sc.nu, sigma);
  lim.m_coeff = leading_coeff(s0.m, s1.m, sc.nu, sigma);
  lim.p_coeff = leading_coeff(s0.p, s1.p, sc.nu, sigma);
  lim.q_coeff = leading_coeff(s0.q, s1.q, sc.nu, sigma);
  if (lim.q_coeff.is_zero()) {
    throw DomainError("limits: q limit vanishes");
  }
  if (lim.d_coeff.is_zero()) {
    throw DomainError("limits: d limit vanishes");
  }
  lim.z_inf = lim.p_coeff / lim.q_coeff;
  lim.b_inf = lim.m_coeff / lim.d_coeff;
  lim.z_irrational = !lim.z_inf.is_rational();
  return lim;
}

namespace {

Integer wronskian(const PreStaircase& sc) {
  const QuasiPerfect& s0 = sc.steps.at(0);
  const QuasiPerfect& s1 = sc.steps.at(1);
  return s1.m * s0.d - s0.m * s1.d;
}

bool slope_holds(const PreStaircase& sc, bool sharpened) {
  if (sc.direction != Direction::descending) {
    throw DomainError("slope_condition: staircase must be z-descending");
  }
  const Integer sigma = sc.nu * sc.nu - 4;
  const StaircaseLimits lim = limits(sc);
  const QuadExt big = QuadExt(3) * lim.d_coeff - lim.m_coeff;
  const QuadExt small = QuadExt(3) * lim.m_coeff - lim.d_coeff;
  // (3D - M) + (W/sqrt(sigma))*(3M - D) > 0; the Wronskian term carries the
  // factor 34/35 when the sharper bound is needed. Writing W/sqrt(sigma) as
  // (W/sigma)*sqrt(sigma) keeps everything inside Q(sqrt(sigma)).
  Rational wcoef(wronskian(sc), sigma);
  if (sharpened) {
    wcoef *= Rational(34, 35);
  }
  const QuadExt wterm(Rational(0), wcoef, sigma);
  return (big + wterm * small).sign() > 0;
}

// The one staircase of the base families whose slope bound needs the
// sharper constant.
bool needs_sharpened_bound(const PreStaircase& sc) {
  static const QuasiPerfect a = make_quasi_perfect(-2, 0, -5, -1, 2, 1);
  static const QuasiPerfect b = make_quasi_perfect(4, 3, 8, 1, 5, 1);
  return sc.steps.size() >= 2 && sc.steps[0] == a && sc.steps[1] == b;
}

}  // namespace

Monotone monotonicity(const PreStaircase& sc) {
  const Integer w = wronskian(sc);
  if (w == 0) {
    throw Degenerate("monotonicity: constant ratios m_k/d_k");
  }
  return w > 0 ? Monotone::increasing : Monotone::decreasing;
}

bool slope_condition(const PreStaircase& sc) {
  return slope_holds(sc, needs_sharpened_bound(sc));
}

Liveness liveness(const PreStaircase& sc, bool all_perfect) {
  if (!all_perfect || sc.nu < 3) {
    return Liveness::Unknown;
  }
  const StaircaseLimits lim = limits(sc);
  if (!lim.z_irrational) {
    return Liveness::Unknown;
  }
  Monotone trend = Monotone::increasing;
  try {
    trend = monotonicity(sc);
  } catch (const Degenerate&) {
    return Liveness::Unknown;
  }
  const int side = (lim.b_inf - QuadExt(Rational(1, 3))).sign();
  if (side == 0) {
    return Liveness::Unknown;
  }
  const Monotone wanted = side > 0 ? Monotone::decreasing : Monotone::increasing;
  if (trend != wanted) {
    return Liveness::Unknown;
  }
  if (sc.direction == Direction::descending && !slope_holds(sc, false)) {
    return Liveness::Unknown;
  }
  return Liveness::Live;
}

std::vector<QuasiPerfect> one_third_strand(unsigned long strand,
                                           std::size_t count) {
  Integer p;
  switch (strand) {
    case 0:
      p = 2;
      break;
    case 1:
      p = 4;
      break;
    case 2:
      p = 5;
      break;
    default:
      throw DomainError("one_third_strand: strand index must be 0, 1 or 2");
  }
  std::vector<QuasiPerfect> out;
  out.reserve(count);
  if (count == 0) {
    return out;
  }
  out.push_back(from_pq(p, 1));
  const GroupElem s = group_S();
  for (std::size_t k = 1; k < count; ++k) {
    out.push_back(sharp(s, out.back()));
  }
  return out;
}

OneThirdTable one_third_table(std::size_t rows) {
  OneThirdTable table;
  table.g.reserve(rows + 1);
  Integer prev = 1;
  Integer cur = 1;
  table.g.push_back(prev);
  for (std::size_t k = 0; k < rows; ++k) {
    table.g.push_back(cur);
    const Integer next = 6 * cur - prev;
    prev = cur;
    cur = next;
  }
  table.classes.reserve(rows);
  if (rows == 0) {
    return table;
  }
  table.classes.push_back(make_quasi_perfect(1, 1, 1, 1, 2, 1));
  const GroupElem s = group_S();
  for (std::size_t k = 1; k < rows; ++k) {
    table.classes.push_back(sharp(s, table.classes.back()));
  }
  return table;
}

}  // namespace staircase
