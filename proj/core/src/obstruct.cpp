#include "staircase/obstruct.hpp"

namespace staircase {

namespace {

QuadExt denominator_at(const QuasiPerfect& c, const QuadExt& b) {
  const QuadExt den = QuadExt(c.d) - QuadExt(c.m) * b;
  if (den.sign() <= 0) {
    throw DomainError("mu: d - m b must be positive for " + c.str());
  }
  return den;
}

}  // namespace

QuadExt mu(const QuasiPerfect& c, const QuadExt& b, const QuadExt& z) {
  if (!c.geometric) {
    throw DomainError("mu: class " + c.str() + " is not geometric");
  }
  if (b.sign() < 0 || b >= QuadExt(1)) {
    throw DomainError("mu: b must lie in [0,1)");
  }
  if (z < QuadExt(1)) {
    throw DomainError("mu: z must be at least 1");
  }
  const QuadExt den = denominator_at(c, b);
  const QuadExt center(Rational(c.p, c.q));
  if (z <= center) {
    return QuadExt(c.q) * z / den;
  }
  return QuadExt(c.p) / den;
}

bool is_obstructive(const QuasiPerfect& c, const QuadExt& b,
                    const QuadExt& z) {
  return vol(b, z).compare(mu(c, b, z)) < 0;
}

QuadExt own_b(const QuasiPerfect& c) {
  if (sigma(c.p, c.q) <= 0) {
    throw DomainError("own_b: sigma(p,q) must be positive for " + c.str());
  }
  return acc_inv(c.p, c.q, c.eps > 0 ? Branch::U : Branch::L);
}

bool is_center_blocking(const QuasiPerfect& c) {
  const QuadExt b = own_b(c);
  return is_obstructive(c, b, QuadExt(Rational(c.p, c.q)));
}

std::string center_blocking_report(const QuasiPerfect& c) {
  return (is_center_blocking(c) ? "CENTER-BLOCKING ok: "
                                : "CENTER-BLOCKING FAIL: ") +
         c.str();
}

Rational break_point_at_own_b(const QuasiPerfect& c) {
  if (c.p * c.q <= 1) {
    throw DomainError("break_point_at_own_b: needs p q > 1 for " + c.str());
  }
  return Rational(c.p * c.p + 1, c.p * c.q - 1);
}

bool live_candidate(const QuasiPerfect& c, const QuadExt& b) {
  const QuadExt gap = b * QuadExt(c.d) - QuadExt(c.m);
  return gap * gap < QuadExt(1) - b * b;
}

namespace {

void require_step_relation(const QuasiPerfect& block, const PreStaircase& sc,
                           bool ascending) {
  for (const QuasiPerfect& s : sc.steps) {
    const Integer lhs = block.m * s.m;
    const Integer rhs = ascending ? block.d * s.d - block.q * s.p
                                  : block.d * s.d - block.p * s.q;
    if (lhs != rhs) {
      throw DomainError("blocked_interval: step " + s.str() +
                        " fails the linear relation against " + block.str());
    }
  }
}

}  // namespace

BlockedInterval blocked_interval(const QuasiPerfect& block,
                                 const PreStaircase& asc,
                                 const PreStaircase& desc) {
  if (asc.block != block || desc.block != block) {
    throw DomainError("blocked_interval: staircases do not block " +
                      block.str());
  }
  if (asc.direction != Direction::ascending ||
      desc.direction != Direction::descending) {
    throw DomainError("blocked_interval: staircase directions are swapped");
  }
  require_step_relation(block, asc, true);
  require_step_relation(block, desc, false);

  const StaircaseLimits lo = limits(asc);
  const StaircaseLimits hi = limits(desc);
  const QuadExt center(block.center());
  if (!(lo.z_inf < center && center < hi.z_inf)) {
    throw DomainError("blocked_interval: center of " + block.str() +
                      " is outside the staircase limits");
  }
  BlockedInterval out;
  out.block = block;
  out.z_lo = lo.z_inf;
  out.z_hi = hi.z_inf;
  if (lo.b_inf < hi.b_inf) {
    out.b_lo = lo.b_inf;
    out.b_hi = hi.b_inf;
  } else {
    out.b_lo = hi.b_inf;
    out.b_hi = lo.b_inf;
  }
  return out;
}

}  // namespace staircase
