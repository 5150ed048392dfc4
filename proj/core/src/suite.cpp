#include "staircase/suite.hpp"

#include "staircase/accum.hpp"
#include "staircase/capacity.hpp"
#include "staircase/cfrac.hpp"
#include "staircase/cremona.hpp"
#include "staircase/obstruct.hpp"
#include "staircase/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <utility>

namespace staircase {

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  std::size_t count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  template <typename F, typename = decltype(std::declval<F>()())>
  void expect(bool cond, F&& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail = what();
    }
  }
};

std::string describe(const PreStaircase& sc) {
  return "(" + sc.provenance.T.str() + ", " +
         (sc.provenance.base == Branch::U ? "U" : "L") +
         ") n=" + std::to_string(sc.provenance.n) + " " +
         str(sc.provenance.side);
}

Integer pow10_int(unsigned digits) {
  Integer s = 1;
  for (unsigned k = 0; k < digits; ++k) {
    s *= 10;
  }
  return s;
}

// 1: the backbone ladder at b = 1/3 against its hardcoded table.
Check c1(const SuiteOptions&) {
  Check ck;
  const OneThirdTable t = one_third_table(7);
  const long g_expect[] = {1, 1, 5, 29, 169, 985, 5741, 33461};
  const long m_expect[] = {1, 0, 5, 24, 145, 840, 4901};
  const long d_expect[] = {1, 2, 13, 74, 433, 2522, 14701};
  ck.expect(t.g.size() == 8 && t.classes.size() == 7, "table shape");
  for (std::size_t k = 0; k < 8 && k < t.g.size(); ++k) {
    ck.expect(t.g[k] == g_expect[k], "g[" + std::to_string(k) + "]");
  }
  for (std::size_t k = 0; k < 7 && k < t.classes.size(); ++k) {
    const QuasiPerfect& c = t.classes[k];
    ck.expect(c.m == m_expect[k], "m[" + std::to_string(k) + "]");
    ck.expect(c.d == d_expect[k], "d[" + std::to_string(k) + "]");
    ck.expect(c.p == t.g[k + 1] && c.q == t.g[k],
              "center of row " + std::to_string(k));
  }
  for (unsigned long s = 0; s < 3; ++s) {
    const std::vector<QuasiPerfect> strand = one_third_strand(s, 6);
    ck.expect(strand.size() == 6, "strand size");
    const long first_center[] = {2, 4, 5};
    ck.expect(strand[0].p == first_center[s] && strand[0].q == 1,
              "strand " + std::to_string(s) + " base center");
    for (std::size_t k = 0; k + 1 < strand.size(); ++k) {
      ck.expect(strand[k + 1].eps == -strand[k].eps,
                "strand " + std::to_string(s) + " sign alternation");
    }
  }
  return ck;
}

// 2: y/v/w ladders and their interleaving.
Check c2(const SuiteOptions&) {
  Check ck;
  const long y_expect[] = {0, 1, 6, 35, 204, 1189, 6930};
  for (unsigned long i = 0; i < 7; ++i) {
    ck.expect(y_seq(i) == y_expect[i], "y[" + std::to_string(i) + "]");
  }
  for (unsigned long i = 1; i <= 11; ++i) {
    ck.expect(y_seq(i + 1) == 6 * y_seq(i) - y_seq(i - 1),
              "y recurrence at " + std::to_string(i));
  }
  ck.expect(w_ladder(1) == 7, "w_1");
  ck.expect(w_ladder(2) == Rational(41, 7), "w_2");
  ck.expect(v_ladder(3) == ExtRational(Rational(35, 6)), "v_3");
  ck.expect(v_ladder(1).is_infinite(), "v_1 infinite");
  ck.expect(ExtRational(Rational(7)) < v_ladder(1), "w_1 < v_1");
  for (unsigned long k = 2; k <= 12; ++k) {
    const ExtRational wk(w_ladder(k));
    const ExtRational wk1(w_ladder(k - 1));
    ck.expect(wk < v_ladder(k) && v_ladder(k) < wk1,
              "interleaving at k=" + std::to_string(k));
  }
  return ck;
}

// 3: the two blocking ladders from centers alone.
Check c3(const SuiteOptions&) {
  Check ck;
  for (unsigned long n = 0; n <= 50; ++n) {
    const Integer k(n);
    const QuasiPerfect c = from_pq(2 * k + 6, 1);
    ck.expect(c == make_quasi_perfect(k + 3, k + 2, 2 * k + 6, 1, 2 * k + 3, 1),
              "upper ladder at n=" + std::to_string(n));
    ck.expect(c == upper_blocking(n) && c.geometric,
              "upper_blocking at n=" + std::to_string(n));
  }
  for (unsigned long n = 1; n <= 50; ++n) {
    const Integer k(n);
    const QuasiPerfect c = from_pq(12 * k + 1, 2 * k);
    ck.expect(
        c == make_quasi_perfect(5 * k, k - 1, 12 * k + 1, 2 * k, 2 * k + 3, -1),
        "lower ladder at n=" + std::to_string(n));
    ck.expect(c == lower_blocking(n) && c.geometric,
              "lower_blocking at n=" + std::to_string(n));
  }
  return ck;
}

// 4: at most one sign per center, and the quadratic locus sigma = -8 has no
// admissible point (8 | p+q) in the box.
Check c4(const SuiteOptions&) {
  Check ck;
  for (long long p = 1; p <= 200; ++p) {
    for (long long q = 1; q <= p; ++q) {
      if (std::gcd(p, q) != 1) {
        continue;
      }
      const long long sig = p * p - 6 * p * q + q * q;
      const long long tt = sig + 8;
      if (tt < 1 || !is_square(Integer(tt))) {
        continue;
      }
      const long long t = static_cast<long long>(isqrt_floor(Integer(tt)));
      int solutions = 0;
      int good_eps = 0;
      for (const int eps : {1, -1}) {
        if ((3 * (p + q) + eps * t) % 8 == 0) {
          ++solutions;
          good_eps = eps;
        }
      }
      ck.expect(solutions <= 1, [&] {
        return "two signs admissible at p=" + std::to_string(p) +
               " q=" + std::to_string(q);
      });
      if (p == q) {
        continue;  // only (1,1): outside the from_pq domain
      }
      try {
        const QuasiPerfect c = from_pq(Integer(p), Integer(q));
        ck.expect(solutions == 1 && c.eps == good_eps, [&] {
          return "from_pq disagrees with the scan at p=" + std::to_string(p) +
                 " q=" + std::to_string(q);
        });
      } catch (const NoSolution&) {
        ck.expect(solutions == 0, [&] {
          return "from_pq misses the solution at p=" + std::to_string(p) +
                 " q=" + std::to_string(q);
        });
      }
    }
  }
  for (long long q = 1; q <= 10000; ++q) {
    const Integer rad = 2 * (Integer(q) * q - 1);
    const Integer s = isqrt_floor(rad);
    if (s * s != rad) {
      continue;
    }
    for (const int sign : {1, -1}) {
      const Integer p = 3 * Integer(q) + sign * 2 * s;
      if (p < 1 || p > 10000 || gcd(p, Integer(q)) != 1) {
        continue;
      }
      ck.expect(sigma(p, Integer(q)) == -8, "locus arithmetic slip");
      ck.expect((p + q) % 8 != 0, [&] {
        return "admissible point on the empty locus: p=" + p.str() +
               " q=" + std::to_string(q);
      });
    }
  }
  return ck;
}

// 5: degree matrices of shifts and reflections.
Check c5(const SuiteOptions&) {
  Check ck;
  ck.expect(deg_matrix_B(group_S(1)) == Mat2{5, 0, 2, -1}, "degree matrix of S");
  ck.expect(deg_matrix_B(group_S(2)) == Mat2{28, 3, 9, 2},
            "degree matrix of S^2");
  ck.expect(deg_matrix_B(group_S(3)) == Mat2{164, 15, 55, 4},
            "degree matrix of S^3");
  ck.expect(deg_matrix_B(group_S(4)) == Mat2{955, 90, 318, 31},
            "degree matrix of S^4");
  ck.expect(deg_matrix_B(group_R()) == Mat2{-10, 15, -3, 4},
            "degree matrix of R");
  const Mat2 s2 = deg_matrix_B(group_S(2));
  ck.expect(!(deg_matrix_B(group_S(4)) == s2 * s2),
            "degree action is not multiplicative on S^2");
  const RatMat2 rv2b = deg_matrix_refl(2, DegFlavor::B);
  ck.expect(rv2b.is_integral() && rv2b.to_integral() == Mat2{4, -15, 1, -4},
            "reflection degree matrix, blocking flavor");
  const RatMat2 rv2p = deg_matrix_refl(2, DegFlavor::P);
  ck.expect(rv2p == to_rational(Mat2{-59, 90, -20, 31}),
            "reflection degree matrix, principal flavor");
  const RatMat2 id{1, 0, 0, 1};
  for (unsigned long i = 2; i <= 5; ++i) {
    const RatMat2 m = deg_matrix_refl(i, DegFlavor::B);
    ck.expect(m.is_integral(), "integrality at i=" + std::to_string(i));
    ck.expect(m * m == id, "order two at i=" + std::to_string(i));
  }
  for (unsigned long i = 2; i <= 5; ++i) {
    const Mat2 m = deg_matrix_B(group_S(i));
    const QuasiPerfect im = sharp(group_S(i - 2), upper_blocking(0));
    ck.expect(m.b == im.d && m.d == im.m,
              "second column at i=" + std::to_string(i));
  }
  return ck;
}

// 6: the full family corpus: Diophantine system, quadratic form data,
// sigma-invariance, seed compatibility, and the relation to the block.
Check c6(const SuiteOptions& opt) {
  Check ck;
  for (unsigned long i = 0; i <= opt.i_max; ++i) {
    for (const int delta : {0, 1}) {
      for (const Branch base : {Branch::U, Branch::L}) {
        const Family fam = make_family(GroupElem{i, delta}, base);
        const Family ref_fam = make_family(group_id(), base);
        for (unsigned long n = 0; n <= opt.n_max; ++n) {
          for (const Side side : {Side::lower, Side::upper}) {
            const bool bottom =
                ((side == Side::lower) == fam.centers_ascend) && n == 0;
            if (bottom) {
              try {
                build_staircase(fam, n, side, 1);
                ck.expect(false, "missing bottom rejection for " + fam.str());
              } catch (const DomainError&) {
                ck.expect(true, "");
              }
              continue;
            }
            const PreStaircase sc = build_staircase(fam, n, side, opt.kappa);
            ck.expect(sc.nu == 2 * Integer(n) + 3,
                      [&] { return describe(sc) + ": nu"; });
            const Side ref_side =
                delta == 0 ? side
                           : (side == Side::lower ? Side::upper : Side::lower);
            const PreStaircase ref =
                build_staircase(ref_fam, n, ref_side, opt.kappa);
            ck.expect(sc.steps.size() == ref.steps.size(),
                      [&] { return describe(sc) + ": length"; });
            for (std::size_t k = 0; k < sc.steps.size(); ++k) {
              const QuasiPerfect& s = sc.steps[k];
              const std::string at = describe(sc) + " step " +
                                     std::to_string(k);
              ck.expect(3 * s.d == s.p + s.q + s.m,
                        [&] { return at + ": degree sum"; });
              ck.expect(s.d * s.d - s.m * s.m == s.p * s.q - 1,
                        [&] { return at + ": degree product"; });
              ck.expect(s.t * s.t == sigma(s.p, s.q) + 8,
                        [&] { return at + ": t identity"; });
              ck.expect(8 * s.d == 3 * (s.p + s.q) + s.eps * s.t &&
                            8 * s.m == (s.p + s.q) + 3 * s.eps * s.t,
                        [&] { return at + ": eighth identities"; });
              ck.expect(quad_form(SeedTriple::of(s)) == 8,
                        [&] { return at + ": quadratic form"; });
              ck.expect(sigma(s.p, s.q) ==
                            sigma(ref.steps[k].p, ref.steps[k].q),
                        [&] { return at + ": sigma invariance"; });
              const Integer lhs = sc.block.m * s.m;
              const Integer rhs = sc.direction == Direction::ascending
                                      ? sc.block.d * s.d - sc.block.q * s.p
                                      : sc.block.d * s.d - sc.block.p * s.q;
              ck.expect(lhs == rhs, [&] { return at + ": block relation"; });
            }
            for (std::size_t k = 0; k + 1 < sc.steps.size(); ++k) {
              ck.expect(quad_pair(SeedTriple::of(sc.steps[k]),
                                  SeedTriple::of(sc.steps[k + 1])) ==
                            4 * sc.nu,
                        [&] {
                          return describe(sc) + " step " + std::to_string(k) +
                                 ": compatibility";
                        });
            }
          }
        }
      }
    }
  }
  return ck;
}

// 7: Cremona reduction certifies every geometric corpus class, and the two
// move-chain certificates pass on a deterministic sample.
Check c7(const SuiteOptions& opt) {
  Check ck;
  SuiteOptions sub;
  sub.i_max = std::min<unsigned long>(opt.i_max, 2);
  sub.n_max = std::min<unsigned long>(opt.n_max, 4);
  sub.kappa = std::min<std::size_t>(opt.kappa, 8);
  const std::vector<QuasiPerfect> classes = corpus_classes(sub);
  ck.expect(!classes.empty(), "empty corpus");
  for (const QuasiPerfect& c : classes) {
    const ReductionTrace tr = reduce(to_vector(c));
    ck.expect(tr.verdict == Verdict::Exceptional,
              [&] { return "reduce " + c.str() + ": " + str(tr.verdict); });
  }
  std::vector<QuasiPerfect> shift_pool;
  std::vector<QuasiPerfect> refl_pool;
  for (const QuasiPerfect& c : classes) {
    if (c.p >= c.q) {
      shift_pool.push_back(c);
    }
    if (c.eps == 1 && c.p > 7 * c.q) {
      refl_pool.push_back(c);
    }
  }
  ck.expect(!shift_pool.empty() && !refl_pool.empty(), "empty sample pools");
  const auto sample = [](const std::vector<QuasiPerfect>& pool,
                         std::size_t want) {
    std::vector<QuasiPerfect> out;
    const std::size_t take = std::min(want, pool.size());
    for (std::size_t j = 0; j < take; ++j) {
      out.push_back(pool[j * pool.size() / take]);
    }
    return out;
  };
  for (const QuasiPerfect& c : sample(shift_pool, 10)) {
    const ShiftEquivalence r = verify_shift_equivalence(c);
    ck.expect(r.ok,
              [&] { return "shift certificate " + c.str() + ": " + r.detail; });
  }
  for (const QuasiPerfect& c : sample(refl_pool, 10)) {
    const ReflectionEquivalence r = verify_reflection_equivalence(c);
    ck.expect(r.ok, [&] {
      return "reflection certificate " + c.str() + ": " + r.detail;
    });
  }
  return ck;
}

// 8: center-blocking across the corpus, and the ratio m_n/d_n sits inside
// the blocked interval of the next upper blocking class.
Check c8(const SuiteOptions& opt) {
  Check ck;
  for (const QuasiPerfect& c : corpus_classes(opt)) {
    if (sigma(c.p, c.q) <= 0) {
      continue;
    }
    ck.expect(is_center_blocking(c),
              [&] { return "not center-blocking: " + c.str(); });
  }
  const Family base_u = make_family(group_id(), Branch::U);
  for (unsigned long n = 0; n <= 10; ++n) {
    const QuasiPerfect b_n = upper_blocking(n);
    const QuasiPerfect b_next = upper_blocking(n + 1);
    const PreStaircase asc = build_staircase(base_u, n + 1, Side::lower, 2);
    const PreStaircase desc = build_staircase(base_u, n + 1, Side::upper, 2);
    const BlockedInterval J = blocked_interval(b_next, asc, desc);
    const QuadExt ratio(Rational(b_n.m, b_n.d));
    ck.expect(J.b_lo < ratio && ratio < J.b_hi,
              "ratio outside the blocked interval at n=" + std::to_string(n));
    ck.expect(acc(Rational(b_n.m, b_n.d)) < QuadExt(2 * Integer(n) + 8),
              "accumulation bound at n=" + std::to_string(n));
  }
  return ck;
}

// 9: accumulation identities and ladder windows for every corpus staircase,
// with one staircase pinned to closed-form limits.
Check c9(const SuiteOptions& opt) {
  Check ck;
  const QuadExt tiny(Rational(1, pow10_int(24)));
  for (const PreStaircase& sc : corpus(opt)) {
    const StaircaseLimits lim = limits(sc);
    ck.expect(acc_equation_check(lim.b_inf, lim.z_inf),
              [&] { return describe(sc) + ": accumulation equation"; });
    if (sc.provenance.T == group_id() && sc.provenance.base == Branch::U &&
        sc.provenance.n == 1 && sc.provenance.side == Side::lower) {
      ck.expect(lim.z_inf == QuadExt(Rational(7, 2), Rational(5, 6), 21),
                "pinned z limit");
      ck.expect(lim.b_inf == QuadExt(Rational(11, 10), Rational(-1, 10), 21),
                "pinned b limit");
    }
    const std::vector<SeedTriple> seq =
        recurse(SeedTriple::of(sc.steps[0]), SeedTriple::of(sc.steps[1]),
                sc.nu, 30);
    const SeedTriple& last = seq.back();
    ck.expect(last.q != 0, [&] { return describe(sc) + ": iterate q"; });
    if (last.q != 0) {
      const QuadExt diff = QuadExt(Rational(last.p, last.q)) - lim.z_inf;
      ck.expect(diff * diff < tiny,
                [&] { return describe(sc) + ": iterate agreement"; });
    }
    const Family fam = make_family(sc.provenance.T, sc.provenance.base);
    const GroupElem eff = fam.effective_shift();
    if (eff.delta == 0) {
      ck.expect(QuadExt(w_ladder(eff.i + 1)) < lim.z_inf,
                [&] { return describe(sc) + ": window lower bound"; });
      const ExtRational v = v_ladder(eff.i + 1);
      if (!v.is_infinite()) {
        ck.expect(lim.z_inf < QuadExt(v.value()),
                  [&] { return describe(sc) + ": window upper bound"; });
      }
    } else {
      ck.expect(QuadExt(v_ladder(eff.i + 2).value()) < lim.z_inf &&
                    lim.z_inf < QuadExt(w_ladder(eff.i + 1)),
                [&] { return describe(sc) + ": window bounds"; });
    }
  }
  return ck;
}

// 10: the liveness verdicts, trend directions, and slope bounds.
Check c10(const SuiteOptions& opt) {
  Check ck;
  const QuasiPerfect exc_a0 = make_quasi_perfect(-2, 0, -5, -1, 2, 1);
  const QuasiPerfect exc_a1 = make_quasi_perfect(4, 3, 8, 1, 5, 1);
  const QuadExt third(Rational(1, 3));
  std::size_t degenerate_count = 0;
  for (const PreStaircase& sc : corpus(opt)) {
    const bool slope_exception =
        sc.steps[0] == exc_a0 && sc.steps[1] == exc_a1;
    const Integer w =
        sc.steps[1].m * sc.steps[0].d - sc.steps[0].m * sc.steps[1].d;
    const bool degenerate = w == 0;
    if (degenerate) {
      ++degenerate_count;
    }
    const Liveness expected = slope_exception || degenerate
                                  ? Liveness::Unknown
                                  : Liveness::Live;
    ck.expect(liveness(sc, true) == expected,
              [&] { return describe(sc) + ": liveness"; });
    try {
      const Monotone trend = monotonicity(sc);
      ck.expect(!degenerate,
                [&] { return describe(sc) + ": missed degeneracy"; });
      const StaircaseLimits lim = limits(sc);
      const int side = (lim.b_inf - third).sign();
      ck.expect(side != 0, [&] { return describe(sc) + ": b limit at 1/3"; });
      ck.expect(trend == (side > 0 ? Monotone::decreasing
                                   : Monotone::increasing),
                [&] { return describe(sc) + ": trend side"; });
    } catch (const Degenerate&) {
      ck.expect(degenerate,
                [&] { return describe(sc) + ": unexpected degenerate"; });
    }
    if (sc.direction == Direction::descending) {
      ck.expect(slope_condition(sc),
                [&] { return describe(sc) + ": slope bound"; });
    }
  }
  // The corpus contains the constant-ratio staircase exactly twice: once in
  // (id, L) and once in the coinciding family (R, U). Shift images pick up a
  // nonzero Wronskian, so no other staircase is degenerate.
  ck.expect(degenerate_count == 2,
            "degenerate staircase count " + std::to_string(degenerate_count));
  return ck;
}

// 11: the blocked z-interval of each principal class contains its ladder
// bracket.
Check c11(const SuiteOptions& opt) {
  Check ck;
  for (unsigned long i = 0; i <= 4; ++i) {
    const Family fam_asc = make_family(GroupElem{i + 1, 1}, Branch::U);
    const Family fam_desc = make_family(GroupElem{i, 0}, Branch::U);
    const QuasiPerfect block = fam_desc.blocking(0);
    ck.expect(fam_asc.blocking(0) == block,
              "families disagree on the principal class at i=" +
                  std::to_string(i));
    const PreStaircase asc =
        build_staircase(fam_asc, 0, Side::lower, opt.kappa);
    const PreStaircase desc =
        build_staircase(fam_desc, 0, Side::upper, opt.kappa);
    const BlockedInterval J = blocked_interval(block, asc, desc);
    ck.expect(J.z_lo <= QuadExt(w_ladder(i + 2)) &&
                  QuadExt(w_ladder(i + 1)) <= J.z_hi,
              "bracket not contained at i=" + std::to_string(i));
  }
  return ck;
}

// 12: randomized envelope oracle and the accumulation-point volume identity.
Check c12(const SuiteOptions&) {
  Check ck;
  SuiteOptions small;
  small.i_max = 1;
  small.n_max = 2;
  small.kappa = 4;
  std::vector<QuasiPerfect> pool = corpus_classes(small);
  for (unsigned long s = 0; s < 3; ++s) {
    for (const QuasiPerfect& c : one_third_strand(s, 6)) {
      if (c.geometric) {
        pool.push_back(c);
      }
    }
  }
  ck.expect(pool.size() >= 10, "probe pool too small");

  std::mt19937_64 rng(20260823);
  std::size_t probes = 0;
  while (probes < 1000) {
    const std::size_t k = 1 + rng() % 5;
    std::vector<QuasiPerfect> chosen;
    for (std::size_t j = 0; j < k; ++j) {
      chosen.push_back(pool[rng() % pool.size()]);
    }
    const unsigned long den = 2 + rng() % 59;
    const Rational b(Integer(rng() % den), Integer(den));
    const Envelope env =
        envelope(chosen, QuadExt(b), QuadExt(1), QuadExt(25));
    for (std::size_t j = 0; j < 5 && probes < 1000; ++j, ++probes) {
      const Rational z(Integer(100 + rng() % 2401), Integer(100));
      const QuadExt ev = env.value_at(QuadExt(z));
      QuadExt brute = mu(chosen[0], QuadExt(b), QuadExt(z));
      for (std::size_t idx = 1; idx < chosen.size(); ++idx) {
        const QuadExt v = mu(chosen[idx], QuadExt(b), QuadExt(z));
        if (v > brute) {
          brute = v;
        }
      }
      ck.expect(ev == brute, [&] {
        return "envelope mismatch at b=" + QuadExt(b).str() +
               " z=" + QuadExt(z).str();
      });
    }
  }

  std::mt19937_64 rng2(33461);
  for (int k = 0; k < 50; ++k) {
    const unsigned long den = 2 + rng2() % 99;
    const Rational b(Integer(rng2() % den), Integer(den));
    const QuadExt z = acc(b);
    const QuadExt line = (QuadExt(1) + z) / (QuadExt(3) - QuadExt(b));
    ck.expect(vol(QuadExt(b), z).compare(line) == 0, [&] {
      return "volume identity fails at b=" + QuadExt(b).str();
    });
  }
  return ck;
}

}  // namespace

std::vector<PreStaircase> corpus(const SuiteOptions& opt) {
  std::vector<PreStaircase> out;
  for (unsigned long i = 0; i <= opt.i_max; ++i) {
    for (const int delta : {0, 1}) {
      for (const Branch base : {Branch::U, Branch::L}) {
        const Family fam = make_family(GroupElem{i, delta}, base);
        for (unsigned long n = 0; n <= opt.n_max; ++n) {
          for (const Side side : {Side::lower, Side::upper}) {
            if (((side == Side::lower) == fam.centers_ascend) && n == 0) {
              continue;
            }
            out.push_back(build_staircase(fam, n, side, opt.kappa));
          }
        }
      }
    }
  }
  return out;
}

std::vector<QuasiPerfect> corpus_classes(const SuiteOptions& opt) {
  std::map<std::string, QuasiPerfect> seen;
  const auto add = [&seen](const QuasiPerfect& c) {
    if (c.geometric) {
      seen.emplace(c.str(), c);
    }
  };
  for (unsigned long i = 0; i <= opt.i_max; ++i) {
    for (const int delta : {0, 1}) {
      for (const Branch base : {Branch::U, Branch::L}) {
        const Family fam = make_family(GroupElem{i, delta}, base);
        for (unsigned long n = 0; n <= opt.n_max; ++n) {
          add(fam.blocking(n));
        }
      }
    }
  }
  for (const PreStaircase& sc : corpus(opt)) {
    for (const QuasiPerfect& s : sc.steps) {
      add(s);
    }
  }
  std::vector<QuasiPerfect> out;
  out.reserve(seen.size());
  for (const auto& [key, c] : seen) {
    out.push_back(c);
  }
  return out;
}

CriterionResult run_criterion(int number, const SuiteOptions& opt) {
  struct Entry {
    const char* name;
    Check (*fn)(const SuiteOptions&);
  };
  static const Entry entries[12] = {
      {"one-third ladder table", c1},
      {"shift ladders", c2},
      {"blocking class construction", c3},
      {"center uniqueness and empty locus", c4},
      {"degree matrices", c5},
      {"family generation", c6},
      {"perfectness certificates", c7},
      {"center-blocking", c8},
      {"staircase limits", c9},
      {"liveness", c10},
      {"blocked intervals", c11},
      {"envelope oracle", c12},
  };
  if (number < 1 || number > 12) {
    throw DomainError("run_criterion: number must be between 1 and 12");
  }
  const Entry& e = entries[number - 1];
  CriterionResult r;
  r.number = number;
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  Check ck = e.fn(opt);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  r.passed = ck.ok;
  r.detail = ck.ok ? std::to_string(ck.count) + " checks" : ck.detail;
  return r;
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt) {
  std::vector<CriterionResult> out;
  out.reserve(12);
  for (int k = 1; k <= 12; ++k) {
    out.push_back(run_criterion(k, opt));
  }
  return out;
}

}  // namespace staircase
