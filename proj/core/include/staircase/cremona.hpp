// Cremona moves on class vectors (d; n_1, ..., n_N) and the reduction
// algorithm deciding whether a vector reduces to the exceptional form
// (0; 0, ..., 0, -1). A move at indices (x,y,z) adds
// delta = d - n_x - n_y - n_z to d and to the three chosen coefficients.
//
// Also the two move-chain certificates relating a quasi-perfect class to its
// shift and reflection images: explicit Cremona chains carrying one class
// vector to the other, verified coefficient by coefficient.

#pragma once

#include "staircase/classes.hpp"
#include "staircase/symmetry.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace staircase {

// One Cremona move at distinct in-range indices (0-based); returns the moved
// vector. DomainError on a repeated or out-of-range index.
ClassVector move(const ClassVector& v, std::size_t x, std::size_t y,
                 std::size_t z);

enum class Verdict { Exceptional, NotExceptional, BudgetExceeded };

std::string str(Verdict v);

struct MoveRecord {
  std::array<std::size_t, 3> indices;
  Integer delta;
  ClassVector after;
};

struct ReductionTrace {
  ClassVector initial;  // padded to at least three coefficients
  std::vector<MoveRecord> moves;
  Verdict verdict = Verdict::NotExceptional;
  ClassVector final;  // sorted descending
};

// Repeatedly sorts the coefficients descending and applies the move on the
// top three while it decreases the degree. Ends Exceptional exactly on
// (0; 0,...,0,-1), NotExceptional when the degree goes negative, a negative
// coefficient is not of that form, or no move decreases the degree; and
// BudgetExceeded after `budget` moves (default 10x the padded length).
ReductionTrace reduce(const ClassVector& v, long budget = -1);

// Cremona certificate that c and its shift image represent the same class:
// the chain starts from the image data (D; Q,Q,Q,Q,Q,M | W(P/Q) after its
// leading block) and five moves carry it onto the data of c.
struct ShiftEquivalence {
  QuasiPerfect source, image;
  ClassVector chain_start, chain_end;
  bool ok = false;
  std::string detail;  // first failed check; empty when ok
};

// Needs a geometric source with center >= 1.
ShiftEquivalence verify_shift_equivalence(const QuasiPerfect& c);

// Cremona certificate for the reflection: both the source head
// (d; m,q,q,q,q,q,q) and the image head (D; M,Q,Q,Q,Q,Q,Q) are reduced by
// short chains to the same degree and coefficient multiset, while the
// weight tails beyond the heads agree entry by entry.
struct ReflectionEquivalence {
  QuasiPerfect source, image;
  ClassVector source_end, image_end;
  bool ok = false;
  std::string detail;
};

// Needs a geometric source with eps = +1 and center strictly above 7.
ReflectionEquivalence verify_reflection_equivalence(const QuasiPerfect& c);

}  // namespace staircase
