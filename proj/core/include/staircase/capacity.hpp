// Capacity envelopes: the pointwise maximum of class obstructions
//   mu(z) = (A + C z) / (d - m b),  constant beyond an optional corner,
// over a z-window at fixed b, together with the volume bound
// sqrt(z / (1 - b^2)). Every piece is linear in z, so the envelope is a
// polyline whose breakpoints are window endpoints, piece corners, and
// pairwise crossings, all computed exactly in Q(sqrt(D)).
//
// Emission to CSV, JSON and SVG is deterministic: coordinates come from
// exact decimal strings, never from binary floating point.

#pragma once

#include "staircase/accum.hpp"
#include "staircase/classes.hpp"
#include "staircase/families.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace staircase {

struct ObstructionPiece {
  Rational A, C;  // numerator A + C z
  Integer d, m;   // denominator d - m b
  // z of the kink; the piece is constant to the right of it.
  std::optional<Rational> corner;
  std::string label;

  // mu at (b, z); needs d - m b > 0.
  QuadExt value(const QuadExt& b, const QuadExt& z) const;
};

// The obstruction of a geometric quasi-perfect class: q z / (d - m b) up to
// the center, then p / (d - m b).
ObstructionPiece piece_of(const QuasiPerfect& c);

// The line (1 + z) / (3 - b), the obstruction with a single unit blow-up.
ObstructionPiece line_piece();

enum class BreakKind { endpoint, center, crossing };

std::string str(BreakKind k);

struct EnvelopeBreakpoint {
  QuadExt z;
  BreakKind kind;
  QuadExt env;   // max mu at z; unused (0) when env_is_volume
  PosRoot vol;   // volume bound at z
  // Set when there are no pieces and the envelope is the volume curve.
  bool env_is_volume;
};

struct EnvelopeSegment {
  QuadExt z_from, z_to;
  // Index of the piece dominating at the midpoint, or -1 when the volume
  // bound lies strictly above every piece there.
  long dominator;
  std::string label;  // piece label or "volume"
};

struct Envelope {
  QuadExt b;
  QuadExt z_lo, z_hi;
  std::vector<ObstructionPiece> pieces;
  std::vector<EnvelopeBreakpoint> breakpoints;
  std::vector<EnvelopeSegment> segments;

  // max mu over the pieces at z; DomainError when there are no pieces.
  QuadExt value_at(const QuadExt& z) const;
};

// Exact envelope of the pieces over [z_lo, z_hi] at fixed b in [0,1),
// z_lo >= 1. Crossings falling outside both sub-piece domains are dropped;
// breakpoints are sorted and deduplicated.
Envelope envelope(const std::vector<ObstructionPiece>& pieces, const QuadExt& b,
                  const QuadExt& z_lo, const QuadExt& z_hi);

Envelope envelope(const std::vector<QuasiPerfect>& classes, const QuadExt& b,
                  const QuadExt& z_lo, const QuadExt& z_hi);

// Envelope of the first min(kappa_max, steps) staircase steps that are
// geometric, at b = b_inf, windowed to the span of their centers.
Envelope staircase_profile(const PreStaircase& sc, std::size_t kappa_max);

// At the class's corner: mu^2 > V^2 and mu^2 <= V^2 (1 + 1/(d^2 - m^2)).
// Needs pq > 1 and d - m b > 0.
bool corner_invariant(const QuasiPerfect& c, const QuadExt& b);

// One row per breakpoint: z_num,z_den,kind,value,dominator. Rational z uses
// integer z_num/z_den; irrational z puts the exact form in z_num and 0 in
// z_den. The dominator column names the segment to the right ("-" for the
// last breakpoint).
std::string envelope_csv(const Envelope& env);

// Exact values as strings plus 30-digit decimals.
std::string envelope_json(const Envelope& env);

// 800x600 picture of the envelope polyline and the volume curve.
std::string envelope_svg(const Envelope& env);

}  // namespace staircase
