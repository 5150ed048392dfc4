// Continued fractions and integral weight expansions of rationals p/q >= 1.
//
// The weight expansion W(p/q) = (W_1, W_2, ...) is the non-increasing integer
// sequence produced by the Euclidean algorithm: each quotient l_i of the
// continued fraction [l_0; l_1, ..., l_k] contributes l_i copies of the
// current remainder, starting from W_1 = q. It satisfies sum W_i = p + q - 1
// and sum W_i^2 = pq.

#pragma once

#include "staircase/exact.hpp"

#include <vector>

namespace staircase {

// Canonical form: all coefficients >= 1 and the last is >= 2 when there is
// more than one (the expansion not ending in 1).
struct ContinuedFraction {
  std::vector<Integer> coefficients;
};

// Non-increasing positive entries; first entry q, last block all ones.
struct WeightExpansion {
  std::vector<Integer> entries;
};

ContinuedFraction cf_expand(const Integer& p, const Integer& q);

std::pair<Integer, Integer> cf_value(const ContinuedFraction& cf);

WeightExpansion weight_expansion(const Integer& p, const Integer& q);

// Merges a trailing 1 into its predecessor, giving the canonical expansion.
ContinuedFraction cf_normalize(ContinuedFraction cf);

// Text form "[l0;l1,l2,...]".
std::string cf_to_string(const ContinuedFraction& cf);

// Parses "[a;b,c,...]"; repeated blocks written "{x,y}^k" are expanded, so
// "[7;{5,1}^2,3]" means [7;5,1,5,1,3].
ContinuedFraction cf_parse(const std::string& text);

// Exact value of the eventually periodic expansion [head...; period...
// repeated forever], a quadratic irrational.
QuadExt periodic_cf_value(const std::vector<Integer>& head,
                          const std::vector<Integer>& period);

}  // namespace staircase
