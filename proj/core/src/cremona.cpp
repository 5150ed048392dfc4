#include "staircase/cremona.hpp"

#include "staircase/cfrac.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace staircase {

ClassVector move(const ClassVector& v, std::size_t x, std::size_t y,
                 std::size_t z) {
  if (x == y || y == z || x == z) {
    throw DomainError("move: indices must be distinct");
  }
  const std::size_t n = v.coefficients.size();
  if (x >= n || y >= n || z >= n) {
    throw DomainError("move: index out of range for " + v.str());
  }
  ClassVector out = v;
  const Integer delta =
      v.d - v.coefficients[x] - v.coefficients[y] - v.coefficients[z];
  out.d += delta;
  out.coefficients[x] += delta;
  out.coefficients[y] += delta;
  out.coefficients[z] += delta;
  return out;
}

std::string str(Verdict v) {
  switch (v) {
    case Verdict::Exceptional:
      return "Exceptional";
    case Verdict::NotExceptional:
      return "NotExceptional";
    default:
      return "BudgetExceeded";
  }
}

namespace {

void sort_descending(ClassVector& v) {
  std::sort(v.coefficients.begin(), v.coefficients.end(),
            std::greater<Integer>());
}

// Sorted-descending vector equal to (0; 0,...,0,-1)?
bool is_exceptional_form(const ClassVector& v) {
  if (v.d != 0 || v.coefficients.empty()) {
    return false;
  }
  for (std::size_t i = 0; i + 1 < v.coefficients.size(); ++i) {
    if (v.coefficients[i] != 0) {
      return false;
    }
  }
  return v.coefficients.back() == -1;
}

ReductionTrace reduce_impl(const ClassVector& v, unsigned long budget) {
  ReductionTrace tr;
  ClassVector cur = v;
  while (cur.coefficients.size() < 3) {
    cur.coefficients.push_back(0);
  }
  tr.initial = cur;
  unsigned long used = 0;
  for (;;) {
    sort_descending(cur);
    if (cur.d < 0) {
      tr.verdict = Verdict::NotExceptional;
      break;
    }
    if (cur.coefficients.back() < 0) {
      tr.verdict = is_exceptional_form(cur) ? Verdict::Exceptional
                                            : Verdict::NotExceptional;
      break;
    }
    const Integer delta =
        cur.d - cur.coefficients[0] - cur.coefficients[1] - cur.coefficients[2];
    if (delta >= 0) {
      tr.verdict = Verdict::NotExceptional;
      break;
    }
    if (used == budget) {
      tr.verdict = Verdict::BudgetExceeded;
      break;
    }
    cur = move(cur, 0, 1, 2);
    tr.moves.push_back(MoveRecord{{0, 1, 2}, delta, cur});
    ++used;
  }
  tr.final = cur;
  return tr;
}

}  // namespace

ReductionTrace reduce(const ClassVector& v, long budget) {
  if (budget < 0) {
    const std::size_t padded = std::max<std::size_t>(v.coefficients.size(), 3);
    return reduce_impl(v, 10 * static_cast<unsigned long>(padded));
  }
  if (budget < 1) {
    throw DomainError("reduce: budget must be at least 1");
  }
  return reduce_impl(v, static_cast<unsigned long>(budget));
}

namespace {

std::vector<Integer> sorted_nonzero(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  for (const Integer& x : v) {
    if (x != 0) {
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ShiftEquivalence verify_shift_equivalence(const QuasiPerfect& c) {
  if (!c.geometric) {
    throw DomainError("verify_shift_equivalence: class " + c.str() +
                      " is not geometric");
  }
  if (c.p < c.q) {
    throw DomainError("verify_shift_equivalence: center of " + c.str() +
                      " must be at least 1");
  }
  ShiftEquivalence out;
  out.source = c;
  out.image = sharp(group_S(), c);
  const QuasiPerfect& im = out.image;

  const WeightExpansion w = weight_expansion(im.p, im.q);
  auto fail = [&out](const std::string& msg) -> ShiftEquivalence& {
    out.ok = false;
    out.detail = msg;
    return out;
  };
  // The image center lies in [5,6), so the expansion leads with five copies
  // of Q; the chain replaces them by Q,Q,Q,Q,Q,M and keeps the rest.
  if (w.entries.size() < 5) {
    return fail("image weight expansion is too short");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    if (w.entries[i] != im.q) {
      return fail("image weight expansion does not lead with five q-blocks");
    }
  }

  ClassVector chain;
  chain.d = im.d;
  chain.coefficients.assign(5, im.q);
  chain.coefficients.push_back(im.m);
  chain.coefficients.insert(chain.coefficients.end(), w.entries.begin() + 5,
                            w.entries.end());
  while (chain.coefficients.size() < 7) {
    chain.coefficients.push_back(0);
  }
  out.chain_start = chain;

  chain = move(chain, 0, 1, 2);
  chain = move(chain, 3, 4, 5);
  chain = move(chain, 0, 1, 6);
  chain = move(chain, 2, 3, 4);
  chain = move(chain, 2, 5, 6);
  out.chain_end = chain;

  if (chain.d != c.d) {
    return fail("chain degree " + chain.d.str() + " differs from d");
  }
  const std::vector<Integer> head = {0, 0, c.q, 0, 0, 0, c.m};
  for (std::size_t i = 0; i < 7; ++i) {
    if (chain.coefficients[i] != head[i]) {
      return fail("chain head differs from (0,0,q,0,0,0,m) at index " +
                  std::to_string(i));
    }
  }
  for (std::size_t i = 7; i < chain.coefficients.size(); ++i) {
    if (chain.coefficients[i] != out.chain_start.coefficients[i]) {
      return fail("chain tail changed at index " + std::to_string(i));
    }
  }
  if (8 * im.d - 3 * (im.m + im.p) != c.d ||
      3 * im.d - im.m - 2 * im.p + 5 * im.q != c.q ||
      3 * im.d - 2 * im.m - im.p != c.m) {
    return fail("image data fails the linear identities against the source");
  }
  const ClassVector source_vec = to_vector(c);
  if (sorted_nonzero(chain.coefficients) !=
      sorted_nonzero(source_vec.coefficients)) {
    return fail("coefficient multisets differ from the source data");
  }
  out.ok = true;
  return out;
}

ReflectionEquivalence verify_reflection_equivalence(const QuasiPerfect& c) {
  if (!c.geometric) {
    throw DomainError("verify_reflection_equivalence: class " + c.str() +
                      " is not geometric");
  }
  if (c.eps != 1) {
    throw DomainError("verify_reflection_equivalence: class " + c.str() +
                      " must have eps = +1");
  }
  if (c.p <= 7 * c.q) {
    throw DomainError("verify_reflection_equivalence: center of " + c.str() +
                      " must exceed 7");
  }
  ReflectionEquivalence out;
  out.source = c;
  out.image = sharp(group_R(), c);
  const QuasiPerfect& im = out.image;

  auto fail = [&out](const std::string& msg) -> ReflectionEquivalence& {
    out.ok = false;
    out.detail = msg;
    return out;
  };

  const WeightExpansion w_src = weight_expansion(c.p, c.q);
  const WeightExpansion w_img = weight_expansion(im.p, im.q);
  if (w_src.entries.size() < 7 || w_img.entries.size() < 7) {
    return fail("weight expansions are too short for the head split");
  }
  if (w_src.entries.size() != w_img.entries.size()) {
    return fail("weight tails have different lengths");
  }
  for (std::size_t i = 6; i < w_src.entries.size(); ++i) {
    if (w_src.entries[i] != w_img.entries[i]) {
      return fail("weight tails differ at index " + std::to_string(i));
    }
  }

  ClassVector src{c.d, {c.m, c.q, c.q, c.q, c.q, c.q, c.q}};
  src = move(src, 0, 1, 2);
  src = move(src, 0, 3, 4);
  src = move(src, 1, 5, 6);
  out.source_end = src;

  ClassVector img{im.d, {im.m, im.q, im.q, im.q, im.q, im.q, im.q}};
  img = move(img, 1, 2, 3);
  img = move(img, 4, 5, 6);
  out.image_end = img;

  if (src.d != img.d) {
    return fail("reduced heads have different degrees");
  }
  std::vector<Integer> a = src.coefficients;
  std::vector<Integer> b = img.coefficients;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    return fail("reduced heads have different coefficient multisets");
  }
  if (4 * im.d - 9 * im.q != 5 * c.d - 3 * (c.m + 3 * c.q) ||
      im.m != 3 * c.d - 2 * (c.m + 3 * c.q) ||
      im.d - 2 * im.q != 2 * c.d - c.m - 4 * c.q ||
      2 * im.d - 5 * im.q != c.d - c.m - c.q) {
    return fail("image data fails the linear identities against the source");
  }
  out.ok = true;
  return out;
}

}  // namespace staircase
