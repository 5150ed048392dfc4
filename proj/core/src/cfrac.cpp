#include "staircase/cfrac.hpp"

#include <sstream>

namespace staircase {

namespace {

void require_valid_pair(const Integer& p, const Integer& q) {
  if (q < 1 || p < q) {
    throw DomainError("continued fraction needs p >= q >= 1");
  }
  if (gcd(p, q) != 1) {
    throw DomainError("continued fraction needs gcd(p,q) = 1");
  }
}

}  // namespace

ContinuedFraction cf_expand(const Integer& p, const Integer& q) {
  require_valid_pair(p, q);
  ContinuedFraction cf;
  Integer x = p, y = q;
  while (y > 0) {
    cf.coefficients.push_back(x / y);
    const Integer r = x % y;
    x = y;
    y = r;
  }
  return cf;
}

std::pair<Integer, Integer> cf_value(const ContinuedFraction& cf) {
  if (cf.coefficients.empty()) {
    throw DomainError("cf_value: empty continued fraction");
  }
  Integer p = 1, q = 0;
  for (auto it = cf.coefficients.rbegin(); it != cf.coefficients.rend(); ++it) {
    if (*it < 1) {
      throw DomainError("cf_value: coefficients must be >= 1");
    }
    // [l; rest] = l + 1/rest, i.e. (p,q) -> (l*p + q, p).
    const Integer np = *it * p + q;
    q = p;
    p = np;
  }
  return {p, q};
}

WeightExpansion weight_expansion(const Integer& p, const Integer& q) {
  require_valid_pair(p, q);
  WeightExpansion w;
  Integer x = p, y = q;
  while (y > 0) {
    const Integer l = x / y;
    for (Integer i = 0; i < l; ++i) {
      w.entries.push_back(y);
    }
    const Integer r = x % y;
    x = y;
    y = r;
  }
  return w;
}

ContinuedFraction cf_normalize(ContinuedFraction cf) {
  auto& c = cf.coefficients;
  if (c.size() > 1 && c.back() == 1) {
    c.pop_back();
    c.back() += 1;
  }
  return cf;
}

std::string cf_to_string(const ContinuedFraction& cf) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < cf.coefficients.size(); ++i) {
    if (i == 1) {
      out << ";";
    } else if (i > 1) {
      out << ",";
    }
    out << cf.coefficients[i];
  }
  out << "]";
  return out.str();
}

namespace {

Integer parse_integer(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  if (pos == start) {
    throw DomainError("cf_parse: expected a number at position " +
                      std::to_string(start));
  }
  return Integer(s.substr(start, pos - start));
}

}  // namespace

ContinuedFraction cf_parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += ch;
    }
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw DomainError("cf_parse: expected [a;b,c,...]");
  }
  s = s.substr(1, s.size() - 2);
  ContinuedFraction cf;
  std::size_t pos = 0;
  bool expect_separator = false;
  while (pos < s.size()) {
    if (expect_separator) {
      const char sep = s[pos];
      if (sep != ';' && sep != ',') {
        throw DomainError("cf_parse: expected ';' or ',' at position " +
                          std::to_string(pos));
      }
      if (sep == ';' && cf.coefficients.size() != 1) {
        throw DomainError("cf_parse: ';' may follow only the first entry");
      }
      ++pos;
      expect_separator = false;
      continue;
    }
    if (s[pos] == '{') {
      const std::size_t close = s.find('}', pos);
      if (close == std::string::npos) {
        throw DomainError("cf_parse: unterminated block");
      }
      std::vector<Integer> block;
      std::size_t bpos = pos + 1;
      while (bpos < close) {
        block.push_back(parse_integer(s, bpos));
        if (bpos < close && s[bpos] == ',') {
          ++bpos;
        }
      }
      if (block.empty()) {
        throw DomainError("cf_parse: empty block");
      }
      pos = close + 1;
      if (pos >= s.size() || s[pos] != '^') {
        throw DomainError("cf_parse: block must be followed by ^count");
      }
      ++pos;
      const Integer count = parse_integer(s, pos);
      for (Integer i = 0; i < count; ++i) {
        for (const Integer& b : block) {
          cf.coefficients.push_back(b);
        }
      }
    } else {
      cf.coefficients.push_back(parse_integer(s, pos));
    }
    expect_separator = true;
  }
  if (cf.coefficients.empty()) {
    throw DomainError("cf_parse: no coefficients");
  }
  return cf;
}

QuadExt periodic_cf_value(const std::vector<Integer>& head,
                          const std::vector<Integer>& period) {
  if (period.empty()) {
    throw DomainError("periodic_cf_value: empty period");
  }
  // Fractional-linear matrix of the period: y = (a*y + b)/(c*y + d).
  Integer a = 1, b = 0, c = 0, d = 1;
  for (const Integer& l : period) {
    if (l < 1) {
      throw DomainError("periodic_cf_value: coefficients must be >= 1");
    }
    // Multiply on the right by (l,1;1,0).
    const Integer na = a * l + b, nc = c * l + d;
    b = a;
    d = c;
    a = na;
    c = nc;
  }
  // c*y^2 + (d - a)*y - b = 0, positive root.
  const QuadExt disc = QuadExt::sqrt_of(Rational((d - a) * (d - a) + 4 * b * c));
  QuadExt y = (QuadExt(Rational(a - d)) + disc) / QuadExt(Rational(2 * c));
  for (auto it = head.rbegin(); it != head.rend(); ++it) {
    if (*it < 1) {
      throw DomainError("periodic_cf_value: coefficients must be >= 1");
    }
    y = QuadExt(Rational(*it)) + y.inverse();
  }
  return y;
}

}  // namespace staircase
