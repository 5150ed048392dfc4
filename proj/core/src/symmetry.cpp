#include "staircase/symmetry.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>

namespace staircase {

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

}  // namespace

const Rational& ExtRational::value() const {
  if (infinite_) {
    throw DomainError("ExtRational: value() of infinity");
  }
  return finite_;
}

std::string ExtRational::str() const {
  return infinite_ ? "inf" : rational_text(finite_);
}

ExtRational Mat2::act(const ExtRational& z) const {
  if (z.is_infinite()) {
    if (c == 0) {
      return ExtRational::infinity();
    }
    return ExtRational(c > 0 ? Rational(a, c) : Rational(-a, -c));
  }
  const Rational num = Rational(a) * z.value() + Rational(b);
  const Rational den = Rational(c) * z.value() + Rational(d);
  if (den == 0) {
    if (num == 0) {
      throw DomainError("Mat2: singular action");
    }
    return ExtRational::infinity();
  }
  return ExtRational(num / den);
}

std::string Mat2::str() const {
  std::ostringstream out;
  out << "(" << a << "," << b << ";" << c << "," << d << ")";
  return out.str();
}

Mat2 shift_matrix() { return {6, -1, 1, 0}; }

Mat2 reflect_matrix() { return {6, -35, 1, -6}; }

bool RatMat2::is_integral() const {
  return denominator(a) == 1 && denominator(b) == 1 && denominator(c) == 1 &&
         denominator(d) == 1;
}

Mat2 RatMat2::to_integral() const {
  if (!is_integral()) {
    throw DomainError("RatMat2: matrix is not integral");
  }
  return {numerator(a), numerator(b), numerator(c), numerator(d)};
}

RatMat2 RatMat2::inverse() const {
  const Rational dd = det();
  if (dd == 0) {
    throw DivisionError("RatMat2: singular matrix");
  }
  return {d / dd, -b / dd, -c / dd, a / dd};
}

std::string RatMat2::str() const {
  std::ostringstream out;
  out << "(" << rational_text(a) << "," << rational_text(b) << ";"
      << rational_text(c) << "," << rational_text(d) << ")";
  return out.str();
}

RatMat2 to_rational(const Mat2& m) {
  return {Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)};
}

Mat2 GroupElem::matrix() const {
  Mat2 result{1, 0, 0, 1};
  const Mat2 s = shift_matrix();
  for (unsigned long k = 0; k < i; ++k) {
    result = result * s;
  }
  if (delta != 0) {
    result = result * reflect_matrix();
  }
  return result;
}

std::string GroupElem::str() const {
  if (i == 0 && delta == 0) {
    return "id";
  }
  std::ostringstream out;
  if (i > 0) {
    out << "S";
    if (i > 1) {
      out << "^" << i;
    }
  }
  if (delta != 0) {
    if (i > 0) {
      out << " ";
    }
    out << "R";
  }
  return out.str();
}

GroupElem group_id() { return {0, 0}; }

GroupElem group_S(unsigned long i) { return {i, 0}; }

GroupElem group_R() { return {0, 1}; }

GroupElem compose(const GroupElem& lhs, const GroupElem& rhs) {
  if (lhs.delta == 0) {
    return {lhs.i + rhs.i, rhs.delta};
  }
  // S^i R S^j R^delta = S^(i-j) R^(1+delta); needs i >= j to stay in the
  // monoid of nonnegative shift powers.
  if (lhs.i < rhs.i) {
    throw DomainError("compose: product " + lhs.str() + " * " + rhs.str() +
                      " has a negative shift power");
  }
  return {lhs.i - rhs.i, (1 + rhs.delta) % 2};
}

namespace {

unsigned long parse_index(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || std::isdigit(static_cast<unsigned char>(text[pos])) == 0) {
    throw DomainError("parse_group_elem: expected an integer in \"" + text +
                      "\"");
  }
  unsigned long value = 0;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
    value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
    ++pos;
  }
  return value;
}

void skip_spaces(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') {
    ++pos;
  }
}

}  // namespace

GroupElem parse_group_elem(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw DomainError("parse_group_elem: empty input");
  }
  const std::string body = text.substr(begin, end - begin + 1);
  if (body == "id") {
    return group_id();
  }
  if (body.rfind("R_{v_", 0) == 0) {
    if (body.back() != '}') {
      throw DomainError("parse_group_elem: expected '}' in \"" + body + "\"");
    }
    std::size_t pos = 5;
    const unsigned long k = parse_index(body, pos);
    if (pos + 1 != body.size()) {
      throw DomainError("parse_group_elem: trailing input in \"" + body +
                        "\"");
    }
    if (k < 2) {
      throw DomainError("parse_group_elem: R_{v_i} needs i >= 2");
    }
    return {2 * k - 3, 1};
  }
  GroupElem result{0, 0};
  std::size_t pos = 0;
  if (pos < body.size() && body[pos] == 'S') {
    ++pos;
    if (pos < body.size() && body[pos] == '^') {
      ++pos;
      result.i = parse_index(body, pos);
    } else {
      result.i = 1;
    }
  }
  skip_spaces(body, pos);
  if (pos < body.size() && body[pos] == 'R') {
    result.delta = 1;
    ++pos;
  }
  skip_spaces(body, pos);
  if (pos != body.size()) {
    throw DomainError("parse_group_elem: cannot parse \"" + body + "\"");
  }
  if (result.i == 0 && result.delta == 0) {
    throw DomainError("parse_group_elem: cannot parse \"" + body + "\"");
  }
  return result;
}

Integer y_seq(unsigned long i) {
  Integer prev = 0;
  Integer cur = 1;
  if (i == 0) {
    return prev;
  }
  for (unsigned long k = 1; k < i; ++k) {
    const Integer next = 6 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ExtRational v_ladder(unsigned long i) {
  if (i == 0) {
    throw DomainError("v_ladder: index must be >= 1");
  }
  const Integer den = y_seq(i - 1);
  if (den == 0) {
    return ExtRational::infinity();
  }
  return ExtRational(Rational(y_seq(i), den));
}

Rational w_ladder(unsigned long i) {
  if (i == 0) {
    throw DomainError("w_ladder: index must be >= 1");
  }
  return Rational(y_seq(i + 1) + y_seq(i), y_seq(i) + y_seq(i - 1));
}

QuasiPerfect sharp(const GroupElem& T, const QuasiPerfect& c) {
  const auto [pp, qq] = T.matrix().apply(c.p, c.q);
  const int eps = T.eps_factor() * c.eps;
  const Integer dn = 3 * (pp + qq) + eps * c.t;
  const Integer mn = (pp + qq) + 3 * eps * c.t;
  if (dn % 8 != 0 || mn % 8 != 0) {
    throw DomainError("sharp: image degrees of " + c.str() + " under " +
                      T.str() + " are not integral");
  }
  return make_quasi_perfect(dn / 8, mn / 8, pp, qq, c.t, eps);
}

Mat2 refl(unsigned long i) {
  if (i < 2) {
    throw DomainError("refl: index must be >= 2");
  }
  return {y_seq(2 * i - 1), -y_seq(2 * i), y_seq(2 * i - 2),
          -y_seq(2 * i - 1)};
}

Mat2 deg_matrix_B(const GroupElem& T) {
  // Columns are the degree pairs of the images of the first two upper
  // blocking classes; multiplying by the inverse of ((3,4);(2,3)) turns the
  // pair of columns into the linear map on all (d, m) degree pairs.
  const QuasiPerfect b0 = make_quasi_perfect(3, 2, 6, 1, 3, 1);
  const QuasiPerfect b1 = make_quasi_perfect(4, 3, 8, 1, 5, 1);
  const QuasiPerfect u0 = sharp(T, b0);
  const QuasiPerfect u1 = sharp(T, b1);
  const Mat2 cols{u0.d, u1.d, u0.m, u1.m};
  const Mat2 base_inv{3, -4, -2, 3};
  return cols * base_inv;
}

RatMat2 deg_matrix_refl(unsigned long i, DegFlavor flavor) {
  if (i < 2) {
    throw DomainError("deg_matrix_refl: index must be >= 2");
  }
  if (flavor == DegFlavor::B) {
    const RatMat2 lhs = to_rational(deg_matrix_B(group_S(i - 1)));
    const RatMat2 rhs = to_rational(deg_matrix_B(GroupElem{i - 2, 1}));
    return lhs * rhs.inverse();
  }
  const RatMat2 lhs = to_rational(deg_matrix_B(GroupElem{i - 1, 1}));
  const RatMat2 rhs = to_rational(deg_matrix_B(group_S(i - 2)));
  return lhs * rhs.inverse();
}

}  // namespace staircase
