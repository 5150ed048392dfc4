#include "staircase/capacity.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace staircase {

namespace {

std::string rational_text(const Rational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

Integer pow10_int(unsigned digits) {
  Integer s = 1;
  for (unsigned k = 0; k < digits; ++k) {
    s *= 10;
  }
  return s;
}

// floor(x * 10^digits) / 10^digits, an exact monotone snap used for layout.
Rational trunc_rational(const QuadExt& x, unsigned digits) {
  const Integer s = pow10_int(digits);
  return Rational((x * QuadExt(s)).floor(), s);
}

// Exact rational value of a fixed-point decimal string like "-12.0345".
Rational parse_decimal(const std::string& text) {
  bool negative = !text.empty() && text[0] == '-';
  const std::size_t start = negative ? 1 : 0;
  const std::size_t dot = text.find('.');
  const std::string whole =
      text.substr(start, dot == std::string::npos ? std::string::npos
                                                  : dot - start);
  const std::string frac =
      dot == std::string::npos ? "" : text.substr(dot + 1);
  Integer num = whole.empty() ? Integer(0) : Integer(whole);
  Integer den = 1;
  for (const char ch : frac) {
    num = num * 10 + (ch - '0');
    den *= 10;
  }
  Rational r(num, den);
  return negative ? -r : r;
}

}  // namespace

QuadExt ObstructionPiece::value(const QuadExt& b, const QuadExt& z) const {
  const QuadExt den = QuadExt(d) - QuadExt(m) * b;
  if (den.sign() <= 0) {
    throw DomainError("piece " + label + ": d - m b must be positive");
  }
  if (corner && z >= QuadExt(*corner)) {
    return QuadExt(A + C * *corner) / den;
  }
  return (QuadExt(A) + QuadExt(C) * z) / den;
}

ObstructionPiece piece_of(const QuasiPerfect& c) {
  if (!c.geometric) {
    throw DomainError("piece_of: class " + c.str() + " is not geometric");
  }
  ObstructionPiece p;
  p.A = 0;
  p.C = Rational(c.q);
  p.d = c.d;
  p.m = c.m;
  p.corner = c.center();
  p.label = c.str();
  return p;
}

ObstructionPiece line_piece() {
  ObstructionPiece p;
  p.A = 1;
  p.C = 1;
  p.d = 3;
  p.m = 1;
  p.label = "line";
  return p;
}

std::string str(BreakKind k) {
  switch (k) {
    case BreakKind::endpoint:
      return "endpoint";
    case BreakKind::center:
      return "center";
    default:
      return "crossing";
  }
}

QuadExt Envelope::value_at(const QuadExt& z) const {
  if (pieces.empty()) {
    throw DomainError("value_at: envelope has no pieces");
  }
  QuadExt best = pieces.front().value(b, z);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const QuadExt v = pieces[i].value(b, z);
    if (v > best) {
      best = v;
    }
  }
  return best;
}

namespace {

// A maximal interval on which a piece is a single affine function of z.
struct SubPiece {
  std::size_t piece;
  Rational A, C;
  QuadExt lo, hi;
};

struct Candidate {
  QuadExt z;
  BreakKind kind;
};

}  // namespace

Envelope envelope(const std::vector<ObstructionPiece>& pieces, const QuadExt& b,
                  const QuadExt& z_lo, const QuadExt& z_hi) {
  if (b.sign() < 0 || b >= QuadExt(1)) {
    throw DomainError("envelope: b must lie in [0,1)");
  }
  if (z_lo < QuadExt(1)) {
    throw DomainError("envelope: window must start at z >= 1");
  }
  if (!(z_lo < z_hi)) {
    throw DomainError("envelope: window is empty");
  }

  Envelope env;
  env.b = b;
  env.z_lo = z_lo;
  env.z_hi = z_hi;
  env.pieces = pieces;

  std::vector<QuadExt> dens;
  dens.reserve(pieces.size());
  for (const ObstructionPiece& p : pieces) {
    const QuadExt den = QuadExt(p.d) - QuadExt(p.m) * b;
    if (den.sign() <= 0) {
      throw DomainError("envelope: piece " + p.label +
                        " has nonpositive denominator at this b");
    }
    dens.push_back(den);
  }

  std::vector<Candidate> cands;
  cands.push_back({z_lo, BreakKind::endpoint});
  cands.push_back({z_hi, BreakKind::endpoint});

  std::vector<SubPiece> subs;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const ObstructionPiece& p = pieces[i];
    if (!p.corner) {
      subs.push_back({i, p.A, p.C, z_lo, z_hi});
      continue;
    }
    const QuadExt cz(*p.corner);
    const Rational flat = p.A + p.C * *p.corner;
    if (cz <= z_lo) {
      subs.push_back({i, flat, Rational(0), z_lo, z_hi});
    } else if (cz >= z_hi) {
      subs.push_back({i, p.A, p.C, z_lo, z_hi});
    } else {
      subs.push_back({i, p.A, p.C, z_lo, cz});
      subs.push_back({i, flat, Rational(0), cz, z_hi});
      cands.push_back({cz, BreakKind::center});
    }
  }

  for (std::size_t s = 0; s < subs.size(); ++s) {
    for (std::size_t t = s + 1; t < subs.size(); ++t) {
      if (subs[s].piece == subs[t].piece) {
        continue;
      }
      const QuadExt& ds = dens[subs[s].piece];
      const QuadExt& dt = dens[subs[t].piece];
      const QuadExt coef = QuadExt(subs[s].C) * dt - QuadExt(subs[t].C) * ds;
      if (coef.is_zero()) {
        continue;
      }
      const QuadExt zx =
          (QuadExt(subs[t].A) * ds - QuadExt(subs[s].A) * dt) / coef;
      const QuadExt lo = subs[s].lo < subs[t].lo ? subs[t].lo : subs[s].lo;
      const QuadExt hi = subs[s].hi < subs[t].hi ? subs[s].hi : subs[t].hi;
      if (lo <= zx && zx <= hi) {
        cands.push_back({zx, BreakKind::crossing});
      }
    }
  }

  std::sort(cands.begin(), cands.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.z < y.z) {
                return true;
              }
              if (y.z < x.z) {
                return false;
              }
              return static_cast<int>(x.kind) < static_cast<int>(y.kind);
            });

  const bool no_pieces = pieces.empty();
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (k > 0 && cands[k].z == env.breakpoints.back().z) {
      continue;
    }
    const QuadExt& z = cands[k].z;
    const QuadExt mu_val = no_pieces ? QuadExt(0) : env.value_at(z);
    env.breakpoints.push_back(EnvelopeBreakpoint{
        z, cands[k].kind, mu_val, vol(b, z), no_pieces});
  }

  for (std::size_t k = 0; k + 1 < env.breakpoints.size(); ++k) {
    const QuadExt mid =
        (env.breakpoints[k].z + env.breakpoints[k + 1].z) / QuadExt(2);
    EnvelopeSegment seg;
    seg.z_from = env.breakpoints[k].z;
    seg.z_to = env.breakpoints[k + 1].z;
    seg.dominator = -1;
    if (!no_pieces) {
      QuadExt best = pieces.front().value(b, mid);
      std::size_t arg = 0;
      for (std::size_t i = 1; i < pieces.size(); ++i) {
        const QuadExt v = pieces[i].value(b, mid);
        if (v > best) {
          best = v;
          arg = i;
        }
      }
      if (vol(b, mid).compare(best) <= 0) {
        seg.dominator = static_cast<long>(arg);
      }
    }
    seg.label =
        seg.dominator < 0 ? "volume" : pieces[static_cast<std::size_t>(
                                                  seg.dominator)].label;
    env.segments.push_back(seg);
  }
  return env;
}

Envelope envelope(const std::vector<QuasiPerfect>& classes, const QuadExt& b,
                  const QuadExt& z_lo, const QuadExt& z_hi) {
  std::vector<ObstructionPiece> pieces;
  pieces.reserve(classes.size());
  for (const QuasiPerfect& c : classes) {
    pieces.push_back(piece_of(c));
  }
  return envelope(pieces, b, z_lo, z_hi);
}

Envelope staircase_profile(const PreStaircase& sc, std::size_t kappa_max) {
  const StaircaseLimits lim = limits(sc);
  std::vector<QuasiPerfect> classes;
  const std::size_t take = std::min(sc.steps.size(), kappa_max);
  for (std::size_t k = 0; k < take; ++k) {
    if (sc.steps[k].geometric) {
      classes.push_back(sc.steps[k]);
    }
  }
  if (classes.size() < 2) {
    throw DomainError("staircase_profile: needs at least two geometric steps");
  }
  Rational zmin = classes.front().center();
  Rational zmax = zmin;
  for (const QuasiPerfect& c : classes) {
    const Rational z = c.center();
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  if (zmin == zmax) {
    throw DomainError("staircase_profile: center window is a single point");
  }
  return envelope(classes, lim.b_inf, QuadExt(zmin), QuadExt(zmax));
}

bool corner_invariant(const QuasiPerfect& c, const QuadExt& b) {
  if (!c.geometric) {
    throw DomainError("corner_invariant: class " + c.str() +
                      " is not geometric");
  }
  const Integer pq = c.p * c.q;
  if (pq <= 1) {
    throw DomainError("corner_invariant: needs p q > 1 for " + c.str());
  }
  const QuadExt den = QuadExt(c.d) - QuadExt(c.m) * b;
  if (den.sign() <= 0) {
    throw DomainError("corner_invariant: d - m b must be positive for " +
                      c.str());
  }
  const QuadExt mu2 = QuadExt(Rational(c.p * c.p)) / (den * den);
  const QuadExt v2 =
      QuadExt(Rational(c.p, c.q)) / (QuadExt(1) - b * b);
  if (!(mu2 > v2)) {
    return false;
  }
  return mu2 <= v2 * QuadExt(Rational(pq, pq - 1));
}

std::string envelope_csv(const Envelope& env) {
  std::ostringstream out;
  out << "z_num,z_den,kind,value,dominator\n";
  for (std::size_t k = 0; k < env.breakpoints.size(); ++k) {
    const EnvelopeBreakpoint& bp = env.breakpoints[k];
    if (bp.z.is_rational()) {
      const Rational z = bp.z.rational_value();
      out << numerator(z) << "," << denominator(z) << ",";
    } else {
      out << bp.z.str() << ",0,";
    }
    out << str(bp.kind) << ",";
    out << (bp.env_is_volume ? bp.vol.decimal(30) : bp.env.decimal(30)) << ",";
    const std::string label =
        k < env.segments.size() ? env.segments[k].label : std::string("-");
    out << "\"" << label << "\"\n";
  }
  return out.str();
}

std::string envelope_json(const Envelope& env) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["b"] = {{"exact", env.b.str()}, {"decimal", env.b.decimal(30)}};
  j["window"] = {{"z_lo", {{"exact", env.z_lo.str()},
                           {"decimal", env.z_lo.decimal(30)}}},
                 {"z_hi", {{"exact", env.z_hi.str()},
                           {"decimal", env.z_hi.decimal(30)}}}};
  j["pieces"] = ordered_json::array();
  for (const ObstructionPiece& p : env.pieces) {
    ordered_json jp;
    jp["label"] = p.label;
    jp["A"] = rational_text(p.A);
    jp["C"] = rational_text(p.C);
    jp["d"] = p.d.str();
    jp["m"] = p.m.str();
    if (p.corner) {
      jp["corner"] = rational_text(*p.corner);
    }
    j["pieces"].push_back(jp);
  }
  j["breakpoints"] = ordered_json::array();
  for (const EnvelopeBreakpoint& bp : env.breakpoints) {
    ordered_json jb;
    jb["z"] = {{"exact", bp.z.str()}, {"decimal", bp.z.decimal(30)}};
    jb["kind"] = str(bp.kind);
    if (bp.env_is_volume) {
      jb["value"] = {{"decimal", bp.vol.decimal(30)}};
    } else {
      jb["value"] = {{"exact", bp.env.str()}, {"decimal", bp.env.decimal(30)}};
    }
    jb["volume"] = {{"square_exact", bp.vol.square().str()},
                    {"decimal", bp.vol.decimal(30)}};
    j["breakpoints"].push_back(jb);
  }
  j["segments"] = ordered_json::array();
  for (const EnvelopeSegment& s : env.segments) {
    ordered_json js;
    js["z_from"] = s.z_from.str();
    js["z_to"] = s.z_to.str();
    js["dominator"] = s.label;
    js["piece"] = s.dominator;
    j["segments"].push_back(js);
  }
  return j.dump(2) + "\n";
}

namespace {

constexpr unsigned kLayoutDigits = 12;

std::string pixel(const Rational& v) { return decimal_string(v, 2); }

}  // namespace

std::string envelope_svg(const Envelope& env) {
  // Fixed 800x600 viewport; plot rectangle [60,780] x [20,560]. All
  // coordinates come from exact truncated rationals.
  const Rational x0(60), x1(780), y0(560), y1(20);

  std::vector<std::pair<Rational, Rational>> env_pts;  // (z frac, value)
  std::vector<std::pair<Rational, Rational>> vol_pts;
  Rational vmin, vmax;
  bool have_range = false;
  auto note = [&](const Rational& v) {
    if (!have_range) {
      vmin = vmax = v;
      have_range = true;
    } else {
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  };

  for (const EnvelopeBreakpoint& bp : env.breakpoints) {
    const Rational frac =
        trunc_rational((bp.z - env.z_lo) / (env.z_hi - env.z_lo),
                       kLayoutDigits);
    const Rational val = bp.env_is_volume
                             ? parse_decimal(bp.vol.decimal(kLayoutDigits))
                             : trunc_rational(bp.env, kLayoutDigits);
    env_pts.emplace_back(frac, val);
    note(val);
  }
  const unsigned samples = 160;
  for (unsigned k = 0; k <= samples; ++k) {
    const QuadExt z = env.z_lo + (env.z_hi - env.z_lo) *
                                     QuadExt(Rational(Integer(k), Integer(samples)));
    const Rational frac = trunc_rational((z - env.z_lo) /
                                             (env.z_hi - env.z_lo),
                                         kLayoutDigits);
    const Rational val = parse_decimal(vol(env.b, z).decimal(kLayoutDigits));
    vol_pts.emplace_back(frac, val);
    note(val);
  }

  Rational pad = (vmax - vmin) / 20;
  if (pad == 0) {
    pad = 1;
  }
  const Rational lo = vmin - pad;
  const Rational hi = vmax + pad;

  auto xs = [&](const Rational& frac) { return pixel(x0 + (x1 - x0) * frac); };
  auto ys = [&](const Rational& v) {
    return pixel(y0 - (y0 - y1) * (v - lo) / (hi - lo));
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
         "fill=\"white\"/>\n";
  out << "  <line x1=\"60\" y1=\"560\" x2=\"780\" y2=\"560\" "
         "stroke=\"black\"/>\n";
  out << "  <line x1=\"60\" y1=\"20\" x2=\"60\" y2=\"560\" "
         "stroke=\"black\"/>\n";
  out << "  <text x=\"60\" y=\"580\" font-size=\"12\" text-anchor=\"start\">"
      << env.z_lo.str() << "</text>\n";
  out << "  <text x=\"780\" y=\"580\" font-size=\"12\" text-anchor=\"end\">"
      << env.z_hi.str() << "</text>\n";
  out << "  <text x=\"55\" y=\"560\" font-size=\"12\" text-anchor=\"end\">"
      << decimal_string(lo, 6) << "</text>\n";
  out << "  <text x=\"55\" y=\"25\" font-size=\"12\" text-anchor=\"end\">"
      << decimal_string(hi, 6) << "</text>\n";
  out << "  <text x=\"420\" y=\"595\" font-size=\"12\" text-anchor=\"middle\">"
      << "b = " << env.b.str() << "</text>\n";

  out << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 3\" points=\"";
  for (std::size_t k = 0; k < vol_pts.size(); ++k) {
    if (k > 0) {
      out << " ";
    }
    out << xs(vol_pts[k].first) << "," << ys(vol_pts[k].second);
  }
  out << "\"/>\n";

  if (!env.pieces.empty()) {
    out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" "
           "points=\"";
    for (std::size_t k = 0; k < env_pts.size(); ++k) {
      if (k > 0) {
        out << " ";
      }
      out << xs(env_pts[k].first) << "," << ys(env_pts[k].second);
    }
    out << "\"/>\n";
    for (std::size_t k = 0; k < env_pts.size(); ++k) {
      out << "  <circle cx=\"" << xs(env_pts[k].first) << "\" cy=\""
          << ys(env_pts[k].second) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace staircase
