// Command-line surface for the staircase library: accumulation points,
// quasi-perfect classes, symmetry calculus, family generation, verification
// suites and capacity-envelope plot emission. All numeric output is exact;
// decimals are truncations appended after the exact form.

#include "staircase/accum.hpp"
#include "staircase/capacity.hpp"
#include "staircase/cfrac.hpp"
#include "staircase/classes.hpp"
#include "staircase/cremona.hpp"
#include "staircase/exact.hpp"
#include "staircase/families.hpp"
#include "staircase/obstruct.hpp"
#include "staircase/suite.hpp"
#include "staircase/symmetry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

using namespace staircase;

namespace {

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(s));
  }
  const Integer num = parse_integer(s.substr(0, slash));
  const Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) {
    throw DomainError("zero denominator in '" + s + "'");
  }
  return Rational(num, den);
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned long v = std::stoul(s);
      return {v, v};
    }
    const unsigned long lo = std::stoul(s.substr(0, dots));
    const unsigned long hi = std::stoul(s.substr(dots + 2));
    if (lo > hi) {
      throw DomainError("empty range '" + s + "'");
    }
    return {lo, hi};
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("not a range: '" + s + "' (expected N or A..B)");
  }
}

Branch parse_base(const std::string& s) {
  if (s == "U") {
    return Branch::U;
  }
  if (s == "L") {
    return Branch::L;
  }
  throw DomainError("base must be U or L, got '" + s + "'");
}

int parse_eps(std::string s) {
  if (s == "+1" || s == "1") {
    return 1;
  }
  if (s == "-1") {
    return -1;
  }
  throw DomainError("eps must be +1 or -1, got '" + s + "'");
}

Integer json_integer(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) {
    throw DomainError(std::string("class record misses field '") + key + "'");
  }
  const auto& v = j.at(key);
  if (v.is_string()) {
    return parse_integer(v.get<std::string>());
  }
  if (v.is_number_integer()) {
    return Integer(v.get<long long>());
  }
  throw DomainError(std::string("field '") + key +
                    "' must be an integer or a decimal string");
}

// Accepts "(d,m,p,q,t,+1)" tuples (parentheses optional) or JSON records.
QuasiPerfect parse_class(const std::string& text) {
  std::string s;
  for (const char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += ch;
    }
  }
  if (!s.empty() && s.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const std::exception& e) {
      throw DomainError(std::string("bad class JSON: ") + e.what());
    }
    int eps = 0;
    if (j.at("eps").is_string()) {
      eps = parse_eps(j.at("eps").get<std::string>());
    } else {
      eps = j.at("eps").get<int>();
    }
    return make_quasi_perfect(json_integer(j, "d"), json_integer(j, "m"),
                              json_integer(j, "p"), json_integer(j, "q"),
                              json_integer(j, "t"), eps);
  }
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  std::vector<std::string> fields;
  std::string cur;
  for (const char ch : s) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 6) {
    throw DomainError("class tuple needs six fields (d,m,p,q,t,eps), got '" +
                      text + "'");
  }
  return make_quasi_perfect(parse_integer(fields[0]), parse_integer(fields[1]),
                            parse_integer(fields[2]), parse_integer(fields[3]),
                            parse_integer(fields[4]), parse_eps(fields[5]));
}

nlohmann::ordered_json class_json(const QuasiPerfect& c) {
  nlohmann::ordered_json j;
  j["d"] = c.d.str();
  j["m"] = c.m.str();
  j["p"] = c.p.str();
  j["q"] = c.q.str();
  j["t"] = c.t.str();
  j["eps"] = c.eps;
  j["geometric"] = c.geometric;
  return j;
}

std::string rational_str(const Rational& r) { return QuadExt(r).str(); }

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DomainError("cannot open '" + path + "' for writing");
  }
  out << data;
  if (!out) {
    throw DomainError("failed writing '" + path + "'");
  }
}

unsigned thread_cap() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) {
    n = 1;
  }
  if (const char* env = std::getenv("STAIRCASE_THREADS")) {
    const unsigned long v = std::strtoul(env, nullptr, 10);
    if (v >= 1) {
      n = static_cast<unsigned>(v);
    }
  }
  return n;
}

std::string move_label(const MoveRecord& mv) {
  bool wide = false;
  for (const std::size_t i : mv.indices) {
    wide = wide || i > 9;
  }
  std::string out = "c";
  if (wide) {
    out += "(";
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (wide && k > 0) {
      out += ",";
    }
    out += std::to_string(mv.indices[k]);
  }
  if (wide) {
    out += ")";
  }
  return out;
}

void print_trace(const ReductionTrace& tr) {
  std::cout << "initial: " << tr.initial.str() << "\n";
  for (const MoveRecord& mv : tr.moves) {
    std::cout << "move " << move_label(mv) << " delta=" << mv.delta.str()
              << " -> " << mv.after.str() << "\n";
  }
  std::cout << "verdict: " << str(tr.verdict) << "\n";
  std::cout << "final: " << tr.final.str() << "\n";
}

// Certifies every geometric step by Cremona reduction; formal seeds carry no
// obstruction and are skipped.
bool steps_perfect(const PreStaircase& sc, std::size_t* certified,
                   std::size_t* total) {
  bool ok = true;
  *certified = 0;
  *total = 0;
  for (const QuasiPerfect& s : sc.steps) {
    if (!s.geometric) {
      continue;
    }
    ++*total;
    if (reduce(to_vector(s)).verdict == Verdict::Exceptional) {
      ++*certified;
    } else {
      ok = false;
    }
  }
  return ok;
}

struct StaircaseRequest {
  GroupElem T;
  Branch base = Branch::U;
  unsigned long n = 0;
  Side side = Side::lower;
  std::size_t steps = 8;
};

PreStaircase build_requested(const StaircaseRequest& req) {
  const Family fam = make_family(req.T, req.base);
  return build_staircase(fam, req.n, req.side, req.steps);
}

void print_staircase_text(const PreStaircase& sc, unsigned digits) {
  std::cout << "staircase (" << sc.provenance.T.str() << ", "
            << (sc.provenance.base == Branch::U ? "U" : "L")
            << ") n=" << sc.provenance.n << " side=" << str(sc.provenance.side)
            << "\n";
  std::cout << "  direction: " << str(sc.direction) << "\n";
  std::cout << "  nu: " << sc.nu.str() << "\n";
  std::cout << "  block: " << sc.block.str() << "\n";
  for (std::size_t k = 0; k < sc.steps.size(); ++k) {
    std::cout << "  step " << k << ": " << sc.steps[k].str() << "\n";
  }
  const StaircaseLimits lim = limits(sc);
  std::cout << "  z_inf = " << lim.z_inf.approx(digits) << "\n";
  std::cout << "  b_inf = " << lim.b_inf.approx(digits) << "\n";
  try {
    std::cout << "  monotonicity: "
              << (monotonicity(sc) == Monotone::increasing ? "increasing"
                                                           : "decreasing")
              << "\n";
  } catch (const Degenerate&) {
    std::cout << "  monotonicity: degenerate\n";
  }
}

nlohmann::ordered_json staircase_json(const PreStaircase& sc, unsigned digits) {
  nlohmann::ordered_json j;
  j["n"] = sc.provenance.n;
  j["side"] = str(sc.provenance.side);
  j["direction"] = str(sc.direction);
  j["nu"] = sc.nu.str();
  j["block"] = class_json(sc.block);
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const QuasiPerfect& s : sc.steps) {
    steps.push_back(class_json(s));
  }
  j["steps"] = std::move(steps);
  const StaircaseLimits lim = limits(sc);
  nlohmann::ordered_json l;
  l["d_coeff"] = lim.d_coeff.str();
  l["m_coeff"] = lim.m_coeff.str();
  l["p_coeff"] = lim.p_coeff.str();
  l["q_coeff"] = lim.q_coeff.str();
  l["z_inf"] = lim.z_inf.str();
  l["z_inf_decimal"] = lim.z_inf.decimal(digits);
  l["b_inf"] = lim.b_inf.str();
  l["b_inf_decimal"] = lim.b_inf.decimal(digits);
  l["z_irrational"] = lim.z_irrational;
  j["limits"] = std::move(l);
  try {
    j["monotone"] = monotonicity(sc) == Monotone::increasing ? "increasing"
                                                             : "decreasing";
  } catch (const Degenerate&) {
    j["monotone"] = "degenerate";
  }
  j["liveness_if_perfect"] = str(liveness(sc, true));
  return j;
}

std::string envelope_output(const Envelope& env, const std::string& format) {
  if (format == "csv") {
    return envelope_csv(env);
  }
  if (format == "json") {
    return envelope_json(env);
  }
  return envelope_svg(env);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  int rc = 0;

  CLI::App app{
      "Exact arithmetic for infinite staircases of ellipsoid-embedding "
      "capacities"};
  app.require_subcommand(1);

  // ---- acc ----
  auto* acc_cmd =
      app.add_subcommand("acc", "Accumulation point acc(b) for rational b");
  std::string acc_b;
  unsigned acc_digits = 30;
  acc_cmd->add_option("--b", acc_b, "rational b in [0,1), e.g. 1/3")
      ->required();
  acc_cmd->add_option("--digits", acc_digits, "decimal digits")
      ->capture_default_str();
  acc_cmd->callback([&] {
    const Rational b = parse_rational(acc_b);
    std::cout << "acc(" << rational_str(b) << ") = " << acc(b).approx(acc_digits)
              << "\n";
  });

  // ---- accinv ----
  auto* inv_cmd = app.add_subcommand(
      "accinv", "Rational b with accumulation point p/q on the given branch");
  std::string inv_pq, inv_base = "U";
  unsigned inv_digits = 30;
  inv_cmd->add_option("--pq", inv_pq, "target center p/q")->required();
  inv_cmd->add_option("--base", inv_base, "branch U (b < 1/3) or L (b > 1/3)")
      ->check(CLI::IsMember({"U", "L"}))
      ->capture_default_str();
  inv_cmd->add_option("--digits", inv_digits, "decimal digits")
      ->capture_default_str();
  inv_cmd->callback([&] {
    const Rational z = parse_rational(inv_pq);
    const QuadExt b =
        acc_inv(numerator(z), denominator(z), parse_base(inv_base));
    std::cout << "acc_inv(" << rational_str(z) << ", " << inv_base
              << ") = " << b.approx(inv_digits) << "\n";
  });

  // ---- class ----
  auto* class_cmd = app.add_subcommand(
      "class", "Quasi-perfect class with the given center, if any");
  std::string class_pq, class_cf, class_format = "text";
  bool class_vector = false, class_weights = false, class_show_cf = false;
  class_cmd->add_option("--pq", class_pq, "center p/q with p > q >= 1");
  class_cmd->add_option("--from-cf", class_cf,
                        "center given as a continued fraction [a;b,c,...]");
  class_cmd->add_option("--format", class_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  class_cmd->add_flag("--vector", class_vector,
                      "also print the full coefficient vector");
  class_cmd->add_flag("--weights", class_weights,
                      "also print the integral weight expansion of p/q");
  class_cmd->add_flag("--cf", class_show_cf,
                      "also print the continued fraction of p/q");
  class_cmd->callback([&] {
    if (class_pq.empty() == class_cf.empty()) {
      throw CLI::ValidationError("class",
                                 "give exactly one of --pq and --from-cf");
    }
    Rational z;
    if (!class_pq.empty()) {
      z = parse_rational(class_pq);
    } else {
      const auto [num, den] = cf_value(cf_parse(class_cf));
      z = Rational(num, den);
    }
    const Integer p = numerator(z), q = denominator(z);
    const QuasiPerfect c = from_pq(p, q);
    if (class_format == "json") {
      nlohmann::ordered_json j = class_json(c);
      j["center"] = rational_str(z);
      if (class_vector) {
        j["vector"] = to_vector(c).str();
      }
      if (class_weights) {
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const Integer& e : weight_expansion(p, q).entries) {
          w.push_back(e.str());
        }
        j["weights"] = std::move(w);
      }
      if (class_show_cf) {
        j["cf"] = cf_to_string(cf_expand(p, q));
      }
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << c.str() << "\n";
    if (class_vector) {
      std::cout << "vector: " << to_vector(c).str() << "\n";
    }
    if (class_weights) {
      std::cout << "weights:";
      for (const Integer& e : weight_expansion(p, q).entries) {
        std::cout << " " << e.str();
      }
      std::cout << "\n";
    }
    if (class_show_cf) {
      std::cout << "cf: " << cf_to_string(cf_expand(p, q)) << "\n";
    }
  });

  // ---- symmetry ----
  auto* sym_cmd = app.add_subcommand(
      "symmetry", "Shift/reflection calculus on centers and classes");
  std::string sym_t, sym_apply, sym_sharp, sym_flavor = "B";
  bool sym_matrix = false, sym_deg = false;
  unsigned long sym_refl = 0;
  sym_cmd->add_option("--T", sym_t,
                      "group element: id, S, S^i, R, S^i R or R_{v_i}");
  sym_cmd->add_option("--apply", sym_apply,
                      "act on the center p/q by fractional linearity");
  sym_cmd->add_option("--sharp", sym_sharp,
                      "act on a full class tuple (d,m,p,q,t,eps)");
  sym_cmd->add_flag("--matrix", sym_matrix, "print the 2x2 matrix of T");
  sym_cmd->add_flag("--deg", sym_deg, "print the degree matrix of T");
  sym_cmd->add_option("--refl", sym_refl,
                      "print the degree matrix of the reflection at v_i");
  sym_cmd->add_option("--flavor", sym_flavor,
                      "degree-matrix flavor for --refl: B or P")
      ->check(CLI::IsMember({"B", "P"}))
      ->capture_default_str();
  sym_cmd->callback([&] {
    const bool has_refl = sym_refl != 0;
    if (sym_t.empty() && !has_refl) {
      throw CLI::ValidationError("symmetry", "nothing to do; give --T or --refl");
    }
    if (!sym_t.empty()) {
      const GroupElem T = parse_group_elem(sym_t);
      if (sym_matrix) {
        std::cout << T.str() << " = " << T.matrix().str() << "\n";
      }
      if (sym_deg) {
        std::cout << "deg_B(" << T.str() << ") = " << deg_matrix_B(T).str()
                  << "\n";
      }
      if (!sym_apply.empty()) {
        const Rational z = parse_rational(sym_apply);
        const ExtRational image = T.matrix().act(ExtRational(z));
        std::cout << T.str() << "(" << rational_str(z) << ") = " << image.str()
                  << "\n";
      }
      if (!sym_sharp.empty()) {
        const QuasiPerfect c = parse_class(sym_sharp);
        std::cout << T.str() << "#" << c.str() << " = " << sharp(T, c).str()
                  << "\n";
      }
      if (!sym_matrix && !sym_deg && sym_apply.empty() && sym_sharp.empty() &&
          !has_refl) {
        std::cout << T.str() << " = " << T.matrix().str() << "\n";
      }
    }
    if (has_refl) {
      const DegFlavor flavor =
          sym_flavor == "B" ? DegFlavor::B : DegFlavor::P;
      std::cout << "deg_" << sym_flavor << "(R_{v_" << sym_refl
                << "}) = " << deg_matrix_refl(sym_refl, flavor).str() << "\n";
    }
  });

  // ---- family ----
  auto* fam_cmd = app.add_subcommand(
      "family", "Generate the pre-staircases of a family T#(base)");
  std::string fam_t = "id", fam_base_s, fam_n = "0..5", fam_dir = "both";
  std::string fam_format = "text", fam_out;
  std::size_t fam_steps = 8;
  unsigned fam_digits = 30;
  fam_cmd->add_option("--T", fam_t, "group element")->capture_default_str();
  fam_cmd->add_option("--base", fam_base_s, "U or L")
      ->check(CLI::IsMember({"U", "L"}))
      ->required();
  fam_cmd->add_option("--n", fam_n, "index or range A..B")
      ->capture_default_str();
  fam_cmd->add_option("--dir", fam_dir, "lower, upper or both")
      ->check(CLI::IsMember({"lower", "upper", "both"}))
      ->capture_default_str();
  fam_cmd->add_option("--steps", fam_steps, "recursion steps per staircase")
      ->capture_default_str();
  fam_cmd->add_option("--format", fam_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  fam_cmd->add_option("--out", fam_out, "output file (default stdout)");
  fam_cmd->add_option("--digits", fam_digits, "decimal digits in text/json")
      ->capture_default_str();
  fam_cmd->callback([&] {
    const GroupElem T = parse_group_elem(fam_t);
    const Branch base = parse_base(fam_base_s);
    const auto [n_lo, n_hi] = parse_range(fam_n);
    const Family fam = make_family(T, base);
    std::vector<Side> sides;
    if (fam_dir != "upper") {
      sides.push_back(Side::lower);
    }
    if (fam_dir != "lower") {
      sides.push_back(Side::upper);
    }
    const bool single = n_lo == n_hi && sides.size() == 1;
    std::vector<PreStaircase> list;
    for (unsigned long n = n_lo; n <= n_hi; ++n) {
      for (const Side side : sides) {
        const bool bottom =
            ((side == Side::lower) == fam.centers_ascend) && n == 0;
        if (bottom && !single) {
          continue;
        }
        list.push_back(build_staircase(fam, n, side, fam_steps));
      }
    }
    if (fam_format == "csv") {
      std::ostringstream out;
      out << "T,base,n,side,k,d,m,p,q,t,eps\n";
      for (const PreStaircase& sc : list) {
        for (std::size_t k = 0; k < sc.steps.size(); ++k) {
          const QuasiPerfect& s = sc.steps[k];
          out << T.str() << "," << fam_base_s << "," << sc.provenance.n << ","
              << str(sc.provenance.side) << "," << k << "," << s.d.str() << ","
              << s.m.str() << "," << s.p.str() << "," << s.q.str() << ","
              << s.t.str() << "," << (s.eps > 0 ? "+1" : "-1") << "\n";
        }
      }
      write_output(fam_out, out.str());
      return;
    }
    if (fam_format == "json") {
      nlohmann::ordered_json root;
      nlohmann::ordered_json f;
      f["T"] = T.str();
      f["base"] = fam_base_s;
      f["centers_ascend"] = fam.centers_ascend;
      f["effective_shift"] = fam.effective_shift().str();
      f["seed_lower"] = class_json(fam.seed_lower);
      f["seed_upper"] = class_json(fam.seed_upper);
      root["family"] = std::move(f);
      root["steps_requested"] = fam_steps;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const PreStaircase& sc : list) {
        arr.push_back(staircase_json(sc, fam_digits));
      }
      root["staircases"] = std::move(arr);
      write_output(fam_out, root.dump(2) + "\n");
      return;
    }
    std::ostringstream text;
    const auto* oldbuf = std::cout.rdbuf();
    std::cout.rdbuf(text.rdbuf());
    std::cout << "family " << fam.str() << "\n";
    for (const PreStaircase& sc : list) {
      print_staircase_text(sc, fam_digits);
    }
    std::cout.rdbuf(const_cast<std::streambuf*>(oldbuf));
    write_output(fam_out, text.str());
  });

  // ---- verify ----
  auto* ver_cmd =
      app.add_subcommand("verify", "Certification and acceptance suites");
  ver_cmd->require_subcommand(1);

  auto* vp_cmd = ver_cmd->add_subcommand(
      "perfect", "Cremona-reduce a class and print the full trace");
  std::string vp_class;
  long vp_budget = -1;
  vp_cmd->add_option("--class", vp_class, "class tuple or JSON record")
      ->required();
  vp_cmd->add_option("--budget", vp_budget, "move budget (default automatic)");
  vp_cmd->callback([&] {
    const QuasiPerfect c = parse_class(vp_class);
    const ReductionTrace tr = reduce(to_vector(c), vp_budget);
    print_trace(tr);
    if (tr.verdict != Verdict::Exceptional) {
      rc = 1;
    }
  });

  auto* vb_cmd = ver_cmd->add_subcommand(
      "blocking", "Check that a class blocks at its own b value");
  std::string vb_class;
  vb_cmd->add_option("--class", vb_class, "class tuple or JSON record")
      ->required();
  vb_cmd->callback([&] {
    const QuasiPerfect c = parse_class(vb_class);
    std::cout << center_blocking_report(c) << "\n";
    if (!is_center_blocking(c)) {
      rc = 1;
    }
  });

  auto* vl_cmd = ver_cmd->add_subcommand(
      "live", "Certify perfectness of a staircase and test liveness");
  std::string vl_t = "id", vl_base_s, vl_dir;
  unsigned long vl_n = 0;
  std::size_t vl_steps = 8;
  unsigned vl_digits = 30;
  vl_cmd->add_option("--T", vl_t, "group element")->capture_default_str();
  vl_cmd->add_option("--base", vl_base_s, "U or L")
      ->check(CLI::IsMember({"U", "L"}))
      ->required();
  vl_cmd->add_option("--n", vl_n, "family index")->required();
  vl_cmd->add_option("--dir", vl_dir, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}))
      ->required();
  vl_cmd->add_option("--steps", vl_steps, "recursion steps")
      ->capture_default_str();
  vl_cmd->add_option("--digits", vl_digits, "decimal digits")
      ->capture_default_str();
  vl_cmd->callback([&] {
    StaircaseRequest req;
    req.T = parse_group_elem(vl_t);
    req.base = parse_base(vl_base_s);
    req.n = vl_n;
    req.side = vl_dir == "lower" ? Side::lower : Side::upper;
    req.steps = vl_steps;
    const PreStaircase sc = build_requested(req);
    print_staircase_text(sc, vl_digits);
    std::size_t certified = 0, total = 0;
    const bool perfect = steps_perfect(sc, &certified, &total);
    std::cout << "  perfect: " << certified << "/" << total
              << " geometric steps certified\n";
    if (sc.direction == Direction::descending) {
      std::cout << "  slope: " << (slope_condition(sc) ? "holds" : "fails")
                << "\n";
    }
    const Liveness lv = liveness(sc, perfect);
    std::cout << "  liveness: " << str(lv) << "\n";
    if (lv != Liveness::Live) {
      rc = 1;
    }
  });

  auto* va_cmd = ver_cmd->add_subcommand(
      "all", "Run the twelve-criterion acceptance suite");
  std::string va_i = "0..3", va_n = "0..5";
  std::size_t va_steps = 10;
  va_cmd->add_option("--i", va_i, "shift powers 0..I")->capture_default_str();
  va_cmd->add_option("--n", va_n, "family indices 0..N")->capture_default_str();
  va_cmd->add_option("--steps", va_steps, "recursion steps per staircase")
      ->capture_default_str();
  va_cmd->callback([&] {
    SuiteOptions opt;
    opt.i_max = parse_range(va_i).second;
    opt.n_max = parse_range(va_n).second;
    opt.kappa = va_steps;
    std::vector<CriterionResult> results(12);
    std::atomic<int> next{1};
    const auto worker = [&] {
      for (int k; (k = next.fetch_add(1)) <= 12;) {
        results[static_cast<std::size_t>(k) - 1] = run_criterion(k, opt);
      }
    };
    const unsigned threads = std::min(thread_cap(), 12u);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (std::thread& th : pool) {
      th.join();
    }
    double seconds = 0.0;
    for (const CriterionResult& r : results) {
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2)
                << r.number << " " << r.name << ": " << r.detail << "\n";
      std::cerr << "criterion " << r.number << ": " << std::fixed
                << std::setprecision(2) << r.seconds << "s\n";
      seconds += r.seconds;
      if (!r.passed) {
        rc = 1;
      }
    }
    std::cerr << "total: " << std::fixed << std::setprecision(2) << seconds
              << "s\n";
  });

  // ---- plot ----
  auto* plot_cmd = app.add_subcommand(
      "plot", "Capacity-envelope data as CSV, JSON or SVG");
  plot_cmd->require_subcommand(1);

  auto* pe_cmd = plot_cmd->add_subcommand(
      "envelope", "Envelope of the obstructions of an explicit class list");
  std::vector<std::string> pe_pq, pe_class;
  std::string pe_b, pe_zmin = "1", pe_zmax = "9", pe_format = "csv", pe_out;
  pe_cmd->add_option("--b", pe_b, "rational b in [0,1)")->required();
  pe_cmd->add_option("--pq", pe_pq, "class center p/q (repeatable)");
  pe_cmd->add_option("--class", pe_class, "class tuple or JSON (repeatable)");
  pe_cmd->add_option("--zmin", pe_zmin, "window start")->capture_default_str();
  pe_cmd->add_option("--zmax", pe_zmax, "window end")->capture_default_str();
  pe_cmd->add_option("--format", pe_format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  pe_cmd->add_option("--out", pe_out, "output file (default stdout)");
  pe_cmd->callback([&] {
    std::vector<QuasiPerfect> classes;
    for (const std::string& s : pe_pq) {
      const Rational z = parse_rational(s);
      classes.push_back(from_pq(numerator(z), denominator(z)));
    }
    for (const std::string& s : pe_class) {
      classes.push_back(parse_class(s));
    }
    if (classes.empty()) {
      throw CLI::ValidationError("plot envelope",
                                 "need at least one --pq or --class");
    }
    const Envelope env =
        envelope(classes, QuadExt(parse_rational(pe_b)),
                 QuadExt(parse_rational(pe_zmin)),
                 QuadExt(parse_rational(pe_zmax)));
    write_output(pe_out, envelope_output(env, pe_format));
  });

  auto* ps_cmd = plot_cmd->add_subcommand(
      "staircase", "Envelope of a staircase profile at its limit b");
  std::string ps_t = "id", ps_base_s, ps_dir, ps_format = "csv", ps_out;
  unsigned long ps_n = 0;
  std::size_t ps_steps = 8, ps_kappa = 0;
  ps_cmd->add_option("--T", ps_t, "group element")->capture_default_str();
  ps_cmd->add_option("--base", ps_base_s, "U or L")
      ->check(CLI::IsMember({"U", "L"}))
      ->required();
  ps_cmd->add_option("--n", ps_n, "family index")->required();
  ps_cmd->add_option("--dir", ps_dir, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}))
      ->required();
  ps_cmd->add_option("--steps", ps_steps, "recursion steps")
      ->capture_default_str();
  ps_cmd->add_option("--kappa", ps_kappa,
                     "profile at most this many steps (0 = all)");
  ps_cmd->add_option("--format", ps_format, "csv, json or svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  ps_cmd->add_option("--out", ps_out, "output file (default stdout)");
  ps_cmd->callback([&] {
    StaircaseRequest req;
    req.T = parse_group_elem(ps_t);
    req.base = parse_base(ps_base_s);
    req.n = ps_n;
    req.side = ps_dir == "lower" ? Side::lower : Side::upper;
    req.steps = ps_steps;
    const PreStaircase sc = build_requested(req);
    const std::size_t cap = ps_kappa == 0 ? sc.steps.size() : ps_kappa;
    write_output(ps_out, envelope_output(staircase_profile(sc, cap), ps_format));
  });

  // ---- tables ----
  auto* tab_cmd =
      app.add_subcommand("tables", "Reference ladders and strand tables");
  std::string tab_name;
  std::size_t tab_rows = 0;
  tab_cmd->add_option("--name", tab_name, "g, y, v, w or strand")
      ->check(CLI::IsMember({"g", "y", "v", "w", "strand"}))
      ->required();
  tab_cmd->add_option("--rows", tab_rows, "row count (0 = default)");
  tab_cmd->callback([&] {
    if (tab_name == "g") {
      const std::size_t rows = tab_rows == 0 ? 7 : tab_rows;
      const OneThirdTable t = one_third_table(rows);
      std::cout << "g:";
      for (const Integer& g : t.g) {
        std::cout << " " << g.str();
      }
      std::cout << "\nm:";
      for (const QuasiPerfect& c : t.classes) {
        std::cout << " " << c.m.str();
      }
      std::cout << "\nd:";
      for (const QuasiPerfect& c : t.classes) {
        std::cout << " " << c.d.str();
      }
      std::cout << "\n";
      return;
    }
    if (tab_name == "y") {
      const std::size_t rows = tab_rows == 0 ? 12 : tab_rows;
      std::cout << "y:";
      for (std::size_t i = 0; i <= rows; ++i) {
        std::cout << " " << y_seq(i).str();
      }
      std::cout << "\n";
      return;
    }
    if (tab_name == "v" || tab_name == "w") {
      const std::size_t rows = tab_rows == 0 ? 8 : tab_rows;
      std::cout << tab_name << ":";
      for (std::size_t i = 1; i <= rows; ++i) {
        if (tab_name == "v") {
          std::cout << " " << v_ladder(i).str();
        } else {
          std::cout << " " << rational_str(w_ladder(i));
        }
      }
      std::cout << "\n";
      return;
    }
    const std::size_t rows = tab_rows == 0 ? 6 : tab_rows;
    for (unsigned long s = 0; s < 3; ++s) {
      std::cout << "strand " << s << ":";
      for (const QuasiPerfect& c : one_third_strand(s, rows)) {
        std::cout << " " << c.str();
      }
      std::cout << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
