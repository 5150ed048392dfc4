// Capacity envelopes. At b = 0 the classes with centers 2 and 5 give the
// pieces min(z, 2) and min(z, 5)/2, which cross at z = 4; the envelope over
// [1, 6] therefore has breakpoints 1, 2, 4, 5, 6 with values
// 1, 2, 2, 5/2, 5/2. Emission is exact, so the whole byte stream is pinned
// where practical.

#include "staircase/capacity.hpp"

#include "staircase/obstruct.hpp"

#include "doctest.h"

#include <string>

using namespace staircase;

namespace {

Envelope two_piece_envelope() {
  const std::vector<QuasiPerfect> cs{from_pq(2, 1), from_pq(5, 1)};
  return envelope(cs, QuadExt(0), QuadExt(1), QuadExt(6));
}

}  // namespace

TEST_CASE("obstruction pieces") {
  const ObstructionPiece pc = piece_of(from_pq(6, 1));
  CHECK_EQ(pc.label, "(3,2,6,1,3,+1)");
  CHECK_EQ(pc.A, Rational(0));
  CHECK_EQ(pc.C, Rational(1));
  REQUIRE(pc.corner.has_value());
  CHECK_EQ(*pc.corner, Rational(6));
  const QuadExt third{Rational(1, 3)};
  CHECK_EQ(pc.value(third, QuadExt(5)).str(), "15/7");
  CHECK_EQ(pc.value(third, QuadExt(7)).str(), "18/7");
  const ObstructionPiece ln = line_piece();
  CHECK_FALSE(ln.corner.has_value());
  CHECK_EQ(ln.value(QuadExt(0), QuadExt(3)).str(), "4/3");
}

TEST_CASE("envelope breakpoints and segments") {
  const Envelope env = two_piece_envelope();
  REQUIRE_EQ(env.breakpoints.size(), 5);
  const char* zs[] = {"1", "2", "4", "5", "6"};
  const BreakKind kinds[] = {BreakKind::endpoint, BreakKind::center,
                             BreakKind::crossing, BreakKind::center,
                             BreakKind::endpoint};
  const char* envs[] = {"1", "2", "2", "5/2", "5/2"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK_EQ(env.breakpoints[i].z.str(), zs[i]);
    CHECK_EQ(env.breakpoints[i].kind, kinds[i]);
    CHECK_EQ(env.breakpoints[i].env.str(), envs[i]);
    CHECK_FALSE(env.breakpoints[i].env_is_volume);
  }
  REQUIRE_EQ(env.segments.size(), 4);
  CHECK_EQ(env.segments[0].label, "(1,0,2,1,1,-1)");
  CHECK_EQ(env.segments[1].label, "(1,0,2,1,1,-1)");
  CHECK_EQ(env.segments[2].label, "(2,0,5,1,2,-1)");
  CHECK_EQ(env.segments[3].label, "(2,0,5,1,2,-1)");
  CHECK_EQ(env.segments[0].dominator, 0);
  CHECK_EQ(env.segments[2].dominator, 1);
  CHECK_EQ(env.value_at(QuadExt(3)).str(), "2");
  CHECK_EQ(env.value_at(QuadExt(Rational(9, 2))).str(), "9/4");
}

TEST_CASE("envelope validation") {
  const std::vector<QuasiPerfect> cs{from_pq(2, 1)};
  CHECK_THROWS_AS(envelope(cs, QuadExt(1), QuadExt(1), QuadExt(2)),
                  DomainError);  // b = 1
  CHECK_THROWS_AS(envelope(cs, QuadExt(0), QuadExt(Rational(1, 2)), QuadExt(2)),
                  DomainError);  // window below 1
  CHECK_THROWS_AS(envelope(cs, QuadExt(0), QuadExt(3), QuadExt(2)),
                  DomainError);  // empty window
}

TEST_CASE("envelope with no pieces falls back to the volume curve") {
  const Envelope env =
      envelope(std::vector<ObstructionPiece>{}, QuadExt(0), QuadExt(1),
               QuadExt(4));
  REQUIRE_EQ(env.breakpoints.size(), 2);
  CHECK(env.breakpoints[0].env_is_volume);
  CHECK_EQ(env.breakpoints[1].vol.square().rational_value(), Rational(4));
  CHECK_THROWS_AS(env.value_at(QuadExt(2)), DomainError);
}

TEST_CASE("csv emission") {
  const std::string csv = envelope_csv(two_piece_envelope());
  const std::string expect =
      "z_num,z_den,kind,value,dominator\n"
      "1,1,endpoint,1.000000000000000000000000000000,\"(1,0,2,1,1,-1)\"\n"
      "2,1,center,2.000000000000000000000000000000,\"(1,0,2,1,1,-1)\"\n"
      "4,1,crossing,2.000000000000000000000000000000,\"(2,0,5,1,2,-1)\"\n"
      "5,1,center,2.500000000000000000000000000000,\"(2,0,5,1,2,-1)\"\n"
      "6,1,endpoint,2.500000000000000000000000000000,\"-\"\n";
  CHECK_EQ(csv, expect);
}

TEST_CASE("irrational breakpoints are marked in csv") {
  // Window ending at sqrt(2) + 4 puts an exact quadratic in the z column.
  const std::vector<QuasiPerfect> cs{from_pq(5, 1)};
  const Envelope env = envelope(cs, QuadExt(0), QuadExt(1),
                                QuadExt(Rational(4), Rational(1), 2));
  const std::string csv = envelope_csv(env);
  CHECK(csv.find("4 + 1*sqrt(2),0,endpoint,") != std::string::npos);
}

TEST_CASE("json and svg emission") {
  const Envelope env = two_piece_envelope();
  const std::string js = envelope_json(env);
  CHECK_EQ(js.rfind("{\n  \"b\": {\n    \"exact\": \"0\",", 0), 0);
  CHECK(js.find("\"breakpoints\"") != std::string::npos);
  CHECK(js.find("\"5/2\"") != std::string::npos);
  const std::string svg = envelope_svg(env);
  CHECK_EQ(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // Deterministic: same input, same bytes.
  CHECK_EQ(svg, envelope_svg(two_piece_envelope()));
}

TEST_CASE("staircase profile") {
  const Family fl = make_family(group_id(), Branch::L);
  const PreStaircase sc = build_staircase(fl, 0, Side::lower, 6);
  const Envelope env = staircase_profile(sc, 4);
  CHECK_EQ(env.b.str(), "0");
  CHECK_EQ(env.z_lo.str(), "5");
  CHECK_EQ(env.z_hi.str(), "89/13");
  CHECK_EQ(env.pieces.size(), 4);
  CHECK_THROWS_AS(staircase_profile(sc, 1), DomainError);  // needs two steps
}

TEST_CASE("corner invariant") {
  const QuasiPerfect b0 = from_pq(6, 1);
  CHECK(corner_invariant(b0, own_b(b0)));
  CHECK_FALSE(corner_invariant(b0, QuadExt(Rational(1, 3))));
}
