#include <gtest/gtest.h>

#include <functional>

#include "helpers.hpp"
#include "vassep/json_io.hpp"

using namespace vassep;
using io::Json;
using testutil::Rng;

namespace {

std::string error_pointer(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const io::FormatError& e) {
    return e.pointer();
  }
  return "<no error>";
}

Json problem(Json system) { return Json{{"format", "vassep-problem"}, {"version", 1}, {"system", system}}; }

Json example1_system() {
  return Json{{"dim", 3}, {"source", {1, 0, 0}}, {"transitions", {{-1, 2, 1}, {2, -1, 1}}}};
}

}  // namespace

TEST(JsonSets, LinearRoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<IntVector> ps;
    for (int k = static_cast<int>(rng.uniform(0, 3)); k > 0; --k) ps.push_back(IntVector(rng.period(d, 4)));
    LinearSet l(IntVector(rng.vec(d, 0, 5)), ps);
    EXPECT_EQ(io::read_linear(Json::parse(io::to_json(l).dump())), l);
  }
}

TEST(JsonSets, ModularAndUnaryRoundTrip) {
  ModularSet m(2, 3, {{0, 1}, {2, 2}});
  EXPECT_EQ(io::read_modular(io::to_json(m)), m);
  ModularSet empty(2, 3, {});
  EXPECT_EQ(io::read_modular(io::to_json(empty)), empty);
  UnarySet u(2, 3, {{UnaryCoord::small(0), UnaryCoord::large_residue(2)}, {UnaryCoord::large_residue(1), UnaryCoord::small(2)}});
  EXPECT_EQ(io::read_unary(Json::parse(io::to_json(u).dump())), u);
}

TEST(JsonSets, SchemasWithoutDimParse) {
  EXPECT_EQ(io::read_modular(Json::parse(R"({"n":2,"residues":[[0]]})")), ModularSet(1, 2, {{0}}));
  EXPECT_EQ(io::read_unary(Json::parse(R"({"n":3,"classes":[[{"small":0},{"large":1}]]})")),
            UnarySet(2, 3, {{UnaryCoord::small(0), UnaryCoord::large_residue(1)}}));
  EXPECT_EQ(error_pointer([] { io::read_modular(Json::parse(R"({"n":2,"residues":[]})")); }), "");
}

TEST(JsonSets, BadEntriesAreLocated) {
  EXPECT_EQ(error_pointer([] { io::read_unary(Json::parse(R"({"n":3,"classes":[[{"small":0,"large":1}]]})")); }),
            "/classes/0/0");
  EXPECT_EQ(error_pointer([] { io::read_linear(Json::parse(R"({"base":[0,"x"],"periods":[]})")); }), "/base/1");
  EXPECT_EQ(error_pointer([] { io::read_linear(Json::parse(R"({"base":[0,1],"periods":[[1]]})")); }), "/periods/0");
  EXPECT_EQ(error_pointer([] { io::read_linear(Json::parse(R"({"base":[0],"periods":[],"extra":1})")); }), "/extra");
  EXPECT_EQ(error_pointer([] { io::read_modular(Json::parse(R"({"n":2,"residues":[[2]]})")); }), "");
}

TEST(JsonSets, BigIntegersTravelAsStrings) {
  Integer big = Integer(1) << 80;
  LinearSet l(IntVector(std::vector<Integer>{big, 3}), {});
  Json j = io::to_json(l);
  EXPECT_TRUE(j["base"][0].is_string());
  EXPECT_TRUE(j["base"][1].is_number());
  EXPECT_EQ(io::read_linear(j), l);
}

TEST(JsonProblems, VasWithSection) {
  Json j = problem(example1_system());
  j["section"] = Json{{"keep", {0, 1}}, {"fixed", {{"2", 7}}}};
  auto p = io::read_problem(j);
  ASSERT_EQ(p.kind, io::Problem::Kind::Vas);
  auto s = p.sectioned();
  EXPECT_EQ(s.section.keep, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(s.section.fixed.at(2), 7);
  auto again = io::read_problem(Json::parse(io::to_json(p).dump()));
  EXPECT_EQ(again.sectioned().vas.transitions, s.vas.transitions);
  EXPECT_EQ(again.sectioned().section.fixed, s.section.fixed);
}

TEST(JsonProblems, VassByStateNames) {
  Json sys{{"dim", 1},
           {"states", {"p", "q"}},
           {"initial", "p"},
           {"final", "q"},
           {"source", {0}},
           {"transitions", {{"p", {1}, "p"}, {"p", {0}, "q"}}}};
  auto p = io::read_problem(problem(sys));
  ASSERT_EQ(p.kind, io::Problem::Kind::Vass);
  EXPECT_EQ(p.vass.transitions[1].to, 1u);
  EXPECT_EQ(p.final_state, 1u);
  EXPECT_EQ(p.data_dim(), 1u);
  auto s = p.sectioned();
  EXPECT_EQ(s.vas.dim, 1u + 2 + 2);
  auto again = io::read_problem(io::to_json(p));
  EXPECT_EQ(again.sectioned().vas.transitions, s.vas.transitions);
}

TEST(JsonProblems, LabeledSystem) {
  Json sys = Json{{"dim", 1},          {"source", {1}},   {"transitions", {{1}, {-1}, {0}}},
                  {"alphabet", {"a"}}, {"labels", {"a", "a", nullptr}}, {"acceptance", "exact"},
                  {"accept", {0}}};
  auto p = io::read_problem(problem(sys));
  ASSERT_EQ(p.kind, io::Problem::Kind::Labeled);
  EXPECT_EQ(p.labeled.labels[2], std::nullopt);
  EXPECT_EQ(p.data_dim(), 2u);
  auto again = io::read_problem(io::to_json(p));
  EXPECT_EQ(again.labeled.labels, p.labeled.labels);
  EXPECT_EQ(again.labeled.v0, p.labeled.v0);
}

TEST(JsonProblems, RejectionsPointAtTheField) {
  EXPECT_EQ(error_pointer([] {
              Json j = problem(example1_system());
              j["system"]["colour"] = "red";
              io::read_problem(j);
            }),
            "/system/colour");
  EXPECT_EQ(error_pointer([] {
              Json j = problem(example1_system());
              j["system"]["transitions"][1] = {1, 2};
              io::read_problem(j);
            }),
            "/system/transitions/1");
  EXPECT_EQ(error_pointer([] {
              Json j = problem(example1_system());
              j["section"] = Json{{"keep", {0}}, {"fixed", {{"2", 7}}}};
              io::read_problem(j);
            }),
            "/section");
  EXPECT_EQ(error_pointer([] {
              Json j = problem(example1_system());
              j["params"] = Json{{"budget", 3}};
              io::read_problem(j);
            }),
            "/params/budget");
  EXPECT_EQ(error_pointer([] {
              Json j = problem(example1_system());
              j["version"] = 2;
              io::read_problem(j);
            }),
            "/version");
  EXPECT_EQ(error_pointer([] {
              Json sys{{"dim", 1}, {"states", {"p"}}, {"source", {0}}, {"transitions", {{"p", {1}, "r"}}}};
              io::read_problem(problem(sys));
            }),
            "/system/transitions/0/2");
  EXPECT_THROW(io::parse_text("{\"format\": ", "inline"), io::FormatError);
}

TEST(JsonCertificates, RoundTripAndReverify) {
  SectionedVas evens{Vas(1, IntVector{0}, {IntVector{2}}), SectionSpec::full(1)};
  SectionedVas odds{Vas(1, IntVector{1}, {IntVector{2}}), SectionSpec::full(1)};
  SectionedVas zero{Vas(1, IntVector{0}, {}), SectionSpec::full(1)};
  SectionedVas positive{Vas(1, IntVector{1}, {IntVector{1}}), SectionSpec::full(1)};
  struct Case {
    SectionedVas a, b;
    Mode mode;
  };
  for (const auto& [a, b, mode] : std::vector<Case>{{evens, odds, Mode::Modular},
                                                    {evens, odds, Mode::Unary},
                                                    {evens, evens, Mode::Modular},
                                                    {zero, positive, Mode::Modular},
                                                    {zero, positive, Mode::Unary}}) {
    auto c = decide_separability(a, b, mode);
    ASSERT_NE(c.verdict, Verdict::Unknown) << c.report;
    auto back = io::read_certificate(Json::parse(io::to_json(c).dump(2)));
    EXPECT_EQ(io::to_json(back), io::to_json(c));
    EXPECT_TRUE(verify_certificate(a, b, back));
  }
}

TEST(JsonCertificates, LanguageBlockRoundTrip) {
  LabeledVas odd{Vas(1, IntVector{1}, {IntVector{1}, IntVector{-1}}), {"a"}, {0, 0}, Acceptance::Exact, IntVector{0}};
  LabeledVas even = odd;
  even.vas.source = IntVector{0};
  auto c = commutative_regular_separability(odd, even);
  ASSERT_EQ(c.cert.verdict, Verdict::Separable);
  auto back = io::read_language_certificate(io::to_json(c));
  EXPECT_EQ(back.language_separator, c.language_separator);
  EXPECT_EQ(back.bridge, c.bridge);
  EXPECT_TRUE(verify_language_certificate(odd, even, back));
  EXPECT_THROW(io::read_certificate(io::to_json(c)), io::FormatError);
}

TEST(JsonCertificates, UnknownFieldRejected) {
  Certificate c;
  Json j = io::to_json(c);
  j["proofs"] = Json::array({Json{{"prover", "lattice"}, {"coords", {0}}, {"note", "x"}}});
  EXPECT_EQ(error_pointer([&] { io::read_certificate(j); }), "/proofs/0/note");
}
