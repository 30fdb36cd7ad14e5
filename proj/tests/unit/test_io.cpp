#include <gtest/gtest.h>

#include "superchab/commands.hpp"
#include "superchab/errors.hpp"

using namespace superchab;

namespace {

const char* kDeg12 = "m=3; f=prod[(1,1),(2,1),(3,1),(4,1),(5,1),(6,1),(7,1),(8,1),(9,1),(10,1),(11,1),(12,1)]; rank=0";

std::pair<int, int> parse_error_at(const std::string& text) {
  try {
    parse_curve_input(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {0, 0};
}

// No floating-point values anywhere in the output.
bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& v : j) {
      if (has_float(v)) return true;
    }
  }
  return false;
}

}  // namespace

TEST(Parse, KeyedForms) {
  const CurveInput a = parse_curve_input("m=3; f=[1,0,0,0,1]; rank=0; prime=13; precision=30; height=7");
  EXPECT_EQ(a.m, 3);
  EXPECT_EQ(a.f, Polynomial({1, 0, 0, 0, 1}));
  EXPECT_EQ(*a.rank, 0);
  EXPECT_EQ(*a.prime, 13);
  EXPECT_EQ(a.precision, 30);
  EXPECT_EQ(a.height, 7);

  const CurveInput b = parse_curve_input("m = 4 ;\n f = prod[(1/2, 1), (-3, 2)] ; c = -2/3");
  const Polynomial expect = Polynomial({frac(-2, 3)}) * Polynomial::linear_root(frac(1, 2)) *
                            Polynomial::linear_root(-3).pow(2);
  EXPECT_EQ(b.f, expect);
  EXPECT_FALSE(b.rank);
  EXPECT_EQ(b.height, 50);
}

TEST(Parse, PositionalForms) {
  EXPECT_EQ(parse_curve_input("3; [1,0,0,0,1]").f, Polynomial({1, 0, 0, 0, 1}));
  const CurveInput p = parse_curve_input("3; 2; [(0,1),(1,2)]");
  EXPECT_EQ(p.f, Polynomial({0, 2, -4, 2}));
  EXPECT_EQ(parse_curve_input("3; [(0,1),(1,1)]; rank=1").rank, 1);
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_at("m=3; f=[1,2"), std::make_pair(1, 12));
  EXPECT_EQ(parse_error_at("m=3; q=5"), std::make_pair(1, 6));
  EXPECT_EQ(parse_error_at("m=3;\nf=[1,0,0,0,1];\nrank=x"), std::make_pair(3, 6));
  EXPECT_EQ(parse_error_at("m=3; f=[1/0,1]"), std::make_pair(1, 11));
  parse_error_at("f=[1,1]");
  parse_error_at("m=1; f=[1,1]");
  parse_error_at("m=3; f=[5]");
  parse_error_at("m=3; f=[]");
  parse_error_at("m=3; f=[1,1]; c=2");
  EXPECT_THROW(parse_curve_input("m=3; f=prod[(0,3),(1,1)]"), HypothesisError);
}

TEST(Commands, JsonExamples) {
  const auto bound = run_text("bound", kDeg12);
  ASSERT_EQ(bound.exit_code, kExitOk) << bound.json.dump();
  EXPECT_EQ(bound.json["schema"], kSchemaVersion);
  EXPECT_EQ(bound.json["theorem3_total"], 378);
  EXPECT_EQ(bound.json["sharp_total"], 284);
  EXPECT_EQ(bound.json["prime"], 7);
  EXPECT_EQ(bound.json["mu"], "6/5");
  EXPECT_EQ(bound.json["rank"]["source"], "user-asserted");
  EXPECT_EQ(bound.json["theorem3_relation"], "<");

  const auto g = run_text("genus", "m=3; f=[1,0,0,0,1]");
  EXPECT_EQ(g.json["genus"], 3);
  EXPECT_TRUE(g.json["hypotheses"]["ok"].get<bool>());

  const auto p = run_text("prime", "m=5; f=[1,1]");
  EXPECT_EQ(p.json["prime"], 11);

  const auto a = run_text("analyze", "m=3; f=prod[(1,1),(-1,1),(7,1),(-7,1)]");
  ASSERT_EQ(a.exit_code, kExitOk) << a.json.dump();
  EXPECT_EQ(a.json["annuli"].size(), 1u);
  EXPECT_EQ(a.json["annuli"][0]["verdict"], "charted");

  for (const auto& r : {bound, g, p, a}) EXPECT_FALSE(has_float(r.json));
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run_text("bound", "m=3; f=[1,2").exit_code, kExitParse);
  EXPECT_EQ(run_text("bound", "m=3; f=[1,0,0,0,1]").exit_code, kExitHypothesis);
  const auto weak = run_text("bound", "m=3; f=[1,0,0,0,1]; rank=0");
  EXPECT_EQ(weak.exit_code, kExitHypothesis);
  EXPECT_EQ(weak.json["error"]["kind"], "hypothesis");
  EXPECT_FALSE(weak.json["error"]["violated"].empty());
  EXPECT_EQ(run_text("analyze", "m=3; f=[1,0,0,0,1]; prime=11").exit_code, kExitHypothesis);
  EXPECT_EQ(run_text("verify", std::string(kDeg12) + "; height=5").exit_code, kExitOk);
  const auto err = run_text("search", "m=3;\nf=[1,x]");
  EXPECT_EQ(err.json["error"]["line"], 2);
}

TEST(Commands, DeterministicOutput) {
  for (const auto& cmd : command_names()) {
    const std::string text = std::string(kDeg12) + "; height=4";
    EXPECT_EQ(run_text(cmd, text).json.dump(), run_text(cmd, text).json.dump()) << cmd;
  }
}

TEST(Commands, CurveJsonRoundTrip) {
  const auto first = run_text("genus", "m=4; f=prod[(1/2,1),(-3,2),(5,1),(7,3)]; c=-2/3");
  ASSERT_EQ(first.exit_code, kExitOk);
  std::string text = "m=" + std::to_string(first.json["curve"]["m"].get<long>()) + "; f=[";
  bool comma = false;
  for (const auto& c : first.json["curve"]["f"]) {
    text += (comma ? "," : "") + c.get<std::string>();
    comma = true;
  }
  text += "]";
  EXPECT_EQ(run_text("genus", text).json.dump(), first.json.dump());
}

TEST(Commands, BatchKeepsOrder) {
  std::vector<std::string> lines;
  for (long t = 2; t <= 30; ++t) lines.push_back("m=" + std::to_string(t) + "; f=[1,1]");
  lines.push_back("m=oops");
  const auto out = run_batch("prime", lines, 4);
  ASSERT_EQ(out.size(), lines.size());
  for (long t = 2; t <= 30; ++t) EXPECT_EQ(out[t - 2].json["m"], t);
  EXPECT_EQ(out.back().exit_code, kExitParse);
}
