#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "latk/error.hpp"
#include "latk/pipeline.hpp"

using namespace latk;

namespace {

const char* kInputs[] = {
    "amb_space 2\ninequalities 1\n2 1\n",
    "amb_space 2\ncone 2\n1 2\n2 1\ngrading\n1 1\n",
    "amb_space 3\ncone 4\n0 1 1\n1 1 1\n0 0 1\n1 0 1\ngrading\n1 -2 3\n",
    "amb_space 3\ncone 5\n1 0 0\n1 5 0\n1 0 7\n3 2 2\n2 -1 4\n",
    "amb_space 3\ninequalities 2\n1 0 0\n0 1 0\ncongruences 1\n1 2 3 5\n",
    "amb_space 2\ninhom_inequalities 3\n0 2 1\n0 -2 3\n2 -2 3\ngrading\n1 0\n",
    "amb_space 3\ninequalities 1\n1 1 0\nequations 1\n0 0 1\n",
};

RunConfig all_goals(unsigned threads) {
  RunConfig c;
  c.hilbert_basis = true;
  c.threads = threads;
  c.triangulation = true;
  c.class_group = true;
  return c;
}

}  // namespace

TEST(Pipeline, HalfplaneReportBlock) {
  RunConfig cfg;
  cfg.hilbert_basis = true;
  std::string text = format_report(run(parse_input(kInputs[0]), cfg));
  const std::string block =
      "1 Hilbert basis elements of degree 1:\n0 1\n\n"
      "0 further Hilbert basis elements of higher degree:\n\n"
      "1 extreme rays:\n0 1\n\n"
      "1 basis elements of maximal subspace:\n1 -2\n";
  EXPECT_NE(text.find(block), std::string::npos) << text;
}

TEST(Pipeline, ByteIdenticalAcrossThreadCounts) {
  for (const char* in : kInputs) {
    InputSystem s = parse_input(in);
    std::string one = format_report(run(s, all_goals(1)));
    for (unsigned t : {2u, 3u, 8u}) EXPECT_EQ(format_report(run(s, all_goals(t))), one) << in;
  }
}

TEST(Pipeline, QuotientRouteAgreesWithDirectRoute) {
  for (const char* in : kInputs) {
    InputSystem s = parse_input(in);
    RunConfig direct = all_goals(2);
    RunConfig routed = direct;
    routed.route_through_quotient = true;
    if (!s.inhomogeneous() && s.grading) direct.hilbert_series = routed.hilbert_series = true;
    EXPECT_EQ(format_report(run(s, routed)), format_report(run(s, direct))) << in;
  }
}

TEST(Pipeline, ForcedBottomGivesSameResults) {
  InputSystem s = parse_input(kInputs[3]);
  s.grading = IntegerVector{1, 0, 0};
  RunConfig lex;
  lex.hilbert_basis = true;
  lex.hilbert_series = true;
  RunConfig bottom = lex;
  bottom.bottom = true;
  Report a = run(s, lex), b = run(s, bottom);
  EXPECT_EQ(*a.hilbert_basis, *b.hilbert_basis);
  EXPECT_EQ(a.series->numerator, b.series->numerator);
  EXPECT_EQ(a.series->denominator, b.series->denominator);
}

TEST(Pipeline, RoughConeSwitchesToBottom) {
  InputSystem s = parse_input("amb_space 3\ncone 4\n1 0 0\n12 1 0\n12 0 1\n12 -1 -1\n");
  s.grading = IntegerVector{1, 0, 0};
  RunConfig cfg;
  cfg.triangulation = true;
  cfg.hilbert_basis = true;
  Report r = run(s, cfg);
  ASSERT_TRUE(r.triangulation);
  EXPECT_TRUE(r.triangulation->bottom);
}

TEST(Pipeline, ErrorsAndOutcomes) {
  RunConfig mg;
  mg.module_generators = true;
  try {
    run(parse_input(kInputs[0]), mg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositive);
  }
  RunConfig series;
  series.hilbert_series = true;
  InputSystem ungraded = parse_input("amb_space 3\ncone 4\n1 0 0\n0 1 0\n1 0 1\n0 2 1\n");
  try {
    run(ungraded, series);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGraded);
  }
  InputSystem negative = parse_input("amb_space 2\ncone 2\n1 0\n1 1\ngrading\n1 -1\n");
  try {
    run(negative, series);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPositiveDegree);
  }
}

TEST(Pipeline, VerboseLogListsHsopData) {
  std::ostringstream log;
  RunConfig cfg;
  cfg.hsop = true;
  cfg.verbose = true;
  cfg.log = &log;
  run(parse_input(kInputs[2]), cfg);
  EXPECT_NE(log.str().find("Heights vector: 1 1 2 3\n"), std::string::npos);
  EXPECT_NE(log.str().find("Degrees of HSOP: 1 6 12\n"), std::string::npos);
}

TEST(Pipeline, InputEchoRoundTrips) {
  for (const char* in : kInputs) {
    InputSystem s = parse_input(in);
    std::string text = format_report(run(s, all_goals(1)));
    auto pos = text.find("input system:\n");
    ASSERT_NE(pos, std::string::npos);
    EXPECT_EQ(parse_input(text.substr(pos + 14)), s);
  }
}

TEST(Pipeline, LatticeOnlyInput) {
  RunConfig cfg;
  cfg.hilbert_basis = true;
  Report r = run(parse_input("amb_space 3\nequations 1\n1 1 1\n"), cfg);
  EXPECT_FALSE(r.pointed);
  EXPECT_EQ(r.maximal_subspace.size(), 2u);
  EXPECT_TRUE(r.hilbert_basis->empty());
}
