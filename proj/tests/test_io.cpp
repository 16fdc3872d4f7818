#include "qnetmax/error.hpp"
#include "qnetmax/io.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace qnetmax;
using io::json;

namespace {

ErrorKind parse_error_kind(const json& j) {
  try {
    io::parse_state(j);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted " << j.dump();
  return ErrorKind::ParseError;
}

}  // namespace

TEST(ParseState, ExplicitMatrix) {
  const json j = {{"label", "ab"},
                  {"re", {{0.2, 0, 0, 0.2}, {0, 0.3, 0.3, 0}, {0, 0.3, 0.3, 0}, {0.2, 0, 0, 0.2}}}};
  const auto s = io::parse_state(j);
  EXPECT_EQ(s.label(), "ab");
  EXPECT_LT((s.matrix() - fixtures::counterexample_ab().matrix()).norm(), 1e-15);
}

TEST(ParseState, ImaginaryPart) {
  // |+i><+i| ⊗ |0><0| has imaginary off-diagonals.
  json re = json::array(), im = json::array();
  for (int r = 0; r < 4; ++r) {
    re.push_back(json::array({0, 0, 0, 0}));
    im.push_back(json::array({0, 0, 0, 0}));
  }
  re[0][0] = re[2][2] = 0.5;
  im[0][2] = -0.5;
  im[2][0] = 0.5;
  const auto s = io::parse_state({{"re", re}, {"im", im}});
  EXPECT_EQ(s.matrix()(2, 0), cx(0.0, 0.5));
}

TEST(ParseState, Families) {
  EXPECT_LT((io::parse_state({{"family", "werner"}, {"v", 0.3}}).matrix() - werner_state(0.3).matrix()).norm(), 1e-15);
  EXPECT_LT((io::parse_state({{"family", "colored"}, {"v", 0.7}, {"lambda", 1.0 / 3.0}}).matrix() -
             fixtures::counterexample_bc().matrix())
                .norm(),
            1e-15);
  EXPECT_LT((io::parse_state({{"family", "bell"}, {"which", "phi+"}}).matrix() - bell_state(BellState::PhiPlus).matrix())
                .norm(),
            1e-15);
}

TEST(ParseState, Rejections) {
  EXPECT_EQ(parse_error_kind({{"family", "werner"}}), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind({{"family", "werner"}, {"v", 2.0}}), ErrorKind::ParameterOutOfRange);
  EXPECT_EQ(parse_error_kind({{"family", "bell"}, {"which", "chi"}}), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind({{"re", {{1, 0}, {0, 0}}}}), ErrorKind::ParseError);
  EXPECT_EQ(parse_error_kind({{"re", {{0.3, 0, 0, 0}, {0, 0.3, 0, 0}, {0, 0, 0.3, 0}, {0, 0, 0, 0}}}}),
            ErrorKind::TraceNotOne);
  try {
    io::parse_state({{"family", "werner"}, {"v", 0.5}, {"colour", 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos) << e.what();
  }
}

TEST(LoadStateFile, NamesFileOnError) {
  const auto path = std::filesystem::temp_directory_path() / "qnetmax_io_bad.json";
  std::ofstream(path) << "{\"family\": ";
  try {
    io::load_state_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find(path.filename().string()), std::string::npos) << e.what();
  }
  std::filesystem::remove(path);
  EXPECT_THROW(io::load_state_file("/nonexistent/qnetmax.json"), Error);
}

TEST(ParseBilocalSettings, DefaultsAndNormalization) {
  std::vector<std::string> warnings;
  const auto s = io::parse_bilocal_settings({{"a0", {0, 0, 2}}, {"c1", {1, 0, 0}}}, &warnings);
  EXPECT_EQ(s.a0.vec(), Vector3(0, 0, 1));
  EXPECT_EQ(s.c1.vec(), Vector3(1, 0, 0));
  EXPECT_EQ(s.bA1.vec(), BilocalSettings::branciard().bA1.vec());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("a0"), std::string::npos);

  warnings.clear();
  io::parse_bilocal_settings({{"a0", {0, 0, 1.0000001}}}, &warnings);
  EXPECT_TRUE(warnings.empty());

  EXPECT_THROW(io::parse_bilocal_settings({{"d0", {0, 0, 1}}}), Error);
  EXPECT_THROW(io::parse_bilocal_settings({{"a0", {0, 0, 0}}}), Error);
}

TEST(ParseStarSettings, Branches) {
  const json b = {{"a0", {1, 0, 0}}, {"a1", {0, 1, 0}}, {"b0", {0, 0, 1}}, {"b1", {1, 0, 0}}};
  const auto s = io::parse_star_settings({{"branches", {b, b, b}}});
  EXPECT_EQ(s.branches.size(), 3u);
  const auto back = io::to_json(s);
  EXPECT_EQ(back["branches"].size(), 3u);
}

TEST(RoundSignificant, FifteenDigits) {
  EXPECT_EQ(io::round_significant(std::sqrt(2.0)), 1.41421356237310);
  EXPECT_EQ(json(io::round_significant(std::sqrt(2.0))).dump(), "1.4142135623731");
  EXPECT_EQ(io::round_significant(0.0), 0.0);
}
