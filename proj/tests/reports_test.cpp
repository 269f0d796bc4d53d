#include "qrconf/reports.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace qrconf;

namespace {

RunConfig config(std::vector<std::string> h, int N = 400, int M = 20)
{
  RunConfig c;
  c.h_values = std::move(h);
  c.N = N;
  c.M = M;
  c.cutoffs = {64, 128, 256};
  return c;
}

std::vector<std::string> lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST(Config, RejectsSmallTruncation)
{
  EXPECT_THROW(validate(config({"2"}, 100, 100), true), ConfigError);
  EXPECT_NO_THROW(validate(config({"2"}, 100, 100), false));
  EXPECT_THROW(run_verify(config({"2"}, 100, 100)), ConfigError);
}

TEST(Config, RejectsMalformedInput)
{
  EXPECT_THROW(validate(config({"two"}), false), ConfigError);
  EXPECT_THROW(validate(config({"1/0"}), false), ConfigError);
  auto c = config({"2"});
  c.cutoffs = {128, 64};
  EXPECT_THROW(validate(c, false), ConfigError);
  c.cutoffs = {};
  EXPECT_THROW(validate(c, false), ConfigError);
  EXPECT_THROW(run_verify(config({})), ConfigError);
}

TEST(Config, AcceptsDecimalsAndFractions)
{
  EXPECT_NO_THROW(validate(config({"0.7886751345948128822545744", "+5/2", "-3/4", "1e-1"}), false));
}

TEST(Verify, HalfSkipsQrSuites)
{
  const auto r = run_verify(config({"1/2"}));
  EXPECT_EQ(r.exit_status, exit_pass);
  const std::string text = render(r, ReportFormat::csv);
  EXPECT_NE(text.find("skipped: undefined q_R"), std::string::npos);
  EXPECT_EQ(text.find(",fail,"), std::string::npos);
}

TEST(Verify, DegenerateWeightIsSkippedNotFailed)
{
  const auto r = run_verify(config({"-1"}));
  EXPECT_EQ(r.exit_status, exit_pass);
  EXPECT_NE(render(r, ReportFormat::csv).find("skipped: degenerate weight"), std::string::npos);
}

TEST(Sweep, RowsAndResiduals)
{
  const auto r = run_sweep(config({"3/4", "1", "2", "5/2", "5"}));
  EXPECT_EQ(r.exit_status, exit_pass);
  ASSERT_EQ(r.csv_rows.size(), 5u);
  const auto& head = r.csv_header;
  const auto col = std::find(head.begin(), head.end(), "residual_27") - head.begin();
  const auto c_col = std::find(head.begin(), head.end(), "c") - head.begin();
  for (const auto& row : r.csv_rows) {
    EXPECT_EQ(row[static_cast<std::size_t>(col)], "0");
  }
  EXPECT_EQ(r.csv_rows[2][static_cast<std::size_t>(c_col)], "-26");
  EXPECT_EQ(r.csv_rows[0][0], "3/4");
}

TEST(Sweep, EmptyListGivesHeaderOnly)
{
  const auto r = run_sweep(config({}));
  EXPECT_EQ(r.exit_status, exit_pass);
  const auto l = lines(render(r, ReportFormat::csv));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "# qrconf " + tool_version() + " schema sweep/1");
  EXPECT_EQ(l[1].rfind("h,h_float,", 0), 0u);
  EXPECT_TRUE(nlohmann::json::parse(render(r, ReportFormat::json)).is_object());
}

TEST(Sweep, FloatModeRootHasVanishingKappa)
{
  auto c = config({"0.78867513459481288225457439025097872782380087563506"});
  c.mode = ScalarMode::real;
  const auto r = run_sweep(c);
  const auto& head = r.csv_header;
  const auto col = std::find(head.begin(), head.end(), "kappa_float") - head.begin();
  EXPECT_LT(std::abs(std::stod(r.csv_rows.at(0)[static_cast<std::size_t>(col)])), 1e-10);
}

TEST(Sweep, IsDeterministic)
{
  const auto c = config({"2", "5/2", "-3/4"});
  EXPECT_EQ(render(run_sweep(c), ReportFormat::json), render(run_sweep(c), ReportFormat::json));
  EXPECT_EQ(render(run_sweep(c), ReportFormat::csv), render(run_sweep(c), ReportFormat::csv));
}

TEST(Explore, BelowHalfFlagsConvergenceDomain)
{
  const auto r = run_explore(config({"2/5"}));
  const std::string text = render(r, ReportFormat::csv);
  EXPECT_NE(text.find("mean_deviation,,,,ConvergenceDomain"), std::string::npos);
  const auto j = nlohmann::json::parse(render(r, ReportFormat::json));
  EXPECT_TRUE(j["results"].contains("2/5"));
}

TEST(Explore, SlTwoRicciResidualsVanish)
{
  const auto r = run_explore(config({"2"}, 400, 12));
  bool seen = false;
  for (const auto& row : r.csv_rows) {
    if (row[1] == "ricci_identity_residual" && row[2] == "-1,0,1,0") {
      seen = true;
      EXPECT_EQ(row[3], "0");
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Render, CsvHasSchemaLine)
{
  const auto r = run_verify(config({"1/2"}));
  const auto l = lines(render(r, ReportFormat::csv));
  ASSERT_GE(l.size(), 2u);
  EXPECT_EQ(l[0], "# qrconf " + tool_version() + " schema verify/1");
  EXPECT_EQ(l[1], "h,suite,check,status,value,error,invariant");
}
