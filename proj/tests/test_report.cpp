#include <gtest/gtest.h>

#include <sstream>

#include "lifshitz/report.hpp"

using namespace lifshitz;
using namespace lifshitz::report;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Report, NumberFormatRoundTrips) {
  for (double v : {0.1, -1.2345678901234567e-9, 3e300, 0.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(csv_quote("plain"), "plain");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Report, SweepOrderIsStableAcrossThreads) {
  const std::vector<double> a = {5e-7, 1e-6};
  const std::vector<double> T = {0.0, 50.0, 150.0, 300.0};
  const auto serial = run_sweep(StaticModel(2.0), a, T, {}, {}, 1);
  const auto parallel = run_sweep(StaticModel(2.0), a, T, {}, {}, 4);
  ASSERT_EQ(serial.size(), 8u);
  std::ostringstream s1, s2;
  write_sweep_csv(s1, serial);
  write_sweep_csv(s2, parallel);
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_EQ(serial[0].a, 5e-7);
  EXPECT_EQ(serial[3].T, 300.0);
  EXPECT_EQ(serial[4].a, 1e-6);
  EXPECT_EQ(serial[4].T, 0.0);
}

TEST(Report, CsvLayout) {
  const auto rows = run_sweep(StaticModel(2.0), {1e-6}, {300.0}, {}, {true, false, false}, 1);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "a_m,T_K,tau,E_Jm2,dF_Jm2,F_Jm2,P0_Pa,dP_Pa,P_Pa,S_JKm2,err_F,err_P,err_S,method,status");
  // Pressure and entropy were not requested: their fields stay empty.
  EXPECT_NE(lines[1].find(",,,,"), std::string::npos);
  EXPECT_EQ(lines[1].substr(lines[1].size() - 3), ",ok");
  const auto expected = thermo_report(StaticModel(2.0), PlateConfig(1e-6, 300.0), {}, {true, false, false});
  EXPECT_NE(lines[1].find(format_number(expected.F->value)), std::string::npos);
}

TEST(Report, FailedPointsBecomeStatusRows) {
  NumericsSettings s;
  s.sum.max_terms = 10;
  // Oscillator models take the Matsubara-difference route, which needs ~1e9 terms here.
  const auto rows = run_sweep(OscillatorModel({{1.0, 1e16}}), {1e-8}, {1.0}, s, {true, false, false}, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, RowStatus::numerical_failure);
  EXPECT_EQ(status_text(rows[0]).rfind("failed: ", 0), 0u);
  const auto json = sweep_json(rows);
  EXPECT_TRUE(json[0]["F_Jm2"].is_null());
}

TEST(Report, JsonFields) {
  const auto rows = run_sweep(StaticModel(2.0), {1e-6}, {0.0, 300.0}, {}, {}, 2);
  const auto json = Json::parse(sweep_json(rows).dump());
  ASSERT_EQ(json.size(), 2u);
  EXPECT_EQ(json[0]["status"], "ok");
  EXPECT_EQ(json[0]["dF_Jm2"].get<double>(), 0.0);
  EXPECT_EQ(json[1]["F_Jm2"].get<double>(), rows[1].values.F->value);
  EXPECT_NE(json[1]["method"].get<std::string>().find("dF="), std::string::npos);
}

TEST(Report, VerifyOutput) {
  std::vector<verify::CriterionResult> results = {{"x", 1.0, 1.01, 0.02, true, "note, with comma"},
                                                  {"y", 2.0, 1.0, 0.1, false, ""}};
  std::ostringstream out;
  write_verify_csv(out, results);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1], "x,1,1.01,0.02,pass,\"note, with comma\"");
  EXPECT_EQ(lines[2], "y,2,1,0.10000000000000001,fail,");
  EXPECT_FALSE(verify_json(results)[1]["passed"].get<bool>());
}
