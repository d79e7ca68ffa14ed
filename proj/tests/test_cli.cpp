// Copyright 2026 The mahler-t Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "mahler/cli/app.hpp"

namespace mahler::cli {
namespace {

using io::Json;

struct Outcome {
  int code;
  std::string text;
  Json json() const { return Json::parse(text); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = run(args, out);
  return {code, out.str()};
}

TEST(Cli, MtExample) {
  const auto r = call({"mt", "4/3", "--t", "2"});
  ASSERT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  const double v = j["result"]["value"].get<double>();
  EXPECT_NEAR(v * v, std::pow(std::log(3.0), 2) + std::pow(std::log(2.0), 2), 1e-9);
  EXPECT_EQ(j["result"]["witness"], Json::array({"2/3", "2"}));
}

TEST(Cli, AttainmentExample) {
  const auto r = call({"attainment", "30", "--t", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["attained"], false);
  EXPECT_EQ(r.json()["result"]["certificate"]["candidates"], Json::array());
}

TEST(Cli, MeasureQuadraticExample) {
  const auto r = call({"measure", "--quadratic", "1,-7,7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.json()["result"]["value"].get<double>(), std::log(7.0), 1e-12);
  EXPECT_EQ(r.json()["result"]["stability"], "stable_outside");
}

TEST(Cli, MeasurePositionalForms) {
  EXPECT_NEAR(call({"measure", "-7/6"}).json()["result"]["value"].get<double>(), std::log(7.0), 1e-12);
  EXPECT_EQ(call({"measure", "30^(1/2)"}).json()["result"]["kind"], "surd");
  EXPECT_EQ(call({"measure", "6", "--surd", "2^(1/2)"}).code, kExitUsage);
}

TEST(Cli, FieldOrderIsFixed) {
  const Json j = call({"mt-surd", "30", "2", "--t", "2"}).json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["result"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"D", "k", "t", "value", "witness", "measures"}));
  std::vector<std::string> top;
  for (const auto& [k, v] : j.items()) top.push_back(k);
  EXPECT_EQ(top, (std::vector<std::string>{"schema_version", "command", "result"}));
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"mt", "-90/77", "--t", "1.5"},
           {"attainment", "42", "--t", "inf"},
           {"certify", "2310"},
           {"small-quadratics", "21"},
           {"plot", "--q", "360/7", "--t-min", "1", "--t-max", "4", "--step", "0.25", "--inf"},
           {"verify-paper"}}) {
    EXPECT_EQ(call(args).text, call(args).text);
  }
}

TEST(Cli, LogBaseIsDisplayOnly) {
  const double e = call({"mt-surd", "2", "1", "--t", "inf"}).json()["result"]["value"].get<double>();
  const double two =
      call({"mt-surd", "2", "1", "--t", "inf", "--log-base", "2"}).json()["result"]["value"].get<double>();
  EXPECT_NEAR(e, std::log(2.0), 1e-12);
  EXPECT_NEAR(two, 1.0, 1e-12);
  EXPECT_EQ(call({"--log-base", "3", "mt", "6", "--t", "2"}).code, kExitUsage);
}

TEST(Cli, TimingOnlyWhenRequested) {
  EXPECT_FALSE(call({"mt", "6", "--t", "2"}).json().contains("timing_ms"));
  EXPECT_TRUE(call({"mt", "6", "--t", "2", "--timing"}).json().contains("timing_ms"));
}

TEST(Cli, DomainErrorsCarryCodes) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"mt-surd", "12", "2", "--t", "2"}, "NotSquarefree"},
      {{"mt", "6", "--t", "0.5"}, "InvalidT"},
      {{"mt", "0", "--t", "2"}, "InvalidArgument"},
      {{"mt", "1/0", "--t", "2"}, "InvalidArgument"},
      {{"attainment", "30", "--t", "1"}, "TOutOfRange"},
      {{"certify", "21"}, "WrongRegime"},
      {{"oracle-check", "8192", "--t", "2"}, "TooLarge"},
      {{"oracle-check", "6", "--extra-prime", "4"}, "NotPrime"},
      {{"mt", "79228162514264337593543950337", "--t", "2"}, "FactorizationOverflow"},
      {{"plot", "--q", "6", "--t-min", "0.5"}, "InvalidT"},
  };
  for (const auto& [args, code] : cases) {
    const auto r = call(args);
    EXPECT_EQ(r.code, kExitDomain) << args[0];
    EXPECT_EQ(r.json()["error"]["code"], code) << r.text;
    EXPECT_FALSE(r.json().contains("result"));
  }
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"mt", "6"}, {"mt-surd", "30", "--t", "2"}, {"oracle-check"},
           {"plot", "--q", "6", "--surd", "30", "2"}}) {
    const auto r = call(args);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_EQ(r.json()["error"]["code"], "UsageError");
  }
}

TEST(Cli, PlotExamples) {
  const auto r = call({"plot", "--q", "6", "--t-min", "1", "--t-max", "3", "--step", "1", "--inf"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.text);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "t,value");
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  const std::vector<std::pair<std::string, double>> expected = {
      {"1", std::log(6.0)},
      {"2", std::sqrt(l2 * l2 + l3 * l3)},
      {"3", std::cbrt(l2 * l2 * l2 + l3 * l3 * l3)},
      {"inf", l3}};
  for (const auto& [t, v] : expected) {
    std::string row;
    ASSERT_TRUE(std::getline(lines, row));
    const auto comma = row.find(',');
    EXPECT_EQ(row.substr(0, comma), t);
    EXPECT_NEAR(std::stod(row.substr(comma + 1)), v, 1e-12);
  }

  const auto ones = call({"plot", "--q", "1", "--t-min", "1", "--t-max", "2", "--step", "0.5"});
  EXPECT_EQ(ones.text, "t,value\n1,0\n1.5,0\n2,0\n");

  const auto single = call({"plot", "--surd", "30", "2", "--t-min", "2", "--t-max", "2", "--step", "1"});
  const double l5 = std::log(5.0);
  EXPECT_EQ(single.text, "t,value\n2," + io::format15(std::sqrt(l5 * l5 + l3 * l3 + l2 * l2)) + "\n");
}

TEST(Cli, PlotColumnsNonIncreasing) {
  for (const char* q : {"360/7", "-90/77", "4096/3", "30"}) {
    const auto r = call({"plot", "--q", q, "--t-min", "1", "--t-max", "6", "--step", "0.1", "--inf"});
    std::istringstream lines(r.text);
    std::string row;
    std::getline(lines, row);
    double previous = std::numeric_limits<double>::infinity();
    while (std::getline(lines, row)) {
      const double v = std::stod(row.substr(row.find(',') + 1));
      EXPECT_LE(v, previous + 1e-12) << q << " " << row;
      previous = v;
    }
  }
}

TEST(Cli, OracleCheck) {
  const auto r = call({"oracle-check", "--sweep", "40"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["agree"], true);
  EXPECT_GT(r.json()["result"]["checked"].get<int>(), 100);
  EXPECT_EQ(call({"oracle-check", "45/7", "--extra-prime", "2", "--extra-prime", "11"}).code, 0);
}

TEST(Cli, VerifyCommandAllPass) {
  const auto r = call({"verify-paper"});
  EXPECT_EQ(r.code, 0);
  const Json j = r.json();
  EXPECT_EQ(j["result"]["failed"], 0);
  bool dual = false;
  for (const auto& c : j["result"]["checks"]) {
    EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
    dual = dual || c["name"].get<std::string>().rfind("sqrt42-dual-witness-cost", 0) == 0;
  }
  EXPECT_TRUE(dual);
}

TEST(WorkedExamples, SignBugInNormIsCaught) {
  ExampleHooks hooks;
  hooks.norm_quadratic = [](const QuadraticNumber& q) { return -measure::norm_quadratic(q); };
  std::vector<std::string> failed;
  for (const auto& c : run_worked_examples(hooks)) {
    if (!c.pass) failed.push_back(c.name);
  }
  EXPECT_EQ(failed, std::vector<std::string>{"sqrt21-three-factor-norms"});
}

int exit_status(const std::string& args) {
  const std::string command = std::string(MAHLER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(exit_status("mt 6 --t 2"), 0);
  EXPECT_EQ(exit_status("mt-surd 12 2 --t 2"), 1);
  EXPECT_EQ(exit_status("mt 6"), 2);
  EXPECT_EQ(exit_status("--help"), 0);
}

}  // namespace
}  // namespace mahler::cli
