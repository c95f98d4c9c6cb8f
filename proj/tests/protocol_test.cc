// Copyright 2026 The Evorest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "evorest/protocol.h"

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "evorest/error.h"
#include "evorest/rng.h"
#include "evorest/sim_sut.h"
#include "evorest/transport.h"
#include "json.hpp"

namespace evorest {
namespace {

using Json = nlohmann::json;

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(EVOREST_FIXTURES_DIR) + "/protocol/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SutInfoCodecTest, DecodesFixtureAndIgnoresUnknownFields) {
  const SutInfo info = DecodeSutInfo(ReadFixture("info.json"));
  EXPECT_TRUE(info.is_sut_running);
  EXPECT_EQ(info.base_url_of_sut, "http://localhost:8080");
  EXPECT_EQ(info.swagger_json_url, "http://localhost:8080/swagger.json");
  EXPECT_EQ(info.package_prefixes, "org.example");
  ASSERT_EQ(info.auth_info.size(), 1u);
  EXPECT_EQ(info.auth_info[0].label, "administrator");
  ASSERT_EQ(info.auth_info[0].headers.size(), 1u);
  EXPECT_EQ(info.auth_info[0].headers[0], Header("Authorization", "ApiKey administrator"));
}

TEST(SutInfoCodecTest, NullAuthInfoMeansNoCredentials) {
  const SutInfo info = DecodeSutInfo(ReadFixture("info_no_auth.json"));
  EXPECT_FALSE(info.is_sut_running);
  EXPECT_TRUE(info.auth_info.empty());
}

TEST(SutInfoCodecTest, RoundTrips) {
  SutInfo info;
  info.is_sut_running = true;
  info.base_url_of_sut = "http://127.0.0.1:9";
  info.swagger_json_url = "http://127.0.0.1:9/swagger.json";
  info.auth_info = {{"a", {{"Authorization", "x"}, {"X-Key", "y"}}}, {"b", {{"Cookie", "c=1"}}}};
  EXPECT_EQ(DecodeSutInfo(EncodeSutInfo(info)), info);
}

TEST(SutInfoCodecTest, MalformedInfoIsProtocolError) {
  EXPECT_THROW(DecodeSutInfo("not json"), ProtocolError);
  EXPECT_THROW(DecodeSutInfo("[]"), ProtocolError);
  EXPECT_THROW(DecodeSutInfo(R"({"isSutRunning":"yes","baseUrlOfSut":"","swaggerJsonUrl":""})"),
               ProtocolError);
  EXPECT_THROW(DecodeSutInfo(R"({"isSutRunning":true,"swaggerJsonUrl":""})"), ProtocolError);
  EXPECT_THROW(DecodeSutInfo(R"({"isSutRunning":true,"baseUrlOfSut":"","swaggerJsonUrl":"",
                                 "authInfo":[{"label":"a","headers":[]}]})"),
               ProtocolError);
  EXPECT_THROW(DecodeSutInfo(R"({"isSutRunning":true,"baseUrlOfSut":"","swaggerJsonUrl":"",
                                 "authInfo":{}})"),
               ProtocolError);
}

TEST(CoverageCodecTest, DecodesFixture) {
  const CoverageReport report = DecodeCoverage(ReadFixture("coverage.json"));
  EXPECT_EQ(report.marker, "3:17");
  ASSERT_EQ(report.targets.size(), 3u);
  EXPECT_EQ(report.targets[0], (CoverageTarget{"Stmt_7", CoverageKind::kStatement, true, {}}));
  EXPECT_EQ(report.targets[1], (CoverageTarget{"Branch_3_true", CoverageKind::kBranch, false, 5.0}));
  EXPECT_EQ(report.targets[2].kind, CoverageKind::kBranch);
  EXPECT_TRUE(report.targets[2].covered);
}

TEST(CoverageCodecTest, InvalidReportsAreRejected) {
  const Json cases = Json::parse(ReadFixture("coverage_invalid.json"));
  ASSERT_FALSE(cases.empty());
  for (const Json& c : cases) {
    EXPECT_THROW(DecodeCoverage(c.dump()), ProtocolError) << c.dump();
  }
}

TEST(CoverageCodecProperty, RoundTripsRandomReports) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    CoverageReport report;
    report.marker = std::to_string(rng.Index(100)) + ":" + std::to_string(rng.Index(1000));
    const size_t n = rng.Index(12);
    for (size_t k = 0; k < n; ++k) {
      CoverageTarget t;
      t.id = "t" + std::to_string(rng.Index(1000));
      t.kind = rng.Bernoulli(0.5) ? CoverageKind::kBranch : CoverageKind::kStatement;
      t.covered = rng.Bernoulli(0.5);
      if (t.kind == CoverageKind::kBranch && !t.covered) {
        t.distance = rng.Bernoulli(0.5) ? static_cast<double>(rng.Index(100))
                                        : rng.UniformReal() * 1e6;
      }
      report.targets.push_back(t);
    }
    ASSERT_EQ(DecodeCoverage(EncodeCoverage(report)), report);
  }
}

// Runs the shared conformance cases against a driver reachable at `url`
// through `transport`.
class ConformanceRunner {
 public:
  ConformanceRunner(HttpTransport& transport, std::string url)
      : transport_(transport), url_(std::move(url)) {}

  void RunCase(const Json& c) {
    std::map<std::string, Json> saved;
    int index = 0;
    for (const Json& step : c.at("steps")) {
      SCOPED_TRACE(c.at("name").get<std::string>() + " step " + std::to_string(index++));
      HttpRequest req;
      req.method = step.at("method");
      req.url = step.contains("url") ? Substitute(step.at("url"), saved)
                                     : url_ + Substitute(step.at("path"), saved);
      if (step.contains("body")) req.body = step.at("body").dump();
      const HttpResponse resp = transport_.Send(req, std::chrono::seconds(5));
      const Json& expect = step.at("expect");
      if (expect.contains("status")) ASSERT_EQ(resp.status, expect.at("status").get<int>());
      if (expect.contains("statusClass")) {
        ASSERT_EQ(resp.status / 100, expect.at("statusClass").get<int>());
      }
      if (resp.status / 100 != 2) continue;
      const Json body = Json::parse(resp.body);
      if (expect.contains("body")) EXPECT_EQ(body, expect.at("body"));
      for (const auto& [field, type] : Section(expect, "types").items()) {
        ASSERT_TRUE(body.contains(field)) << field;
        EXPECT_EQ(TypeName(body.at(field)), type.get<std::string>()) << field;
      }
      for (const auto& [field, value] : Section(expect, "equals").items()) {
        EXPECT_EQ(body.value(field, Json()), value) << field;
      }
      for (const auto& [field, var] : Section(expect, "equalsSaved").items()) {
        EXPECT_EQ(body.value(field, Json()), saved.at(var.get<std::string>())) << field;
      }
      for (const auto& [field, length] : Section(expect, "lengths").items()) {
        ASSERT_TRUE(body.contains(field) && body.at(field).is_array()) << field;
        EXPECT_EQ(body.at(field).size(), length.get<size_t>()) << field;
      }
      for (const auto& [var, field] : Section(step, "save").items()) {
        ASSERT_TRUE(body.contains(field.get<std::string>())) << field;
        saved[var] = body.at(field.get<std::string>());
      }
    }
  }

 private:
  static const Json& Section(const Json& obj, const char* key) {
    static const Json kEmpty = Json::object();
    return obj.contains(key) ? obj.at(key) : kEmpty;
  }

  static std::string TypeName(const Json& v) {
    if (v.is_boolean()) return "boolean";
    if (v.is_string()) return "string";
    if (v.is_array()) return "array";
    if (v.is_object()) return "object";
    if (v.is_number()) return "number";
    return "null";
  }

  static std::string Substitute(std::string text, const std::map<std::string, Json>& saved) {
    for (const auto& [name, value] : saved) {
      const std::string key = "${" + name + "}";
      const std::string replacement = value.is_string() ? value.get<std::string>() : value.dump();
      for (size_t pos = text.find(key); pos != std::string::npos; pos = text.find(key, pos)) {
        text.replace(pos, key.size(), replacement);
        pos += replacement.size();
      }
    }
    return text;
  }

  HttpTransport& transport_;
  std::string url_;
};

Json ConformanceCases() { return Json::parse(ReadFixture("conformance.json")).at("cases"); }

TEST(ConformanceTest, FixtureHasCases) { EXPECT_GE(ConformanceCases().size(), 8u); }

TEST(ConformanceTest, InProcessSimulatorPassesEveryCase) {
  for (const std::string& spec : CannedSpecNames()) {
    for (const Json& c : ConformanceCases()) {
      SimSut sut(CannedSpec(spec), 1);
      auto transport = sut.MakeTransport();
      ConformanceRunner runner(*transport, sut.base_url());
      SCOPED_TRACE(spec);
      runner.RunCase(c);
    }
  }
}

TEST(ConformanceTest, SimulatorOverHttpPassesEveryCase) {
  for (const Json& c : ConformanceCases()) {
    SimSut sut(CannedSpec("crud-chain"), 1);
    SimServer server(sut);
    HttplibTransport transport;
    ConformanceRunner runner(transport, server.url());
    runner.RunCase(c);
  }
}

TEST(ConformanceTest, CoverageDeltaAfterApiCallIsNonEmpty) {
  SimSut sut(CannedSpec("crud-chain"), 1);
  auto transport = sut.MakeTransport();
  const std::string base = sut.base_url();
  transport->Send({"POST", base + "/controller/sut", {}, R"({"running":true})"},
                  std::chrono::seconds(1));
  const CoverageReport before =
      DecodeCoverage(transport->Send({"GET", base + "/controller/targets?since=", {}, {}},
                                     std::chrono::seconds(1)).body);
  HttpRequest call{"GET", base + "/api/v1/activities", {}, {}};
  for (const AuthCredential& cred : sut.spec().auth) {
    for (const Header& h : cred.headers) call.headers.push_back(h);
    break;
  }
  transport->Send(call, std::chrono::seconds(1));
  const CoverageReport delta = DecodeCoverage(
      transport->Send({"GET", base + "/controller/targets?since=" + before.marker, {}, {}},
                      std::chrono::seconds(1)).body);
  EXPECT_FALSE(delta.targets.empty());
  EXPECT_NE(delta.marker, before.marker);
}

}  // namespace
}  // namespace evorest
