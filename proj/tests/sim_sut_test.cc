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


#include "evorest/sim_sut.h"

#include <gtest/gtest.h>

#include <string>

#include "evorest/error.h"
#include "evorest/protocol.h"
#include "evorest/rng.h"
#include "evorest/schema.h"
#include "json.hpp"

namespace evorest {
namespace {

using Json = nlohmann::json;

constexpr char kProbeSpec[] = R"({
  "title": "probe",
  "endpoints": [
    {"verb": "GET", "path": "/q",
     "parameters": [{"name": "q", "in": "query", "required": false, "type": "integer", "format": "int32"},
                    {"name": "s", "in": "query", "required": false, "type": "string"}],
     "steps": [{"label": "q_is_42", "when": {"op": "eq", "param": "q", "value": 42},
                "statement": "q_hit"},
               {"label": "q_below_10", "when": {"op": "lt", "param": "q", "value": 10}},
               {"label": "s_is_abc", "when": {"op": "eq", "param": "s", "value": "abc"}}]},
    {"verb": "GET", "path": "/a/{x}",
     "parameters": [{"name": "x", "in": "path", "required": true, "type": "string"}],
     "steps": [{"statement": "a_any", "respond": {"status": 200, "body": {"route": "any"}}}]},
    {"verb": "GET", "path": "/a/b",
     "steps": [{"statement": "a_b", "respond": {"status": 200, "body": {"route": "literal"}}}]},
    {"verb": "GET", "path": "/slow", "delayMs": 500, "steps": [{"statement": "slow_done"}]}
  ]
})";

class Client {
 public:
  explicit Client(SimSut& sut) : sut_(sut) {}

  HttpResponse Call(const std::string& method, const std::string& path,
                    std::optional<std::string> body = std::nullopt, bool auth = false) {
    HttpRequest req{method, sut_.base_url() + path, {}, std::move(body)};
    if (auth) req.headers = sut_.spec().auth.at(0).headers;
    return sut_.Handle(req);
  }

  void Start() { ASSERT_EQ(Call("POST", "/controller/sut", R"({"running":true})").status, 200); }

  CoverageReport Targets(const std::string& since = "") {
    return DecodeCoverage(Call("GET", "/controller/targets?since=" + since).body);
  }

  static const CoverageTarget* Find(const CoverageReport& report, const std::string& id) {
    for (const CoverageTarget& t : report.targets) {
      if (t.id == id) return &t;
    }
    return nullptr;
  }

 private:
  SimSut& sut_;
};

TEST(SimSutTest, EqualityDistanceIsAbsoluteDifference) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  ASSERT_EQ(c.Call("GET", "/q?q=40").status, 200);
  const CoverageReport report = c.Targets();
  const CoverageTarget* t = Client::Find(report, "q_is_42_true");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->kind, CoverageKind::kBranch);
  EXPECT_FALSE(t->covered);
  EXPECT_EQ(t->distance, 2.0);
  const CoverageTarget* f = Client::Find(report, "q_is_42_false");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(f->covered);
  EXPECT_EQ(Client::Find(report, "q_hit"), nullptr);
}

TEST(SimSutTest, TakenBranchCoversStatement) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  c.Call("GET", "/q?q=42");
  const CoverageReport report = c.Targets();
  ASSERT_NE(Client::Find(report, "q_hit"), nullptr);
  EXPECT_TRUE(Client::Find(report, "q_hit")->covered);
  EXPECT_TRUE(Client::Find(report, "q_is_42_true")->covered);
  EXPECT_EQ(Client::Find(report, "q_is_42_false")->distance, 1.0);
}

TEST(SimSutTest, StrictComparisonAddsOne) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  c.Call("GET", "/q?q=10");
  EXPECT_EQ(Client::Find(c.Targets(), "q_below_10_true")->distance, 1.0);
  c.Call("GET", "/q?q=13");
  EXPECT_EQ(Client::Find(c.Targets(), "q_below_10_true")->distance, 1.0);  // minimum kept
  ASSERT_EQ(c.Call("POST", "/controller/reset", "{}").status, 200);
  c.Call("GET", "/q?q=13");
  EXPECT_EQ(Client::Find(c.Targets(), "q_below_10_true")->distance, 4.0);
}

TEST(SimSutTest, StringEqualityUsesCharacterDistance) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  c.Call("GET", "/q?s=abd");
  EXPECT_EQ(Client::Find(c.Targets(), "s_is_abc_true")->distance, 1.0);
  ASSERT_EQ(c.Call("POST", "/controller/reset", "{}").status, 200);
  c.Call("GET", "/q?s=ab");
  EXPECT_EQ(Client::Find(c.Targets(), "s_is_abc_true")->distance, 1.0);
}

TEST(SimSutTest, AbsentParameterHasLargeDistance) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  c.Call("GET", "/q");
  const CoverageTarget* t = Client::Find(c.Targets(), "q_is_42_true");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->distance, 1e9);
}

TEST(SimSutTest, MostLiteralRouteWins) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  Client c(sut);
  c.Start();
  EXPECT_EQ(Json::parse(c.Call("GET", "/a/b").body)["route"], "literal");
  EXPECT_EQ(Json::parse(c.Call("GET", "/a/c").body)["route"], "any");
  EXPECT_EQ(c.Call("GET", "/a/b/c").status, 404);
  EXPECT_EQ(c.Call("DELETE", "/a/b").status, 404);
}

TEST(SimSutTest, ApiAnswers503UntilStarted) {
  SimSut sut(CannedSpec("needle"), 1);
  Client c(sut);
  EXPECT_FALSE(sut.running());
  EXPECT_EQ(c.Call("GET", "/health").status, 503);
  EXPECT_EQ(c.Call("POST", "/controller/reset", "{}").status, 409);
  EXPECT_EQ(c.Call("GET", "/controller/targets?since=").status, 409);
  c.Start();
  EXPECT_TRUE(sut.running());
  EXPECT_EQ(c.Call("GET", "/health").status, 200);
  ASSERT_EQ(c.Call("POST", "/controller/sut", R"({"running":false})").status, 200);
  EXPECT_EQ(c.Call("GET", "/health").status, 503);
}

TEST(SimSutTest, ProtectedEndpointsNeedCredentials) {
  SimSut sut(CannedSpec("crud-chain"), 1);
  Client c(sut);
  c.Start();
  const std::string body = R"({"name":"a","age_min":3})";
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", body).status, 401);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", body, true).status, 200);
  EXPECT_EQ(c.Call("GET", "/api/v1/activities").status, 200);
}

TEST(SimSutTest, InvalidInputIsRejectedWith400) {
  SimSut sut(CannedSpec("crud-chain"), 1);
  Client c(sut);
  c.Start();
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", R"({"name":"a"})", true).status, 400);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", R"({"name":1,"age_min":3})", true).status, 400);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", "{not json", true).status, 400);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", std::nullopt, true).status, 400);
  EXPECT_EQ(c.Call("GET", "/api/v1/activities/abc").status, 400);
  SimSut needle(CannedSpec("needle"), 1);
  Client n(needle);
  n.Start();
  EXPECT_EQ(n.Call("GET", "/needle?x=1").status, 400);
  EXPECT_EQ(n.Call("GET", "/needle?x=1.5&s=a").status, 400);
  EXPECT_EQ(n.Call("GET", "/needle?x=1&s=a").status, 200);
}

TEST(SimSutTest, StoreCreateGetDeleteAndReset) {
  SimSut sut(CannedSpec("crud-chain"), 1);
  Client c(sut);
  c.Start();
  const HttpResponse created =
      c.Call("POST", "/api/v1/activities", R"({"name":"a","age_min":3})", true);
  ASSERT_EQ(created.status, 200);
  const Json body = Json::parse(created.body);
  const int64_t id = body.at("id").get<int64_t>();
  EXPECT_GE(id, 100000000);
  EXPECT_LT(id, 1000000000);
  EXPECT_EQ(body.at("name"), "a");
  const std::string item = "/api/v1/activities/" + std::to_string(id);
  EXPECT_EQ(c.Call("GET", item).status, 200);
  EXPECT_EQ(Json::parse(c.Call("GET", item).body).at("age_min"), 3);
  EXPECT_EQ(Json::parse(c.Call("GET", "/api/v1/activities").body).size(), 1u);
  EXPECT_EQ(c.Call("POST", item + "/rating", R"({"rating":4,"favourite":true})", true).status, 204);
  EXPECT_EQ(c.Call("POST", item + "/rating", R"({"rating":9,"favourite":true})", true).status, 400);

  const CoverageReport report = c.Targets();
  for (const char* id_name : {"POST:/api/v1/activities:created", "GET:/api/v1/activities/{id}:found",
                              "GET:/api/v1/activities:listed",
                              "POST:/api/v1/activities/{id}/rating:updated"}) {
    ASSERT_NE(Client::Find(report, id_name), nullptr) << id_name;
    EXPECT_TRUE(Client::Find(report, id_name)->covered);
  }

  ASSERT_EQ(c.Call("POST", "/controller/reset", "{}").status, 200);
  EXPECT_EQ(c.Call("GET", item).status, 404);
  EXPECT_TRUE(Json::parse(c.Call("GET", "/api/v1/activities").body).empty());

  const HttpResponse again = c.Call("POST", "/api/v1/activities", R"({"name":"b","age_min":1})", true);
  const std::string item2 = "/api/v1/activities/" + Json::parse(again.body).at("id").dump();
  EXPECT_EQ(c.Call("DELETE", item2, std::nullopt, true).status, 204);
  EXPECT_EQ(c.Call("GET", item2).status, 404);
  EXPECT_EQ(c.Call("DELETE", item2, std::nullopt, true).status, 404);
}

TEST(SimSutTest, NegativeMinimumAgeCrashesFaultyService) {
  SimSut sut(CannedSpec("faulty"), 1);
  Client c(sut);
  c.Start();
  const HttpResponse r =
      c.Call("POST", "/api/v1/activities", R"({"name":"x","age_min":-5,"age_max":3})");
  EXPECT_EQ(r.status, 500);
  const CoverageTarget* t = Client::Find(c.Targets(), "age_check_crash");
  ASSERT_NE(t, nullptr);
  EXPECT_TRUE(t->covered);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", R"({"name":"x","age_min":5,"age_max":3})").status,
            200);
}

TEST(SimSutTest, SameSeedGivesSameResponses) {
  auto transcript = [](uint64_t seed) {
    SimSut sut(CannedSpec("crud-chain"), seed);
    Client c(sut);
    c.Start();
    std::string out;
    for (int i = 0; i < 5; ++i) {
      out += c.Call("POST", "/api/v1/activities", R"({"name":"a","age_min":3})", true).body;
    }
    out += EncodeCoverage(c.Targets());
    return out;
  };
  EXPECT_EQ(transcript(3), transcript(3));
  EXPECT_NE(transcript(3), transcript(4));
}

TEST(SimSutTest, CreatedIdsRepeatAfterReset) {
  SimSut sut(CannedSpec("crud-chain"), 9);
  Client c(sut);
  c.Start();
  const std::string first = c.Call("POST", "/api/v1/activities", R"({"name":"a","age_min":3})", true).body;
  ASSERT_EQ(c.Call("POST", "/controller/reset", "{}").status, 200);
  EXPECT_EQ(c.Call("POST", "/api/v1/activities", R"({"name":"a","age_min":3})", true).body, first);
}

TEST(SimSutTest, SwaggerDescribesEverySimEndpoint) {
  for (const std::string& name : CannedSpecNames()) {
    SCOPED_TRACE(name);
    const SimSpec spec = CannedSpec(name);
    SimSut sut(spec, 1);
    Client c(sut);
    const HttpResponse r = c.Call("GET", "/swagger.json");
    ASSERT_EQ(r.status, 200);
    EXPECT_EQ(r.body, sut.swagger());
    const ApiSchema schema = ParseSchema(r.body);
    EXPECT_EQ(schema.base_path, spec.base_path);
    ASSERT_EQ(schema.templates.size(), spec.endpoints.size());
    for (const SimEndpoint& ep : spec.endpoints) {
      const ActionTemplate probe{.verb = ep.verb, .path = SplitPathTemplate(ep.path)};
      ASSERT_TRUE(schema.Find(ep.verb, probe.PathString())) << ep.path;
      const ActionTemplate& tmpl = schema.templates[*schema.Find(ep.verb, probe.PathString())];
      size_t params = tmpl.path_params.size() + tmpl.query_params.size() +
                      tmpl.header_params.size() + (tmpl.body_spec ? 1 : 0);
      EXPECT_EQ(params, ep.parameters.size()) << ep.path;
    }
  }
}

TEST(SimSutTest, SimSpecRoundTripsThroughJson) {
  for (const std::string& name : CannedSpecNames()) {
    const std::string once = SimSpecToJson(CannedSpec(name));
    EXPECT_EQ(SimSpecToJson(ParseSimSpec(once)), once) << name;
    EXPECT_EQ(GenerateSwagger(ParseSimSpec(once)), GenerateSwagger(CannedSpec(name))) << name;
  }
  const std::string probe = SimSpecToJson(ParseSimSpec(kProbeSpec));
  EXPECT_EQ(SimSpecToJson(ParseSimSpec(probe)), probe);
  EXPECT_EQ(ParseSimSpec(probe).endpoints.back().delay_ms, 500);
}

TEST(SimSutTest, CannedSpecsAreListed) {
  const auto names = CannedSpecNames();
  for (const char* n : {"crud-chain", "needle", "faulty"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_FALSE(CannedSpecJson(n).empty());
  }
  EXPECT_THROW(CannedSpec("no-such-spec"), ConfigError);
}

TEST(SimSutTest, MalformedSimSpecsAreRejected) {
  EXPECT_THROW(ParseSimSpec("{"), ParseError);
  EXPECT_THROW(ParseSimSpec("[]"), SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"title":"x"})"), SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"FETCH","path":"/a"}]})"), SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"a"}]})"), SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a"},{"verb":"GET","path":"/a"}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a",
      "steps":[{"label":"l","when":{"op":"near","param":"p","value":1}}]}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a",
      "steps":[{"when":{"op":"eq","param":"p","value":1}}]}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a",
      "steps":[{"statement":"s"},{"statement":"s"}]}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a","store":{"name":"x","op":"upsert"}}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"endpoints":[{"verb":"GET","path":"/a",
      "steps":[{"statement":"s","respond":{"status":700}}]}]})"),
               SchemaError);
  EXPECT_THROW(ParseSimSpec(R"({"auth":[{"label":"a","headers":[]}],"endpoints":[]})"), SchemaError);
}

struct ScalarType {
  const char* type;
  const char* format;
  ParamKind kind;
};

constexpr ScalarType kScalarTypes[] = {
    {"integer", "int32", ParamKind::kInt32},   {"integer", "int64", ParamKind::kInt64},
    {"number", "double", ParamKind::kDouble},  {"boolean", nullptr, ParamKind::kBoolean},
    {"string", nullptr, ParamKind::kString},   {"string", "date-time", ParamKind::kDateTime},
};

Json ScalarSchema(const ScalarType& t) {
  Json j = {{"type", t.type}};
  if (t.format) j["format"] = t.format;
  return j;
}

struct ExpectedParam {
  std::string in;
  std::string name;
  ParamKind kind;
  bool required;
};

// Random sim specs, with the parameters each endpoint must expose.
Json RandomSimSpec(Rng& rng, std::vector<std::vector<ExpectedParam>>& expected) {
  static constexpr std::string_view kWords[] = {"users", "items", "orders", "v1", "tags", "a"};
  static constexpr std::string_view kVerbs[] = {"GET", "POST", "PUT", "DELETE", "PATCH"};
  Json spec = {{"title", "random"}, {"endpoints", Json::array()}};
  if (rng.Bernoulli(0.3)) spec["basePath"] = "/api";
  std::set<std::pair<std::string, std::string>> routes;
  const size_t endpoints = 1 + rng.Index(6);
  for (size_t e = 0; e < endpoints; ++e) {
    std::vector<ExpectedParam> params;
    std::string path;
    Json parameters = Json::array();
    const size_t segments = 1 + rng.Index(3);
    for (size_t s = 0; s < segments; ++s) {
      if (s > 0 && rng.Bernoulli(0.4)) {
        const std::string name = "p" + std::to_string(s);
        const ScalarType& t = kScalarTypes[rng.Bernoulli(0.5) ? 0 : 4];
        path += "/{" + name + "}";
        Json p = ScalarSchema(t);
        p["name"] = name;
        p["in"] = "path";
        p["required"] = true;
        parameters.push_back(p);
        params.push_back({"path", name, t.kind, true});
      } else {
        path += "/" + std::string(kWords[rng.Index(std::size(kWords))]);
      }
    }
    const std::string verb(kVerbs[rng.Index(std::size(kVerbs))]);
    if (!routes.insert({verb, path}).second) continue;
    for (const char* in : {"query", "header"}) {
      const size_t n = rng.Index(3);
      for (size_t i = 0; i < n; ++i) {
        const std::string name = std::string(in) + "_" + std::to_string(i);
        const ScalarType& t = kScalarTypes[rng.Index(std::size(kScalarTypes))];
        const bool required = rng.Bernoulli(0.5);
        Json p = ScalarSchema(t);
        p["name"] = name;
        p["in"] = in;
        p["required"] = required;
        parameters.push_back(p);
        params.push_back({in, name, t.kind, required});
      }
    }
    if ((verb == "POST" || verb == "PUT" || verb == "PATCH") && rng.Bernoulli(0.7)) {
      Json props = Json::object();
      const size_t fields = rng.Index(4);
      for (size_t f = 0; f < fields; ++f) {
        props["f" + std::to_string(f)] = ScalarSchema(kScalarTypes[rng.Index(std::size(kScalarTypes))]);
      }
      const bool required = rng.Bernoulli(0.5);
      parameters.push_back({{"name", "body"}, {"in", "body"}, {"required", required},
                            {"schema", {{"type", "object"}, {"properties", props}}}});
      params.push_back({"body", "body", ParamKind::kObject, required});
    }
    spec["endpoints"].push_back({{"verb", verb}, {"path", path}, {"parameters", parameters}});
    expected.push_back(std::move(params));
  }
  return spec;
}

TEST(SimSpecProperty, GeneratedSwaggerParsesBackToSameEndpoints) {
  Rng rng(314);
  for (int round = 0; round < 500; ++round) {
    std::vector<std::vector<ExpectedParam>> expected;
    const Json doc = RandomSimSpec(rng, expected);
    const SimSpec spec = ParseSimSpec(doc.dump());
    const ApiSchema schema = ParseSchema(GenerateSwagger(spec));
    ASSERT_EQ(schema.base_path, doc.value("basePath", ""));
    ASSERT_EQ(schema.templates.size(), spec.endpoints.size()) << doc.dump();
    for (size_t e = 0; e < spec.endpoints.size(); ++e) {
      const SimEndpoint& ep = spec.endpoints[e];
      ActionTemplate probe;
      probe.path = SplitPathTemplate(ep.path);
      const auto index = schema.Find(ep.verb, probe.PathString());
      ASSERT_TRUE(index) << ep.path;
      const ActionTemplate& tmpl = schema.templates[*index];
      std::vector<ExpectedParam> got;
      for (const auto& p : tmpl.path_params) got.push_back({"path", p->name, p->kind, p->required});
      for (const auto& p : tmpl.query_params) got.push_back({"query", p->name, p->kind, p->required});
      for (const auto& p : tmpl.header_params) got.push_back({"header", p->name, p->kind, p->required});
      if (tmpl.body_spec) {
        got.push_back({"body", "body", tmpl.body_spec->kind, tmpl.body_spec->required});
      }
      ASSERT_EQ(got.size(), expected[e].size()) << doc.dump();
      for (size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].in, expected[e][i].in);
        EXPECT_EQ(got[i].name, expected[e][i].name);
        EXPECT_EQ(got[i].kind, expected[e][i].kind) << got[i].name << " in " << doc.dump();
        EXPECT_EQ(got[i].required, expected[e][i].required) << got[i].name;
      }
    }
  }
}

TEST(SimSutTest, CallLogRecordsApiCallsInOrder) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  sut.set_record_calls(true);
  Client c(sut);
  c.Start();
  c.Call("GET", "/a/b");
  c.Call("GET", "/q?q=1");
  c.Call("GET", "/nowhere");
  EXPECT_EQ(sut.call_log(), (std::vector<std::string>{"GET /a/b", "GET /q"}));
}

TEST(SimSutTest, InProcessTransportSimulatesDelays) {
  SimSut sut(ParseSimSpec(kProbeSpec), 1);
  auto transport = sut.MakeTransport();
  Client(sut).Start();
  const HttpRequest req{"GET", sut.base_url() + "/slow", {}, {}};
  EXPECT_EQ(transport->Send(req, std::chrono::seconds(1)).status, 200);
  try {
    transport->Send(req, std::chrono::milliseconds(100));
    FAIL() << "expected a timeout";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.kind(), TransportError::Kind::kTimeout);
  }
}

TEST(SimServerTest, ServesOverHttpOnEphemeralPort) {
  SimSut sut(CannedSpec("needle"), 1);
  SimServer server(sut);
  EXPECT_GT(server.port(), 0);
  EXPECT_EQ(server.url(), "http://127.0.0.1:" + std::to_string(server.port()));
  HttplibTransport http;
  const auto timeout = std::chrono::seconds(2);
  const HttpResponse started =
      http.Send({"POST", server.url() + "/controller/sut", {}, R"({"running":true})"}, timeout);
  ASSERT_EQ(started.status, 200);
  const SutInfo info = DecodeSutInfo(started.body);
  EXPECT_EQ(info.base_url_of_sut, server.url());
  EXPECT_EQ(http.Send({"GET", server.url() + "/needle?x=42&s=abcdefg", {}, {}}, timeout).body,
            R"({"found":true})");
  server.Stop();
  EXPECT_THROW(http.Send({"GET", server.url() + "/health", {}, {}}, timeout), TransportError);
}

}  // namespace
}  // namespace evorest
