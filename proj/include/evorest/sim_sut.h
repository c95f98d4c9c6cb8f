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

// A deterministic simulated SUT together with its driver. Endpoints are
// described as data: Swagger parameter/response fragments plus a small
// handler program of guarded steps. The simulator answers API calls,
// serves /swagger.json, speaks the /controller/ protocol and reports
// statement hits and branch distances for every request.
//
// Spec format (JSON):
//   {"title": str, "basePath": str, "definitions": {...swagger...},
//    "auth": [{"label": str, "headers": [{"name": str, "value": str}]}],
//    "endpoints": [{
//       "verb": "GET"|..., "path": "/a/{id}",
//       "parameters": [...swagger parameters...],
//       "responses": {...swagger responses...},
//       "requiresAuth": bool, "delayMs": int,
//       "steps": [{"label": str, "when": predicate, "statement": str,
//                  "respond": {"status": int, "body": any},
//                  "else": {"statement": str, "respond": {...}}}],
//       "store": {"name": str, "op": "create"|"get"|"delete"|"update"|"list",
//                 "idParam": str}}]}
//   predicate: {"op": "eq"|"ne"|"lt"|"le"|"gt"|"ge"|"len_eq"|"present",
//               "param": name or dotted body path, "value": number|string}
//
// A step with "when" reports branch targets <label>_true and <label>_false.
// Steps run in order; the first "respond" reached ends the request.

#ifndef EVOREST_SIM_SUT_H_
#define EVOREST_SIM_SUT_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evorest/protocol.h"
#include "evorest/schema.h"
#include "evorest/transport.h"
#include "json.hpp"

namespace evorest {

struct SimPredicate {
  std::string op;
  std::string param;
  nlohmann::json value;
};

struct SimResponse {
  int status = 200;
  nlohmann::json body = nlohmann::json::object();
};

struct SimStep {
  std::string label;
  std::optional<SimPredicate> when;
  std::string statement;
  std::optional<SimResponse> respond;
  std::string else_statement;
  std::optional<SimResponse> else_respond;
};

struct SimStoreOp {
  std::string name;
  std::string op;
  std::string id_param;  // path placeholder holding the id; default: last one
};

struct SimEndpoint {
  HttpVerb verb = HttpVerb::kGet;
  std::string path;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::array();
  nlohmann::ordered_json responses = nlohmann::ordered_json::object();
  bool requires_auth = false;
  int delay_ms = 0;
  std::vector<SimStep> steps;
  std::optional<SimStoreOp> store;
};

struct SimSpec {
  std::string title;
  std::string base_path;
  nlohmann::ordered_json definitions = nlohmann::ordered_json::object();
  std::vector<AuthCredential> auth;
  std::vector<SimEndpoint> endpoints;
};

// Throws SchemaError for a malformed or inconsistent sim spec.
SimSpec ParseSimSpec(std::string_view json_text);
std::string SimSpecToJson(const SimSpec& spec);

// Built-in specs: "crud-chain", "needle", "faulty".
std::vector<std::string> CannedSpecNames();
// Throws ConfigError for unknown names.
SimSpec CannedSpec(std::string_view name);
std::string CannedSpecJson(std::string_view name);

// Swagger 2.0 document describing the simulated endpoints.
std::string GenerateSwagger(const SimSpec& spec);

class SimSut {
 public:
  SimSut(SimSpec spec, uint64_t seed);
  ~SimSut();

  // Public address of the simulated service; in-process default is
  // "http://sim.local".
  void set_base_url(std::string url);
  const std::string& base_url() const { return base_url_; }

  // Handles one request (API, /swagger.json or /controller/*). The second
  // member is the artificial processing delay the endpoint asks for.
  std::pair<HttpResponse, int> HandleWithDelay(const HttpRequest& request);
  HttpResponse Handle(const HttpRequest& request) { return HandleWithDelay(request).first; }

  // In-process transport. Delays are simulated: a delay longer than the
  // caller's timeout raises a timeout without sleeping.
  std::unique_ptr<HttpTransport> MakeTransport();

  const SimSpec& spec() const { return spec_; }
  const ApiSchema& schema() const { return schema_; }
  const std::string& swagger() const { return swagger_; }
  bool running() const;

  // "VERB /path" of every API call, when enabled.
  void set_record_calls(bool on);
  std::vector<std::string> call_log() const;

 private:
  struct State;

  HttpResponse HandleController(const HttpRequest& request, std::string_view path,
                                std::string_view query);
  std::pair<HttpResponse, int> HandleApi(const HttpRequest& request, std::string_view path,
                                         std::string_view query);
  SutInfo Info() const;

  SimSpec spec_;
  uint64_t seed_;
  std::string base_url_ = "http://sim.local";
  std::string swagger_;
  ApiSchema schema_;
  std::vector<size_t> template_of_endpoint_;
  mutable std::mutex mu_;
  std::unique_ptr<State> state_;
};

// Serves a SimSut over HTTP on 127.0.0.1. Port 0 picks an ephemeral port.
// Throws IoError when the port cannot be bound.
class SimServer {
 public:
  SimServer(SimSut& sut, int port = 0);
  ~SimServer();
  SimServer(const SimServer&) = delete;
  SimServer& operator=(const SimServer&) = delete;

  int port() const { return port_; }
  std::string url() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int port_ = 0;
};

}  // namespace evorest

#endif  // EVOREST_SIM_SUT_H_
