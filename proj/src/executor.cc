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

#include "evorest/executor.h"

#include <strings.h>

#include <map>
#include <string>
#include <utility>

#include "evorest/log.h"
#include "json.hpp"

namespace evorest {

namespace {

void SetHeader(std::vector<Header>& headers, const std::string& name, const std::string& value) {
  for (auto& [key, existing] : headers) {
    if (strcasecmp(key.c_str(), name.c_str()) == 0) {
      existing = value;
      return;
    }
  }
  headers.emplace_back(name, value);
}

}  // namespace

std::optional<std::string> ExtractLocation(const HttpResponse& response, const std::string& path,
                                           bool* from_header) {
  if (from_header) *from_header = false;
  if (response.status / 100 != 2) return std::nullopt;
  if (auto location = FindHeader(response.headers, "Location"); location && !location->empty()) {
    if (from_header) *from_header = true;
    return PathOfUrl(*location);
  }
  const auto body = nlohmann::json::parse(response.body, nullptr, /*allow_exceptions=*/false);
  if (!body.is_object() || !body.contains("id")) return std::nullopt;
  const auto& id = body["id"];
  std::string id_text;
  if (id.is_string()) id_text = id.get<std::string>();
  else if (id.is_number_integer()) id_text = id.dump();
  else return std::nullopt;
  std::string base = path;
  while (!base.empty() && base.back() == '/') base.pop_back();
  return base + "/" + UrlEncode(id_text);
}

Executor::Executor(HttpTransport& transport, const ApiSchema& schema, std::string base_url,
                   std::vector<AuthCredential> credentials, std::chrono::milliseconds timeout)
    : transport_(transport),
      schema_(schema),
      base_url_(std::move(base_url)),
      credentials_(std::move(credentials)),
      timeout_(timeout) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

std::vector<ExecutionResult> Executor::Execute(const Individual& ind) const {
  return ExecuteWithTrace(ind).results;
}

ExecutionTrace Executor::ExecuteWithTrace(const Individual& ind) const {
  ExecutionTrace trace;
  std::map<size_t, std::string> resolved;
  const AuthCredential* auth = nullptr;
  if (ind.auth_index && *ind.auth_index < credentials_.size()) auth = &credentials_[*ind.auth_index];

  for (size_t i = 0; i < ind.size(); ++i) {
    ConcreteHttpCall call = RenderAction(ind, i, schema_, resolved);
    if (auth) {
      for (const auto& [name, value] : auth->headers) SetHeader(call.headers, name, value);
    }
    HttpRequest request;
    request.method = std::string(VerbName(call.verb));
    request.url = call.Url(base_url_);
    request.headers = call.headers;
    if (call.body) {
      request.body = call.body;
      SetHeader(request.headers, "Content-Type", std::string(call.content_type()));
    }

    ExecutionResult result;
    const auto start = std::chrono::steady_clock::now();
    HttpResponse response;
    try {
      response = transport_.Send(request, timeout_);
    } catch (const TransportError& e) {
      result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      switch (e.kind()) {
        case TransportError::Kind::kTimeout:
          result.timed_out = true;
          trace.calls.push_back(std::move(call));
          trace.results.push_back(std::move(result));
          continue;
        case TransportError::Kind::kConnectionRefused:
          throw SutDownError(std::string("SUT is down: ") + e.what(), std::move(trace.results));
        case TransportError::Kind::kOther:
          LogWarning(std::string("stopping test after transport failure: ") + e.what());
          return trace;
      }
    }
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (response.status < 100 || response.status > 599) {
      LogWarning("stopping test after invalid HTTP status " + std::to_string(response.status));
      return trace;
    }
    result.status = response.status;
    result.body_excerpt = response.body.substr(0, kBodyExcerptBytes);
    if (schema_.templates[ind.actions[i].template_index].produces_location) {
      bool from_header = false;
      result.extracted_location = ExtractLocation(response, call.path, &from_header);
      result.location_from_header = from_header;
      if (result.extracted_location) resolved[i] = *result.extracted_location;
    }
    trace.calls.push_back(std::move(call));
    trace.results.push_back(std::move(result));
  }
  return trace;
}

}  // namespace evorest
