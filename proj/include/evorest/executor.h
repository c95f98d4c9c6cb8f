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

#ifndef EVOREST_EXECUTOR_H_
#define EVOREST_EXECUTOR_H_

#include <chrono>
#include <string>
#include <vector>

#include "evorest/fitness.h"
#include "evorest/http_call.h"
#include "evorest/individual.h"
#include "evorest/schema.h"
#include "evorest/transport.h"

namespace evorest {

inline constexpr std::chrono::milliseconds kDefaultCallTimeout{2000};

// The SUT refused a connection in the middle of a test. Carries the results
// of the calls that did complete.
class SutDownError : public Error {
 public:
  SutDownError(const std::string& what, std::vector<ExecutionResult> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<ExecutionResult>& partial() const { return partial_; }

 private:
  std::vector<ExecutionResult> partial_;
};

struct ExecutionTrace {
  std::vector<ConcreteHttpCall> calls;  // as sent, auth headers included
  std::vector<ExecutionResult> results;
};

// Runs individuals against a live SUT, one call at a time, in action order.
// A creation call that answers 2xx yields a location (Location header, else
// "<path>/<body.id>") that later linked calls are rewritten to address.
// Timed-out calls are recorded without a status and execution continues;
// other transport failures end the test early.
class Executor {
 public:
  Executor(HttpTransport& transport, const ApiSchema& schema, std::string base_url,
           std::vector<AuthCredential> credentials,
           std::chrono::milliseconds timeout = kDefaultCallTimeout);

  std::vector<ExecutionResult> Execute(const Individual& ind) const;
  ExecutionTrace ExecuteWithTrace(const Individual& ind) const;

  const std::vector<AuthCredential>& credentials() const { return credentials_; }
  const std::string& base_url() const { return base_url_; }

 private:
  HttpTransport& transport_;
  const ApiSchema& schema_;
  std::string base_url_;
  std::vector<AuthCredential> credentials_;
  std::chrono::milliseconds timeout_;
};

// Location of the resource created by a 2xx response to `path`, if the
// response names one.
std::optional<std::string> ExtractLocation(const HttpResponse& response, const std::string& path,
                                           bool* from_header = nullptr);

}  // namespace evorest

#endif  // EVOREST_EXECUTOR_H_
