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

#ifndef EVOREST_DRIVER_CLIENT_H_
#define EVOREST_DRIVER_CLIENT_H_

#include <chrono>
#include <string>

#include "evorest/protocol.h"
#include "evorest/transport.h"

namespace evorest {

// Client side of the driver control protocol (see protocol.h). One request
// at a time. Connection failures raise DriverUnreachableError; non-2xx
// answers raise ProtocolError carrying the driver's message.
class DriverClient {
 public:
  DriverClient(HttpTransport& transport, std::string driver_url,
               std::chrono::milliseconds timeout = std::chrono::seconds(30));

  SutInfo GetInfo();
  // Idempotent; returns the SUT base URL.
  std::string StartSut();
  void StopSut();
  void ResetState();
  // Targets touched since `since_marker`. An unknown marker yields the full
  // report of the current epoch.
  CoverageReport GetCoverage(const std::string& since_marker);

  // Fetches an arbitrary document, e.g. the schema at SutInfo::swagger_json_url.
  std::string FetchText(const std::string& url);

  const std::string& driver_url() const { return driver_url_; }

 private:
  HttpResponse Call(const std::string& method, std::string_view path,
                    std::optional<std::string> body = std::nullopt);

  HttpTransport& transport_;
  std::string driver_url_;
  std::chrono::milliseconds timeout_;
};

}  // namespace evorest

#endif  // EVOREST_DRIVER_CLIENT_H_
