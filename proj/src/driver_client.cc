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

#include "evorest/driver_client.h"

#include <string>
#include <utility>

namespace evorest {

namespace {

HttpResponse SendOrExplain(HttpTransport& transport, const HttpRequest& request,
                           std::chrono::milliseconds timeout, const std::string& driver_url) {
  try {
    return transport.Send(request, timeout);
  } catch (const TransportError& e) {
    if (e.kind() == TransportError::Kind::kConnectionRefused) {
      throw DriverUnreachableError("no driver is listening at " + driver_url +
                                   ". Start the SUT driver (for a demo: evorest_sim --spec "
                                   "crud-chain) and pass its address with --driverUrl.");
    }
    throw DriverUnreachableError("driver at " + driver_url + " did not answer: " + e.what());
  }
}

}  // namespace

DriverClient::DriverClient(HttpTransport& transport, std::string driver_url,
                           std::chrono::milliseconds timeout)
    : transport_(transport), driver_url_(std::move(driver_url)), timeout_(timeout) {
  while (!driver_url_.empty() && driver_url_.back() == '/') driver_url_.pop_back();
}

HttpResponse DriverClient::Call(const std::string& method, std::string_view path,
                                std::optional<std::string> body) {
  HttpRequest request;
  request.method = method;
  request.url = driver_url_ + std::string(path);
  request.headers.emplace_back("Accept", "application/json");
  if (body) {
    request.headers.emplace_back("Content-Type", "application/json");
    request.body = std::move(body);
  }
  HttpResponse response = SendOrExplain(transport_, request, timeout_, driver_url_);
  if (response.status / 100 != 2) {
    throw ProtocolError("driver answered " + std::to_string(response.status) + " to " + method +
                        " " + std::string(path) + ": " + response.body);
  }
  return response;
}

SutInfo DriverClient::GetInfo() { return DecodeSutInfo(Call("GET", kInfoPath).body); }

std::string DriverClient::StartSut() {
  const SutInfo info = DecodeSutInfo(Call("POST", kSutPath, R"({"running":true})").body);
  if (!info.is_sut_running) throw ProtocolError("driver reports the SUT still stopped after start");
  return info.base_url_of_sut;
}

void DriverClient::StopSut() { Call("POST", kSutPath, R"({"running":false})"); }

void DriverClient::ResetState() { Call("POST", kResetPath, "{}"); }

CoverageReport DriverClient::GetCoverage(const std::string& since_marker) {
  return DecodeCoverage(
      Call("GET", std::string(kTargetsPath) + "?since=" + UrlEncode(since_marker)).body);
}

std::string DriverClient::FetchText(const std::string& url) {
  HttpRequest request;
  request.method = "GET";
  request.url = url;
  HttpResponse response = SendOrExplain(transport_, request, timeout_, url);
  if (response.status / 100 != 2) {
    throw ProtocolError("GET " + url + " answered " + std::to_string(response.status));
  }
  return response.body;
}

}  // namespace evorest
