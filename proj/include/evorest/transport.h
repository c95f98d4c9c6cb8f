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

// Request/response plumbing shared by the executor and the driver client.
// HttplibTransport talks to real sockets; tests and the acceptance suite can
// plug an in-process handler in its place.

#ifndef EVOREST_TRANSPORT_H_
#define EVOREST_TRANSPORT_H_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evorest/error.h"
#include "evorest/http_call.h"

namespace evorest {

struct HttpRequest {
  std::string method;  // "GET", "POST", ...
  std::string url;     // absolute
  std::vector<Header> headers;
  std::optional<std::string> body;
};

struct HttpResponse {
  int status = 0;
  std::vector<Header> headers;
  std::string body;
};

// Case-insensitive header lookup.
std::optional<std::string> FindHeader(const std::vector<Header>& headers, std::string_view name);

class TransportError : public Error {
 public:
  enum class Kind { kConnectionRefused, kTimeout, kOther };
  TransportError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  // Throws TransportError when no response arrives.
  virtual HttpResponse Send(const HttpRequest& request, std::chrono::milliseconds timeout) = 0;
};

// HTTP/1.1 over TCP with one kept-alive connection per host.
class HttplibTransport : public HttpTransport {
 public:
  HttplibTransport();
  ~HttplibTransport() override;
  HttpResponse Send(const HttpRequest& request, std::chrono::milliseconds timeout) override;

 private:
  struct Clients;
  std::unique_ptr<Clients> clients_;
};

// Routes every request to a function, ignoring scheme and host.
class FunctionTransport : public HttpTransport {
 public:
  using Handler = std::function<HttpResponse(const HttpRequest&, std::chrono::milliseconds)>;
  explicit FunctionTransport(Handler handler) : handler_(std::move(handler)) {}
  HttpResponse Send(const HttpRequest& request, std::chrono::milliseconds timeout) override {
    return handler_(request, timeout);
  }

 private:
  Handler handler_;
};

// Splits "http://host:port/p?q" into "http://host:port" and "/p?q".
std::pair<std::string, std::string> SplitUrl(std::string_view url);

}  // namespace evorest

#endif  // EVOREST_TRANSPORT_H_
