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

#include "evorest/transport.h"

#include <strings.h>

#include <string>
#include <utility>

#include "httplib.h"

namespace evorest {

std::optional<std::string> FindHeader(const std::vector<Header>& headers, std::string_view name) {
  for (const auto& [key, value] : headers) {
    if (key.size() == name.size() && strncasecmp(key.data(), name.data(), name.size()) == 0) {
      return value;
    }
  }
  return std::nullopt;
}

std::pair<std::string, std::string> SplitUrl(std::string_view url) {
  const size_t scheme = url.find("://");
  if (scheme == std::string_view::npos) return {"", std::string(url)};
  const size_t path = url.find('/', scheme + 3);
  if (path == std::string_view::npos) return {std::string(url), "/"};
  return {std::string(url.substr(0, path)), std::string(url.substr(path))};
}

struct HttplibTransport::Clients {
  std::map<std::string, std::unique_ptr<httplib::Client>> by_host;
};

HttplibTransport::HttplibTransport() : clients_(std::make_unique<Clients>()) {}
HttplibTransport::~HttplibTransport() = default;

HttpResponse HttplibTransport::Send(const HttpRequest& request, std::chrono::milliseconds timeout) {
  auto [host, target] = SplitUrl(request.url);
  if (host.empty()) {
    throw TransportError(TransportError::Kind::kOther, "not an absolute URL: " + request.url);
  }
  auto& client = clients_->by_host[host];
  if (!client) {
    client = std::make_unique<httplib::Client>(host);
    client->set_keep_alive(true);
  }
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
  client->set_connection_timeout(secs.count(), usecs.count());
  client->set_read_timeout(secs.count(), usecs.count());
  client->set_write_timeout(secs.count(), usecs.count());

  httplib::Headers headers;
  std::string content_type;
  for (const auto& [name, value] : request.headers) {
    if (strcasecmp(name.c_str(), "Content-Type") == 0) content_type = value;
    else headers.emplace(name, value);
  }
  if (request.body && content_type.empty()) content_type = "application/json";

  httplib::Request req;
  req.method = request.method;
  req.path = target;
  req.headers = std::move(headers);
  if (request.body) {
    req.body = *request.body;
    req.set_header("Content-Type", content_type);
  }
  httplib::Result result = client->send(req);
  if (!result) {
    const httplib::Error err = result.error();
    // Drop the connection; the next call reconnects.
    client.reset();
    if (err == httplib::Error::Connection) {
      throw TransportError(TransportError::Kind::kConnectionRefused,
                           "cannot connect to " + host + ": " + httplib::to_string(err));
    }
    if (err == httplib::Error::Read || err == httplib::Error::ConnectionTimeout) {
      throw TransportError(TransportError::Kind::kTimeout,
                           request.method + " " + request.url + " timed out");
    }
    throw TransportError(TransportError::Kind::kOther,
                         request.method + " " + request.url + ": " + httplib::to_string(err));
  }
  HttpResponse response;
  response.status = result->status;
  response.body = result->body;
  for (const auto& [name, value] : result->headers) response.headers.emplace_back(name, value);
  return response;
}

}  // namespace evorest
