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

#ifndef EVOREST_HTTP_CALL_H_
#define EVOREST_HTTP_CALL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evorest/schema.h"

namespace evorest {

using Header = std::pair<std::string, std::string>;

struct AuthCredential {
  std::string label;
  std::vector<Header> headers;  // never empty

  bool operator==(const AuthCredential&) const = default;
};

// One fully concrete request, ready to send or to print.
struct ConcreteHttpCall {
  HttpVerb verb = HttpVerb::kGet;
  // Path actually requested: the sampled path, or the resolved location when
  // the action links to an earlier creation call.
  std::string path;
  // Path built from gene values only, before location resolution.
  std::string sampled_path;
  // Creation path of the linked call ("/api/v1/activities").
  std::string creation_path;
  std::string query;  // URL-encoded, without '?'
  std::vector<Header> headers;
  std::optional<std::string> body;
  std::optional<size_t> link_source;  // action index of the creation call

  std::string_view content_type() const {
    return body ? std::string_view("application/json") : std::string_view();
  }
  std::string PathAndQuery() const { return query.empty() ? path : path + "?" + query; }
  std::string Url(std::string_view base_url) const {
    return std::string(base_url) + PathAndQuery();
  }

  bool operator==(const ConcreteHttpCall&) const = default;
};

// Percent-encodes everything outside the RFC 3986 unreserved set.
std::string UrlEncode(std::string_view text);
std::string UrlDecode(std::string_view text);

// Rewrites `concrete_path` so that it addresses the resource at `saved`:
// the creation prefix and the id segment after it are replaced by `saved`,
// the rest is kept. `creation_path` may contain placeholders, which match
// any single segment. Throws ResolutionError when `concrete_path` does not
// have the shape <creation prefix>/<id>[/suffix].
std::string ResolveLocation(std::string_view saved, std::string_view concrete_path,
                            std::string_view creation_path);

// Strips "scheme://authority" from an absolute URL; paths pass through.
std::string PathOfUrl(std::string_view url);

}  // namespace evorest

#endif  // EVOREST_HTTP_CALL_H_
