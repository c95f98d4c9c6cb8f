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

#include "evorest/http_call.h"

#include <cctype>
#include <string>

#include "evorest/error.h"

namespace evorest {

namespace {

std::vector<std::string_view> Segments(std::string_view path) {
  std::vector<std::string_view> out;
  size_t pos = 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    if (next > pos) out.push_back(path.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string UrlEncode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += c;
    } else {
      out += '%';
      out += kHex[u >> 4];
      out += kHex[u & 0xf];
    }
  }
  return out;
}

std::string UrlDecode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size()) {
      const int hi = HexValue(text[i + 1]);
      const int lo = HexValue(text[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out += static_cast<char>(hi * 16 + lo);
        i += 2;
        continue;
      }
    }
    out += text[i] == '+' ? ' ' : text[i];
  }
  return out;
}

std::string ResolveLocation(std::string_view saved, std::string_view concrete_path,
                            std::string_view creation_path) {
  const auto prefix = Segments(creation_path);
  // Only the path part takes part in matching; a query string is carried over.
  std::string_view query;
  if (size_t q = concrete_path.find('?'); q != std::string_view::npos) {
    query = concrete_path.substr(q);
    concrete_path = concrete_path.substr(0, q);
  }
  const auto concrete = Segments(concrete_path);
  if (concrete.size() < prefix.size() + 1) {
    throw ResolutionError("path " + std::string(concrete_path) + " has no id segment after " +
                          std::string(creation_path));
  }
  for (size_t i = 0; i < prefix.size(); ++i) {
    const bool placeholder = prefix[i].size() >= 2 && prefix[i].front() == '{' && prefix[i].back() == '}';
    if (!placeholder && prefix[i] != concrete[i]) {
      throw ResolutionError("path " + std::string(concrete_path) + " is not below " +
                            std::string(creation_path));
    }
  }
  std::string out(saved);
  while (!out.empty() && out.back() == '/') out.pop_back();
  for (size_t i = prefix.size() + 1; i < concrete.size(); ++i) {
    out += '/';
    out += concrete[i];
  }
  if (out.empty()) out = "/";
  out += query;
  return out;
}

std::string PathOfUrl(std::string_view url) {
  const size_t scheme = url.find("://");
  if (scheme == std::string_view::npos) return std::string(url);
  const size_t path = url.find('/', scheme + 3);
  if (path == std::string_view::npos) return "/";
  return std::string(url.substr(path));
}

}  // namespace evorest
