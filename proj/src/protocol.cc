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

#include "evorest/protocol.h"

#include <cmath>
#include <string>

#include "evorest/error.h"
#include "json.hpp"

namespace evorest {

namespace {

using Json = nlohmann::json;

Json Parse(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ProtocolError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

template <typename T>
T Field(const Json& obj, const char* key, std::string_view what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ProtocolError(std::string(what) + " lacks field \"" + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ProtocolError(std::string(what) + " field \"" + key + "\" has the wrong type");
  }
}

}  // namespace

std::string EncodeSutInfo(const SutInfo& info) {
  Json auth = Json::array();
  for (const AuthCredential& cred : info.auth_info) {
    Json headers = Json::array();
    for (const auto& [name, value] : cred.headers) headers.push_back({{"name", name}, {"value", value}});
    auth.push_back({{"label", cred.label}, {"headers", headers}});
  }
  Json out = {{"isSutRunning", info.is_sut_running},
              {"baseUrlOfSut", info.base_url_of_sut},
              {"swaggerJsonUrl", info.swagger_json_url},
              {"packagePrefixes", info.package_prefixes},
              {"authInfo", auth}};
  return out.dump();
}

SutInfo DecodeSutInfo(std::string_view text) {
  const Json obj = Parse(text, "info response");
  SutInfo info;
  info.is_sut_running = Field<bool>(obj, "isSutRunning", "info response");
  info.base_url_of_sut = Field<std::string>(obj, "baseUrlOfSut", "info response");
  info.swagger_json_url = Field<std::string>(obj, "swaggerJsonUrl", "info response");
  if (obj.contains("packagePrefixes") && obj["packagePrefixes"].is_string()) {
    info.package_prefixes = obj["packagePrefixes"].get<std::string>();
  }
  // A driver without credentials may send null.
  if (obj.contains("authInfo") && !obj["authInfo"].is_null()) {
    if (!obj["authInfo"].is_array()) throw ProtocolError("info response authInfo must be an array");
    for (const Json& entry : obj["authInfo"]) {
      AuthCredential cred;
      cred.label = Field<std::string>(entry, "label", "authInfo entry");
      const Json headers = Field<Json>(entry, "headers", "authInfo entry");
      if (!headers.is_array()) throw ProtocolError("authInfo headers must be an array");
      for (const Json& h : headers) {
        cred.headers.emplace_back(Field<std::string>(h, "name", "auth header"),
                                  Field<std::string>(h, "value", "auth header"));
      }
      if (cred.headers.empty()) {
        throw ProtocolError("credential " + cred.label + " has no headers");
      }
      info.auth_info.push_back(std::move(cred));
    }
  }
  return info;
}

std::string EncodeCoverage(const CoverageReport& report) {
  Json targets = Json::array();
  for (const CoverageTarget& t : report.targets) {
    Json entry = {{"id", t.id},
                  {"kind", t.kind == CoverageKind::kBranch ? "branch" : "statement"},
                  {"covered", t.covered}};
    if (t.distance) entry["distance"] = *t.distance;
    targets.push_back(std::move(entry));
  }
  return Json{{"marker", report.marker}, {"targets", targets}}.dump();
}

CoverageReport DecodeCoverage(std::string_view text) {
  const Json obj = Parse(text, "coverage response");
  CoverageReport report;
  report.marker = Field<std::string>(obj, "marker", "coverage response");
  const Json targets = Field<Json>(obj, "targets", "coverage response");
  if (!targets.is_array()) throw ProtocolError("coverage targets must be an array");
  report.targets.reserve(targets.size());
  for (const Json& entry : targets) {
    CoverageTarget t;
    t.id = Field<std::string>(entry, "id", "coverage target");
    const std::string kind = Field<std::string>(entry, "kind", "coverage target");
    if (kind == "branch") t.kind = CoverageKind::kBranch;
    else if (kind == "statement") t.kind = CoverageKind::kStatement;
    else throw ProtocolError("coverage target " + t.id + " has unknown kind " + kind);
    t.covered = Field<bool>(entry, "covered", "coverage target");
    if (entry.contains("distance") && !entry["distance"].is_null()) {
      const double d = Field<double>(entry, "distance", "coverage target");
      if (!std::isfinite(d) || d < 0) {
        throw ProtocolError("coverage target " + t.id + " has an invalid distance");
      }
      t.distance = d;
    }
    report.targets.push_back(std::move(t));
  }
  return report;
}

}  // namespace evorest
