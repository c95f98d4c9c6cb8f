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

// Driver control protocol: payload types and their JSON encodings. Every
// driver (the in-process simulator, or an external one in any language)
// speaks exactly this over HTTP/1.1:
//
//   GET  /controller/info                 -> info object
//   POST /controller/sut    {"running":b} -> info object
//   POST /controller/reset                -> {}
//   GET  /controller/targets?since=<m>    -> coverage object
//
// info:     {"isSutRunning":bool,"baseUrlOfSut":str,"swaggerJsonUrl":str,
//            "packagePrefixes":str,
//            "authInfo":[{"label":str,"headers":[{"name":str,"value":str}]}]}
// coverage: {"marker":str,"targets":[{"id":str,"kind":"statement"|"branch",
//            "covered":bool,"distance":number?}]}
//
// Unknown fields are ignored on decode.

#ifndef EVOREST_PROTOCOL_H_
#define EVOREST_PROTOCOL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evorest/http_call.h"

namespace evorest {

inline constexpr std::string_view kInfoPath = "/controller/info";
inline constexpr std::string_view kSutPath = "/controller/sut";
inline constexpr std::string_view kResetPath = "/controller/reset";
inline constexpr std::string_view kTargetsPath = "/controller/targets";

struct SutInfo {
  bool is_sut_running = false;
  std::string base_url_of_sut;
  std::string swagger_json_url;
  std::string package_prefixes;
  std::vector<AuthCredential> auth_info;

  bool operator==(const SutInfo&) const = default;
};

enum class CoverageKind { kStatement, kBranch };

struct CoverageTarget {
  std::string id;
  CoverageKind kind = CoverageKind::kStatement;
  bool covered = false;
  std::optional<double> distance;  // branch targets that were not taken

  bool operator==(const CoverageTarget&) const = default;
};

struct CoverageReport {
  std::string marker;
  std::vector<CoverageTarget> targets;

  bool operator==(const CoverageReport&) const = default;
};

std::string EncodeSutInfo(const SutInfo& info);
// Throws ProtocolError on missing or mistyped fields.
SutInfo DecodeSutInfo(std::string_view text);

std::string EncodeCoverage(const CoverageReport& report);
CoverageReport DecodeCoverage(std::string_view text);

}  // namespace evorest

#endif  // EVOREST_PROTOCOL_H_
