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


// Writes the final suite as a JUnit test class in RestAssured style or as
// NEUTRAL_JSON, a language-neutral description of the same calls.
//
// NEUTRAL_JSON is an array of tests; each test is an array of calls:
//   {"verb": "POST", "path": "/api/v1/activities", "query": "a=1&b=x",
//    "headers": [{"name": str, "value": str}], "body": str|null,
//    "expected_status": int|null, "link": {"from_test_call_index": int}?,
//    "fault": bool}
// "path" is the path built from the test's own values; a call with "link"
// addresses the resource created by the earlier call at that index instead.
// "expected_status" is null for calls that timed out. "fault" marks 5xx.

#ifndef EVOREST_SUITE_WRITER_H_
#define EVOREST_SUITE_WRITER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evorest/fitness.h"
#include "evorest/http_call.h"
#include "evorest/schema.h"

namespace evorest {

enum class OutputFormat { kJavaJunit4, kJavaJunit5, kNeutralJson };

inline constexpr std::string_view kDefaultSuiteFileName = "EvoMasterTest";

std::string_view OutputFormatName(OutputFormat format);  // "JAVA_JUNIT_4", ...
std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

struct NeutralCall {
  std::string verb;
  std::string path;
  std::string query;
  std::vector<Header> headers;
  std::optional<std::string> body;
  std::optional<int> expected_status;
  std::optional<size_t> link_from;
  bool fault = false;

  bool operator==(const NeutralCall&) const = default;
};

using NeutralTest = std::vector<NeutralCall>;

// Calls of each test as they were sent, auth headers included. Only calls
// that were executed are listed.
std::vector<NeutralTest> ToNeutral(const std::vector<EvaluatedIndividual>& suite,
                                   const ApiSchema& schema,
                                   const std::vector<AuthCredential>& credentials);

std::string WriteNeutralJson(const std::vector<NeutralTest>& tests);
// Throws ParseError on malformed input.
std::vector<NeutralTest> ParseNeutralJson(std::string_view text);

struct JavaOptions {
  OutputFormat format = OutputFormat::kJavaJunit4;
  std::string class_name = std::string(kDefaultSuiteFileName);
  std::string base_url = "http://localhost:8080";
};

// One test method per individual, one given()...then().statusCode() chain
// per executed call. Creation calls whose location a later call uses store
// it in a location_<resource> variable, and the later call goes through
// resolveLocation(location, expected url).
std::string WriteJava(const std::vector<EvaluatedIndividual>& suite, const ApiSchema& schema,
                      const std::vector<AuthCredential>& credentials, const JavaOptions& options);

// Writes <folder>/<file_name>.java or .json, creating the folder. Checks
// that the folder is writable before producing anything and throws IoError
// otherwise. Returns the written paths.
std::vector<std::string> WriteSuite(const std::vector<EvaluatedIndividual>& suite,
                                    const ApiSchema& schema,
                                    const std::vector<AuthCredential>& credentials,
                                    OutputFormat format, const std::string& folder,
                                    const std::string& file_name, const std::string& base_url);

}  // namespace evorest

#endif  // EVOREST_SUITE_WRITER_H_
