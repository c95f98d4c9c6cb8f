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

// Swagger 2.0 ingestion. A schema document becomes an ApiSchema: one
// ActionTemplate per (path, verb), each listing the parameters that the
// genome has to produce values for.

#ifndef EVOREST_SCHEMA_H_
#define EVOREST_SCHEMA_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evorest {

enum class HttpVerb { kGet, kPost, kPut, kDelete, kPatch };

std::string_view VerbName(HttpVerb verb);  // "GET", "POST", ...
std::optional<HttpVerb> ParseVerb(std::string_view name);  // any case
bool VerbAllowsBody(HttpVerb verb);

enum class ParamKind {
  kString,
  kInt32,
  kInt64,
  kDouble,
  kBoolean,
  kDateTime,
  kEnum,
  kObject,
  kArray,
  // Multipart file uploads. Parsed so the schema round-trips, but no gene
  // exists for them.
  kFile,
};

std::string_view ParamKindName(ParamKind kind);

struct ParamConstraints {
  std::optional<int64_t> minimum;
  std::optional<int64_t> maximum;
  std::optional<int64_t> min_length;
  std::optional<int64_t> max_length;
};

struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::kString;
  bool required = false;
  ParamConstraints constraints;
  std::vector<std::string> enum_values;                 // kEnum
  std::vector<std::shared_ptr<const ParamSpec>> fields;  // kObject
  std::shared_ptr<const ParamSpec> element;              // kArray
};

using ParamSpecPtr = std::shared_ptr<const ParamSpec>;

struct PathSegment {
  std::string text;  // literal text, or the placeholder name
  bool placeholder = false;

  bool operator==(const PathSegment&) const = default;
};

struct ActionTemplate {
  HttpVerb verb = HttpVerb::kGet;
  std::vector<PathSegment> path;
  std::vector<ParamSpecPtr> path_params;  // in placeholder order
  std::vector<ParamSpecPtr> query_params;
  std::vector<ParamSpecPtr> header_params;
  ParamSpecPtr body_spec;  // null when the action sends no payload
  bool produces_location = false;

  // "/items/{id}" form, without the schema base path.
  std::string PathString() const;
};

struct ApiSchema {
  std::string base_path;
  std::vector<ActionTemplate> templates;
  std::string raw_title;

  // Index of the template with this verb and "/a/{b}" path, if any.
  std::optional<size_t> Find(HttpVerb verb, std::string_view path) const;
};

// Splits "/a/{b}/c" into segments. Empty segments are dropped.
std::vector<PathSegment> SplitPathTemplate(std::string_view path);

// Parses a Swagger 2.0 JSON document. Throws ParseError for malformed JSON,
// SchemaError for documents that are not usable Swagger 2.0. Constructs that
// cannot be modelled (allOf, anyOf, ...) become strings with a warning.
ApiSchema ParseSchema(std::string_view document);

// True when `dependent` addresses a resource below the collection that
// `creator` creates: creator path, then one placeholder, then anything.
bool ExtendsCreationPath(const ActionTemplate& creator,
                         const ActionTemplate& dependent);

}  // namespace evorest

#endif  // EVOREST_SCHEMA_H_
