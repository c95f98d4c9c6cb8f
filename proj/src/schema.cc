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

#include "evorest/schema.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "evorest/error.h"
#include "evorest/log.h"
#include "json.hpp"

namespace evorest {

namespace {

using Json = nlohmann::ordered_json;

// Beyond this many nested objects/arrays a schema is cut off. Also breaks
// self-referential definitions.
constexpr int kMaxSchemaDepth = 5;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class SchemaReader {
 public:
  explicit SchemaReader(const Json& root) : root_(root) {}

  ApiSchema Read() {
    if (!root_.is_object()) throw SchemaError("schema document must be a JSON object");
    if (root_.contains("openapi")) {
      throw SchemaError(
          "OpenAPI 3 documents are not supported; provide a Swagger 2.0 "
          "(\"swagger\": \"2.0\") document");
    }
    if (root_.contains("swagger")) {
      const Json& version = root_["swagger"];
      if (!version.is_string() || version.get<std::string>() != "2.0") {
        throw SchemaError("unsupported swagger version: " + version.dump());
      }
    }
    if (!root_.contains("paths")) throw SchemaError("schema has no \"paths\" object");
    const Json& paths = root_["paths"];
    if (!paths.is_object()) throw SchemaError("\"paths\" must be an object");

    ApiSchema schema;
    schema.base_path = NormalizeBasePath(root_.value("basePath", std::string()));
    if (root_.contains("info") && root_["info"].is_object()) {
      schema.raw_title = root_["info"].value("title", std::string());
    }

    for (const auto& [path, item] : paths.items()) {
      if (!item.is_object()) throw SchemaError("path item for " + path + " must be an object");
      std::vector<Json> shared_params;
      if (item.contains("parameters")) shared_params = ParamList(item["parameters"]);
      for (const auto& [key, operation] : item.items()) {
        if (key == "parameters" || key.rfind("x-", 0) == 0) continue;
        std::string verb_name = Lower(key);
        std::optional<HttpVerb> verb = ParseVerb(verb_name);
        if (!verb) {
          LogWarning("skipping unsupported operation " + key + " " + path);
          continue;
        }
        schema.templates.push_back(ReadOperation(*verb, path, operation, shared_params));
      }
    }
    return schema;
  }

 private:
  static std::string NormalizeBasePath(std::string base) {
    while (!base.empty() && base.back() == '/') base.pop_back();
    if (!base.empty() && base.front() != '/') base.insert(base.begin(), '/');
    return base;
  }

  // Follows a "#/a/b" pointer inside the document.
  const Json& Resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) {
      throw SchemaError("unresolvable $ref " + ref + ": only local references are supported");
    }
    const Json* node = &root_;
    size_t pos = 2;
    while (pos <= ref.size()) {
      size_t next = ref.find('/', pos);
      if (next == std::string::npos) next = ref.size();
      std::string token = ref.substr(pos, next - pos);
      // JSON pointer escapes.
      for (size_t i = 0; (i = token.find('~', i)) != std::string::npos; ++i) {
        if (i + 1 < token.size() && token[i + 1] == '1') token.replace(i, 2, "/");
        else if (i + 1 < token.size() && token[i + 1] == '0') token.replace(i, 2, "~");
      }
      if (!node->is_object() || !node->contains(token)) {
        throw SchemaError("unresolvable $ref " + ref);
      }
      node = &(*node)[token];
      pos = next + 1;
    }
    return *node;
  }

  std::vector<Json> ParamList(const Json& list) const {
    if (!list.is_array()) throw SchemaError("\"parameters\" must be an array");
    std::vector<Json> out;
    for (const Json& p : list) {
      if (p.is_object() && p.contains("$ref")) {
        out.push_back(Resolve(p["$ref"].get<std::string>()));
      } else {
        out.push_back(p);
      }
    }
    return out;
  }

  ActionTemplate ReadOperation(HttpVerb verb, const std::string& path,
                               const Json& operation,
                               const std::vector<Json>& shared_params) {
    if (!operation.is_object()) {
      throw SchemaError("operation " + std::string(VerbName(verb)) + " " + path +
                        " must be an object");
    }
    ActionTemplate action;
    action.verb = verb;
    action.path = SplitPathTemplate(path);
    const std::string where = std::string(VerbName(verb)) + " " + path;

    std::set<std::string> placeholders;
    for (const PathSegment& seg : action.path) {
      if (seg.placeholder && !placeholders.insert(seg.text).second) {
        throw SchemaError("duplicate path placeholder {" + seg.text + "} in " + path);
      }
    }

    // Operation-level parameters override path-level ones with the same
    // (name, in).
    std::vector<Json> params = shared_params;
    if (operation.contains("parameters")) {
      for (Json& p : ParamList(operation["parameters"])) {
        auto same = std::find_if(params.begin(), params.end(), [&](const Json& q) {
          return q.value("name", "") == p.value("name", "") &&
                 q.value("in", "") == p.value("in", "");
        });
        if (same != params.end()) *same = std::move(p);
        else params.push_back(std::move(p));
      }
    }

    std::vector<ParamSpecPtr> by_placeholder(action.path.size());
    for (const Json& p : params) {
      if (!p.is_object()) throw SchemaError("parameter in " + where + " must be an object");
      const std::string name = p.value("name", "");
      const std::string in = p.value("in", "");
      if (name.empty()) throw SchemaError("parameter without a name in " + where);
      if (in == "body") {
        if (!VerbAllowsBody(verb)) {
          LogWarning("ignoring body parameter on " + where);
          continue;
        }
        if (!p.contains("schema")) throw SchemaError("body parameter without schema in " + where);
        auto spec = std::make_shared<ParamSpec>(ReadSchema(p["schema"], name, 0));
        spec->required = p.value("required", false);
        action.body_spec = std::move(spec);
      } else if (in == "formData") {
        if (p.value("type", "") == "file" && VerbAllowsBody(verb)) {
          auto spec = std::make_shared<ParamSpec>();
          spec->name = name;
          spec->kind = ParamKind::kFile;
          spec->required = p.value("required", false);
          action.body_spec = std::move(spec);
        } else {
          LogWarning("skipping form parameter " + name + " in " + where);
        }
      } else if (in == "path" || in == "query" || in == "header") {
        auto spec = std::make_shared<ParamSpec>(ReadSchema(p, name, 0));
        spec->required = in == "path" ? true : p.value("required", false);
        if (in == "path") {
          auto it = std::find_if(action.path.begin(), action.path.end(), [&](const PathSegment& s) {
            return s.placeholder && s.text == name;
          });
          if (it == action.path.end()) {
            LogWarning("path parameter " + name + " not in path of " + where);
            continue;
          }
          by_placeholder[static_cast<size_t>(it - action.path.begin())] = std::move(spec);
        } else if (in == "query") {
          action.query_params.push_back(std::move(spec));
        } else {
          action.header_params.push_back(std::move(spec));
        }
      } else {
        LogWarning("skipping parameter " + name + " with location '" + in + "' in " + where);
      }
    }
    for (size_t i = 0; i < action.path.size(); ++i) {
      if (!action.path[i].placeholder) continue;
      if (!by_placeholder[i]) {
        LogWarning("undeclared path placeholder {" + action.path[i].text + "} in " + where +
                   "; treating it as a string");
        auto spec = std::make_shared<ParamSpec>();
        spec->name = action.path[i].text;
        spec->kind = ParamKind::kString;
        spec->required = true;
        by_placeholder[i] = std::move(spec);
      }
      action.path_params.push_back(by_placeholder[i]);
    }

    action.produces_location = verb == HttpVerb::kPost && CreatesResource(operation);
    return action;
  }

  bool CreatesResource(const Json& operation) {
    if (!operation.contains("responses") || !operation["responses"].is_object()) return false;
    for (const auto& [code, raw] : operation["responses"].items()) {
      if (code.size() != 3 || code[0] != '2') continue;
      const Json& response = raw.is_object() && raw.contains("$ref")
                                 ? Resolve(raw["$ref"].get<std::string>())
                                 : raw;
      if (!response.is_object()) continue;
      if (response.contains("headers") && response["headers"].is_object()) {
        for (const auto& [header, unused] : response["headers"].items()) {
          if (Lower(header) == "location") return true;
        }
      }
      if (response.contains("schema")) {
        ParamSpec body = ReadSchema(response["schema"], "response", 0);
        if (body.kind == ParamKind::kObject) {
          for (const ParamSpecPtr& field : body.fields) {
            if (field->name == "id") return true;
          }
        }
      }
    }
    return false;
  }

  ParamSpec ReadSchema(const Json& node, const std::string& name, int depth) {
    if (node.is_object() && node.contains("$ref")) {
      const std::string ref = node["$ref"].get<std::string>();
      if (std::find(ref_stack_.begin(), ref_stack_.end(), ref) != ref_stack_.end() ||
          depth > kMaxSchemaDepth) {
        ParamSpec cut;
        cut.name = name;
        cut.kind = ParamKind::kObject;
        return cut;
      }
      const Json& target = Resolve(ref);
      ref_stack_.push_back(ref);
      ParamSpec spec = ReadSchema(target, name, depth);
      ref_stack_.pop_back();
      return spec;
    }

    ParamSpec spec;
    spec.name = name;
    if (!node.is_object()) {
      throw SchemaError("schema for " + name + " must be an object");
    }
    ReadConstraints(node, spec.constraints);
    const std::string type = node.contains("type") && node["type"].is_string()
                                 ? node["type"].get<std::string>()
                                 : std::string();
    const std::string format = node.value("format", "");

    if (type == "integer") {
      spec.kind = format == "int64" ? ParamKind::kInt64 : ParamKind::kInt32;
    } else if (type == "number") {
      spec.kind = ParamKind::kDouble;
    } else if (type == "boolean") {
      spec.kind = ParamKind::kBoolean;
    } else if (type == "string") {
      if (node.contains("enum")) {
        spec.kind = ParamKind::kEnum;
        for (const Json& v : node["enum"]) {
          spec.enum_values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        if (spec.enum_values.empty()) throw SchemaError("enum " + name + " has no values");
      } else if (format == "date-time") {
        spec.kind = ParamKind::kDateTime;
      } else {
        spec.kind = ParamKind::kString;
      }
    } else if (type == "file") {
      spec.kind = ParamKind::kFile;
    } else if (type == "array") {
      spec.kind = ParamKind::kArray;
      if (depth >= kMaxSchemaDepth) {
        // Element left as a plain string; sampling keeps such arrays empty
        // past the depth cap anyway.
        auto element = std::make_shared<ParamSpec>();
        element->name = name;
        spec.element = std::move(element);
      } else if (node.contains("items")) {
        spec.element = std::make_shared<ParamSpec>(ReadSchema(node["items"], name, depth + 1));
      } else {
        LogWarning("array " + name + " has no items; assuming strings");
        auto element = std::make_shared<ParamSpec>();
        element->name = name;
        spec.element = std::move(element);
      }
    } else if (type == "object" || (type.empty() && node.contains("properties"))) {
      spec.kind = ParamKind::kObject;
      if (node.contains("properties") && depth < kMaxSchemaDepth) {
        std::set<std::string> required;
        if (node.contains("required") && node["required"].is_array()) {
          for (const Json& r : node["required"]) required.insert(r.get<std::string>());
        }
        for (const auto& [field_name, field_schema] : node["properties"].items()) {
          auto field = std::make_shared<ParamSpec>(ReadSchema(field_schema, field_name, depth + 1));
          field->required = required.count(field_name) > 0;
          spec.fields.push_back(std::move(field));
        }
      }
    } else {
      LogWarning("unsupported schema construct for " + name + "; treating it as a string");
      spec.kind = ParamKind::kString;
    }
    return spec;
  }

  static void ReadConstraints(const Json& node, ParamConstraints& c) {
    auto read = [&](const char* key, std::optional<int64_t>& out) {
      if (node.contains(key) && node[key].is_number()) {
        out = static_cast<int64_t>(node[key].get<double>());
      }
    };
    read("minimum", c.minimum);
    read("maximum", c.maximum);
    read("minLength", c.min_length);
    read("maxLength", c.max_length);
  }

  const Json& root_;
  std::vector<std::string> ref_stack_;
};

}  // namespace

std::string_view VerbName(HttpVerb verb) {
  switch (verb) {
    case HttpVerb::kGet: return "GET";
    case HttpVerb::kPost: return "POST";
    case HttpVerb::kPut: return "PUT";
    case HttpVerb::kDelete: return "DELETE";
    case HttpVerb::kPatch: return "PATCH";
  }
  return "GET";
}

std::optional<HttpVerb> ParseVerb(std::string_view name) {
  const std::string lower = Lower(name);
  if (lower == "get") return HttpVerb::kGet;
  if (lower == "post") return HttpVerb::kPost;
  if (lower == "put") return HttpVerb::kPut;
  if (lower == "delete") return HttpVerb::kDelete;
  if (lower == "patch") return HttpVerb::kPatch;
  return std::nullopt;
}

bool VerbAllowsBody(HttpVerb verb) {
  return verb == HttpVerb::kPost || verb == HttpVerb::kPut || verb == HttpVerb::kPatch;
}

std::string_view ParamKindName(ParamKind kind) {
  switch (kind) {
    case ParamKind::kString: return "string";
    case ParamKind::kInt32: return "int32";
    case ParamKind::kInt64: return "int64";
    case ParamKind::kDouble: return "double";
    case ParamKind::kBoolean: return "boolean";
    case ParamKind::kDateTime: return "date-time";
    case ParamKind::kEnum: return "enum";
    case ParamKind::kObject: return "object";
    case ParamKind::kArray: return "array";
    case ParamKind::kFile: return "file";
  }
  return "string";
}

std::string ActionTemplate::PathString() const {
  if (path.empty()) return "/";
  std::string out;
  for (const PathSegment& seg : path) {
    out += '/';
    out += seg.placeholder ? "{" + seg.text + "}" : seg.text;
  }
  return out;
}

std::optional<size_t> ApiSchema::Find(HttpVerb verb, std::string_view path) const {
  for (size_t i = 0; i < templates.size(); ++i) {
    if (templates[i].verb == verb && templates[i].PathString() == path) return i;
  }
  return std::nullopt;
}

std::vector<PathSegment> SplitPathTemplate(std::string_view path) {
  std::vector<PathSegment> out;
  size_t pos = 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    std::string_view part = path.substr(pos, next - pos);
    if (!part.empty()) {
      if (part.size() >= 2 && part.front() == '{' && part.back() == '}') {
        out.push_back({std::string(part.substr(1, part.size() - 2)), true});
      } else {
        out.push_back({std::string(part), false});
      }
    }
    pos = next + 1;
  }
  return out;
}

ApiSchema ParseSchema(std::string_view document) {
  Json root;
  try {
    root = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed schema JSON: ") + e.what(), e.byte);
  }
  return SchemaReader(root).Read();
}

bool ExtendsCreationPath(const ActionTemplate& creator, const ActionTemplate& dependent) {
  if (!creator.produces_location) return false;
  const auto& prefix = creator.path;
  if (dependent.path.size() < prefix.size() + 1) return false;
  if (!std::equal(prefix.begin(), prefix.end(), dependent.path.begin())) return false;
  return dependent.path[prefix.size()].placeholder;
}

}  // namespace evorest
