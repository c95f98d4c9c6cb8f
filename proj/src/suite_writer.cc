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


#include "evorest/suite_writer.h"

#include <strings.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <utility>

#include "evorest/error.h"
#include "evorest/individual.h"
#include "json.hpp"

namespace evorest {

namespace {

using OJson = nlohmann::ordered_json;

std::string JavaString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned char>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string Identifier(std::string_view text) {
  std::string out;
  for (char c : text) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (out.empty()) out = "resource";
  return out;
}

std::string LastSegment(std::string_view path) {
  while (!path.empty() && path.back() == '/') path.remove_suffix(1);
  const size_t slash = path.rfind('/');
  return std::string(slash == std::string_view::npos ? path : path.substr(slash + 1));
}

std::string MethodName(std::string_view verb) {
  std::string out(verb);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const char* kResolveLocationDoc =
    "// Each test calls resolveLocation(location, expectedUrl), which the test\n"
    "// class or a base class must provide. It points a call at a resource\n"
    "// created earlier in the same test:\n"
    "//\n"
    "//   static String resolveLocation(String location, String expectedUrl) {\n"
    "//     if (location == null || location.isEmpty()) return expectedUrl;\n"
    "//     java.net.URI expected = java.net.URI.create(expectedUrl);\n"
    "//     java.net.URI created = expected.resolve(location);\n"
    "//     String[] have = created.getPath().split(\"/\");\n"
    "//     String[] want = expected.getPath().split(\"/\");\n"
    "//     StringBuilder path = new StringBuilder(created.getPath());\n"
    "//     for (int i = have.length; i < want.length; i++) path.append('/').append(want[i]);\n"
    "//     String query = expected.getRawQuery();\n"
    "//     return created.getScheme() + \"://\" + created.getRawAuthority() + path\n"
    "//         + (query == null ? \"\" : \"?\" + query);\n"
    "//   }\n"
    "//\n"
    "// baseUrlOfSut must point at a running SUT whose state was reset before\n"
    "// each test, for example from a @Before method using the SUT driver.\n";

}  // namespace

std::string_view OutputFormatName(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJavaJunit4: return "JAVA_JUNIT_4";
    case OutputFormat::kJavaJunit5: return "JAVA_JUNIT_5";
    case OutputFormat::kNeutralJson: return "NEUTRAL_JSON";
  }
  return "";
}

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  for (OutputFormat f :
       {OutputFormat::kJavaJunit4, OutputFormat::kJavaJunit5, OutputFormat::kNeutralJson}) {
    if (OutputFormatName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<NeutralTest> ToNeutral(const std::vector<EvaluatedIndividual>& suite,
                                   const ApiSchema& schema,
                                   const std::vector<AuthCredential>& credentials) {
  std::vector<NeutralTest> tests;
  for (const EvaluatedIndividual& ev : suite) {
    const std::vector<ConcreteHttpCall> calls = Render(ev.individual, schema, {});
    const AuthCredential* auth = nullptr;
    if (ev.individual.auth_index && *ev.individual.auth_index < credentials.size()) {
      auth = &credentials[*ev.individual.auth_index];
    }
    NeutralTest test;
    for (size_t i = 0; i < calls.size() && i < ev.results.size(); ++i) {
      const ConcreteHttpCall& call = calls[i];
      NeutralCall out;
      out.verb = std::string(VerbName(call.verb));
      out.path = call.sampled_path;
      out.query = call.query;
      if (auth) out.headers = auth->headers;
      for (const Header& h : call.headers) {
        const bool shadowed = auth && std::any_of(auth->headers.begin(), auth->headers.end(),
                                                  [&](const Header& a) {
                                                    return strcasecmp(a.first.c_str(),
                                                                      h.first.c_str()) == 0;
                                                  });
        if (!shadowed) out.headers.push_back(h);
      }
      out.body = call.body;
      out.expected_status = ev.results[i].status;
      out.link_from = call.link_source;
      out.fault = out.expected_status && *out.expected_status / 100 == 5;
      test.push_back(std::move(out));
    }
    tests.push_back(std::move(test));
  }
  return tests;
}

std::string WriteNeutralJson(const std::vector<NeutralTest>& tests) {
  OJson root = OJson::array();
  for (const NeutralTest& test : tests) {
    OJson calls = OJson::array();
    for (const NeutralCall& c : test) {
      OJson j;
      j["verb"] = c.verb;
      j["path"] = c.path;
      j["query"] = c.query;
      OJson headers = OJson::array();
      for (const auto& [name, value] : c.headers) headers.push_back({{"name", name}, {"value", value}});
      j["headers"] = headers;
      j["body"] = c.body ? OJson(*c.body) : OJson(nullptr);
      j["expected_status"] = c.expected_status ? OJson(*c.expected_status) : OJson(nullptr);
      if (c.link_from) j["link"] = {{"from_test_call_index", *c.link_from}};
      j["fault"] = c.fault;
      calls.push_back(std::move(j));
    }
    root.push_back(std::move(calls));
  }
  return root.dump(2) + "\n";
}

std::vector<NeutralTest> ParseNeutralJson(std::string_view text) {
  OJson root;
  try {
    root = OJson::parse(text);
  } catch (const OJson::parse_error& e) {
    throw ParseError(std::string("malformed NEUTRAL_JSON: ") + e.what(), e.byte);
  }
  auto fail = [](const std::string& why) { throw ParseError("malformed NEUTRAL_JSON: " + why, 0); };
  if (!root.is_array()) fail("top level must be an array of tests");
  std::vector<NeutralTest> tests;
  try {
    for (const OJson& t : root) {
      if (!t.is_array()) fail("a test must be an array of calls");
      NeutralTest test;
      for (const OJson& j : t) {
        NeutralCall c;
        c.verb = j.at("verb").get<std::string>();
        c.path = j.at("path").get<std::string>();
        c.query = j.value("query", "");
        for (const OJson& h : j.value("headers", OJson::array())) {
          c.headers.emplace_back(h.at("name").get<std::string>(), h.at("value").get<std::string>());
        }
        if (j.contains("body") && !j["body"].is_null()) c.body = j["body"].get<std::string>();
        if (!j.at("expected_status").is_null()) c.expected_status = j["expected_status"].get<int>();
        if (j.contains("link")) c.link_from = j["link"].at("from_test_call_index").get<size_t>();
        c.fault = j.value("fault", false);
        if (c.link_from && *c.link_from >= test.size()) fail("link must point at an earlier call");
        test.push_back(std::move(c));
      }
      tests.push_back(std::move(test));
    }
  } catch (const OJson::exception& e) {
    fail(e.what());
  }
  return tests;
}

std::string WriteJava(const std::vector<EvaluatedIndividual>& suite, const ApiSchema& schema,
                      const std::vector<AuthCredential>& credentials, const JavaOptions& options) {
  const std::vector<NeutralTest> tests = ToNeutral(suite, schema, credentials);
  const bool junit5 = options.format == OutputFormat::kJavaJunit5;
  std::string out;
  out += "// Generated by evorest. " + std::to_string(tests.size()) + " test(s).\n//\n";
  out += kResolveLocationDoc;
  out += "\n";
  out += junit5 ? "import org.junit.jupiter.api.Test;\n" : "import org.junit.Test;\n";
  out += "import static io.restassured.RestAssured.given;\n\n";
  out += "public class " + Identifier(options.class_name) + " {\n\n";
  out += "    private static String baseUrlOfSut = " + JavaString(options.base_url) + ";\n";

  for (size_t t = 0; t < tests.size(); ++t) {
    const NeutralTest& test = tests[t];
    const EvaluatedIndividual& ev = suite[t];
    std::set<std::string> auth_names;
    std::string auth_label;
    if (ev.individual.auth_index && *ev.individual.auth_index < credentials.size()) {
      const AuthCredential& cred = credentials[*ev.individual.auth_index];
      auth_label = cred.label;
      for (const auto& [name, value] : cred.headers) auth_names.insert(name);
    }

    // Creation calls whose location is used later and was actually returned.
    std::map<size_t, std::string> location_var;
    std::set<std::string> taken;
    for (const NeutralCall& c : test) {
      if (!c.link_from || location_var.count(*c.link_from)) continue;
      const size_t src = *c.link_from;
      if (src >= ev.results.size() || !ev.results[src].extracted_location) continue;
      std::string name = "location_" + Identifier(LastSegment(test[src].path));
      if (!taken.insert(name).second) {
        name += "_" + std::to_string(src);
        taken.insert(name);
      }
      location_var[src] = name;
    }

    out += "\n";
    for (const NeutralCall& c : test) {
      if (c.fault) {
        out += "    // Fault: " + c.verb + " " + c.path + " answered " +
               std::to_string(*c.expected_status) + "\n";
      }
    }
    out += "    @Test\n";
    out += junit5 ? "    void test" : "    public void test";
    out += std::to_string(t) + "() throws Exception {\n";
    for (const auto& [src, name] : location_var) out += "\n        String " + name + " = \"\";\n";

    size_t id_count = 0;
    for (size_t i = 0; i < test.size(); ++i) {
      const NeutralCall& c = test[i];
      const auto var = location_var.find(i);
      std::string id_var;
      out += "\n        ";
      if (var != location_var.end()) {
        id_var = "id_" + std::to_string(id_count++);
        out += "String " + id_var + " = ";
      }
      out += "given().accept(\"*/*\")\n";
      for (const auto& [name, value] : c.headers) {
        out += "                .header(" + JavaString(name) + ", " + JavaString(value) + ")";
        if (auth_names.count(name)) out += " // " + auth_label;
        out += "\n";
      }
      if (c.body) {
        out += "                .contentType(\"application/json\")\n";
        out += "                .body(" + JavaString(*c.body) + ")\n";
      }
      const std::string url =
          "baseUrlOfSut + " + JavaString(c.query.empty() ? c.path : c.path + "?" + c.query);
      out += "                ." + MethodName(c.verb) + "(";
      auto src_var = c.link_from ? location_var.find(*c.link_from) : location_var.end();
      if (src_var != location_var.end()) {
        out += "resolveLocation(" + src_var->second + ",\n                        " + url + ")";
      } else {
        out += url;
      }
      out += ")\n                .then()";
      if (c.expected_status) {
        out += "\n                .statusCode(" + std::to_string(*c.expected_status) + ")";
      } else {
        out += "; // timed out during generation, no status to check\n";
        continue;
      }
      if (var != location_var.end()) {
        if (ev.results[i].location_from_header) {
          out += "\n                .extract().header(\"Location\");\n";
          out += "\n        " + var->second + " = " + id_var + ";\n";
        } else {
          out += "\n                .extract().body().path(\"id\").toString();\n";
          out += "\n        " + var->second + " = " + JavaString(c.path + "/") + " + " + id_var +
                 ";\n";
        }
      } else {
        out += ";\n";
      }
    }
    out += "    }\n";
  }
  out += "}\n";
  return out;
}

std::vector<std::string> WriteSuite(const std::vector<EvaluatedIndividual>& suite,
                                    const ApiSchema& schema,
                                    const std::vector<AuthCredential>& credentials,
                                    OutputFormat format, const std::string& folder,
                                    const std::string& file_name, const std::string& base_url) {
  namespace fs = std::filesystem;
  if (file_name.empty() || file_name.find('/') != std::string::npos) {
    throw IoError("invalid test suite file name \"" + file_name + "\"");
  }
  std::error_code ec;
  fs::create_directories(folder, ec);
  if (ec || !fs::is_directory(folder) || access(folder.c_str(), W_OK) != 0) {
    throw IoError("output folder " + folder + " is not writable" +
                  (ec ? ": " + ec.message() : std::string()));
  }
  std::string text;
  std::string extension;
  if (format == OutputFormat::kNeutralJson) {
    text = WriteNeutralJson(ToNeutral(suite, schema, credentials));
    extension = ".json";
  } else {
    JavaOptions options;
    options.format = format;
    options.class_name = file_name;
    options.base_url = base_url;
    text = WriteJava(suite, schema, credentials, options);
    extension = ".java";
  }
  const std::string path = (fs::path(folder) / (file_name + extension)).string();
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) throw IoError("could not write " + path);
  return {path};
}

}  // namespace evorest
