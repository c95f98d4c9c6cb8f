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

#include "evorest/sim_sut.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "canned_specs.h"
#include "evorest/error.h"
#include "evorest/individual.h"
#include "httplib.h"

namespace evorest {

namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

// Distance reported for predicates over a missing or mistyped parameter.
constexpr double kMissingDistance = 1e9;

uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t Fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

SimResponse ReadResponse(const OJson& node) {
  SimResponse r;
  r.status = node.value("status", 200);
  if (node.contains("body")) r.body = Json::parse(node["body"].dump());
  if (r.status < 100 || r.status > 599) throw SchemaError("sim response status out of range");
  return r;
}

OJson WriteResponse(const SimResponse& r) {
  return OJson{{"status", r.status}, {"body", OJson::parse(r.body.dump())}};
}

const std::set<std::string>& KnownOps() {
  static const std::set<std::string> ops = {"eq", "ne", "lt", "le", "gt", "ge", "len_eq", "present"};
  return ops;
}

const std::set<std::string>& StoreOps() {
  static const std::set<std::string> ops = {"create", "get", "delete", "update", "list"};
  return ops;
}

struct Outcome {
  bool taken = false;
  double d_true = 0;   // distance to making the predicate true
  double d_false = 0;  // distance to making it false
};

Outcome Missing() { return {false, kMissingDistance, 0}; }

double StringDistance(const std::string& a, const std::string& b) {
  double d = std::fabs(static_cast<double>(a.size()) - static_cast<double>(b.size()));
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    d += std::fabs(static_cast<double>(static_cast<unsigned char>(a[i])) -
                   static_cast<double>(static_cast<unsigned char>(b[i])));
  }
  return d;
}

// Integer distances use the usual +1 offset for strict comparisons.
Outcome Compare(const std::string& op, const Json* actual, const Json& expected) {
  if (op == "present") {
    const bool present = actual != nullptr && !actual->is_null();
    return {present, present ? 0.0 : 1.0, present ? 1.0 : 0.0};
  }
  if (actual == nullptr || actual->is_null()) return Missing();
  if (op == "len_eq") {
    if (!actual->is_string() || !expected.is_number()) return Missing();
    const double d = std::fabs(static_cast<double>(actual->get_ref<const std::string&>().size()) -
                               expected.get<double>());
    return {d == 0, d, d == 0 ? 1.0 : 0.0};
  }
  if (op == "eq" || op == "ne") {
    double d;
    if (actual->is_number() && expected.is_number()) {
      d = std::fabs(actual->get<double>() - expected.get<double>());
    } else if (actual->is_string() && expected.is_string()) {
      d = StringDistance(actual->get<std::string>(), expected.get<std::string>());
    } else if (actual->is_boolean() && expected.is_boolean()) {
      d = actual->get<bool>() == expected.get<bool>() ? 0.0 : 1.0;
    } else {
      return Missing();
    }
    Outcome eq{d == 0, d, d == 0 ? 1.0 : 0.0};
    if (op == "eq") return eq;
    return {!eq.taken, eq.d_false, eq.d_true};
  }
  if (!actual->is_number() || !expected.is_number()) return Missing();
  const double a = actual->get<double>();
  const double b = expected.get<double>();
  auto less = [](double x, double y) {  // x < y
    return x < y ? Outcome{true, 0, y - x} : Outcome{false, x - y + 1, 0};
  };
  auto less_eq = [](double x, double y) {  // x <= y
    return x <= y ? Outcome{true, 0, y - x + 1} : Outcome{false, x - y, 0};
  };
  if (op == "lt") return less(a, b);
  if (op == "le") return less_eq(a, b);
  if (op == "gt") return less(b, a);
  return less_eq(b, a);  // ge
}

std::optional<Json> ParseScalar(const ParamSpec& spec, const std::string& text, std::string* error) {
  auto fail = [&](const std::string& why) -> std::optional<Json> {
    *error = "parameter " + spec.name + " " + why;
    return std::nullopt;
  };
  switch (spec.kind) {
    case ParamKind::kInt32:
    case ParamKind::kInt64: {
      int64_t v = 0;
      auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || end != text.data() + text.size()) return fail("is not an integer");
      if (spec.kind == ParamKind::kInt32 && (v < INT32_MIN || v > INT32_MAX)) {
        return fail("is out of int32 range");
      }
      return Json(v);
    }
    case ParamKind::kDouble: {
      char* end = nullptr;
      const double v = std::strtod(text.c_str(), &end);
      if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        return fail("is not a number");
      }
      return Json(v);
    }
    case ParamKind::kBoolean:
      if (text == "true") return Json(true);
      if (text == "false") return Json(false);
      return fail("is not a boolean");
    case ParamKind::kEnum:
      if (std::find(spec.enum_values.begin(), spec.enum_values.end(), text) ==
          spec.enum_values.end()) {
        return fail("is not one of the allowed values");
      }
      return Json(text);
    default:
      return Json(text);
  }
}

bool ValidateJson(const ParamSpec& spec, const Json& value, std::string* error) {
  auto fail = [&](const std::string& why) {
    *error = "field " + spec.name + " " + why;
    return false;
  };
  switch (spec.kind) {
    case ParamKind::kInt32:
      if (!value.is_number_integer()) return fail("must be an integer");
      if (value.get<int64_t>() < INT32_MIN || value.get<int64_t>() > INT32_MAX) {
        return fail("is out of int32 range");
      }
      return true;
    case ParamKind::kInt64:
      return value.is_number_integer() ? true : fail("must be an integer");
    case ParamKind::kDouble:
      return value.is_number() ? true : fail("must be a number");
    case ParamKind::kBoolean:
      return value.is_boolean() ? true : fail("must be a boolean");
    case ParamKind::kString:
    case ParamKind::kDateTime:
      return value.is_string() ? true : fail("must be a string");
    case ParamKind::kEnum:
      if (!value.is_string()) return fail("must be a string");
      if (std::find(spec.enum_values.begin(), spec.enum_values.end(), value.get<std::string>()) ==
          spec.enum_values.end()) {
        return fail("is not one of the allowed values");
      }
      return true;
    case ParamKind::kObject:
      if (!value.is_object()) return fail("must be an object");
      for (const ParamSpecPtr& field : spec.fields) {
        auto it = value.find(field->name);
        if (it == value.end() || it->is_null()) {
          if (field->required) return fail("lacks required field " + field->name);
          continue;
        }
        if (!ValidateJson(*field, *it, error)) return false;
      }
      return true;
    case ParamKind::kArray:
      if (!value.is_array()) return fail("must be an array");
      if (spec.element) {
        for (const Json& e : value) {
          if (!ValidateJson(*spec.element, e, error)) return false;
        }
      }
      return true;
    case ParamKind::kFile:
      return true;
  }
  return true;
}

std::vector<std::string> SplitSegments(std::string_view path) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    if (next > pos) out.push_back(UrlDecode(path.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::map<std::string, std::string> ParseQuery(std::string_view query) {
  std::map<std::string, std::string> out;
  size_t pos = 0;
  while (pos < query.size()) {
    size_t next = query.find('&', pos);
    if (next == std::string_view::npos) next = query.size();
    std::string_view pair = query.substr(pos, next - pos);
    if (!pair.empty()) {
      const size_t eq = pair.find('=');
      if (eq == std::string_view::npos) out[UrlDecode(pair)] = "";
      else out[UrlDecode(pair.substr(0, eq))] = UrlDecode(pair.substr(eq + 1));
    }
    pos = next + 1;
  }
  return out;
}

HttpResponse JsonResponse(int status, const Json& body) {
  HttpResponse r;
  r.status = status;
  if (status != 204) {
    r.body = body.dump();
    r.headers.emplace_back("Content-Type", "application/json");
  }
  return r;
}

HttpResponse ErrorResponse(int status, const std::string& message) {
  return JsonResponse(status, Json{{"error", message}});
}

}  // namespace

SimSpec ParseSimSpec(std::string_view json_text) {
  OJson root;
  try {
    root = OJson::parse(json_text);
  } catch (const OJson::parse_error& e) {
    throw ParseError(std::string("malformed sim spec: ") + e.what(), e.byte);
  }
  if (!root.is_object()) throw SchemaError("sim spec must be an object");
  SimSpec spec;
  spec.title = root.value("title", "sim");
  spec.base_path = root.value("basePath", "");
  while (!spec.base_path.empty() && spec.base_path.back() == '/') spec.base_path.pop_back();
  if (root.contains("definitions")) spec.definitions = root["definitions"];
  if (root.contains("auth")) {
    for (const OJson& a : root["auth"]) {
      AuthCredential cred;
      cred.label = a.value("label", "");
      for (const OJson& h : a.value("headers", OJson::array())) {
        cred.headers.emplace_back(h.at("name").get<std::string>(), h.at("value").get<std::string>());
      }
      if (cred.headers.empty()) throw SchemaError("credential " + cred.label + " has no headers");
      spec.auth.push_back(std::move(cred));
    }
  }
  if (!root.contains("endpoints") || !root["endpoints"].is_array()) {
    throw SchemaError("sim spec needs an \"endpoints\" array");
  }
  std::set<std::string> statements;
  std::set<std::pair<std::string, std::string>> routes;
  auto claim = [&](const std::string& name) {
    if (name.empty()) return;
    if (!statements.insert(name).second) throw SchemaError("duplicate statement label " + name);
  };
  for (const OJson& e : root["endpoints"]) {
    SimEndpoint ep;
    const auto verb = ParseVerb(e.value("verb", ""));
    if (!verb) throw SchemaError("endpoint with unknown verb " + e.value("verb", ""));
    ep.verb = *verb;
    ep.path = e.value("path", "");
    if (ep.path.empty() || ep.path.front() != '/') throw SchemaError("endpoint path must start with /");
    if (!routes.insert({std::string(VerbName(ep.verb)), ep.path}).second) {
      throw SchemaError("duplicate endpoint " + std::string(VerbName(ep.verb)) + " " + ep.path);
    }
    if (e.contains("parameters")) ep.parameters = e["parameters"];
    if (e.contains("responses")) ep.responses = e["responses"];
    ep.requires_auth = e.value("requiresAuth", false);
    ep.delay_ms = e.value("delayMs", 0);
    for (const OJson& s : e.value("steps", OJson::array())) {
      SimStep step;
      step.label = s.value("label", "");
      if (s.contains("when")) {
        const OJson& w = s["when"];
        SimPredicate p{w.value("op", ""), w.value("param", ""), Json()};
        if (!KnownOps().count(p.op)) throw SchemaError("unknown predicate op " + p.op);
        if (p.param.empty()) throw SchemaError("predicate without param in step " + step.label);
        if (w.contains("value")) p.value = Json::parse(w["value"].dump());
        if (step.label.empty()) throw SchemaError("guarded step needs a label");
        claim(step.label + "_true");
        claim(step.label + "_false");
        step.when = std::move(p);
      }
      step.statement = s.value("statement", "");
      claim(step.statement);
      if (s.contains("respond")) step.respond = ReadResponse(s["respond"]);
      if (s.contains("else")) {
        step.else_statement = s["else"].value("statement", "");
        claim(step.else_statement);
        if (s["else"].contains("respond")) step.else_respond = ReadResponse(s["else"]["respond"]);
      }
      ep.steps.push_back(std::move(step));
    }
    if (e.contains("store")) {
      SimStoreOp store{e["store"].value("name", ""), e["store"].value("op", ""),
                       e["store"].value("idParam", "")};
      if (store.name.empty() || !StoreOps().count(store.op)) {
        throw SchemaError("invalid store operation on " + ep.path);
      }
      ep.store = std::move(store);
    }
    spec.endpoints.push_back(std::move(ep));
  }
  return spec;
}

std::string SimSpecToJson(const SimSpec& spec) {
  OJson root;
  root["title"] = spec.title;
  root["basePath"] = spec.base_path;
  root["definitions"] = spec.definitions;
  OJson auth = OJson::array();
  for (const AuthCredential& cred : spec.auth) {
    OJson headers = OJson::array();
    for (const auto& [n, v] : cred.headers) headers.push_back({{"name", n}, {"value", v}});
    auth.push_back({{"label", cred.label}, {"headers", headers}});
  }
  root["auth"] = auth;
  OJson endpoints = OJson::array();
  for (const SimEndpoint& ep : spec.endpoints) {
    OJson e;
    e["verb"] = std::string(VerbName(ep.verb));
    e["path"] = ep.path;
    e["parameters"] = ep.parameters;
    e["responses"] = ep.responses;
    e["requiresAuth"] = ep.requires_auth;
    e["delayMs"] = ep.delay_ms;
    OJson steps = OJson::array();
    for (const SimStep& s : ep.steps) {
      OJson step;
      if (!s.label.empty()) step["label"] = s.label;
      if (s.when) {
        step["when"] = {{"op", s.when->op}, {"param", s.when->param},
                        {"value", OJson::parse(s.when->value.dump())}};
      }
      if (!s.statement.empty()) step["statement"] = s.statement;
      if (s.respond) step["respond"] = WriteResponse(*s.respond);
      if (!s.else_statement.empty() || s.else_respond) {
        OJson otherwise = OJson::object();
        if (!s.else_statement.empty()) otherwise["statement"] = s.else_statement;
        if (s.else_respond) otherwise["respond"] = WriteResponse(*s.else_respond);
        step["else"] = otherwise;
      }
      steps.push_back(step);
    }
    e["steps"] = steps;
    if (ep.store) {
      e["store"] = {{"name", ep.store->name}, {"op", ep.store->op}, {"idParam", ep.store->id_param}};
    }
    endpoints.push_back(e);
  }
  root["endpoints"] = endpoints;
  return root.dump(2);
}

std::vector<std::string> CannedSpecNames() { return {"crud-chain", "needle", "faulty"}; }

std::string CannedSpecJson(std::string_view name) {
  const std::optional<std::string_view> text = internal::EmbeddedFixture(name);
  if (!text) throw ConfigError("unknown sim spec " + std::string(name));
  return std::string(*text);
}

SimSpec CannedSpec(std::string_view name) { return ParseSimSpec(CannedSpecJson(name)); }

std::string GenerateSwagger(const SimSpec& spec) {
  OJson doc;
  doc["swagger"] = "2.0";
  doc["info"] = {{"title", spec.title}, {"version", "1.0.0"}};
  doc["basePath"] = spec.base_path.empty() ? "/" : spec.base_path;
  doc["consumes"] = {"application/json"};
  doc["produces"] = {"application/json"};
  OJson paths = OJson::object();
  for (const SimEndpoint& ep : spec.endpoints) {
    std::string verb(VerbName(ep.verb));
    std::transform(verb.begin(), verb.end(), verb.begin(), [](char c) { return std::tolower(c); });
    OJson op;
    op["parameters"] = ep.parameters;
    op["responses"] = ep.responses.empty() ? OJson{{"200", {{"description", "OK"}}}} : ep.responses;
    paths[ep.path][verb] = op;
  }
  doc["paths"] = paths;
  doc["definitions"] = spec.definitions;
  return doc.dump(2);
}

// ---------------------------------------------------------------------------

struct SimSut::State {
  struct Event {
    std::string id;
    CoverageKind kind;
    bool covered;
    double distance;
  };

  bool running = false;
  uint64_t epoch = 0;
  std::vector<Event> events;
  std::map<std::string, std::map<int64_t, Json>> stores;
  std::map<std::string, uint64_t> counters;
  bool record_calls = false;
  std::vector<std::string> calls;
};

SimSut::SimSut(SimSpec spec, uint64_t seed)
    : spec_(std::move(spec)), seed_(seed), state_(std::make_unique<State>()) {
  swagger_ = GenerateSwagger(spec_);
  schema_ = ParseSchema(swagger_);
  for (const SimEndpoint& ep : spec_.endpoints) {
    ActionTemplate probe;
    probe.path = SplitPathTemplate(ep.path);
    const auto index = schema_.Find(ep.verb, probe.PathString());
    if (!index) throw SchemaError("endpoint " + ep.path + " missing from generated schema");
    template_of_endpoint_.push_back(*index);
  }
}

SimSut::~SimSut() = default;

void SimSut::set_base_url(std::string url) {
  std::lock_guard<std::mutex> lock(mu_);
  base_url_ = std::move(url);
}

bool SimSut::running() const {
  std::lock_guard<std::mutex> lock(mu_);
  return state_->running;
}

void SimSut::set_record_calls(bool on) {
  std::lock_guard<std::mutex> lock(mu_);
  state_->record_calls = on;
}

std::vector<std::string> SimSut::call_log() const {
  std::lock_guard<std::mutex> lock(mu_);
  return state_->calls;
}

SutInfo SimSut::Info() const {
  SutInfo info;
  info.is_sut_running = state_->running;
  info.base_url_of_sut = base_url_;
  info.swagger_json_url = base_url_ + "/swagger.json";
  info.package_prefixes = "sim." + spec_.title;
  info.auth_info = spec_.auth;
  return info;
}

std::pair<HttpResponse, int> SimSut::HandleWithDelay(const HttpRequest& request) {
  std::lock_guard<std::mutex> lock(mu_);
  const auto [host, target] = SplitUrl(request.url);
  std::string_view path = target;
  std::string_view query;
  if (size_t q = path.find('?'); q != std::string_view::npos) {
    query = path.substr(q + 1);
    path = path.substr(0, q);
  }
  if (path.rfind("/controller/", 0) == 0) return {HandleController(request, path, query), 0};
  if (path == "/swagger.json" && request.method == "GET") {
    HttpResponse r;
    r.status = 200;
    r.body = swagger_;
    r.headers.emplace_back("Content-Type", "application/json");
    return {r, 0};
  }
  return HandleApi(request, path, query);
}

HttpResponse SimSut::HandleController(const HttpRequest& request, std::string_view path,
                                      std::string_view query) {
  State& st = *state_;
  if (path == kInfoPath && request.method == "GET") {
    HttpResponse r = JsonResponse(200, Json());
    r.body = EncodeSutInfo(Info());
    return r;
  }
  if (path == kSutPath && request.method == "POST") {
    const Json body = Json::parse(request.body.value_or(""), nullptr, false);
    if (!body.is_object() || !body.contains("running") || !body["running"].is_boolean()) {
      return ErrorResponse(400, "expected {\"running\": true|false}");
    }
    const bool run = body["running"].get<bool>();
    if (run && !st.running) {
      st.running = true;
      st.stores.clear();
      st.counters.clear();
      ++st.epoch;
      st.events.clear();
    } else if (!run) {
      st.running = false;
    }
    HttpResponse r = JsonResponse(200, Json());
    r.body = EncodeSutInfo(Info());
    return r;
  }
  if (path == kResetPath && request.method == "POST") {
    if (!st.running) return ErrorResponse(409, "SUT is not running");
    st.stores.clear();
    st.counters.clear();
    ++st.epoch;
    st.events.clear();
    return JsonResponse(200, Json::object());
  }
  if (path == kTargetsPath && request.method == "GET") {
    if (!st.running) return ErrorResponse(409, "SUT is not running");
    const auto params = ParseQuery(query);
    size_t from = 0;
    if (auto it = params.find("since"); it != params.end()) {
      const std::string& marker = it->second;
      const size_t colon = marker.find(':');
      if (colon != std::string::npos) {
        uint64_t epoch = 0;
        size_t seq = 0;
        auto r1 = std::from_chars(marker.data(), marker.data() + colon, epoch);
        auto r2 = std::from_chars(marker.data() + colon + 1, marker.data() + marker.size(), seq);
        if (r1.ec == std::errc() && r2.ec == std::errc() && epoch == st.epoch &&
            seq <= st.events.size()) {
          from = seq;
        }
      }
    }
    std::map<std::string, CoverageTarget> merged;
    for (size_t i = from; i < st.events.size(); ++i) {
      const State::Event& ev = st.events[i];
      auto [it, inserted] = merged.try_emplace(ev.id);
      CoverageTarget& t = it->second;
      if (inserted) {
        t.id = ev.id;
        t.kind = ev.kind;
      }
      if (ev.covered) {
        t.covered = true;
        t.distance.reset();
      } else if (!t.covered) {
        t.distance = t.distance ? std::min(*t.distance, ev.distance) : ev.distance;
      }
    }
    CoverageReport report;
    report.marker = std::to_string(st.epoch) + ":" + std::to_string(st.events.size());
    for (auto& [id, t] : merged) report.targets.push_back(std::move(t));
    HttpResponse r = JsonResponse(200, Json());
    r.body = EncodeCoverage(report);
    return r;
  }
  return ErrorResponse(404, "unknown controller endpoint");
}

std::pair<HttpResponse, int> SimSut::HandleApi(const HttpRequest& request, std::string_view path,
                                               std::string_view query) {
  State& st = *state_;
  if (!st.running) return {ErrorResponse(503, "SUT is not running"), 0};
  if (!spec_.base_path.empty()) {
    if (path.rfind(spec_.base_path, 0) != 0) return {ErrorResponse(404, "no such resource"), 0};
    path = path.substr(spec_.base_path.size());
  }
  const std::vector<std::string> segments = SplitSegments(path);
  const std::optional<HttpVerb> verb = ParseVerb(request.method);

  // Most literal segments wins among matching routes.
  int best = -1;
  int best_literals = -1;
  for (size_t i = 0; i < spec_.endpoints.size(); ++i) {
    const ActionTemplate& tmpl = schema_.templates[template_of_endpoint_[i]];
    if (!verb || tmpl.verb != *verb || tmpl.path.size() != segments.size()) continue;
    int literals = 0;
    bool match = true;
    for (size_t s = 0; s < segments.size() && match; ++s) {
      if (tmpl.path[s].placeholder) continue;
      if (tmpl.path[s].text != segments[s]) match = false;
      else ++literals;
    }
    if (match && literals > best_literals) {
      best = static_cast<int>(i);
      best_literals = literals;
    }
  }
  if (best < 0) return {ErrorResponse(404, "no such resource"), 0};
  const SimEndpoint& ep = spec_.endpoints[static_cast<size_t>(best)];
  const ActionTemplate& tmpl = schema_.templates[template_of_endpoint_[static_cast<size_t>(best)]];
  if (st.record_calls) st.calls.push_back(request.method + " " + std::string(path));
  const int delay = ep.delay_ms;

  if (ep.requires_auth) {
    bool ok = false;
    for (const AuthCredential& cred : spec_.auth) {
      ok = std::all_of(cred.headers.begin(), cred.headers.end(), [&](const Header& h) {
        const auto got = FindHeader(request.headers, h.first);
        return got && *got == h.second;
      });
      if (ok) break;
    }
    if (!ok) return {ErrorResponse(401, "missing or invalid credentials"), delay};
  }

  // Bind and validate parameters.
  std::map<std::string, Json> values;
  std::string error;
  size_t placeholder = 0;
  for (size_t s = 0; s < tmpl.path.size(); ++s) {
    if (!tmpl.path[s].placeholder) continue;
    const ParamSpec& spec = *tmpl.path_params[placeholder++];
    auto v = ParseScalar(spec, segments[s], &error);
    if (!v) return {ErrorResponse(400, error), delay};
    values[spec.name] = std::move(*v);
  }
  const auto query_values = ParseQuery(query);
  for (const ParamSpecPtr& spec : tmpl.query_params) {
    auto it = query_values.find(spec->name);
    if (it == query_values.end()) {
      if (spec->required) return {ErrorResponse(400, "missing query parameter " + spec->name), delay};
      continue;
    }
    auto v = ParseScalar(*spec, it->second, &error);
    if (!v) return {ErrorResponse(400, error), delay};
    values[spec->name] = std::move(*v);
  }
  for (const ParamSpecPtr& spec : tmpl.header_params) {
    auto got = FindHeader(request.headers, spec->name);
    if (!got) {
      if (spec->required) return {ErrorResponse(400, "missing header " + spec->name), delay};
      continue;
    }
    auto v = ParseScalar(*spec, *got, &error);
    if (!v) return {ErrorResponse(400, error), delay};
    values[spec->name] = std::move(*v);
  }
  Json body;
  if (tmpl.body_spec) {
    if (!request.body || request.body->empty()) {
      if (tmpl.body_spec->required) return {ErrorResponse(400, "missing request body"), delay};
    } else {
      body = Json::parse(*request.body, nullptr, false);
      if (body.is_discarded()) return {ErrorResponse(400, "request body is not JSON"), delay};
      if (!ValidateJson(*tmpl.body_spec, body, &error)) return {ErrorResponse(400, error), delay};
    }
  }

  auto lookup = [&](const std::string& name) -> const Json* {
    if (auto it = values.find(name); it != values.end()) return &it->second;
    const Json* node = &body;
    size_t pos = 0;
    while (pos <= name.size()) {
      size_t dot = name.find('.', pos);
      if (dot == std::string::npos) dot = name.size();
      if (!node->is_object()) return nullptr;
      auto it = node->find(name.substr(pos, dot - pos));
      if (it == node->end()) return nullptr;
      node = &*it;
      pos = dot + 1;
    }
    return node;
  };
  auto hit = [&](const std::string& statement) {
    if (!statement.empty()) st.events.push_back({statement, CoverageKind::kStatement, true, 0});
  };

  for (const SimStep& step : ep.steps) {
    bool taken = true;
    if (step.when) {
      const Outcome o = Compare(step.when->op, lookup(step.when->param), step.when->value);
      taken = o.taken;
      st.events.push_back({step.label + "_true", CoverageKind::kBranch, o.taken, o.d_true});
      st.events.push_back({step.label + "_false", CoverageKind::kBranch, !o.taken, o.d_false});
    }
    if (taken) {
      hit(step.statement);
      if (step.respond) return {JsonResponse(step.respond->status, step.respond->body), delay};
    } else {
      hit(step.else_statement);
      if (step.else_respond) {
        return {JsonResponse(step.else_respond->status, step.else_respond->body), delay};
      }
    }
  }

  if (!ep.store) return {JsonResponse(200, Json::object()), delay};

  const SimStoreOp& op = *ep.store;
  auto& store = st.stores[op.name];
  const std::string where = std::string(VerbName(ep.verb)) + ":" + ep.path + ":";
  if (op.op == "create") {
    const uint64_t n = st.counters[op.name]++;
    const auto id = static_cast<int64_t>(
        100000000 + SplitMix64(seed_ ^ Fnv1a(op.name) ^ (n * 0x2545f4914f6cdd1dULL)) % 900000000);
    Json stored = body.is_object() ? body : Json::object();
    stored["id"] = id;
    store[id] = stored;
    hit(where + "created");
    return {JsonResponse(200, stored), delay};
  }
  if (op.op == "list") {
    Json all = Json::array();
    for (const auto& [id, item] : store) all.push_back(item);
    hit(where + (store.empty() ? "empty" : "listed"));
    return {JsonResponse(200, all), delay};
  }
  std::string id_name = op.id_param;
  if (id_name.empty() && !tmpl.path_params.empty()) id_name = tmpl.path_params.back()->name;
  const Json* id_value = lookup(id_name);
  const auto found = id_value && id_value->is_number_integer()
                         ? store.find(id_value->get<int64_t>())
                         : store.end();
  if (found == store.end()) {
    hit(where + "missing");
    return {ErrorResponse(404, "not found"), delay};
  }
  if (op.op == "get") {
    hit(where + "found");
    return {JsonResponse(200, found->second), delay};
  }
  if (op.op == "delete") {
    store.erase(found);
    hit(where + "deleted");
    return {JsonResponse(204, Json()), delay};
  }
  hit(where + "updated");
  return {JsonResponse(204, Json()), delay};
}

std::unique_ptr<HttpTransport> SimSut::MakeTransport() {
  return std::make_unique<FunctionTransport>(
      [this](const HttpRequest& request, std::chrono::milliseconds timeout) {
        auto [response, delay] = HandleWithDelay(request);
        if (std::chrono::milliseconds(delay) > timeout) {
          throw TransportError(TransportError::Kind::kTimeout,
                               request.method + " " + request.url + " timed out");
        }
        return response;
      });
}

// ---------------------------------------------------------------------------

struct SimServer::Impl {
  httplib::Server server;
  std::thread thread;
};

SimServer::SimServer(SimSut& sut, int port) : impl_(std::make_unique<Impl>()) {
  impl_->server.set_keep_alive_max_count(1000000);
  // Catch-all routes rather than a pre-routing hook, so request bodies are
  // already read when the handler runs.
  const auto handler = [&sut](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.url = sut.base_url() + req.target;
    for (const auto& [name, value] : req.headers) request.headers.emplace_back(name, value);
    if (!req.body.empty()) request.body = req.body;
    auto [response, delay] = sut.HandleWithDelay(request);
    if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    res.status = response.status;
    std::string content_type = "application/json";
    for (const auto& [name, value] : response.headers) {
      if (strcasecmp(name.c_str(), "Content-Type") == 0) content_type = value;
      else res.set_header(name, value);
    }
    if (!response.body.empty()) res.set_content(response.body, content_type);
  };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
  impl_->server.Patch(".*", handler);
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port("127.0.0.1");
    if (port_ <= 0) throw IoError("cannot bind an ephemeral port on 127.0.0.1");
  } else {
    if (!impl_->server.bind_to_port("127.0.0.1", port)) {
      throw IoError("cannot bind 127.0.0.1:" + std::to_string(port));
    }
    port_ = port;
  }
  sut.set_base_url(url());
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

SimServer::~SimServer() { Stop(); }

void SimServer::Stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string SimServer::url() const { return "http://127.0.0.1:" + std::to_string(port_); }

}  // namespace evorest
