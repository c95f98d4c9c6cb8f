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

#include "evorest/fitness.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "evorest/error.h"
#include "evorest/log.h"

namespace evorest {

std::string ToString(const TargetId& id) {
  switch (id.kind) {
    case TargetKind::kStatement: return "statement:" + id.name;
    case TargetKind::kBranch: return "branch:" + id.name;
    case TargetKind::kHttpStatus: return id.name;
  }
  return id.name;
}

bool EvaluatedIndividual::FaultRevealing() const {
  for (const ExecutionResult& r : results) {
    if (r.status && *r.status / 100 == 5) return true;
  }
  return false;
}

double NormalizeDistance(double d) {
  if (!std::isfinite(d) || d < 0) {
    throw ContractError("branch distance must be finite and non-negative, got " + std::to_string(d));
  }
  // d / (d + 1) evaluated as a chain of individually monotone rounded
  // operations, so the result is monotone in d, positive for d > 0 and
  // below 1 for every finite d.
  if (d == 0) return 0.0;
  if (d < 0x1p-1000) return d;  // 1/d would overflow; d/(d+1) == d here
  if (d < 1.0) return 1.0 / (1.0 + 1.0 / d);
  return std::min(1.0 - 1.0 / (d + 1.0), std::nextafter(1.0, 0.0));
}

double BranchHeuristic(double d) {
  NormalizeDistance(d);
  // Same value as 1 - d/(d+1), without the cancellation for large d. Tiny
  // positive distances must not round up to a covered branch.
  if (d == 0) return 1.0;
  return std::min(1.0 / (d + 1.0), std::nextafter(1.0, 0.0));
}

TargetId StatusTarget(int status_class, HttpVerb verb, const std::string& path) {
  return {TargetKind::kHttpStatus, "STATUS:" + std::to_string(status_class) + "xx:" +
                                       std::string(VerbName(verb)) + ":" + path};
}

FitnessValue StatusTargets(const std::vector<ExecutionResult>& results, const Individual& ind,
                           const ApiSchema& schema) {
  FitnessValue out;
  for (const ActionTemplate& tmpl : schema.templates) {
    const std::string path = TemplatePath(schema, tmpl);
    for (int c : {2, 4, 5}) out.scores[StatusTarget(c, tmpl.verb, path)] = 0.0;
  }
  for (size_t i = 0; i < results.size() && i < ind.size(); ++i) {
    if (!results[i].status) continue;
    const int c = *results[i].status / 100;
    if (c != 2 && c != 4 && c != 5) continue;
    const ActionTemplate& tmpl = schema.templates[ind.actions[i].template_index];
    out.scores[StatusTarget(c, tmpl.verb, TemplatePath(schema, tmpl))] = 1.0;
  }
  return out;
}

FitnessValue Merge(const CoverageReport& report, const FitnessValue& status_part) {
  FitnessValue out = status_part;
  std::unordered_map<std::string, CoverageKind> seen;
  for (const CoverageTarget& t : report.targets) {
    auto [it, inserted] = seen.emplace(t.id, t.kind);
    if (!inserted) {
      if (it->second != t.kind) {
        throw ProtocolError("target " + t.id + " reported as both statement and branch");
      }
      LogWarning("target " + t.id + " reported twice; keeping the last entry");
    }
    double h;
    TargetId id;
    id.name = t.id;
    if (t.kind == CoverageKind::kStatement) {
      id.kind = TargetKind::kStatement;
      h = t.covered ? 1.0 : 0.0;
    } else {
      id.kind = TargetKind::kBranch;
      if (t.covered) {
        h = 1.0;
      } else {
        if (!t.distance) throw ProtocolError("branch target " + t.id + " has no distance");
        h = BranchHeuristic(*t.distance);
      }
    }
    out.scores[id] = h;
  }
  return out;
}

}  // namespace evorest
