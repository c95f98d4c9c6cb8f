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

// Heuristic scores per testing target. Every target gets h in [0, 1];
// h == 1 means covered. Statements are binary, branches are graded by their
// distance, and each (status class, verb, path) triple is a target of its own.

#ifndef EVOREST_FITNESS_H_
#define EVOREST_FITNESS_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evorest/individual.h"
#include "evorest/protocol.h"
#include "evorest/schema.h"

namespace evorest {

enum class TargetKind { kStatement, kBranch, kHttpStatus };

struct TargetId {
  TargetKind kind = TargetKind::kStatement;
  std::string name;

  auto operator<=>(const TargetId&) const = default;
};

std::string ToString(const TargetId& id);

struct FitnessValue {
  std::map<TargetId, double> scores;

  double Get(const TargetId& id) const {
    auto it = scores.find(id);
    return it == scores.end() ? 0.0 : it->second;
  }
  bool operator==(const FitnessValue&) const = default;
};

inline constexpr size_t kBodyExcerptBytes = 2048;

struct ExecutionResult {
  std::optional<int> status;  // absent when the call timed out
  bool timed_out = false;
  std::string body_excerpt;
  std::optional<std::string> extracted_location;
  bool location_from_header = false;
  int64_t elapsed_ms = 0;
};

struct EvaluatedIndividual {
  Individual individual;
  FitnessValue fitness;
  std::vector<ExecutionResult> results;

  size_t size() const { return individual.size(); }
  // Some call answered with a 5xx status.
  bool FaultRevealing() const;
};

// d / (d + 1). Throws ContractError for negative or non-finite d.
double NormalizeDistance(double d);

// 1 - NormalizeDistance(d); 1 exactly when the branch was taken (d == 0).
double BranchHeuristic(double d);

// "STATUS:<c>xx:<VERB>:<path>".
TargetId StatusTarget(int status_class, HttpVerb verb, const std::string& path);

// One target per (class in {2, 4, 5}, template). Executed calls set the
// target of their status class to 1, everything else stays 0.
FitnessValue StatusTargets(const std::vector<ExecutionResult>& results, const Individual& ind,
                           const ApiSchema& schema);

// Folds a driver coverage report into the status scores. Duplicate ids of
// the same kind: the last entry wins and a warning is logged. The same id
// reported with two kinds is a ProtocolError.
FitnessValue Merge(const CoverageReport& report, const FitnessValue& status_part);

}  // namespace evorest

#endif  // EVOREST_FITNESS_H_
