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


// MIO archive: a bounded population of the best individuals per testing
// target. Populations are kept sorted by (h desc, size asc, discovery asc).
// A covered target keeps exactly one member, its smallest covering test.

#ifndef EVOREST_ARCHIVE_H_
#define EVOREST_ARCHIVE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "evorest/fitness.h"
#include "evorest/schema.h"

namespace evorest {

struct ArchiveMember {
  std::shared_ptr<const EvaluatedIndividual> ev;
  double h = 0;
  uint64_t discovery = 0;  // evaluation order, earlier is better on ties
};

struct TargetPopulation {
  bool covered = false;
  std::vector<ArchiveMember> members;
};

class Archive {
 public:
  // Folds one evaluation into every target it scores. `cap` is the current
  // population limit n(t); populations above it are trimmed first.
  void Update(const EvaluatedIndividual& ev, size_t cap);

  const std::map<TargetId, TargetPopulation>& populations() const { return populations_; }
  bool IsCovered(const TargetId& id) const;
  size_t covered_count() const { return covered_count_; }
  // Every target some evaluation reported, scored or not.
  size_t total_targets() const { return known_targets_.size(); }
  // Uncovered targets with at least one member, in TargetId order.
  const std::vector<TargetId>& open_targets() const { return open_targets_; }

 private:
  void Trim(size_t cap);
  void RefreshOpenTargets();

  std::map<TargetId, TargetPopulation> populations_;
  std::set<TargetId> known_targets_;
  std::vector<TargetId> open_targets_;
  size_t covered_count_ = 0;
  size_t last_cap_ = SIZE_MAX;
  uint64_t next_discovery_ = 0;
};

// True when `a` ranks before `b` in a population.
bool BetterMember(const ArchiveMember& a, const ArchiveMember& b);

// One best individual per covered target, then one per uncovered target
// with members; targets visited by name, duplicates (equal rendered calls)
// dropped.
std::vector<EvaluatedIndividual> ExtractSolution(const Archive& archive, const ApiSchema& schema);

}  // namespace evorest

#endif  // EVOREST_ARCHIVE_H_
