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


#include "evorest/archive.h"

#include <algorithm>
#include <string>
#include <utility>

namespace evorest {

namespace {

std::string RenderedKey(const EvaluatedIndividual& ev, const ApiSchema& schema) {
  std::string key = ev.individual.auth_index ? std::to_string(*ev.individual.auth_index) : "-";
  for (const ConcreteHttpCall& call : Render(ev.individual, schema, {})) {
    key += '\n';
    key += VerbName(call.verb);
    key += ' ' + call.PathAndQuery();
    key += call.link_source ? " <" + std::to_string(*call.link_source) : std::string(" -");
    for (const auto& [name, value] : call.headers) key += '|' + name + ':' + value;
    key += '|' + call.body.value_or("");
  }
  return key;
}

}  // namespace

bool BetterMember(const ArchiveMember& a, const ArchiveMember& b) {
  if (a.h != b.h) return a.h > b.h;
  if (a.ev->size() != b.ev->size()) return a.ev->size() < b.ev->size();
  return a.discovery < b.discovery;
}

bool Archive::IsCovered(const TargetId& id) const {
  auto it = populations_.find(id);
  return it != populations_.end() && it->second.covered;
}

void Archive::Trim(size_t cap) {
  for (auto& [id, pop] : populations_) {
    if (pop.members.size() > cap) pop.members.resize(cap);
  }
}

void Archive::RefreshOpenTargets() {
  open_targets_.clear();
  for (const auto& [id, pop] : populations_) {
    if (!pop.covered && !pop.members.empty()) open_targets_.push_back(id);
  }
}

void Archive::Update(const EvaluatedIndividual& ev, size_t cap) {
  cap = std::max<size_t>(cap, 1);
  if (cap < last_cap_) Trim(cap);
  last_cap_ = cap;

  const uint64_t discovery = next_discovery_++;
  std::shared_ptr<const EvaluatedIndividual> shared;
  bool open_changed = false;
  for (const auto& [id, h] : ev.fitness.scores) {
    known_targets_.insert(id);
    if (h <= 0) continue;
    if (!shared) shared = std::make_shared<const EvaluatedIndividual>(ev);
    ArchiveMember member{shared, h, discovery};
    TargetPopulation& pop = populations_[id];
    if (pop.covered) {
      if (h >= 1 && ev.size() < pop.members.front().ev->size()) pop.members.front() = member;
      continue;
    }
    if (pop.members.empty()) open_changed = true;
    if (h >= 1) {
      pop.covered = true;
      ++covered_count_;
      pop.members.assign(1, member);
      open_changed = true;
      continue;
    }
    auto pos = std::upper_bound(pop.members.begin(), pop.members.end(), member, BetterMember);
    pop.members.insert(pos, member);
    if (pop.members.size() > cap) pop.members.resize(cap);
  }
  if (open_changed) RefreshOpenTargets();
}

std::vector<EvaluatedIndividual> ExtractSolution(const Archive& archive, const ApiSchema& schema) {
  std::vector<std::pair<std::string, const TargetPopulation*>> covered;
  std::vector<std::pair<std::string, const TargetPopulation*>> open;
  for (const auto& [id, pop] : archive.populations()) {
    if (pop.members.empty()) continue;
    (pop.covered ? covered : open).emplace_back(ToString(id), &pop);
  }
  std::sort(covered.begin(), covered.end());
  std::sort(open.begin(), open.end());

  std::vector<EvaluatedIndividual> suite;
  std::set<std::string> seen;
  for (const auto* group : {&covered, &open}) {
    for (const auto& [name, pop] : *group) {
      const EvaluatedIndividual& best = *pop->members.front().ev;
      if (seen.insert(RenderedKey(best, schema)).second) suite.push_back(best);
    }
  }
  return suite;
}

}  // namespace evorest
