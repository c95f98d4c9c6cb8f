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


#include "evorest/evaluator.h"

#include <string>

#include "evorest/log.h"

namespace evorest {

EvaluatedIndividual RestEvaluator::Evaluate(const Individual& ind) {
  EvaluatedIndividual ev;
  ev.individual = ind;
  try {
    driver_.ResetState();
  } catch (const ProtocolError& e) {
    LogWarning(std::string("SUT reset failed, test left unscored: ") + e.what());
    return ev;
  }
  ev.results = executor_.Execute(ind);
  const CoverageReport report = driver_.GetCoverage("");
  ev.fitness = Merge(report, StatusTargets(ev.results, ind, schema_));
  return ev;
}

}  // namespace evorest
