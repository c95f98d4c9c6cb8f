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


// MIO search and the random-sampling baseline.

#ifndef EVOREST_SEARCH_H_
#define EVOREST_SEARCH_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evorest/archive.h"
#include "evorest/fitness.h"
#include "evorest/individual.h"
#include "evorest/rng.h"
#include "evorest/schema.h"

namespace evorest {

enum class Algorithm { kMio, kRandom };

struct SearchConfig {
  int64_t max_time_seconds = 60;
  // When set, the budget is this many evaluations and wall-clock time is
  // ignored, which makes runs reproducible.
  std::optional<int64_t> max_evaluations;
  double p_random_start = 0.5;
  int64_t population_per_target_start = 10;
  double focus_fraction = 0.5;
  int64_t max_test_size = static_cast<int64_t>(kDefaultMaxTestSize);
  uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kMio;
};

// Throws ConfigError when a field is out of range.
void ValidateSearchConfig(const SearchConfig& config);

// Runs one test against the SUT and scores it.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual EvaluatedIndividual Evaluate(const Individual& ind) = 0;
  // Number of credentials the individuals may choose from.
  virtual size_t auth_count() const = 0;
};

// P_r(t) = p_random_start * max(0, 1 - t / focus_fraction).
double RandomSamplingProbability(const SearchConfig& config, double t);
// n(t) = max(1, round(population_per_target_start * (1 - t / focus_fraction))).
size_t PopulationCap(const SearchConfig& config, double t);

// Next individual to evaluate; `t` is the consumed fraction of the budget.
// RANDOM never looks at the archive.
Individual SampleNext(const Archive& archive, const ApiSchema& schema, const SearchConfig& config,
                      const GenomeConfig& genome, double t, Rng& rng);

struct SearchStats {
  int64_t evaluations = 0;
  size_t covered_targets = 0;
  size_t total_targets = 0;
  // Distinct endpoint 5xx status targets reached.
  size_t faults_5xx = 0;
  int64_t elapsed_ms = 0;
  uint64_t seed = 0;

  std::string ToJson() const;
};

struct SearchResult {
  std::vector<EvaluatedIndividual> suite;
  SearchStats stats;
  // Set when the run stopped early because the SUT or its driver went away.
  std::optional<std::string> aborted;
};

// Loops sample, evaluate, update until the budget runs out or `stop` turns
// true, then extracts the suite.
SearchResult RunSearch(const ApiSchema& schema, Evaluator& evaluator, const SearchConfig& config,
                       const std::atomic<bool>* stop = nullptr);

}  // namespace evorest

#endif  // EVOREST_SEARCH_H_
