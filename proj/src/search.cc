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


#include "evorest/search.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "evorest/error.h"
#include "evorest/executor.h"
#include "json.hpp"

namespace evorest {

namespace {

double Decay(const SearchConfig& config, double t) {
  return std::max(0.0, 1.0 - t / config.focus_fraction);
}

}  // namespace

void ValidateSearchConfig(const SearchConfig& config) {
  if (config.max_time_seconds < 0) throw ConfigError("max time must be >= 0 seconds");
  if (config.max_evaluations && *config.max_evaluations < 0) {
    throw ConfigError("max evaluations must be >= 0");
  }
  if (!(config.p_random_start >= 0 && config.p_random_start <= 1)) {
    throw ConfigError("random sampling probability must lie in [0, 1]");
  }
  if (config.population_per_target_start < 1) throw ConfigError("population size must be >= 1");
  if (!(config.focus_fraction > 0 && config.focus_fraction <= 1)) {
    throw ConfigError("focused search activation time must lie in (0, 1]");
  }
  if (config.max_test_size < 1) throw ConfigError("max test size must be >= 1");
}

double RandomSamplingProbability(const SearchConfig& config, double t) {
  return config.p_random_start * Decay(config, t);
}

size_t PopulationCap(const SearchConfig& config, double t) {
  const double n =
      std::round(static_cast<double>(config.population_per_target_start) * Decay(config, t));
  return std::max<size_t>(1, static_cast<size_t>(n));
}

Individual SampleNext(const Archive& archive, const ApiSchema& schema, const SearchConfig& config,
                      const GenomeConfig& genome, double t, Rng& rng) {
  if (config.algorithm == Algorithm::kRandom) return SampleIndividual(schema, genome, rng);
  const auto& open = archive.open_targets();
  if (open.empty() || rng.Bernoulli(RandomSamplingProbability(config, t))) {
    return SampleIndividual(schema, genome, rng);
  }
  const TargetPopulation& pop = archive.populations().at(open[rng.Index(open.size())]);
  const ArchiveMember& parent = pop.members[rng.Index(pop.members.size())];
  return MutateIndividual(parent.ev->individual, schema, genome, rng);
}

std::string SearchStats::ToJson() const {
  nlohmann::ordered_json j;
  j["evaluations"] = evaluations;
  j["covered_targets"] = covered_targets;
  j["total_targets"] = total_targets;
  j["faults_5xx"] = faults_5xx;
  j["elapsed_ms"] = elapsed_ms;
  j["seed"] = seed;
  return j.dump();
}

SearchResult RunSearch(const ApiSchema& schema, Evaluator& evaluator, const SearchConfig& config,
                       const std::atomic<bool>* stop) {
  ValidateSearchConfig(config);
  if (schema.templates.empty()) throw ConfigError("the schema has no operations to test");
  const auto start = std::chrono::steady_clock::now();
  const auto budget_ms = static_cast<double>(config.max_time_seconds) * 1000.0;
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  GenomeConfig genome;
  genome.max_test_size = static_cast<size_t>(config.max_test_size);
  genome.auth_count = evaluator.auth_count();

  Rng rng(config.seed);
  Archive archive;
  SearchResult result;
  int64_t evaluations = 0;
  while (!(stop && stop->load())) {
    double t;
    if (config.max_evaluations) {
      if (evaluations >= *config.max_evaluations) break;
      t = static_cast<double>(evaluations) / static_cast<double>(*config.max_evaluations);
    } else {
      const double now = elapsed_ms();
      if (now >= budget_ms) break;
      t = now / budget_ms;
    }
    const Individual ind = SampleNext(archive, schema, config, genome, t, rng);
    EvaluatedIndividual ev;
    try {
      ev = evaluator.Evaluate(ind);
    } catch (const SutDownError& e) {
      result.aborted = e.what();
      break;
    } catch (const DriverUnreachableError& e) {
      result.aborted = e.what();
      break;
    }
    ++evaluations;
    archive.Update(ev, PopulationCap(config, t));
  }

  result.suite = ExtractSolution(archive, schema);
  result.stats.evaluations = evaluations;
  result.stats.covered_targets = archive.covered_count();
  result.stats.total_targets = archive.total_targets();
  for (const auto& [id, pop] : archive.populations()) {
    if (pop.covered && id.kind == TargetKind::kHttpStatus && id.name.rfind("STATUS:5xx:", 0) == 0) {
      ++result.stats.faults_5xx;
    }
  }
  result.stats.elapsed_ms = static_cast<int64_t>(elapsed_ms());
  result.stats.seed = config.seed;
  return result;
}

}  // namespace evorest
