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

// Test cases: ordered REST actions over an ApiSchema, their random sampling,
// mutation, and rendering to concrete HTTP calls.

#ifndef EVOREST_INDIVIDUAL_H_
#define EVOREST_INDIVIDUAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evorest/gene.h"
#include "evorest/http_call.h"
#include "evorest/rng.h"
#include "evorest/schema.h"

namespace evorest {

inline constexpr size_t kDefaultMaxTestSize = 10;

enum class ParamIn { kPath, kQuery, kHeader, kBody };

struct ActionParam {
  ParamIn in;
  Gene gene;

  bool operator==(const ActionParam&) const = default;
};

// Binds an action's resource id to the location returned by an earlier
// creation call in the same test.
struct ResourceLink {
  size_t source_action_index = 0;

  bool operator==(const ResourceLink&) const = default;
};

struct RestAction {
  size_t template_index = 0;
  std::vector<ActionParam> params;
  std::optional<ResourceLink> link;

  bool operator==(const RestAction&) const = default;
};

struct Individual {
  std::vector<RestAction> actions;
  std::optional<size_t> auth_index;

  size_t size() const { return actions.size(); }
  bool operator==(const Individual&) const = default;
};

struct GenomeConfig {
  size_t max_test_size = kDefaultMaxTestSize;
  size_t auth_count = 0;
  // Chance that a sampled dependent action gets its creation call inserted
  // in front of it.
  double link_probability = 0.5;
};

// One gene per path placeholder, query parameter, header parameter and body,
// in that order. Non-required query/header/body parameters are wrapped in
// Optional genes. Throws ConfigError for parameters with no gene kind.
std::vector<ActionParam> GenotypeFor(const ActionTemplate& action, Rng& rng);

// Requires a schema with at least one template.
Individual SampleIndividual(const ApiSchema& schema, const GenomeConfig& config, Rng& rng);

enum class MutationArm { kLeaf, kOptional, kAddAction, kRemoveAction, kAuth };

std::vector<MutationArm> ApplicableArms(const Individual& ind, const GenomeConfig& config);

// Applies one arm chosen uniformly among the applicable ones. The input is
// left untouched.
Individual MutateIndividual(const Individual& ind, const ApiSchema& schema,
                            const GenomeConfig& config, Rng& rng);

// Applies `arm`, which must be applicable.
Individual ApplyMutation(const Individual& ind, MutationArm arm, const ApiSchema& schema,
                         const GenomeConfig& config, Rng& rng);

// Removes action `index`. Actions linked to it lose the link and get a fresh
// id gene; later link indices shift down.
Individual RemoveAction(const Individual& ind, size_t index, const ApiSchema& schema, Rng& rng);

bool IsValidIndividual(const Individual& ind, const ApiSchema& schema, const GenomeConfig& config,
                       std::string* why = nullptr);

// Renders action `index`. `resolved` maps creation-action indices to the
// location they returned; links without an entry fall back to the sampled
// path.
ConcreteHttpCall RenderAction(const Individual& ind, size_t index, const ApiSchema& schema,
                              const std::map<size_t, std::string>& resolved);

std::vector<ConcreteHttpCall> Render(const Individual& ind, const ApiSchema& schema,
                                     const std::map<size_t, std::string>& resolved);

// Full path of a template including the schema base path, placeholders kept.
std::string TemplatePath(const ApiSchema& schema, const ActionTemplate& action);

}  // namespace evorest

#endif  // EVOREST_INDIVIDUAL_H_
