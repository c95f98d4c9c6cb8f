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

#include "evorest/individual.h"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "evorest/error.h"
#include "evorest/log.h"

namespace evorest {

namespace {

Gene MaybeOptional(const ParamSpec& spec, Gene gene, Rng& rng) {
  if (spec.required) return gene;
  return MakeOptional(spec.name, rng.Bernoulli(0.5), std::move(gene));
}

// Templates that `dependent` can be chained after.
std::vector<size_t> CreatorsOf(const ApiSchema& schema, const ActionTemplate& dependent) {
  std::vector<size_t> out;
  for (size_t i = 0; i < schema.templates.size(); ++i) {
    if (ExtendsCreationPath(schema.templates[i], dependent)) out.push_back(i);
  }
  return out;
}

// Index into `action.params` of the path gene that holds the resource id
// when the action is chained after `creator`.
size_t IdParamIndex(const ActionTemplate& creator, const ActionTemplate& dependent) {
  const size_t segment = creator.path.size();
  size_t placeholders_before = 0;
  for (size_t i = 0; i < segment; ++i) {
    if (dependent.path[i].placeholder) ++placeholders_before;
  }
  return placeholders_before;
}

const Gene* ActiveValue(const Gene& gene) {
  if (const auto* opt = gene.As<OptionalGene>()) {
    return opt->active ? &*opt->inner : nullptr;
  }
  return &gene;
}

std::string SampledPath(const Individual& ind, size_t index, const ApiSchema& schema) {
  const RestAction& action = ind.actions[index];
  const ActionTemplate& tmpl = schema.templates[action.template_index];
  std::string out = schema.base_path;
  size_t param = 0;
  for (const PathSegment& seg : tmpl.path) {
    out += '/';
    if (seg.placeholder) {
      while (param < action.params.size() && action.params[param].in != ParamIn::kPath) ++param;
      if (param < action.params.size()) {
        out += UrlEncode(ToParamText(action.params[param].gene));
        ++param;
      }
    } else {
      out += seg.text;
    }
  }
  if (out.empty()) out = "/";
  return out;
}

void VisitParams(Individual& ind, const std::function<void(Gene&)>& fn) {
  for (RestAction& action : ind.actions) {
    for (ActionParam& p : action.params) fn(p.gene);
  }
}

// Links `ind.actions[pos]` to a random earlier creator with probability
// `config.link_probability`, if one exists.
void MaybeLinkToEarlier(Individual& ind, size_t pos, const ApiSchema& schema,
                        const GenomeConfig& config, Rng& rng) {
  const ActionTemplate& dependent = schema.templates[ind.actions[pos].template_index];
  std::vector<size_t> sources;
  for (size_t i = 0; i < pos; ++i) {
    if (ExtendsCreationPath(schema.templates[ind.actions[i].template_index], dependent)) {
      sources.push_back(i);
    }
  }
  if (sources.empty() || !rng.Bernoulli(config.link_probability)) return;
  ind.actions[pos].link = ResourceLink{sources[rng.Index(sources.size())]};
}

}  // namespace

std::string TemplatePath(const ApiSchema& schema, const ActionTemplate& action) {
  const std::string path = action.PathString();
  if (schema.base_path.empty()) return path;
  return path == "/" ? schema.base_path : schema.base_path + path;
}

std::vector<ActionParam> GenotypeFor(const ActionTemplate& action, Rng& rng) {
  std::vector<ActionParam> params;
  for (const ParamSpecPtr& spec : action.path_params) {
    params.push_back({ParamIn::kPath, SampleGene(*spec, rng)});
  }
  for (const ParamSpecPtr& spec : action.query_params) {
    params.push_back({ParamIn::kQuery, MaybeOptional(*spec, SampleGene(*spec, rng), rng)});
  }
  for (const ParamSpecPtr& spec : action.header_params) {
    params.push_back({ParamIn::kHeader, MaybeOptional(*spec, SampleGene(*spec, rng), rng)});
  }
  if (action.body_spec) {
    params.push_back({ParamIn::kBody,
                      MaybeOptional(*action.body_spec, SampleGene(*action.body_spec, rng), rng)});
  }
  return params;
}

Individual SampleIndividual(const ApiSchema& schema, const GenomeConfig& config, Rng& rng) {
  if (schema.templates.empty()) throw ContractError("cannot sample from a schema without actions");
  Individual ind;
  const size_t max_size = std::max<size_t>(1, config.max_test_size);
  const auto length = static_cast<size_t>(rng.UniformInt(1, static_cast<int64_t>(max_size)));
  while (ind.actions.size() < length) {
    const size_t t = rng.Index(schema.templates.size());
    const ActionTemplate& tmpl = schema.templates[t];
    RestAction action{t, GenotypeFor(tmpl, rng), std::nullopt};
    const std::vector<size_t> creators = CreatorsOf(schema, tmpl);
    if (!creators.empty() && rng.Bernoulli(config.link_probability) &&
        ind.actions.size() + 2 <= max_size) {
      const size_t c = creators[rng.Index(creators.size())];
      ind.actions.push_back({c, GenotypeFor(schema.templates[c], rng), std::nullopt});
      action.link = ResourceLink{ind.actions.size() - 1};
    }
    ind.actions.push_back(std::move(action));
  }
  const size_t auth = rng.Index(config.auth_count + 1);
  if (auth > 0) ind.auth_index = auth - 1;
  return ind;
}

std::vector<MutationArm> ApplicableArms(const Individual& ind, const GenomeConfig& config) {
  Individual scratch = ind;
  std::vector<Gene*> leaves;
  std::vector<Gene*> optionals;
  VisitParams(scratch, [&](Gene& g) {
    CollectLeaves(g, leaves);
    CollectOptionals(g, optionals);
  });
  std::vector<MutationArm> arms;
  if (!leaves.empty()) arms.push_back(MutationArm::kLeaf);
  if (!optionals.empty()) arms.push_back(MutationArm::kOptional);
  if (ind.size() < config.max_test_size) arms.push_back(MutationArm::kAddAction);
  if (ind.size() > 1) arms.push_back(MutationArm::kRemoveAction);
  if (config.auth_count > 0) arms.push_back(MutationArm::kAuth);
  return arms;
}

Individual RemoveAction(const Individual& ind, size_t index, const ApiSchema& schema, Rng& rng) {
  Individual out = ind;
  const ActionTemplate& removed = schema.templates[ind.actions[index].template_index];
  out.actions.erase(out.actions.begin() + static_cast<std::ptrdiff_t>(index));
  for (RestAction& action : out.actions) {
    if (!action.link) continue;
    if (action.link->source_action_index == index) {
      action.link.reset();
      const ActionTemplate& tmpl = schema.templates[action.template_index];
      const size_t id = IdParamIndex(removed, tmpl);
      if (id < tmpl.path_params.size()) {
        action.params[id].gene = SampleGene(*tmpl.path_params[id], rng);
      }
    } else if (action.link->source_action_index > index) {
      --action.link->source_action_index;
    }
  }
  return out;
}

Individual ApplyMutation(const Individual& ind, MutationArm arm, const ApiSchema& schema,
                         const GenomeConfig& config, Rng& rng) {
  Individual out = ind;
  switch (arm) {
    case MutationArm::kLeaf: {
      std::vector<Gene*> leaves;
      VisitParams(out, [&](Gene& g) { CollectLeaves(g, leaves); });
      if (leaves.empty()) throw ContractError("leaf mutation on an individual without genes");
      MutateGeneInPlace(*leaves[rng.Index(leaves.size())], rng);
      break;
    }
    case MutationArm::kOptional: {
      std::vector<Gene*> optionals;
      VisitParams(out, [&](Gene& g) { CollectOptionals(g, optionals); });
      if (optionals.empty()) throw ContractError("optional toggle without Optional genes");
      auto* opt = optionals[rng.Index(optionals.size())]->As<OptionalGene>();
      opt->active = !opt->active;
      break;
    }
    case MutationArm::kAddAction: {
      if (out.size() >= config.max_test_size) throw ContractError("individual already at max size");
      const size_t pos = rng.Index(out.size() + 1);
      const size_t t = rng.Index(schema.templates.size());
      for (RestAction& action : out.actions) {
        if (action.link && action.link->source_action_index >= pos) ++action.link->source_action_index;
      }
      out.actions.insert(out.actions.begin() + static_cast<std::ptrdiff_t>(pos),
                         RestAction{t, GenotypeFor(schema.templates[t], rng), std::nullopt});
      MaybeLinkToEarlier(out, pos, schema, config, rng);
      break;
    }
    case MutationArm::kRemoveAction:
      if (out.size() <= 1) throw ContractError("cannot remove the only action");
      return RemoveAction(out, rng.Index(out.size()), schema, rng);
    case MutationArm::kAuth: {
      if (config.auth_count == 0) throw ContractError("no credentials to choose from");
      // Choices are {none} U credentials, encoded as 0 and index + 1.
      const size_t current = out.auth_index ? *out.auth_index + 1 : 0;
      size_t next = rng.Index(config.auth_count);
      if (next >= current) ++next;
      if (next == 0) out.auth_index.reset();
      else out.auth_index = next - 1;
      break;
    }
  }
  return out;
}

Individual MutateIndividual(const Individual& ind, const ApiSchema& schema,
                            const GenomeConfig& config, Rng& rng) {
  const std::vector<MutationArm> arms = ApplicableArms(ind, config);
  if (arms.empty()) return ind;
  return ApplyMutation(ind, arms[rng.Index(arms.size())], schema, config, rng);
}

bool IsValidIndividual(const Individual& ind, const ApiSchema& schema, const GenomeConfig& config,
                       std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (ind.actions.empty()) return fail("no actions");
  if (ind.size() > config.max_test_size) return fail("more actions than max_test_size");
  if (ind.auth_index && *ind.auth_index >= config.auth_count) return fail("auth index out of range");
  for (size_t i = 0; i < ind.actions.size(); ++i) {
    const RestAction& action = ind.actions[i];
    if (action.template_index >= schema.templates.size()) return fail("unknown template");
    for (const ActionParam& p : action.params) {
      std::string detail;
      if (!GeneIsValid(p.gene, &detail)) return fail("action " + std::to_string(i) + ": " + detail);
    }
    if (action.link) {
      const size_t src = action.link->source_action_index;
      if (src >= i) return fail("action " + std::to_string(i) + " links forward");
      const ActionTemplate& creator = schema.templates[ind.actions[src].template_index];
      if (!ExtendsCreationPath(creator, schema.templates[action.template_index])) {
        return fail("action " + std::to_string(i) + " links to a non-creator");
      }
    }
  }
  return true;
}

ConcreteHttpCall RenderAction(const Individual& ind, size_t index, const ApiSchema& schema,
                              const std::map<size_t, std::string>& resolved) {
  const RestAction& action = ind.actions[index];
  const ActionTemplate& tmpl = schema.templates[action.template_index];
  ConcreteHttpCall call;
  call.verb = tmpl.verb;
  call.sampled_path = SampledPath(ind, index, schema);
  call.path = call.sampled_path;

  for (const ActionParam& p : action.params) {
    const Gene* value = ActiveValue(p.gene);
    if (value == nullptr) continue;
    switch (p.in) {
      case ParamIn::kPath:
        break;
      case ParamIn::kQuery:
        if (!call.query.empty()) call.query += '&';
        call.query += UrlEncode(p.gene.name());
        call.query += '=';
        call.query += UrlEncode(ToParamText(*value));
        break;
      case ParamIn::kHeader:
        call.headers.emplace_back(p.gene.name(), ToParamText(*value));
        break;
      case ParamIn::kBody:
        call.body = ToJson(*value);
        break;
    }
  }

  if (action.link) {
    const size_t src = action.link->source_action_index;
    call.link_source = src;
    call.creation_path = SampledPath(ind, src, schema);
    if (auto it = resolved.find(src); it != resolved.end()) {
      try {
        call.path = ResolveLocation(it->second, call.sampled_path, call.creation_path);
      } catch (const ResolutionError& e) {
        LogWarning(std::string("location not applied: ") + e.what());
      }
    }
  }
  return call;
}

std::vector<ConcreteHttpCall> Render(const Individual& ind, const ApiSchema& schema,
                                     const std::map<size_t, std::string>& resolved) {
  std::vector<ConcreteHttpCall> calls;
  calls.reserve(ind.size());
  for (size_t i = 0; i < ind.size(); ++i) calls.push_back(RenderAction(ind, i, schema, resolved));
  return calls;
}

}  // namespace evorest
