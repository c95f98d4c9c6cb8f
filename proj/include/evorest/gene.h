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

// Genes: the recursive value tree behind every HTTP parameter. Genes are
// plain values; copying a gene copies its whole subtree.

#ifndef EVOREST_GENE_H_
#define EVOREST_GENE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evorest/rng.h"
#include "evorest/schema.h"

namespace evorest {

// Nesting depth past which objects are sampled without fields and arrays
// empty.
inline constexpr int kMaxGeneDepth = 5;
inline constexpr size_t kDefaultArrayMaxSize = 4;
inline constexpr size_t kDefaultStringMaxLength = 32;

// Heap cell with value semantics, for the one recursive slot (Optional).
template <typename T>
class Box {
 public:
  explicit Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

class Gene;

struct Int32Gene {
  int32_t value = 0;
  int32_t min = INT32_MIN;
  int32_t max = INT32_MAX;
};

struct Int64Gene {
  int64_t value = 0;
  int64_t min = INT64_MIN;
  int64_t max = INT64_MAX;
};

struct DoubleGene {
  double value = 0.0;
};

struct BooleanGene {
  bool value = false;
};

struct StringGene {
  std::string value;
  size_t min_len = 0;
  size_t max_len = kDefaultStringMaxLength;
};

struct DateTimeGene {
  int year = 2000;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

struct EnumGene {
  std::vector<std::string> values;
  size_t index = 0;
};

struct OptionalGene {
  bool active = false;
  Box<Gene> inner;
};

struct ObjectGene {
  std::vector<Gene> fields;
};

struct ArrayGene {
  std::vector<Gene> elements;
  size_t max_size = kDefaultArrayMaxSize;
  ParamSpecPtr element_spec;  // used to sample new elements
  int depth = 0;
};

class Gene {
 public:
  using Value = std::variant<Int32Gene, Int64Gene, DoubleGene, BooleanGene,
                             StringGene, DateTimeGene, EnumGene, OptionalGene,
                             ObjectGene, ArrayGene>;

  Gene(std::string name, Value value)
      : name_(std::move(name)), value_(std::move(value)) {}

  const std::string& name() const { return name_; }
  Value& value() { return value_; }
  const Value& value() const { return value_; }

  template <typename T>
  T* As() { return std::get_if<T>(&value_); }
  template <typename T>
  const T* As() const { return std::get_if<T>(&value_); }

  // Scalars and arrays; the places leaf mutation may touch.
  bool IsLeaf() const;

 private:
  std::string name_;
  Value value_;
};

Gene MakeOptional(std::string name, bool active, Gene inner);

// Samples a fresh gene for `spec`. Non-required object fields are wrapped in
// Optional genes. Throws ConfigError for kinds that have no gene.
Gene SampleGene(const ParamSpec& spec, Rng& rng, int depth = 0);

// Returns a mutated copy.
Gene MutateGene(const Gene& gene, Rng& rng);
void MutateGeneInPlace(Gene& gene, Rng& rng);

// value + sign * 2^k clamped to [lo, hi], without overflow.
int64_t IntDeltaMutation(int64_t value, int k, bool positive, int64_t lo,
                         int64_t hi);

// Year-month-dayThour:mm:ss.000Z with month, day and hour unpadded.
std::string FormatDateTime(const DateTimeGene& dt);

// Appends the JSON encoding. Inactive Optional fields are omitted from
// objects; an inactive Optional on its own renders as null.
void AppendJson(const Gene& gene, std::string& out);
std::string ToJson(const Gene& gene);

// Text for a path segment, query value or header value: strings raw,
// everything else as JSON.
std::string ToParamText(const Gene& gene);

// Pointers into `gene` for leaf mutation, skipping inactive Optionals.
void CollectLeaves(Gene& gene, std::vector<Gene*>& out);
void CollectOptionals(Gene& gene, std::vector<Gene*>& out);

// Checks the per-variant invariants (bounds, enum index, array size,
// calendar ranges) over the whole subtree.
bool GeneIsValid(const Gene& gene, std::string* why = nullptr);

bool operator==(const Gene& a, const Gene& b);

}  // namespace evorest

#endif  // EVOREST_GENE_H_
