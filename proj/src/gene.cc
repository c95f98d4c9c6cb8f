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

#include "evorest/gene.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "evorest/error.h"

namespace evorest {

namespace {

// Most sampled integers land in this window so that small constants in the
// SUT are within mutation reach; the rest cover the full range.
constexpr int64_t kSmallIntWindow = 1 << 15;
constexpr double kDoubleLimit = 1e15;
constexpr char kPrintableFirst = 0x20;
constexpr char kPrintableLast = 0x7e;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int64_t SampleInt(Rng& rng, int64_t lo, int64_t hi) {
  if (rng.Bernoulli(1.0 / 3.0)) return rng.UniformInt(lo, hi);
  const int64_t a = std::max(lo, -kSmallIntWindow);
  const int64_t b = std::min(hi, kSmallIntWindow);
  if (a > b) return rng.UniformInt(lo, hi);
  return rng.UniformInt(a, b);
}

char RandomPrintable(Rng& rng) {
  return static_cast<char>(rng.UniformInt(kPrintableFirst, kPrintableLast));
}

// Geometric length with mean 5: P(n) = p (1-p)^n, p = 1/6.
size_t SampleStringLength(Rng& rng, size_t min_len, size_t max_len) {
  size_t n = 0;
  while (n < max_len && !rng.Bernoulli(1.0 / 6.0)) ++n;
  return std::clamp(n, min_len, max_len);
}

// Inclusive bounds per DateTime field: year, month, day, hour, minute, second.
constexpr int kDateLo[] = {1900, 1, 1, 0, 0, 0};
constexpr int kDateHi[] = {2100, 12, 31, 23, 59, 59};

int& DateField(DateTimeGene& dt, int i) {
  switch (i) {
    case 0: return dt.year;
    case 1: return dt.month;
    case 2: return dt.day;
    case 3: return dt.hour;
    case 4: return dt.minute;
    default: return dt.second;
  }
}

int FieldLo(int i) { return kDateLo[i]; }
int FieldHi(int i) { return kDateHi[i]; }

void AppendEscaped(std::string_view s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static constexpr char kHex[] = "0123456789abcdef";
          out += "\\u00";
          out += kHex[(c >> 4) & 0xf];
          out += kHex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void AppendDouble(double v, std::string& out) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string_view text(buf, static_cast<size_t>(end - buf));
  out += text;
  // Keep the value a JSON number that reads back as floating point.
  if (text.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

}  // namespace

bool Gene::IsLeaf() const {
  return !std::holds_alternative<OptionalGene>(value_) &&
         !std::holds_alternative<ObjectGene>(value_);
}

Gene MakeOptional(std::string name, bool active, Gene inner) {
  return Gene(std::move(name), OptionalGene{active, Box<Gene>(std::move(inner))});
}

int64_t IntDeltaMutation(int64_t value, int k, bool positive, int64_t lo, int64_t hi) {
  const int64_t delta = int64_t{1} << k;
  int64_t out;
  if (positive) {
    out = value > hi - delta ? hi : value + delta;
  } else {
    out = value < lo + delta ? lo : value - delta;
  }
  return std::clamp(out, lo, hi);
}

std::string FormatDateTime(const DateTimeGene& dt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%d-%d-%dT%d:%02d:%02d.000Z", dt.year, dt.month, dt.day,
                dt.hour, dt.minute, dt.second);
  return buf;
}

Gene SampleGene(const ParamSpec& spec, Rng& rng, int depth) {
  const ParamConstraints& c = spec.constraints;
  switch (spec.kind) {
    case ParamKind::kInt32: {
      Int32Gene g;
      g.min = static_cast<int32_t>(std::clamp<int64_t>(c.minimum.value_or(INT32_MIN), INT32_MIN, INT32_MAX));
      g.max = static_cast<int32_t>(std::clamp<int64_t>(c.maximum.value_or(INT32_MAX), g.min, INT32_MAX));
      g.value = static_cast<int32_t>(SampleInt(rng, g.min, g.max));
      return Gene(spec.name, g);
    }
    case ParamKind::kInt64: {
      Int64Gene g;
      g.min = c.minimum.value_or(INT64_MIN);
      g.max = std::max(g.min, c.maximum.value_or(INT64_MAX));
      g.value = SampleInt(rng, g.min, g.max);
      return Gene(spec.name, g);
    }
    case ParamKind::kDouble: {
      DoubleGene g;
      g.value = rng.Bernoulli(0.5) ? rng.UniformReal() : rng.UniformReal(-1e4, 1e4);
      return Gene(spec.name, g);
    }
    case ParamKind::kBoolean:
      return Gene(spec.name, BooleanGene{rng.Bernoulli(0.5)});
    case ParamKind::kString: {
      StringGene g;
      g.min_len = static_cast<size_t>(std::max<int64_t>(0, c.min_length.value_or(0)));
      g.max_len = static_cast<size_t>(
          std::max<int64_t>(static_cast<int64_t>(g.min_len),
                            c.max_length.value_or(static_cast<int64_t>(kDefaultStringMaxLength))));
      const size_t n = SampleStringLength(rng, g.min_len, g.max_len);
      for (size_t i = 0; i < n; ++i) g.value += RandomPrintable(rng);
      return Gene(spec.name, std::move(g));
    }
    case ParamKind::kDateTime: {
      DateTimeGene g;
      for (int i = 0; i < 6; ++i) {
        DateField(g, i) = static_cast<int>(rng.UniformInt(FieldLo(i), FieldHi(i)));
      }
      return Gene(spec.name, g);
    }
    case ParamKind::kEnum: {
      if (spec.enum_values.empty()) throw ConfigError("enum " + spec.name + " has no values");
      EnumGene g{spec.enum_values, rng.Index(spec.enum_values.size())};
      return Gene(spec.name, std::move(g));
    }
    case ParamKind::kObject: {
      ObjectGene g;
      if (depth < kMaxGeneDepth) {
        for (const ParamSpecPtr& field : spec.fields) {
          Gene inner = SampleGene(*field, rng, depth + 1);
          if (field->required) {
            g.fields.push_back(std::move(inner));
          } else {
            g.fields.push_back(MakeOptional(field->name, rng.Bernoulli(0.5), std::move(inner)));
          }
        }
      }
      return Gene(spec.name, std::move(g));
    }
    case ParamKind::kArray: {
      ArrayGene g;
      g.depth = depth;
      g.element_spec = spec.element;
      g.max_size = depth < kMaxGeneDepth && spec.element ? kDefaultArrayMaxSize : 0;
      const size_t n = rng.Index(g.max_size + 1);
      for (size_t i = 0; i < n; ++i) g.elements.push_back(SampleGene(*spec.element, rng, depth + 1));
      return Gene(spec.name, std::move(g));
    }
    case ParamKind::kFile:
      break;
  }
  throw ConfigError("parameter " + spec.name + " of kind " +
                    std::string(ParamKindName(spec.kind)) + " cannot be generated");
}

void MutateGeneInPlace(Gene& gene, Rng& rng) {
  std::visit(
      Overloaded{
          [&](Int32Gene& g) {
            const int k = static_cast<int>(rng.UniformInt(0, 10));
            const bool positive = rng.Bernoulli(0.5);
            int64_t next = IntDeltaMutation(g.value, k, positive, g.min, g.max);
            // At a bound the step may be absorbed; go the other way.
            if (next == g.value) next = IntDeltaMutation(g.value, k, !positive, g.min, g.max);
            g.value = static_cast<int32_t>(next);
          },
          [&](Int64Gene& g) {
            const int k = static_cast<int>(rng.UniformInt(0, 10));
            const bool positive = rng.Bernoulli(0.5);
            int64_t next = IntDeltaMutation(g.value, k, positive, g.min, g.max);
            if (next == g.value) next = IntDeltaMutation(g.value, k, !positive, g.min, g.max);
            g.value = next;
          },
          [&](DoubleGene& g) {
            double next = rng.Bernoulli(0.5) ? g.value * rng.UniformReal(0.5, 2.0)
                                             : g.value + (rng.Bernoulli(0.5) ? 1.0 : -1.0);
            if (!std::isfinite(next)) next = 0.0;
            g.value = std::clamp(next, -kDoubleLimit, kDoubleLimit);
          },
          [&](BooleanGene& g) { g.value = !g.value; },
          [&](StringGene& g) {
            const size_t n = g.value.size();
            std::vector<int> ops;  // 0 insert, 1 delete, 2 replace
            if (n < g.max_len) ops.push_back(0);
            if (n > g.min_len) ops.push_back(1);
            if (n > 0) ops.push_back(2);
            if (ops.empty()) return;
            switch (ops[rng.Index(ops.size())]) {
              case 0:
                g.value.insert(g.value.begin() + static_cast<std::ptrdiff_t>(rng.Index(n + 1)),
                               RandomPrintable(rng));
                break;
              case 1:
                g.value.erase(g.value.begin() + static_cast<std::ptrdiff_t>(rng.Index(n)));
                break;
              default: {
                const size_t at = rng.Index(n);
                char c;
                do {
                  c = RandomPrintable(rng);
                } while (c == g.value[at]);
                g.value[at] = c;
              }
            }
          },
          [&](DateTimeGene& g) {
            const int i = static_cast<int>(rng.Index(6));
            int& field = DateField(g, i);
            const int old = field;
            do {
              field = static_cast<int>(rng.UniformInt(FieldLo(i), FieldHi(i)));
            } while (field == old);
          },
          [&](EnumGene& g) {
            if (g.values.size() < 2) return;
            const size_t old = g.index;
            do {
              g.index = rng.Index(g.values.size());
            } while (g.index == old);
          },
          [&](OptionalGene& g) { g.active = !g.active; },
          [&](ObjectGene& g) {
            if (g.fields.empty()) return;
            MutateGeneInPlace(g.fields[rng.Index(g.fields.size())], rng);
          },
          [&](ArrayGene& g) {
            const bool resize = g.elements.empty() || rng.Bernoulli(1.0 / 3.0);
            if (resize) {
              const bool can_grow = g.elements.size() < g.max_size && g.element_spec;
              const bool can_shrink = !g.elements.empty();
              if (!can_grow && !can_shrink) return;
              if (can_grow && (!can_shrink || rng.Bernoulli(0.5))) {
                g.elements.insert(
                    g.elements.begin() + static_cast<std::ptrdiff_t>(rng.Index(g.elements.size() + 1)),
                    SampleGene(*g.element_spec, rng, g.depth + 1));
              } else {
                g.elements.erase(g.elements.begin() +
                                 static_cast<std::ptrdiff_t>(rng.Index(g.elements.size())));
              }
            } else {
              MutateGeneInPlace(g.elements[rng.Index(g.elements.size())], rng);
            }
          },
      },
      gene.value());
}

Gene MutateGene(const Gene& gene, Rng& rng) {
  Gene out = gene;
  MutateGeneInPlace(out, rng);
  return out;
}

void AppendJson(const Gene& gene, std::string& out) {
  std::visit(Overloaded{
                 [&](const Int32Gene& g) { out += std::to_string(g.value); },
                 [&](const Int64Gene& g) { out += std::to_string(g.value); },
                 [&](const DoubleGene& g) { AppendDouble(g.value, out); },
                 [&](const BooleanGene& g) { out += g.value ? "true" : "false"; },
                 [&](const StringGene& g) { AppendEscaped(g.value, out); },
                 [&](const DateTimeGene& g) { AppendEscaped(FormatDateTime(g), out); },
                 [&](const EnumGene& g) { AppendEscaped(g.values[g.index], out); },
                 [&](const OptionalGene& g) {
                   if (g.active) AppendJson(*g.inner, out);
                   else out += "null";
                 },
                 [&](const ObjectGene& g) {
                   out += '{';
                   bool first = true;
                   for (const Gene& field : g.fields) {
                     const auto* opt = field.As<OptionalGene>();
                     if (opt && !opt->active) continue;
                     if (!first) out += ',';
                     first = false;
                     AppendEscaped(field.name(), out);
                     out += ':';
                     AppendJson(field, out);
                   }
                   out += '}';
                 },
                 [&](const ArrayGene& g) {
                   out += '[';
                   for (size_t i = 0; i < g.elements.size(); ++i) {
                     if (i) out += ',';
                     AppendJson(g.elements[i], out);
                   }
                   out += ']';
                 },
             },
             gene.value());
}

std::string ToJson(const Gene& gene) {
  std::string out;
  AppendJson(gene, out);
  return out;
}

std::string ToParamText(const Gene& gene) {
  if (const auto* s = gene.As<StringGene>()) return s->value;
  if (const auto* e = gene.As<EnumGene>()) return e->values[e->index];
  if (const auto* d = gene.As<DateTimeGene>()) return FormatDateTime(*d);
  if (const auto* o = gene.As<OptionalGene>()) return ToParamText(*o->inner);
  return ToJson(gene);
}

void CollectLeaves(Gene& gene, std::vector<Gene*>& out) {
  if (auto* o = gene.As<OptionalGene>()) {
    if (o->active) CollectLeaves(*o->inner, out);
    return;
  }
  if (auto* obj = gene.As<ObjectGene>()) {
    for (Gene& f : obj->fields) CollectLeaves(f, out);
    return;
  }
  out.push_back(&gene);
  if (auto* arr = gene.As<ArrayGene>()) {
    for (Gene& e : arr->elements) CollectLeaves(e, out);
  }
}

void CollectOptionals(Gene& gene, std::vector<Gene*>& out) {
  if (auto* o = gene.As<OptionalGene>()) {
    out.push_back(&gene);
    if (o->active) CollectOptionals(*o->inner, out);
  } else if (auto* obj = gene.As<ObjectGene>()) {
    for (Gene& f : obj->fields) CollectOptionals(f, out);
  } else if (auto* arr = gene.As<ArrayGene>()) {
    for (Gene& e : arr->elements) CollectOptionals(e, out);
  }
}

bool GeneIsValid(const Gene& gene, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = gene.name() + ": " + msg;
    return false;
  };
  return std::visit(
      Overloaded{
          [&](const Int32Gene& g) {
            return g.min <= g.value && g.value <= g.max ? true : fail("int32 out of bounds");
          },
          [&](const Int64Gene& g) {
            return g.min <= g.value && g.value <= g.max ? true : fail("int64 out of bounds");
          },
          [&](const DoubleGene& g) { return std::isfinite(g.value) ? true : fail("non-finite double"); },
          [&](const BooleanGene&) { return true; },
          [&](const StringGene& g) {
            if (g.value.size() > g.max_len || g.value.size() < g.min_len) return fail("string length");
            for (char c : g.value) {
              if (c < kPrintableFirst || c > kPrintableLast) return fail("non-printable character");
            }
            return true;
          },
          [&](const DateTimeGene& g) {
            DateTimeGene copy = g;
            for (int i = 0; i < 6; ++i) {
              const int v = DateField(copy, i);
              if (v < FieldLo(i) || v > FieldHi(i)) return fail("date-time field out of range");
            }
            return true;
          },
          [&](const EnumGene& g) { return g.index < g.values.size() ? true : fail("enum index"); },
          [&](const OptionalGene& g) { return GeneIsValid(*g.inner, why); },
          [&](const ObjectGene& g) {
            for (const Gene& f : g.fields) {
              if (!GeneIsValid(f, why)) return false;
            }
            return true;
          },
          [&](const ArrayGene& g) {
            if (g.elements.size() > g.max_size) return fail("array larger than max_size");
            for (const Gene& e : g.elements) {
              if (!GeneIsValid(e, why)) return false;
            }
            return true;
          },
      },
      gene.value());
}

bool operator==(const Gene& a, const Gene& b) {
  if (a.name() != b.name() || a.value().index() != b.value().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.value());
        if constexpr (std::is_same_v<T, Int32Gene> || std::is_same_v<T, Int64Gene>) {
          return x.value == y.value && x.min == y.min && x.max == y.max;
        } else if constexpr (std::is_same_v<T, DoubleGene> || std::is_same_v<T, BooleanGene>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, StringGene>) {
          return x.value == y.value && x.min_len == y.min_len && x.max_len == y.max_len;
        } else if constexpr (std::is_same_v<T, DateTimeGene>) {
          return FormatDateTime(x) == FormatDateTime(y);
        } else if constexpr (std::is_same_v<T, EnumGene>) {
          return x.values == y.values && x.index == y.index;
        } else if constexpr (std::is_same_v<T, OptionalGene>) {
          return x.active == y.active && *x.inner == *y.inner;
        } else if constexpr (std::is_same_v<T, ObjectGene>) {
          return x.fields == y.fields;
        } else {
          return x.elements == y.elements && x.max_size == y.max_size;
        }
      },
      a.value());
}

}  // namespace evorest
