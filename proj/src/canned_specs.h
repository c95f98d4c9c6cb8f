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


#ifndef EVOREST_SRC_CANNED_SPECS_H_
#define EVOREST_SRC_CANNED_SPECS_H_

#include <optional>
#include <string_view>

namespace evorest::internal {

// Contents of a built-in fixture compiled into the library, by name.
std::optional<std::string_view> EmbeddedFixture(std::string_view name);

}  // namespace evorest::internal

#endif  // EVOREST_SRC_CANNED_SPECS_H_
