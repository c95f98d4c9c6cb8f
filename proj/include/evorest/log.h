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

// Minimal warning channel. Warnings go to stderr unless a sink is installed;
// tests install a capturing sink to assert on them.

#ifndef EVOREST_LOG_H_
#define EVOREST_LOG_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace evorest {

using LogSink = std::function<void(std::string_view)>;

// Replaces the process-wide sink. An empty function restores stderr.
void SetLogSink(LogSink sink);

void LogWarning(std::string_view message);

// Collects warnings for the lifetime of the object.
class ScopedLogCapture {
 public:
  ScopedLogCapture();
  ~ScopedLogCapture();
  ScopedLogCapture(const ScopedLogCapture&) = delete;
  ScopedLogCapture& operator=(const ScopedLogCapture&) = delete;

  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

}  // namespace evorest

#endif  // EVOREST_LOG_H_
