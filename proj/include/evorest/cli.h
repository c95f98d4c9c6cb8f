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


#ifndef EVOREST_CLI_H_
#define EVOREST_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evorest/search.h"
#include "evorest/suite_writer.h"
#include "evorest/transport.h"

namespace evorest {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitDriverUnreachable = 3,
  kExitSchemaError = 4,
  kExitSearchError = 5,
  kExitIoError = 6,
};

struct CliOptions {
  bool help = false;
  int64_t max_time_in_seconds = 60;
  std::string output_folder = "src/em-generated";
  OutputFormat output_format = OutputFormat::kJavaJunit4;
  std::string test_suite_file_name = std::string(kDefaultSuiteFileName);
  std::string driver_url = "http://localhost:40100";
  std::optional<uint64_t> seed;  // time-derived when absent
  std::optional<int64_t> max_evaluations;
  Algorithm algorithm = Algorithm::kMio;
  double prob_of_random_sampling = 0.5;
  int64_t population_size = 10;
  double focused_search_activation_time = 0.5;
  int64_t max_test_size = 10;
  int64_t timeout_ms = 2000;
};

// Long flag names, "--help" first.
std::vector<std::string> CliFlagNames();

struct CliParse {
  std::optional<CliOptions> options;  // absent when the run should end now
  int exit_code = kExitOk;
};

// Prints help or usage errors to `out`/`err`. Later duplicates of a flag
// win, with a warning.
CliParse ParseCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

SearchConfig ToSearchConfig(const CliOptions& options, uint64_t seed);

// Full run: driver info, SUT start, schema download, search, suite output,
// stats on `out`. `transport` defaults to real HTTP. SIGINT ends the search
// early and the partial suite is still written.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
           HttpTransport* transport = nullptr);

}  // namespace evorest

#endif  // EVOREST_CLI_H_
