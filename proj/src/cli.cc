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


#include "evorest/cli.h"

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "evorest/driver_client.h"
#include "evorest/error.h"
#include "evorest/evaluator.h"
#include "evorest/executor.h"
#include "evorest/log.h"
#include "evorest/schema.h"

namespace evorest {

namespace {

std::atomic<bool> g_stop{false};

extern "C" void OnInterrupt(int) { g_stop.store(true); }

class InterruptGuard {
 public:
  InterruptGuard() {
    g_stop.store(false);
    previous_ = std::signal(SIGINT, OnInterrupt);
  }
  ~InterruptGuard() { std::signal(SIGINT, previous_); }

 private:
  void (*previous_)(int);
};

struct TextChoices {
  std::string format = "JAVA_JUNIT_4";
  std::string algorithm = "MIO";
};

void BuildApp(CLI::App& app, CliOptions& o, TextChoices& text) {
  app.set_help_flag("--help", "List all available options");
  app.add_option("--maxTimeInSeconds", o.max_time_in_seconds,
                 "Maximum number of seconds allowed for the search")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--outputFolder", o.output_folder, "Folder where the generated tests are written")
      ->capture_default_str();
  app.add_option("--outputFormat", text.format, "Format of the generated tests")
      ->check(CLI::IsMember({"JAVA_JUNIT_4", "JAVA_JUNIT_5", "NEUTRAL_JSON"}))
      ->capture_default_str();
  app.add_option("--testSuiteFileName", o.test_suite_file_name,
                 "Name of the generated file, without extension")
      ->capture_default_str();
  app.add_option("--driverUrl", o.driver_url, "Base URL of the SUT driver")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed (default: derived from the clock)");
  app.add_option("--algorithm", text.algorithm, "Search algorithm")
      ->check(CLI::IsMember({"MIO", "RANDOM"}))
      ->capture_default_str();
  app.add_option("--maxEvaluations", o.max_evaluations,
                 "Stop after this many test evaluations instead of after maxTimeInSeconds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--probOfRandomSampling", o.prob_of_random_sampling,
                 "Probability of sampling a fresh test at the start of the search")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--populationSize", o.population_size,
                 "Population size per target at the start of the search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--focusedSearchActivationTime", o.focused_search_activation_time,
                 "Fraction of the budget after which the search only exploits")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--maxTestSize", o.max_test_size, "Maximum number of HTTP calls per test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--timeoutMs", o.timeout_ms, "Timeout of each HTTP call to the SUT")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  for (CLI::Option* opt : app.get_options()) {
    opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }
}

}  // namespace

std::vector<std::string> CliFlagNames() {
  CliOptions o;
  TextChoices text;
  CLI::App app;
  BuildApp(app, o, text);
  std::vector<std::string> names;
  for (const CLI::Option* opt : app.get_options()) {
    for (const std::string& name : opt->get_lnames()) names.push_back("--" + name);
  }
  return names;
}

CliParse ParseCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliOptions o;
  TextChoices text;
  CLI::App app("Evolutionary test generator for REST APIs", "evorest");
  BuildApp(app, o, text);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    CliParse r;
    r.exit_code = kExitOk;
    return r;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help to list all available options.\n";
    CliParse r;
    r.exit_code = kExitUsage;
    return r;
  }
  o.output_format = *ParseOutputFormat(text.format);
  o.algorithm = text.algorithm == "RANDOM" ? Algorithm::kRandom : Algorithm::kMio;
  if (o.focused_search_activation_time <= 0) {
    err << "error: --focusedSearchActivationTime must be greater than 0\n";
    CliParse r;
    r.exit_code = kExitUsage;
    return r;
  }
  for (const CLI::Option* opt : app.get_options()) {
    if (opt->count() > 1) {
      LogWarning("option --" + opt->get_lnames().front() + " given " +
                 std::to_string(opt->count()) + " times, using the last value");
    }
  }
  CliParse r;
  r.options = o;
  return r;
}

SearchConfig ToSearchConfig(const CliOptions& options, uint64_t seed) {
  SearchConfig c;
  c.max_time_seconds = options.max_time_in_seconds;
  c.max_evaluations = options.max_evaluations;
  c.p_random_start = options.prob_of_random_sampling;
  c.population_per_target_start = options.population_size;
  c.focus_fraction = options.focused_search_activation_time;
  c.max_test_size = options.max_test_size;
  c.seed = seed;
  c.algorithm = options.algorithm;
  return c;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
           HttpTransport* transport) {
  const CliParse parsed = ParseCli(argc, argv, out, err);
  if (!parsed.options) return parsed.exit_code;
  const CliOptions& o = *parsed.options;
  const uint64_t seed =
      o.seed ? *o.seed
             : static_cast<uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());

  std::unique_ptr<HttpTransport> owned;
  if (transport == nullptr) {
    owned = std::make_unique<HttplibTransport>();
    transport = owned.get();
  }

  try {
    DriverClient driver(*transport, o.driver_url);
    driver.GetInfo();
    const std::string base_url = driver.StartSut();
    const SutInfo info = driver.GetInfo();
    const ApiSchema schema = ParseSchema(driver.FetchText(info.swagger_json_url));
    const Executor executor(*transport, schema, base_url, info.auth_info,
                            std::chrono::milliseconds(o.timeout_ms));
    RestEvaluator evaluator(driver, executor, schema);

    SearchResult result;
    {
      InterruptGuard guard;
      result = RunSearch(schema, evaluator, ToSearchConfig(o, seed), &g_stop);
    }
    const std::vector<std::string> files =
        WriteSuite(result.suite, schema, info.auth_info, o.output_format, o.output_folder,
                   o.test_suite_file_name, base_url);
    for (const std::string& f : files) err << "wrote " << f << "\n";
    out << result.stats.ToJson() << "\n";
    if (result.aborted) {
      err << "error: search aborted, partial suite written: " << *result.aborted << "\n";
      return kExitSearchError;
    }
    try {
      driver.StopSut();
    } catch (const Error& e) {
      LogWarning(std::string("could not stop the SUT: ") + e.what());
    }
    return kExitOk;
  } catch (const DriverUnreachableError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDriverUnreachable;
  } catch (const ParseError& e) {
    err << "error: schema is not valid JSON: " << e.what() << "\n";
    return kExitSchemaError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchemaError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSearchError;
  }
}

}  // namespace evorest
