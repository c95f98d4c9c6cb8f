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


// Serves a simulated SUT and its driver on one local port.

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "evorest/error.h"
#include "evorest/sim_sut.h"

namespace {

std::atomic<bool> g_stop{false};

extern "C" void OnSignal(int) { g_stop.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::string spec_arg = "crud-chain";
  int port = 40100;
  uint64_t seed = 0;
  CLI::App app("Simulated REST service with a built-in driver", "evorest_sim");
  app.add_option("--spec", spec_arg, "Built-in spec name (crud-chain, needle, faulty) or a file")
      ->capture_default_str();
  app.add_option("--port", port, "Port on 127.0.0.1 (0 picks a free one)")->capture_default_str();
  app.add_option("--seed", seed, "Seed for generated resource ids")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    evorest::SimSpec spec;
    std::ifstream file(spec_arg);
    if (file) {
      std::stringstream text;
      text << file.rdbuf();
      spec = evorest::ParseSimSpec(text.str());
    } else {
      spec = evorest::CannedSpec(spec_arg);
    }
    evorest::SimSut sut(std::move(spec), seed);
    evorest::SimServer server(sut, port);
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    std::cout << "serving " << sut.spec().title << " at " << server.url()
              << " (driver: --driverUrl " << server.url() << ")" << std::endl;
    while (!g_stop.load()) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.Stop();
  } catch (const evorest::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
