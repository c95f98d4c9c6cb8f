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


#ifndef EVOREST_EVALUATOR_H_
#define EVOREST_EVALUATOR_H_

#include "evorest/driver_client.h"
#include "evorest/executor.h"
#include "evorest/search.h"

namespace evorest {

// Evaluates a test against a driver-controlled SUT: reset the SUT state,
// run the calls, fetch the coverage of this run and merge it with the
// endpoint status targets. A failed reset is logged and scores nothing.
class RestEvaluator : public Evaluator {
 public:
  RestEvaluator(DriverClient& driver, const Executor& executor, const ApiSchema& schema)
      : driver_(driver), executor_(executor), schema_(schema) {}

  EvaluatedIndividual Evaluate(const Individual& ind) override;
  size_t auth_count() const override { return executor_.credentials().size(); }

 private:
  DriverClient& driver_;
  const Executor& executor_;
  const ApiSchema& schema_;
};

}  // namespace evorest

#endif  // EVOREST_EVALUATOR_H_
