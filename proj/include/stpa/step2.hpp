// Copyright 2026 The stpa-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STPA_STEP2_HPP_
#define STPA_STEP2_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "stpa/model.hpp"

namespace stpa {

// A guide question for one loop element, with the causal factors already
// recorded against that element for the UCA.
struct CausalPrompt {
  CausalElement element = CausalElement::kControllerProcessModel;
  std::string question;
  std::vector<Id> answered_by;
};

// Eight prompts, one per causal element, worded for the control loop the
// UCA's action belongs to. Throws NotFoundError if uca_id is not a UCA.
std::vector<CausalPrompt> step2_prompts(const SafetyModel& model, std::string_view uca_id);

}  // namespace stpa

#endif  // STPA_STEP2_HPP_
