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

#include "stpa/asil.hpp"

#include <stdexcept>

namespace stpa {

Asil compute_asil(const Rating& rating) {
  if (!rating.in_range()) {
    throw std::domain_error("rating " + format_rating(rating) +
                            " outside S0-S3 E0-E4 C0-C3");
  }
  if (rating.severity == 0 || rating.exposure == 0 || rating.controllability == 0) {
    return Asil::kQM;
  }
  switch (rating.severity + rating.exposure + rating.controllability) {
    case 7: return Asil::kA;
    case 8: return Asil::kB;
    case 9: return Asil::kC;
    case 10: return Asil::kD;
    default: return Asil::kQM;
  }
}

std::string format_rating(const Rating& rating) {
  return "S" + std::to_string(rating.severity) + " E" + std::to_string(rating.exposure) +
         " C" + std::to_string(rating.controllability);
}

}  // namespace stpa
