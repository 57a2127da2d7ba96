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

#ifndef STPA_ASIL_HPP_
#define STPA_ASIL_HPP_

#include <string>

#include "stpa/model.hpp"

namespace stpa {

// ISO 26262-3 risk graph. Any zero class gives QM; otherwise the level is
// fixed by S+E+C (<=6 QM, 7 A, 8 B, 9 C, 10 D), which reproduces the
// standard's determination table cell for cell.
//
// Throws std::domain_error when a class is outside S0-S3, E0-E4, C0-C3.
Asil compute_asil(const Rating& rating);

// "S3 E4 C3".
std::string format_rating(const Rating& rating);

}  // namespace stpa

#endif  // STPA_ASIL_HPP_
