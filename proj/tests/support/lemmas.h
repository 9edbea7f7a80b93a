// Copyright 2026 The termunify Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TERMUNIFY_TESTS_SUPPORT_LEMMAS_H_
#define TERMUNIFY_TESTS_SUPPORT_LEMMAS_H_

// Randomized checks of the algebraic laws of positions, substitutions and
// unification. Each law is checked on freshly generated inputs; cases whose
// premise does not hold are discarded and do not count.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termunify::testing {

struct LemmaConfig {
  std::uint64_t seed = 1;
  // Non-vacuous cases required per law.
  std::size_t cases = 1000;
  std::size_t term_height = 4;
  std::size_t max_bindings = 3;
  // Height of the terms substitutions map to.
  std::size_t image_height = 2;
};

struct LemmaReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t attempts = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed(std::size_t required) const {
    return failures == 0 && cases >= required;
  }
};

const std::vector<std::string>& lemma_names();

// Throws std::invalid_argument for an unknown name.
LemmaReport run_lemma(std::string_view name, const LemmaConfig& config);

}  // namespace termunify::testing

#endif  // TERMUNIFY_TESTS_SUPPORT_LEMMAS_H_
