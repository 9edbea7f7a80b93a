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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "termunify/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> env_signature;
  if (const char* v = std::getenv(termunify::cli::kSignatureEnvVar)) {
    env_signature = v;
  }
  return termunify::cli::run(args, std::cout, std::cerr, env_signature);
}
