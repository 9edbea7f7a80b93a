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

#ifndef TERMUNIFY_CLI_H_
#define TERMUNIFY_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace termunify::cli {

// Environment variable naming the signature file used when --sig is absent.
inline constexpr char kSignatureEnvVar[] = "TERMUNIFY_SIGNATURE";

// Exit statuses. Every invocation ends with one of these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not unifiable, no match, bad position
inline constexpr int kExitInputError = 2;

enum class Algorithm { kClassic, kRobinson, kEfficient, kMm };
enum class OutputMode { kText, kStructured };

struct SessionConfig {
  // No signature file means symbols are declared on first use.
  std::optional<std::string> signature_path;
  Algorithm algorithm = Algorithm::kRobinson;
  bool trace = false;
  OutputMode output = OutputMode::kText;
};

int cmd_unify(const SessionConfig& config, std::string_view s_text,
              std::string_view t_text, std::ostream& out, std::ostream& err);

// `positions`, `subterm`, `replace`, `apply`, `compose` or `match`.
int cmd_utils(const SessionConfig& config, std::string_view subcommand,
              const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err);

// Full command line, argv[0] included. `env_signature` is the value of
// kSignatureEnvVar, if set.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err,
        const std::optional<std::string>& env_signature = std::nullopt);

}  // namespace termunify::cli

#endif  // TERMUNIFY_CLI_H_
