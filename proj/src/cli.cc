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

#include "termunify/cli.h"

#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "termunify/errors.h"
#include "termunify/oracle.h"
#include "termunify/syntax.h"
#include "termunify/unify.h"

namespace termunify::cli {
namespace {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kClassic:
      return "classic";
    case Algorithm::kRobinson:
      return "robinson";
    case Algorithm::kEfficient:
      return "efficient";
    case Algorithm::kMm:
      return "mm";
  }
  return "robinson";
}

// Parses terms and substitutions against either a fixed signature or one that
// grows as symbols are first used.
class Reader {
 public:
  explicit Reader(const SessionConfig& config) {
    if (!config.signature_path) return;
    std::ifstream in(*config.signature_path);
    if (!in) {
      throw Error("cannot read signature file '" + *config.signature_path +
                  "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    sig_ = parse_signature(buf.str());
    open_ = false;
  }

  Term term(std::string_view text) {
    return open_ ? parse_term_declaring(text, sig_) : parse_term(text, sig_);
  }

  Substitution substitution(std::string_view text) {
    return open_ ? parse_substitution_declaring(text, sig_)
                 : parse_substitution(text, sig_);
  }

 private:
  Signature sig_;
  bool open_ = true;
};

class Report {
 public:
  Report(const SessionConfig& config, std::ostream& out, std::ostream& err)
      : structured_(config.output == OutputMode::kStructured),
        out_(out),
        err_(err) {}

  bool structured() const { return structured_; }

  void field(std::string_view key, std::string_view value) {
    out_ << key << '=' << value << '\n';
  }

  void line(std::string_view text) { out_ << text << '\n'; }

  int input_error(std::string_view message) {
    if (structured_) {
      field("status", "error");
      field("message", message);
    } else {
      err_ << "error: " << message << '\n';
    }
    return kExitInputError;
  }

  int ok(const std::string& result) {
    if (structured_) {
      field("status", "ok");
      field("result", result);
    } else {
      line(result);
    }
    return kExitOk;
  }

  int negative(const std::string& message) {
    if (structured_) {
      field("status", "failed");
      field("message", message);
    } else {
      line(message);
    }
    return kExitNegative;
  }

 private:
  bool structured_;
  std::ostream& out_;
  std::ostream& err_;
};

void report_failure(Report& report, const FailureCause& cause) {
  if (!report.structured()) {
    report.line(format_failure(cause));
    return;
  }
  if (const auto* clash = std::get_if<Clash>(&cause)) {
    report.field("cause", "clash");
    report.field("left", clash->left);
    report.field("right", clash->right);
    report.field("position", clash->position.to_string());
  } else {
    const auto& occurs = std::get<OccursCheck>(cause);
    report.field("cause", "occurs");
    report.field("variable", occurs.variable);
    report.field("term", to_string(occurs.term));
    report.field("position", occurs.position.to_string());
  }
  report.field("diagnostic", format_failure(cause));
}

std::string match_failure(const NoMatch& nm) {
  return std::string("no match: ") +
         (nm.reason == NoMatch::Reason::kClash ? "clash"
                                               : "inconsistent binding") +
         " at " + nm.at.to_string();
}

int expect_args(Report& report, std::string_view subcommand,
                const std::vector<std::string>& args, std::size_t n) {
  if (args.size() == n) return kExitOk;
  return report.input_error(std::string(subcommand) + " expects " +
                            std::to_string(n) + " argument(s), got " +
                            std::to_string(args.size()));
}

void add_common_options(CLI::App* cmd, SessionConfig& config,
                        std::string& output) {
  cmd->add_option("--sig", config.signature_path,
                  "Signature file, one name/arity per line (default: $" +
                      std::string(kSignatureEnvVar) +
                      "; without either, symbols are declared on first use)");
  cmd->add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

}  // namespace

int cmd_unify(const SessionConfig& config, std::string_view s_text,
              std::string_view t_text, std::ostream& out, std::ostream& err) {
  Report report(config, out, err);
  std::optional<Term> s;
  std::optional<Term> t;
  try {
    Reader reader(config);
    s = reader.term(s_text);
    t = reader.term(t_text);
  } catch (const Error& e) {
    return report.input_error(e.what());
  }

  std::vector<TraceStep> steps;
  TraceSink sink;
  if (config.trace) {
    sink = [&steps](const TraceStep& step) { steps.push_back(step); };
  }
  UnifyOutcome outcome = [&]() -> UnifyOutcome {
    switch (config.algorithm) {
      case Algorithm::kClassic:
        return classic_unify(*s, *t, sink);
      case Algorithm::kEfficient:
        return robinson_unify_efficient(*s, *t, sink);
      case Algorithm::kMm:
        return solve_equations({{*s, *t}});
      case Algorithm::kRobinson:
        break;
    }
    return robinson_unify(*s, *t, sink);
  }();

  for (const TraceStep& step : steps) {
    if (report.structured()) {
      report.field("trace", format_trace_step(step));
    } else {
      report.line(format_trace_step(step));
    }
  }

  if (report.structured()) {
    report.field("status", outcome.unified() ? "unified" : "failed");
    report.field("algorithm", algorithm_name(config.algorithm));
  }
  if (outcome.failed()) {
    report_failure(report, outcome.cause());
    return kExitNegative;
  }
  if (report.structured()) {
    report.field("mgu", to_string(outcome.mgu()));
    report.field("steps", std::to_string(outcome.success().steps));
  } else if (config.trace) {
    report.line("result: " + to_string(outcome.mgu()));
  } else {
    report.line(to_string(outcome.mgu()));
  }
  return kExitOk;
}

int cmd_utils(const SessionConfig& config, std::string_view subcommand,
              const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  Report report(config, out, err);
  static const std::map<std::string_view, std::size_t> kArgCounts = {
      {"positions", 1}, {"subterm", 2}, {"replace", 3},
      {"apply", 2},     {"compose", 2}, {"match", 2}};
  auto known = kArgCounts.find(subcommand);
  if (known == kArgCounts.end()) {
    return report.input_error("unknown command '" + std::string(subcommand) +
                              "'");
  }
  if (int rc = expect_args(report, subcommand, args, known->second)) return rc;

  try {
    Reader reader(config);
    if (subcommand == "positions") {
      return report.ok(to_string(positions_of(reader.term(args[0]))));
    }
    if (subcommand == "subterm" || subcommand == "replace") {
      Term t = reader.term(args[0]);
      Position p = parse_position(args[1]);
      std::optional<Term> replacement;
      if (subcommand == "replace") replacement = reader.term(args[2]);
      try {
        if (replacement) {
          return report.ok(to_string(replace_at(t, p, *replacement)));
        }
        return report.ok(to_string(subterm_at(t, p)));
      } catch (const InvalidPositionError& e) {
        return report.negative(e.what());
      }
    }
    if (subcommand == "apply") {
      Substitution sigma = reader.substitution(args[0]);
      return report.ok(to_string(apply(sigma, reader.term(args[1]))));
    }
    if (subcommand == "compose") {
      Substitution sigma = reader.substitution(args[0]);
      Substitution tau = reader.substitution(args[1]);
      return report.ok(to_string(compose(sigma, tau)));
    }
    Term pattern = reader.term(args[0]);
    Term target = reader.term(args[1]);
    MatchResult m = match_terms(pattern, target);
    if (const auto* matched = std::get_if<Matched>(&m)) {
      return report.ok(to_string(matched->witness));
    }
    return report.negative(match_failure(std::get<NoMatch>(m)));
  } catch (const Error& e) {
    return report.input_error(e.what());
  }
}

int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err, const std::optional<std::string>& env_signature) {
  CLI::App app{"First-order term unification"};
  app.name(argv.empty() ? "termunify" : argv.front());
  app.require_subcommand(1);

  SessionConfig config;
  std::string output = "text";
  std::string algorithm = "robinson";
  std::string s_text;
  std::string t_text;

  CLI::App* unify = app.add_subcommand("unify", "Unify two terms");
  unify->add_option("s", s_text, "Left term")->required();
  unify->add_option("t", t_text, "Right term")->required();
  unify->add_option("--algorithm", algorithm, "Unification algorithm")
      ->check(CLI::IsMember({"classic", "robinson", "efficient", "mm"}))
      ->capture_default_str();
  unify->add_flag("--trace", config.trace, "Print one line per resolved difference");
  add_common_options(unify, config, output);

  struct Utility {
    const char* name;
    const char* help;
    std::vector<const char*> operands;
  };
  const std::vector<Utility> utilities = {
      {"positions", "List the positions of a term", {"term"}},
      {"subterm", "Subterm at a position", {"term", "position"}},
      {"replace", "Replace the subterm at a position",
       {"term", "position", "replacement"}},
      {"apply", "Apply a substitution to a term", {"substitution", "term"}},
      {"compose", "Compose two substitutions (first after second)",
       {"sigma", "tau"}},
      {"match", "Match a pattern against a target term",
       {"pattern", "target"}},
  };
  std::vector<std::string> operands(3);
  for (const Utility& u : utilities) {
    CLI::App* cmd = app.add_subcommand(u.name, u.help);
    for (std::size_t i = 0; i < u.operands.size(); ++i) {
      cmd->add_option(u.operands[i], operands[i])->required();
    }
    add_common_options(cmd, config, output);
  }

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  if (!config.signature_path && env_signature && !env_signature->empty()) {
    config.signature_path = env_signature;
  }
  config.output =
      output == "structured" ? OutputMode::kStructured : OutputMode::kText;
  config.algorithm = algorithm == "classic"     ? Algorithm::kClassic
                     : algorithm == "efficient" ? Algorithm::kEfficient
                     : algorithm == "mm"        ? Algorithm::kMm
                                                : Algorithm::kRobinson;

  if (unify->parsed()) return cmd_unify(config, s_text, t_text, out, err);
  for (const Utility& u : utilities) {
    CLI::App* cmd = app.get_subcommand(u.name);
    if (!cmd->parsed()) continue;
    std::vector<std::string> args(operands.begin(),
                                  operands.begin() + u.operands.size());
    return cmd_utils(config, u.name, args, out, err);
  }
  return kExitInputError;
}

}  // namespace termunify::cli
