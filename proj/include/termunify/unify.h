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

#ifndef TERMUNIFY_UNIFY_H_
#define TERMUNIFY_UNIFY_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>

#include "termunify/position.h"
#include "termunify/substitution.h"
#include "termunify/term.h"

namespace termunify {

// Two applications with different head symbols at `position`.
struct Clash {
  Position position;
  std::string left;
  std::string right;

  friend bool operator==(const Clash&, const Clash&) = default;
};

// Binding `variable` to `term` at `position` would create an infinite term.
struct OccursCheck {
  std::string variable;
  Term term;
  Position position;

  friend bool operator==(const OccursCheck&, const OccursCheck&) = default;
};

using FailureCause = std::variant<Clash, OccursCheck>;

struct Unified {
  Substitution mgu;
  // Number of resolved differences, i.e. link substitutions composed.
  std::size_t steps = 0;
};

struct Failed {
  FailureCause cause;
};

class UnifyOutcome {
 public:
  UnifyOutcome(Unified u) : value_(std::move(u)) {}  // NOLINT
  UnifyOutcome(Failed f) : value_(std::move(f)) {}   // NOLINT

  bool unified() const { return std::holds_alternative<Unified>(value_); }
  bool failed() const { return !unified(); }

  // Precondition: unified().
  const Unified& success() const { return std::get<Unified>(value_); }
  const Substitution& mgu() const { return success().mgu; }
  // Precondition: failed().
  const FailureCause& cause() const { return std::get<Failed>(value_).cause; }

  const std::variant<Unified, Failed>& value() const { return value_; }

 private:
  std::variant<Unified, Failed> value_;
};

// One resolved difference. The variable count is |Vars(s) u Vars(t)| of the
// whole pair before and after applying the binding.
struct TraceStep {
  std::size_t step = 0;
  Position position;
  std::string variable;
  Term term;
  std::size_t vars_before = 0;
  std::size_t vars_after = 0;
};

using TraceSink = std::function<void(const TraceStep&)>;

// `step <k>: pos=<p> bind <X> -> <t> vars <n> -> <m>`
std::string format_trace_step(const TraceStep& step);
// `fail: clash f vs g at 1` or `fail: occurs X in f(X) at e`
std::string format_failure(const FailureCause& cause);

bool is_unifier(const Substitution& sigma, const Term& s, const Term& t);

// theta unifies (s, t) and is more general than every candidate. Throws
// PreconditionError if some candidate does not unify (s, t).
bool is_mgu(const Substitution& theta, const Term& s, const Term& t,
            std::span<const Substitution> candidates);

// Leftmost-outermost position where s and t disagree at the root of the
// subterms: different heads, different variables, or variable against
// application. Throws PreconditionError if s == t.
Position first_diff(const Term& s, const Term& t);

// The classic algorithm's difference finder. Descends into the first
// differing argument without comparing head symbols, which is sound only for
// unifiable inputs. Throws PreconditionError if s == t, or if neither side of
// the returned difference is a variable.
Position resolving_diff(const Term& s, const Term& t);

// The binding that resolves resolving_diff(s, t); the s-side variable wins
// when both sides are variables. Throws PreconditionError for inputs that
// cannot be unified (clash or occurs check at the difference).
Substitution sub_of_frst_diff(const Term& s, const Term& t);

// Substitution that resolves first_diff(s, t), or why it cannot be resolved.
// Positions in the failure are relative to s and t. Throws PreconditionError
// if s == t.
using Link = std::variant<Substitution, FailureCause>;
Link link_of_frst_diff(const Term& s, const Term& t);

// Repeatedly resolves the first difference with sub_of_frst_diff and composes
// the results. Non-unifiable inputs give Failed rather than undefined
// behaviour.
UnifyOutcome classic_unify(const Term& s, const Term& t,
                           const TraceSink& trace = {});

// Robinson's algorithm with explicit failure on clash and occurs check.
UnifyOutcome robinson_unify(const Term& s, const Term& t,
                            const TraceSink& trace = {});

// Next conflicting position to the right of p, scanning siblings and then
// ancestors' siblings. The root means no further conflict. Throws
// InvalidPositionError if p is not valid in both terms.
Position next_position(const Term& s, const Term& t, const Position& p);

// Robinson's algorithm that resumes the search for the next difference from
// the last resolved position instead of the root.
UnifyOutcome robinson_unify_efficient(const Term& s, const Term& t,
                                      const TraceSink& trace = {});

bool unifiable(const Term& s, const Term& t);

}  // namespace termunify

#endif  // TERMUNIFY_UNIFY_H_
