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

#include "termunify/unify.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "termunify/errors.h"

namespace termunify {
namespace {

// A difference that can be resolved by binding `variable` to `term`.
struct Resolution {
  Position position;
  std::string variable;
  Term term;
};

using Step = std::variant<Resolution, FailureCause>;

// Turns the difference at `p` into a binding, preferring the s-side variable,
// or reports why it cannot be resolved.
Step resolve_at(const Term& s, const Term& t, const Position& p) {
  const Term& sp = subterm_at(s, p);
  const Term& tp = subterm_at(t, p);
  if (sp.is_var()) {
    if (occurs_in(sp.name(), tp)) return OccursCheck{sp.name(), tp, p};
    return Resolution{p, sp.name(), tp};
  }
  if (tp.is_var()) {
    if (occurs_in(tp.name(), sp)) return OccursCheck{tp.name(), sp, p};
    return Resolution{p, tp.name(), sp};
  }
  return Clash{p, sp.name(), tp.name()};
}

// Descend into the smallest differing argument
// without looking at head symbols. Heads that differ end the descent, which
// only happens for inputs that are not unifiable.
Position resolving_diff_unchecked(const Term& s, const Term& t) {
  std::vector<std::size_t> path;
  const Term* a = &s;
  const Term* b = &t;
  while (a->is_app() && a->arity() > 0 && b->is_app()) {
    if (a->name() != b->name() || a->arity() != b->arity()) break;
    std::size_t k = 1;
    while (k <= a->arity() && a->arg(k) == b->arg(k)) ++k;
    if (k > a->arity()) break;
    path.push_back(k);
    a = &a->arg(k);
    b = &b->arg(k);
  }
  return Position(std::move(path));
}

std::size_t count_vars(const Term& s, const Term& t) {
  VarSet vars = vars_of(s);
  collect_vars(t, vars);
  return vars.size();
}

void emit_trace(const TraceSink& trace, std::size_t step,
                const Resolution& r, const Term& s, const Term& t,
                const Term& s_next, const Term& t_next) {
  if (!trace) return;
  TraceStep out{step, r.position, r.variable, r.term, count_vars(s, t),
                count_vars(s_next, t_next)};
  if (out.vars_after >= out.vars_before) {
    throw std::logic_error("variable count did not decrease at " +
                           format_trace_step(out));
  }
  trace(out);
}

// Shared driver of the classic and Robinson algorithms: resolve the first
// difference, instantiate both terms, recurse, and compose on the way out.
template <typename FindDifference>
UnifyOutcome resolve_first_differences(const Term& s, const Term& t,
                                       const TraceSink& trace,
                                       std::size_t step,
                                       FindDifference find_difference) {
  if (s == t) return Unified{Substitution::identity(), 0};
  Step next = resolve_at(s, t, find_difference(s, t));
  if (auto* cause = std::get_if<FailureCause>(&next)) return Failed{*cause};
  auto& r = std::get<Resolution>(next);
  Substitution sig = Substitution::singleton(r.variable, r.term);
  Term s_next = apply(sig, s);
  Term t_next = apply(sig, t);
  emit_trace(trace, step, r, s, t, s_next, t_next);
  UnifyOutcome rest = resolve_first_differences(s_next, t_next, trace,
                                                step + 1, find_difference);
  if (rest.failed()) return rest;
  return Unified{compose(rest.mgu(), sig), rest.success().steps + 1};
}

FailureCause rebase(FailureCause cause, const Position& prefix) {
  std::visit([&](auto& c) { c.position = concat(prefix, c.position); },
             cause);
  return cause;
}

struct EfficientRun {
  const TraceSink& trace;
  std::size_t iterations = 0;
  std::size_t bound = 0;
  std::size_t step = 1;
};

UnifyOutcome unify_from(const Term& s, const Term& t, const Position& p,
                        EfficientRun& run) {
  if (++run.iterations > run.bound) {
    throw std::logic_error("efficient unification exceeded its iteration bound");
  }
  const Term& sp = subterm_at(s, p);
  const Term& tp = subterm_at(t, p);
  if (sp == tp) {
    Position pi = next_position(s, t, p);
    if (pi.is_root()) return Unified{Substitution::identity(), 0};
    return unify_from(s, t, pi, run);
  }
  Step local = resolve_at(sp, tp, first_diff(sp, tp));
  if (auto* cause = std::get_if<FailureCause>(&local)) {
    return Failed{rebase(*cause, p)};
  }
  auto& r = std::get<Resolution>(local);
  r.position = concat(p, r.position);
  Substitution sig = Substitution::singleton(r.variable, r.term);
  Term s_next = apply(sig, s);
  Term t_next = apply(sig, t);
  emit_trace(run.trace, run.step++, r, s, t, s_next, t_next);
  Position pi = next_position(s_next, t_next, r.position);
  if (pi.is_root()) return Unified{std::move(sig), 1};
  UnifyOutcome rest = unify_from(s_next, t_next, pi, run);
  if (rest.failed()) return rest;
  return Unified{compose(rest.mgu(), sig), rest.success().steps + 1};
}

}  // namespace

std::string format_trace_step(const TraceStep& step) {
  return "step " + std::to_string(step.step) + ": pos=" +
         step.position.to_string() + " bind " + step.variable + " -> " +
         to_string(step.term) + " vars " + std::to_string(step.vars_before) +
         " -> " + std::to_string(step.vars_after);
}

std::string format_failure(const FailureCause& cause) {
  if (const auto* clash = std::get_if<Clash>(&cause)) {
    return "fail: clash " + clash->left + " vs " + clash->right + " at " +
           clash->position.to_string();
  }
  const auto& occurs = std::get<OccursCheck>(cause);
  return "fail: occurs " + occurs.variable + " in " + to_string(occurs.term) +
         " at " + occurs.position.to_string();
}

bool is_unifier(const Substitution& sigma, const Term& s, const Term& t) {
  return apply(sigma, s) == apply(sigma, t);
}

bool is_mgu(const Substitution& theta, const Term& s, const Term& t,
            std::span<const Substitution> candidates) {
  for (const Substitution& sigma : candidates) {
    if (!is_unifier(sigma, s, t)) {
      throw PreconditionError("candidate " + to_string(sigma) +
                              " does not unify " + to_string(s) + " and " +
                              to_string(t));
    }
  }
  if (!is_unifier(theta, s, t)) return false;
  return std::all_of(candidates.begin(), candidates.end(),
                     [&](const Substitution& sigma) {
                       return more_general(theta, sigma);
                     });
}

Position first_diff(const Term& s, const Term& t) {
  if (s == t) throw PreconditionError("first_diff of identical terms");
  std::vector<std::size_t> path;
  const Term* a = &s;
  const Term* b = &t;
  while (a->is_app() && b->is_app() && a->arity() > 0 &&
         a->name() == b->name() && a->arity() == b->arity()) {
    std::size_t k = 1;
    while (a->arg(k) == b->arg(k)) ++k;
    path.push_back(k);
    a = &a->arg(k);
    b = &b->arg(k);
  }
  return Position(std::move(path));
}

Position resolving_diff(const Term& s, const Term& t) {
  if (s == t) throw PreconditionError("resolving_diff of identical terms");
  Position p = resolving_diff_unchecked(s, t);
  if (!subterm_at(s, p).is_var() && !subterm_at(t, p).is_var()) {
    throw PreconditionError("terms are not unifiable: no variable at " +
                            p.to_string());
  }
  return p;
}

Substitution sub_of_frst_diff(const Term& s, const Term& t) {
  if (s == t) throw PreconditionError("sub_of_frst_diff of identical terms");
  Step step = resolve_at(s, t, resolving_diff_unchecked(s, t));
  if (auto* cause = std::get_if<FailureCause>(&step)) {
    throw PreconditionError("terms are not unifiable: " +
                            format_failure(*cause));
  }
  auto& r = std::get<Resolution>(step);
  return Substitution::singleton(std::move(r.variable), std::move(r.term));
}

Link link_of_frst_diff(const Term& s, const Term& t) {
  Step step = resolve_at(s, t, first_diff(s, t));
  if (auto* cause = std::get_if<FailureCause>(&step)) return *cause;
  auto& r = std::get<Resolution>(step);
  return Substitution::singleton(std::move(r.variable), std::move(r.term));
}

UnifyOutcome classic_unify(const Term& s, const Term& t,
                           const TraceSink& trace) {
  return resolve_first_differences(s, t, trace, 1, resolving_diff_unchecked);
}

UnifyOutcome robinson_unify(const Term& s, const Term& t,
                            const TraceSink& trace) {
  return resolve_first_differences(s, t, trace, 1, first_diff);
}

Position next_position(const Term& s, const Term& t, const Position& p) {
  subterm_at(s, p);
  subterm_at(t, p);
  Position cur = p;
  while (!cur.is_root()) {
    Position parent = cur.parent();
    if (subterm_at(s, parent).name() != subterm_at(t, parent).name()) {
      return parent;
    }
    Position sibling = cur.next_sibling();
    if (is_valid_position(s, sibling)) {
      if (!(subterm_at(s, sibling) == subterm_at(t, sibling))) return sibling;
      cur = std::move(sibling);
    } else {
      cur = std::move(parent);
    }
  }
  return cur;
}

UnifyOutcome robinson_unify_efficient(const Term& s, const Term& t,
                                      const TraceSink& trace) {
  EfficientRun run{trace};
  run.bound = term_size(s) * (count_vars(s, t) + 1);
  return unify_from(s, t, Position::root(), run);
}

bool unifiable(const Term& s, const Term& t) {
  return robinson_unify(s, t).unified();
}

}  // namespace termunify
