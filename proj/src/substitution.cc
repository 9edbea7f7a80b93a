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

#include "termunify/substitution.h"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "termunify/errors.h"

namespace termunify {

// Accumulates the bindings of one or more simultaneous matching problems.
// Identity bindings are kept while matching so that a later conflicting
// requirement on the same variable is still detected.
class Matcher {
 public:
  // Returns the conflict, if any. `path` is the position of `pattern` within
  // the top-level pattern and is restored on return.
  std::optional<NoMatch> match(const Term& pattern, const Term& target,
                               std::vector<std::size_t>& path) {
    if (pattern.is_var()) {
      auto [it, inserted] = raw_.try_emplace(pattern.name(), target);
      if (!inserted && !(it->second == target)) {
        return NoMatch{NoMatch::Reason::kInconsistentBinding, Position(path)};
      }
      return std::nullopt;
    }
    if (!target.is_app() || target.name() != pattern.name() ||
        target.arity() != pattern.arity()) {
      return NoMatch{NoMatch::Reason::kClash, Position(path)};
    }
    for (std::size_t i = 1; i <= pattern.arity(); ++i) {
      path.push_back(i);
      std::optional<NoMatch> conflict = match(pattern.arg(i), target.arg(i), path);
      path.pop_back();
      if (conflict) return conflict;
    }
    return std::nullopt;
  }

  bool match(const Term& pattern, const Term& target) {
    std::vector<std::size_t> path;
    return !match(pattern, target, path).has_value();
  }

  Substitution result() && {
    Substitution out;
    for (auto& [var, t] : raw_) out.bind_unless_identity(var, std::move(t));
    return out;
  }

 private:
  Substitution::Bindings raw_;
};

Substitution Substitution::singleton(std::string var, Term t) {
  Bindings b;
  b.emplace(std::move(var), std::move(t));
  return from_bindings(std::move(b));
}

Substitution Substitution::from_bindings(Bindings bindings) {
  for (const auto& [var, t] : bindings) {
    if (!is_variable_name(var)) {
      throw InvalidArgumentError("'" + var + "' is not a variable name");
    }
    if (t.is_var() && t.name() == var) {
      throw InvalidArgumentError("identity binding " + var + " -> " + var);
    }
  }
  return Substitution(std::move(bindings));
}

void Substitution::bind_unless_identity(std::string var, Term t) {
  if (t.is_var() && t.name() == var) return;
  bindings_.insert_or_assign(std::move(var), std::move(t));
}

Term Substitution::image(std::string_view var) const {
  if (const Term* t = lookup(var)) return *t;
  return Term::var(std::string(var));
}

const Term* Substitution::lookup(std::string_view var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

VarSet dom(const Substitution& sigma) {
  VarSet out;
  for (const auto& [var, t] : sigma.bindings()) out.insert(out.end(), var);
  return out;
}

std::set<Term> ran(const Substitution& sigma) {
  std::set<Term> out;
  for (const auto& [var, t] : sigma.bindings()) out.insert(t);
  return out;
}

VarSet vran(const Substitution& sigma) {
  VarSet out;
  for (const auto& [var, t] : sigma.bindings()) collect_vars(t, out);
  return out;
}

Term apply(const Substitution& sigma, const Term& t) {
  if (t.is_var()) {
    const Term* bound = sigma.lookup(t.name());
    return bound ? *bound : t;
  }
  if (t.arity() == 0 || sigma.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(apply(sigma, a));
  return t.with_args(std::move(args));
}

Substitution compose(const Substitution& sigma, const Substitution& tau) {
  Substitution out;
  for (const auto& [var, t] : tau.bindings()) {
    out.bind_unless_identity(var, apply(sigma, t));
  }
  for (const auto& [var, t] : sigma.bindings()) {
    if (!tau.lookup(var)) out.bindings_.emplace(var, t);
  }
  return out;
}

Substitution restrict_to(const Substitution& sigma, const VarSet& vars) {
  Substitution out;
  for (const auto& [var, t] : sigma.bindings()) {
    if (vars.contains(var)) out.bindings_.emplace(var, t);
  }
  return out;
}

bool idempotent_by_composition(const Substitution& sigma) {
  return compose(sigma, sigma) == sigma;
}

bool idempotent_by_disjointness(const Substitution& sigma) {
  VarSet range_vars = vran(sigma);
  return std::none_of(
      sigma.bindings().begin(), sigma.bindings().end(),
      [&](const auto& binding) { return range_vars.contains(binding.first); });
}

bool is_idempotent(const Substitution& sigma) {
  bool by_composition = idempotent_by_composition(sigma);
  if (by_composition != idempotent_by_disjointness(sigma)) {
    throw std::logic_error("idempotence characterizations disagree on " +
                           to_string(sigma));
  }
  return by_composition;
}

bool subst_equal(const Substitution& a, const Substitution& b) {
  return a == b;
}

MatchResult match_terms(const Term& pattern, const Term& target) {
  Matcher m;
  std::vector<std::size_t> path;
  if (std::optional<NoMatch> conflict = m.match(pattern, target, path)) {
    return *conflict;
  }
  return Matched{std::move(m).result()};
}

std::optional<Substitution> generality_witness(const Substitution& theta,
                                               const Substitution& sigma) {
  // Every variable that theta or sigma moves, plus every variable theta can
  // introduce. Outside this set both sides are the identity and gamma binds
  // nothing.
  VarSet relevant = vran(theta);
  for (const auto& [var, t] : theta.bindings()) relevant.insert(var);
  for (const auto& [var, t] : sigma.bindings()) relevant.insert(var);

  Matcher m;
  for (const std::string& x : relevant) {
    const Term* from = theta.lookup(x);
    const Term* to = sigma.lookup(x);
    Term var = Term::var(x);
    if (!m.match(from ? *from : var, to ? *to : var)) return std::nullopt;
  }
  Substitution gamma = std::move(m).result();
  if (!(compose(gamma, theta) == sigma)) {
    throw std::logic_error("generality witness " + to_string(gamma) +
                           " does not factor " + to_string(sigma));
  }
  return gamma;
}

bool more_general(const Substitution& theta, const Substitution& sigma) {
  return generality_witness(theta, sigma).has_value();
}

std::string to_string(const Substitution& sigma) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, t] : sigma.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += var;
    out += " -> ";
    out += to_string(t);
  }
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Substitution& sigma) {
  return os << to_string(sigma);
}

}  // namespace termunify
