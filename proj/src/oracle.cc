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

#include "termunify/oracle.h"

#include <utility>

namespace termunify {
namespace {

struct Pending {
  Term lhs;
  Term rhs;
  Position at;
};

// All argument tuples of length `arity` over `pool`, first argument varying
// slowest.
void append_applications(const Term& head_template, std::size_t arity,
                         const std::vector<Term>& pool,
                         std::vector<Term>& out) {
  if (pool.empty()) return;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<Term> args;
    args.reserve(arity);
    for (std::size_t i : idx) args.push_back(pool[i]);
    out.push_back(head_template.with_args(std::move(args)));
    std::size_t k = arity;
    while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace

UnifyOutcome solve_equations(const EquationSet& eqs) {
  std::vector<Pending> work;
  work.reserve(eqs.size());
  for (auto it = eqs.rbegin(); it != eqs.rend(); ++it) {
    work.push_back({it->lhs, it->rhs, Position::root()});
  }
  Substitution::Bindings solved;
  std::size_t eliminations = 0;

  while (!work.empty()) {
    Pending eq = std::move(work.back());
    work.pop_back();
    if (eq.lhs == eq.rhs) continue;  // delete
    if (eq.lhs.is_app() && eq.rhs.is_app()) {
      if (eq.lhs.name() != eq.rhs.name() ||
          eq.lhs.arity() != eq.rhs.arity()) {
        return Failed{Clash{eq.at, eq.lhs.name(), eq.rhs.name()}};
      }
      for (std::size_t i = eq.lhs.arity(); i >= 1; --i) {  // decompose
        work.push_back({eq.lhs.arg(i), eq.rhs.arg(i), eq.at.child(i)});
      }
      continue;
    }
    if (eq.lhs.is_app()) std::swap(eq.lhs, eq.rhs);  // orient
    const std::string& x = eq.lhs.name();
    if (occurs_in(x, eq.rhs)) {
      return Failed{OccursCheck{x, eq.rhs, eq.at}};
    }
    // eliminate
    Substitution elim = Substitution::singleton(x, eq.rhs);
    for (Pending& p : work) {
      p.lhs = apply(elim, p.lhs);
      p.rhs = apply(elim, p.rhs);
    }
    for (auto& [var, value] : solved) value = apply(elim, value);
    solved.emplace(x, eq.rhs);
    ++eliminations;
  }
  return Unified{Substitution::from_bindings(std::move(solved)), eliminations};
}

std::vector<Term> enum_terms(const EnumBound& bound) {
  std::vector<Term> leaves;
  for (const std::string& v : bound.variables) leaves.push_back(Term::var(v));
  for (const auto& [symbol, arity] : bound.signature.entries()) {
    if (arity == 0) leaves.push_back(Term::app(bound.signature, symbol));
  }
  std::vector<Term> level = leaves;
  for (std::size_t depth = 1; depth <= bound.max_depth; ++depth) {
    std::vector<Term> next = leaves;
    for (const auto& [symbol, arity] : bound.signature.entries()) {
      if (arity == 0 || level.empty()) continue;
      Term head = Term::app(bound.signature, symbol,
                            std::vector<Term>(arity, level.front()));
      append_applications(head, arity, level, next);
    }
    level = std::move(next);
  }
  return level;
}

SubstitutionEnumerator::SubstitutionEnumerator(const VarSet& domain,
                                               std::vector<Term> terms) {
  for (const std::string& v : domain) {
    variables_.push_back(v);
    std::vector<Term> allowed;
    for (const Term& t : terms) {
      if (!(t.is_var() && t.name() == v)) allowed.push_back(t);
    }
    size_ *= allowed.size() + 1;
    candidates_.push_back(std::move(allowed));
  }
}

std::vector<std::size_t> SubstitutionEnumerator::digits(
    std::size_t index) const {
  std::vector<std::size_t> out(variables_.size());
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    std::size_t radix = candidates_[v].size() + 1;
    out[v] = index % radix;
    index /= radix;
  }
  return out;
}

Substitution SubstitutionEnumerator::at(std::size_t index) const {
  Substitution::Bindings bindings;
  std::vector<std::size_t> choice = digits(index);
  for (std::size_t v = 0; v < variables_.size(); ++v) {
    if (choice[v] > 0) {
      bindings.emplace(variables_[v], candidates_[v][choice[v] - 1]);
    }
  }
  return Substitution::from_bindings(std::move(bindings));
}

std::vector<Substitution> enum_substitutions(const VarSet& domain,
                                             const EnumBound& bound) {
  SubstitutionEnumerator e(domain, enum_terms(bound));
  std::vector<Substitution> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
  return out;
}

std::vector<Substitution> enumerated_unifiers(const Term& s, const Term& t,
                                              const EnumBound& bound) {
  VarSet domain = vars_of(s);
  collect_vars(t, domain);
  SubstitutionEnumerator e(domain, enum_terms(bound));
  std::vector<Substitution> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Substitution sigma = e.at(i);
    if (is_unifier(sigma, s, t)) out.push_back(std::move(sigma));
  }
  return out;
}

}  // namespace termunify
