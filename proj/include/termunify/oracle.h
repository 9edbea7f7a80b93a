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

#ifndef TERMUNIFY_ORACLE_H_
#define TERMUNIFY_ORACLE_H_

// Independent ground truth for the unification algorithms: a rule-based
// equation solver from a different algorithm family, and exhaustive
// enumerators of small terms and substitutions.

#include <cstddef>
#include <vector>

#include "termunify/substitution.h"
#include "termunify/term.h"
#include "termunify/unify.h"

namespace termunify {

struct Equation {
  Term lhs;
  Term rhs;
};

using EquationSet = std::vector<Equation>;

// Solves the system by delete / decompose / orient / eliminate with occurs
// check. On success the result is an idempotent mgu of every equation.
// Failure positions are relative to the equation the conflict came from.
UnifyOutcome solve_equations(const EquationSet& eqs);

struct EnumBound {
  // Height bound; leaves have height 0.
  std::size_t max_depth = 0;
  VarSet variables;
  Signature signature;
};

// Every term of height at most max_depth, each exactly once. Leaves come
// first (variables, then constants, lexically), followed for each symbol of
// positive arity in lexical order by all argument tuples over the terms of
// the next lower bound, in lexicographic index order.
std::vector<Term> enum_terms(const EnumBound& bound);

// Random-access enumeration of the substitutions with domain inside `domain`
// whose bindings come from a fixed term list. Index 0 is the identity; the
// first domain variable varies fastest, so the order for domain {X, Y} over
// [a] is {}, {X -> a}, {Y -> a}, {X -> a, Y -> a}. Identity bindings are
// skipped per variable.
class SubstitutionEnumerator {
 public:
  SubstitutionEnumerator(const VarSet& domain, std::vector<Term> terms);

  std::size_t size() const { return size_; }
  Substitution at(std::size_t index) const;

  // Choice index per domain variable for substitution `index`; 0 is unbound,
  // k > 0 is candidates(v)[k - 1].
  std::vector<std::size_t> digits(std::size_t index) const;
  const std::vector<std::string>& variables() const { return variables_; }
  // Terms available to `variables()[v]`, the variable itself excluded.
  const std::vector<Term>& candidates(std::size_t v) const {
    return candidates_[v];
  }

 private:
  std::vector<std::string> variables_;
  std::vector<std::vector<Term>> candidates_;
  std::size_t size_ = 1;
};

std::vector<Substitution> enum_substitutions(const VarSet& domain,
                                             const EnumBound& bound);

// The unifiers of (s, t) among enum_substitutions(Vars(s) u Vars(t), bound).
std::vector<Substitution> enumerated_unifiers(const Term& s, const Term& t,
                                              const EnumBound& bound);

}  // namespace termunify

#endif  // TERMUNIFY_ORACLE_H_
