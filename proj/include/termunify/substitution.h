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

#ifndef TERMUNIFY_SUBSTITUTION_H_
#define TERMUNIFY_SUBSTITUTION_H_

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "termunify/position.h"
#include "termunify/term.h"

namespace termunify {

// A finite map from variables to terms that never stores an identity binding
// `X -> X`. The key set is therefore exactly the domain {x | x.sigma != x},
// and two substitutions denote the same function iff their maps are equal.
class Substitution {
 public:
  using Bindings = std::map<std::string, Term, std::less<>>;

  Substitution() = default;

  static Substitution identity() { return Substitution(); }
  // {x -> t}. Throws InvalidArgumentError if t is the variable x itself or x
  // is not a variable name.
  static Substitution singleton(std::string var, Term t);
  // Builds from explicit bindings. Identity bindings are rejected, as for
  // singleton().
  static Substitution from_bindings(Bindings bindings);

  // The image of `var`: its binding, or the variable itself when unbound.
  Term image(std::string_view var) const;
  // nullptr when unbound.
  const Term* lookup(std::string_view var) const;

  const Bindings& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  explicit Substitution(Bindings bindings) : bindings_(std::move(bindings)) {}

  // Inserts unless `t` is the variable `var`.
  void bind_unless_identity(std::string var, Term t);

  friend Substitution compose(const Substitution&, const Substitution&);
  friend Substitution restrict_to(const Substitution&, const VarSet&);
  friend class Matcher;

  Bindings bindings_;
};

VarSet dom(const Substitution& sigma);
std::set<Term> ran(const Substitution& sigma);
VarSet vran(const Substitution& sigma);

// Homomorphic extension of sigma applied to t.
Term apply(const Substitution& sigma, const Term& t);

// sigma o tau: x -> apply(sigma, tau(x)). Bindings that cancel to the
// identity are dropped.
Substitution compose(const Substitution& sigma, const Substitution& tau);

Substitution restrict_to(const Substitution& sigma, const VarSet& vars);

// sigma o sigma = sigma, checked by composing.
bool idempotent_by_composition(const Substitution& sigma);
// dom(sigma) and vran(sigma) are disjoint.
bool idempotent_by_disjointness(const Substitution& sigma);
// Both characterizations; throws std::logic_error if they ever disagree.
bool is_idempotent(const Substitution& sigma);

bool subst_equal(const Substitution& a, const Substitution& b);

struct Matched {
  Substitution witness;
};

struct NoMatch {
  enum class Reason { kClash, kInconsistentBinding };
  Reason reason;
  Position at;
};

using MatchResult = std::variant<Matched, NoMatch>;

// One-sided unification: finds gamma with apply(gamma, pattern) = target and
// dom(gamma) within vars_of(pattern). Variables of the target are treated as
// constants. On failure reports the leftmost-outermost conflict.
MatchResult match_terms(const Term& pattern, const Term& target);

// A gamma with compose(gamma, theta) = sigma, if one exists.
std::optional<Substitution> generality_witness(const Substitution& theta,
                                               const Substitution& sigma);

// theta <= sigma.
bool more_general(const Substitution& theta, const Substitution& sigma);

// `{X -> g(Z), Y -> Z}`, `{}` for the identity.
std::string to_string(const Substitution& sigma);
std::ostream& operator<<(std::ostream& os, const Substitution& sigma);

}  // namespace termunify

#endif  // TERMUNIFY_SUBSTITUTION_H_
