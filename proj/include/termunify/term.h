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

#ifndef TERMUNIFY_TERM_H_
#define TERMUNIFY_TERM_H_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "termunify/position.h"

namespace termunify {

// Variables start with an uppercase letter or `?`; function symbols start with
// a lowercase letter. Both continue with letters, digits or `_`.
bool is_variable_name(std::string_view name);
bool is_symbol_name(std::string_view name);

// Function symbols with their arities. Iteration is in lexical symbol order.
class Signature {
 public:
  using Entries = std::map<std::string, std::size_t, std::less<>>;

  Signature() = default;
  Signature(std::initializer_list<std::pair<std::string, std::size_t>> decls);

  // Throws DuplicateSymbolError or InvalidArgumentError (bad name).
  void declare(std::string symbol, std::size_t arity);

  std::optional<std::size_t> arity(std::string_view symbol) const;
  bool contains(std::string_view symbol) const;
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Entries entries_;
};

// A first-order term: a variable, or a function symbol applied to exactly as
// many arguments as its arity.
//
// Applications can only be created against a Signature, which checks the
// arity. Rebuilding an existing application through with_args() keeps the
// symbol and demands the same argument count, so every Term reachable through
// the public interface is well-formed for the signature it was built from.
class Term {
 public:
  enum class Kind : unsigned char { kVariable, kApplication };

  // Throws InvalidArgumentError if `name` is not a variable name.
  static Term var(std::string name);
  // Throws UnknownSymbolError or ArityMismatchError.
  static Term app(const Signature& sig, std::string_view symbol,
                  std::vector<Term> args = {});

  // Same head symbol, new arguments. Throws ArityMismatchError if the count
  // differs from arity().
  Term with_args(std::vector<Term> args) const;

  Kind kind() const { return kind_; }
  bool is_var() const { return kind_ == Kind::kVariable; }
  bool is_app() const { return kind_ == Kind::kApplication; }

  // Variable name or head symbol.
  const std::string& name() const { return name_; }
  std::size_t arity() const { return args_.size(); }
  std::span<const Term> args() const { return args_; }
  // 1-based, matching positions.
  const Term& arg(std::size_t index) const;

  friend bool operator==(const Term& a, const Term& b);
  // Total structural order: variables before applications, then by name,
  // then argument-wise.
  friend bool operator<(const Term& a, const Term& b);

 private:
  Term(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_ = Kind::kVariable;
  std::string name_;
  std::vector<Term> args_;
};

int compare(const Term& a, const Term& b);

using VarSet = std::set<std::string, std::less<>>;

// Pos(t). Finite and prefix-closed.
PositionSet positions_of(const Term& t);

bool is_valid_position(const Term& t, const Position& p);

// t|p. Throws InvalidPositionError naming the first index that leaves `t`.
const Term& subterm_at(const Term& t, const Position& p);

// t[p <- s]. Throws InvalidPositionError.
Term replace_at(const Term& t, const Position& p, Term s);

// Vars(t).
VarSet vars_of(const Term& t);
void collect_vars(const Term& t, VarSet& out);
bool occurs_in(std::string_view var, const Term& t);

// {p | t|p = s}.
PositionSet occurrences(const Term& t, const Term& s);

// Node count; equals |positions_of(t)|.
std::size_t term_size(const Term& t);

// Height of the tree; leaves have height 0.
std::size_t term_height(const Term& t);

// Canonical form: `f(t1,t2)`, constants without parentheses.
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace termunify

#endif  // TERMUNIFY_TERM_H_
