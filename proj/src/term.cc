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

#include "termunify/term.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "termunify/errors.h"

namespace termunify {
namespace {

bool is_ident_tail(std::string_view rest) {
  return std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

void collect_positions(const Term& t, std::vector<std::size_t>& path,
                       PositionSet& out) {
  out.insert(out.end(), Position(path));
  for (std::size_t i = 1; i <= t.arity(); ++i) {
    path.push_back(i);
    collect_positions(t.arg(i), path, out);
    path.pop_back();
  }
}

void collect_occurrences(const Term& t, const Term& s,
                         std::vector<std::size_t>& path, PositionSet& out) {
  if (t == s) out.insert(Position(path));
  for (std::size_t i = 1; i <= t.arity(); ++i) {
    path.push_back(i);
    collect_occurrences(t.arg(i), s, path, out);
    path.pop_back();
  }
}

[[noreturn]] void throw_invalid(const Position& p, std::size_t bad) {
  std::vector<std::size_t> prefix(p.indices().begin(),
                                  p.indices().begin() + bad + 1);
  throw InvalidPositionError(p.to_string(), Position(prefix).to_string());
}

Term replace_rec(const Term& t, const Position& p, std::size_t depth,
                 Term& s) {
  if (depth == p.length()) return std::move(s);
  std::size_t i = p.indices()[depth];
  if (i > t.arity()) throw_invalid(p, depth);
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[i - 1] = replace_rec(t.arg(i), p, depth + 1, s);
  return t.with_args(std::move(args));
}

void print(const Term& t, std::string& out) {
  out += t.name();
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 1; i <= t.arity(); ++i) {
    if (i > 1) out += ',';
    print(t.arg(i), out);
  }
  out += ')';
}

}  // namespace

bool is_variable_name(std::string_view name) {
  if (name.empty()) return false;
  if (name.front() == '?') return name.size() > 1 && is_ident_tail(name.substr(1));
  return std::isupper(static_cast<unsigned char>(name.front())) &&
         is_ident_tail(name.substr(1));
}

bool is_symbol_name(std::string_view name) {
  return !name.empty() &&
         std::islower(static_cast<unsigned char>(name.front())) &&
         is_ident_tail(name.substr(1));
}

Signature::Signature(
    std::initializer_list<std::pair<std::string, std::size_t>> decls) {
  for (const auto& [symbol, arity] : decls) declare(symbol, arity);
}

void Signature::declare(std::string symbol, std::size_t arity) {
  if (!is_symbol_name(symbol)) {
    throw InvalidArgumentError("'" + symbol + "' is not a symbol name");
  }
  if (entries_.contains(symbol)) throw DuplicateSymbolError(symbol);
  entries_.emplace(std::move(symbol), arity);
}

std::optional<std::size_t> Signature::arity(std::string_view symbol) const {
  auto it = entries_.find(symbol);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool Signature::contains(std::string_view symbol) const {
  return entries_.find(symbol) != entries_.end();
}

Term Term::var(std::string name) {
  if (!is_variable_name(name)) {
    throw InvalidArgumentError("'" + name + "' is not a variable name");
  }
  return Term(Kind::kVariable, std::move(name), {});
}

Term Term::app(const Signature& sig, std::string_view symbol,
               std::vector<Term> args) {
  std::optional<std::size_t> arity = sig.arity(symbol);
  if (!arity) throw UnknownSymbolError(std::string(symbol));
  if (*arity != args.size()) {
    throw ArityMismatchError(std::string(symbol), *arity, args.size());
  }
  return Term(Kind::kApplication, std::string(symbol), std::move(args));
}

Term Term::with_args(std::vector<Term> args) const {
  if (!is_app()) throw PreconditionError("variables have no arguments");
  if (args.size() != args_.size()) {
    throw ArityMismatchError(name_, args_.size(), args.size());
  }
  return Term(Kind::kApplication, name_, std::move(args));
}

const Term& Term::arg(std::size_t index) const {
  if (index == 0 || index > args_.size()) {
    throw InvalidPositionError(std::to_string(index), std::to_string(index));
  }
  return args_[index - 1];
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.name_ == b.name_ && a.args_ == b.args_;
}

int compare(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  for (std::size_t i = 1; i <= a.arity(); ++i) {
    if (int c = compare(a.arg(i), b.arg(i)); c != 0) return c;
  }
  return 0;
}

bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

PositionSet positions_of(const Term& t) {
  PositionSet out;
  std::vector<std::size_t> path;
  collect_positions(t, path, out);
  return out;
}

bool is_valid_position(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i : p.indices()) {
    if (i > cur->arity()) return false;
    cur = &cur->arg(i);
  }
  return true;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  std::span<const std::size_t> idx = p.indices();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] > cur->arity()) throw_invalid(p, k);
    cur = &cur->arg(idx[k]);
  }
  return *cur;
}

Term replace_at(const Term& t, const Position& p, Term s) {
  return replace_rec(t, p, 0, s);
}

void collect_vars(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

VarSet vars_of(const Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

bool occurs_in(std::string_view var, const Term& t) {
  if (t.is_var()) return t.name() == var;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs_in(var, a); });
}

PositionSet occurrences(const Term& t, const Term& s) {
  PositionSet out;
  std::vector<std::size_t> path;
  collect_occurrences(t, s, path, out);
  return out;
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const Term& a : t.args()) n += term_size(a);
  return n;
}

std::size_t term_height(const Term& t) {
  std::size_t h = 0;
  for (const Term& a : t.args()) h = std::max(h, term_height(a) + 1);
  return h;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << to_string(t);
}

}  // namespace termunify
