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

#ifndef TERMUNIFY_POSITION_H_
#define TERMUNIFY_POSITION_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace termunify {

// A path from the root of a term to one of its subterms, as a sequence of
// 1-based argument indices. The empty sequence is the root position and is
// written `e`; other positions are written dot-separated, e.g. `2.1`.
//
// Positions order lexicographically, so the root precedes everything and a
// position precedes all positions below it.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<std::size_t> indices);
  explicit Position(std::vector<std::size_t> indices);

  static Position root() { return Position(); }

  bool is_root() const { return indices_.empty(); }
  std::size_t length() const { return indices_.size(); }
  std::span<const std::size_t> indices() const { return indices_; }

  // Precondition for the accessors below: !is_root().
  std::size_t front() const;
  std::size_t back() const;
  // The position without its first index.
  Position rest() const;
  // The position without its last index.
  Position parent() const;

  // `p.i`
  Position child(std::size_t index) const;
  // `i.p`
  Position prefixed(std::size_t index) const;
  // Same length, last index moved one to the right.
  Position next_sibling() const;

  // True when `prefix` is a (not necessarily proper) prefix of this position.
  bool has_prefix(const Position& prefix) const;

  std::string to_string() const;

  friend bool operator==(const Position&, const Position&) = default;
  friend std::strong_ordering operator<=>(const Position& a,
                                          const Position& b);

 private:
  std::vector<std::size_t> indices_;
};

// Sequence concatenation `p.q`; the root is a two-sided identity.
Position concat(const Position& p, const Position& q);

std::ostream& operator<<(std::ostream& os, const Position& p);

using PositionSet = std::set<Position>;

// Space separated, in set order: `e 1 2 2.1`.
std::string to_string(const PositionSet& positions);

}  // namespace termunify

#endif  // TERMUNIFY_POSITION_H_
