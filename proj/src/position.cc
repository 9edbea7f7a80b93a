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

#include "termunify/position.h"

#include <algorithm>
#include <utility>

#include "termunify/errors.h"

namespace termunify {
namespace {

void check_indices(const std::vector<std::size_t>& indices) {
  for (std::size_t i : indices) {
    if (i == 0) {
      throw InvalidArgumentError("position indices are 1-based");
    }
  }
}

}  // namespace

Position::Position(std::initializer_list<std::size_t> indices)
    : indices_(indices) {
  check_indices(indices_);
}

Position::Position(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  check_indices(indices_);
}

std::size_t Position::front() const {
  if (is_root()) throw PreconditionError("root position has no first index");
  return indices_.front();
}

std::size_t Position::back() const {
  if (is_root()) throw PreconditionError("root position has no last index");
  return indices_.back();
}

Position Position::rest() const {
  if (is_root()) throw PreconditionError("root position has no rest");
  Position out;
  out.indices_.assign(indices_.begin() + 1, indices_.end());
  return out;
}

Position Position::parent() const {
  if (is_root()) throw PreconditionError("root position has no parent");
  Position out = *this;
  out.indices_.pop_back();
  return out;
}

Position Position::child(std::size_t index) const {
  if (index == 0) throw InvalidArgumentError("position indices are 1-based");
  Position out = *this;
  out.indices_.push_back(index);
  return out;
}

Position Position::prefixed(std::size_t index) const {
  if (index == 0) throw InvalidArgumentError("position indices are 1-based");
  Position out;
  out.indices_.reserve(indices_.size() + 1);
  out.indices_.push_back(index);
  out.indices_.insert(out.indices_.end(), indices_.begin(), indices_.end());
  return out;
}

Position Position::next_sibling() const {
  if (is_root()) throw PreconditionError("root position has no siblings");
  Position out = *this;
  ++out.indices_.back();
  return out;
}

bool Position::has_prefix(const Position& prefix) const {
  return prefix.length() <= length() &&
         std::equal(prefix.indices_.begin(), prefix.indices_.end(),
                    indices_.begin());
}

std::string Position::to_string() const {
  if (is_root()) return "e";
  std::string out;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k > 0) out += '.';
    out += std::to_string(indices_[k]);
  }
  return out;
}

std::strong_ordering operator<=>(const Position& a, const Position& b) {
  return std::lexicographical_compare_three_way(
      a.indices_.begin(), a.indices_.end(), b.indices_.begin(),
      b.indices_.end());
}

Position concat(const Position& p, const Position& q) {
  std::vector<std::size_t> indices(p.indices().begin(), p.indices().end());
  indices.insert(indices.end(), q.indices().begin(), q.indices().end());
  return Position(std::move(indices));
}

std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << p.to_string();
}

std::string to_string(const PositionSet& positions) {
  std::string out;
  for (const Position& p : positions) {
    if (!out.empty()) out += ' ';
    out += p.to_string();
  }
  return out;
}

}  // namespace termunify
