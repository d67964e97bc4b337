// Copyright 2026 The assocnf Authors
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

#ifndef ASSOCNF_POSITION_HPP_
#define ASSOCNF_POSITION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocnf/term.hpp"

namespace assocnf {

enum class Dir : unsigned char { kLeft, kRight };

// Path from the root of a term; empty addresses the root itself.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<Dir> path) : path_(std::move(path)) {}

  // "ε" (or "") for the root, otherwise a string over {L, R}.
  static std::optional<Position> from_string(std::string_view text);
  std::string to_string() const;

  std::size_t depth() const { return path_.size(); }
  bool is_root() const { return path_.empty(); }
  const std::vector<Dir>& path() const { return path_; }

  Position child(Dir dir) const;
  void push(Dir dir) { path_.push_back(dir); }

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Dir> path_;
};

// Redex selection order: deeper positions first, equal depths compared
// lexicographically with L < R.
struct DeeperFirst {
  bool operator()(const Position& a, const Position& b) const;
};

// Node addressed by `position`, or nullopt if the path leaves the tree.
std::optional<NodeId> locate(const Term& term, const Position& position);

}  // namespace assocnf

#endif  // ASSOCNF_POSITION_HPP_
