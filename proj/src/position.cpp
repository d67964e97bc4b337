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

#include "assocnf/position.hpp"

#include <algorithm>

namespace assocnf {

namespace {
constexpr std::string_view kRootText = "\xCE\xB5";  // ε
}  // namespace

std::optional<Position> Position::from_string(std::string_view text) {
  if (text == kRootText) return Position{};
  std::vector<Dir> path;
  path.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      path.push_back(Dir::kLeft);
    } else if (c == 'R') {
      path.push_back(Dir::kRight);
    } else {
      return std::nullopt;
    }
  }
  return Position(std::move(path));
}

std::string Position::to_string() const {
  if (path_.empty()) return std::string(kRootText);
  std::string out;
  out.reserve(path_.size());
  for (Dir d : path_) out.push_back(d == Dir::kLeft ? 'L' : 'R');
  return out;
}

Position Position::child(Dir dir) const {
  Position out = *this;
  out.path_.push_back(dir);
  return out;
}

bool DeeperFirst::operator()(const Position& a, const Position& b) const {
  if (a.depth() != b.depth()) return a.depth() > b.depth();
  return std::lexicographical_compare(a.path().begin(), a.path().end(),
                                      b.path().begin(), b.path().end());
}

std::optional<NodeId> locate(const Term& term, const Position& position) {
  NodeId id = term.root();
  for (Dir d : position.path()) {
    if (term.is_leaf(id)) return std::nullopt;
    id = d == Dir::kLeft ? term.left(id) : term.right(id);
  }
  return id;
}

}  // namespace assocnf
