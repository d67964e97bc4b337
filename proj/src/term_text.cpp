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

#include "assocnf/term_text.hpp"

#include <utility>
#include <vector>

namespace assocnf {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(offset) +
                         ": " + what),
      offset_(offset) {}

namespace {

bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string describe(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return "end of input";
  return std::string("'") + text[pos] + "'";
}

// One open parenthesis that has not been closed yet.
struct Frame {
  NodeId left = kNoNode;
  NodeId right = kNoNode;
};

}  // namespace

Term parse(std::string_view text) {
  TermBuilder builder;
  std::vector<Frame> open;
  std::size_t pos = 0;
  bool expect_term = true;
  bool done = false;

  auto skip_space = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };

  // Hands a finished subterm to the innermost open frame.
  auto complete = [&](NodeId id) {
    if (open.empty()) {
      builder.set_root(id);
      done = true;
    } else if (open.back().left == kNoNode) {
      open.back().left = id;
    } else {
      open.back().right = id;
    }
    expect_term = false;
  };

  while (!done) {
    skip_space();
    if (expect_term) {
      if (pos >= text.size()) {
        throw ParseError(pos, "expected a term, found end of input");
      }
      const char c = text[pos];
      if (c == '(') {
        open.emplace_back();
        ++pos;
      } else if (c == '.') {
        ++pos;
        complete(builder.add_leaf());
      } else if (is_label_char(c)) {
        const std::size_t start = pos;
        while (pos < text.size() && is_label_char(text[pos])) ++pos;
        complete(builder.add_leaf(text.substr(start, pos - start)));
      } else {
        throw ParseError(pos, "expected a term, found " + describe(text, pos));
      }
      continue;
    }

    Frame& frame = open.back();
    if (frame.right == kNoNode) {
      if (pos >= text.size() || text[pos] != '*') {
        throw ParseError(pos, "expected '*', found " + describe(text, pos));
      }
      ++pos;
      expect_term = true;
    } else {
      if (pos >= text.size() || text[pos] != ')') {
        throw ParseError(pos, "expected ')', found " + describe(text, pos));
      }
      ++pos;
      const NodeId id = builder.add_node(frame.left, frame.right);
      open.pop_back();
      complete(id);
    }
  }

  skip_space();
  if (pos != text.size()) {
    throw ParseError(pos, "trailing input " + describe(text, pos));
  }
  return std::move(builder).build();
}

std::string render(const Term& term) {
  std::string out;
  out.reserve(2 * term.node_count());
  // Entries are either a node to expand or a literal character to emit.
  struct Item {
    NodeId node;
    char literal;
  };
  std::vector<Item> stack{{term.root(), 0}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    if (item.node == kNoNode) {
      out.push_back(item.literal);
    } else if (term.is_leaf(item.node)) {
      const std::string_view label = term.label(item.node);
      if (label.empty()) {
        out.push_back('.');
      } else {
        out.append(label);
      }
    } else {
      stack.push_back({kNoNode, ')'});
      stack.push_back({term.right(item.node), 0});
      stack.push_back({kNoNode, '*'});
      stack.push_back({term.left(item.node), 0});
      out.push_back('(');
    }
  }
  return out;
}

}  // namespace assocnf
