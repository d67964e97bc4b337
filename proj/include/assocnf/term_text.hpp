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

// Text format for terms:
//
//   T    ::= LEAF | "(" T "*" T ")"
//   LEAF ::= [a-z0-9_]+ | "."
//
// Whitespace is allowed between tokens. render() emits the canonical form:
// fully parenthesized, no whitespace, "." for unlabeled leaves. The
// canonical string is also the node key of rewrite graphs.

#ifndef ASSOCNF_TERM_TEXT_HPP_
#define ASSOCNF_TERM_TEXT_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "assocnf/term.hpp"

namespace assocnf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);

  // Byte offset into the input where parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Accepts arbitrarily deep nesting; no recursion is involved.
Term parse(std::string_view text);

std::string render(const Term& term);

}  // namespace assocnf

#endif  // ASSOCNF_TERM_TEXT_HPP_
