// Copyright 2026 The starapolar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STARAPOLAR_PARSE_HPP
#define STARAPOLAR_PARSE_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "starapolar/field.hpp"
#include "starapolar/poly.hpp"

namespace starapolar {

struct ParseOptions {
  // Required ring; inferred from the variable letter when unset.
  std::optional<Ring> ring;
  // Declared n+1. Inferred as (largest variable index + 1) when unset.
  std::optional<std::size_t> num_vars;
};

// Grammar, whitespace-insensitive:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | ('x' | 'y') integer | '(' expr ')'
// Products of sums are expanded; '/' only accepts a nonzero constant divisor.
// The expanded result must be homogeneous, otherwise InhomogeneousError names
// the first term whose degree differs from the leading term's.
HomogeneousForm<RationalField> parse_form(std::string_view text, const ParseOptions& options = {});

}  // namespace starapolar

#endif  // STARAPOLAR_PARSE_HPP
