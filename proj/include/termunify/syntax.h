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

#ifndef TERMUNIFY_SYNTAX_H_
#define TERMUNIFY_SYNTAX_H_

// Textual forms of signatures, terms, positions and substitutions.
//
//   signature file:  one `name/arity` per line; blank lines and lines
//                    starting with `#` are ignored
//   term:            VAR | SYM | SYM "(" [term ("," term)*] ")"
//   position:        `e` for the root, otherwise `2.1`
//   substitution:    `{X -> t, Y -> s}`, `{}` for the identity
//
// Whitespace between tokens is ignored. Printing lives with the types
// themselves (to_string overloads), and parse(to_string(x)) == x.

#include <string_view>

#include "termunify/position.h"
#include "termunify/substitution.h"
#include "termunify/term.h"

namespace termunify {

// Throws ParseError (with the 1-based line) or DuplicateSymbolError.
Signature parse_signature(std::string_view text);

// Every symbol must be declared in `sig` with the arity it is used at.
// Throws ParseError (0-based offset), UnknownSymbolError or
// ArityMismatchError.
Term parse_term(std::string_view text, const Signature& sig);

// Like parse_term, but undeclared symbols are added to `sig` with the arity
// of their first use; later uses must agree.
Term parse_term_declaring(std::string_view text, Signature& sig);

Position parse_position(std::string_view text);

Substitution parse_substitution(std::string_view text, const Signature& sig);
Substitution parse_substitution_declaring(std::string_view text,
                                          Signature& sig);

}  // namespace termunify

#endif  // TERMUNIFY_SYNTAX_H_
