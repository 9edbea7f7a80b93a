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

#include "termunify/syntax.h"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "termunify/errors.h"

namespace termunify {
namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

class Parser {
 public:
  // Exactly one of `fixed` and `open` is non-null.
  Parser(std::string_view text, const Signature* fixed, Signature* open)
      : text_(text), fixed_(fixed), open_(open) {}

  Term parse_whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

  Substitution parse_whole_substitution() {
    Substitution::Bindings bindings;
    expect('{');
    skip_space();
    if (!consume('}')) {
      do {
        std::size_t at = skip_space();
        std::string var = identifier();
        if (!is_variable_name(var)) fail("expected a variable", at);
        skip_space();
        if (text_.substr(pos_, 2) != "->") fail("expected '->'", pos_);
        pos_ += 2;
        Term t = term();
        if (bindings.contains(var)) fail("duplicate binding for " + var, at);
        if (t.is_var() && t.name() == var) {
          fail("identity binding " + var + " -> " + var, at);
        }
        bindings.emplace(std::move(var), std::move(t));
        skip_space();
      } while (consume(','));
      expect('}');
    }
    expect_end();
    return Substitution::from_bindings(std::move(bindings));
  }

 private:
  Term term() {
    std::size_t at = skip_space();
    std::string name = identifier();
    if (name.empty()) {
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of input",
           pos_);
    }
    if (is_variable_name(name)) return Term::var(std::move(name));
    if (!is_symbol_name(name)) fail("malformed identifier '" + name + "'", at);

    std::vector<Term> args;
    skip_space();
    if (consume('(')) {
      skip_space();
      if (!consume(')')) {
        do {
          args.push_back(term());
          skip_space();
        } while (consume(','));
        expect(')');
      }
    }
    if (open_ && !open_->contains(name)) open_->declare(name, args.size());
    return Term::app(open_ ? *open_ : *fixed_, name, std::move(args));
  }

  std::string identifier() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '?') ++pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!consume(c)) fail(std::string("expected '") + c + "'", pos_);
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing input", pos_);
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what + " at offset " + std::to_string(at), at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const Signature* fixed_;
  Signature* open_;
};

}  // namespace

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;

    std::size_t slash = line.find('/');
    auto error = [&](const std::string& what) {
      return ParseError(what + " on line " + std::to_string(line_no), line_no);
    };
    if (slash == std::string_view::npos) throw error("expected 'name/arity'");
    std::string_view name = trim(line.substr(0, slash));
    std::string_view digits = trim(line.substr(slash + 1));
    if (!is_symbol_name(name)) {
      throw error("'" + std::string(name) + "' is not a symbol name");
    }
    std::size_t arity = 0;
    auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), arity);
    if (digits.empty() || ec != std::errc() ||
        end != digits.data() + digits.size()) {
      throw error("malformed arity '" + std::string(digits) + "'");
    }
    sig.declare(std::string(name), arity);
  }
  return sig;
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, &sig, nullptr).parse_whole_term();
}

Term parse_term_declaring(std::string_view text, Signature& sig) {
  return Parser(text, nullptr, &sig).parse_whole_term();
}

Position parse_position(std::string_view text) {
  text = trim(text);
  if (text == "e") return Position::root();
  std::vector<std::size_t> indices;
  std::size_t offset = 0;
  while (true) {
    std::size_t dot = text.find('.', offset);
    std::string_view part = text.substr(offset, dot - offset);
    std::size_t value = 0;
    auto [end, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() ||
        end != part.data() + part.size() || value == 0) {
      throw ParseError("malformed position '" + std::string(text) + "'",
                       offset);
    }
    indices.push_back(value);
    if (dot == std::string_view::npos) break;
    offset = dot + 1;
  }
  return Position(std::move(indices));
}

Substitution parse_substitution(std::string_view text, const Signature& sig) {
  return Parser(text, &sig, nullptr).parse_whole_substitution();
}

Substitution parse_substitution_declaring(std::string_view text,
                                          Signature& sig) {
  return Parser(text, nullptr, &sig).parse_whole_substitution();
}

}  // namespace termunify
