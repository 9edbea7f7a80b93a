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

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "support/test_util.h"
#include "termunify/errors.h"

namespace termunify {
namespace {

using testing::P;
using testing::T;
using testing::TermGenerator;

// Every index sequence up to the term's height with entries up to the widest
// arity in the signature, kept when a direct walk over args() succeeds.
PositionSet brute_force_positions(const Term& t) {
  PositionSet out;
  std::function<void(std::vector<std::size_t>&)> grow =
      [&](std::vector<std::size_t>& path) {
        const Term* cur = &t;
        for (std::size_t i : path) {
          if (i > cur->args().size()) return;
          cur = &cur->args()[i - 1];
        }
        out.insert(Position(path));
        if (path.size() == term_height(t)) return;
        for (std::size_t i = 1; i <= 3; ++i) {
          path.push_back(i);
          grow(path);
          path.pop_back();
        }
      };
  std::vector<std::size_t> path;
  grow(path);
  return out;
}

TEST(PositionTest, RootAndConcatenation) {
  EXPECT_TRUE(Position().is_root());
  EXPECT_EQ(Position().to_string(), "e");
  EXPECT_EQ(concat(Position(), P("1.2")), P("1.2"));
  EXPECT_EQ(concat(P("1.2"), P("1")), P("1.2.1"));
  EXPECT_EQ(concat(P("2.1"), Position()), P("2.1"));
}

TEST(PositionTest, LexicographicOrder) {
  EXPECT_LT(Position(), P("1"));
  EXPECT_LT(P("1"), P("1.1"));
  EXPECT_LT(P("1.1"), P("2"));
  EXPECT_LT(P("2"), P("2.1"));
  EXPECT_LT(P("2.1"), P("10"));
}

TEST(PositionTest, RejectsZeroIndex) {
  EXPECT_THROW(Position({1, 0}), InvalidArgumentError);
  EXPECT_THROW(P("1").child(0), InvalidArgumentError);
}

TEST(PositionTest, Navigation) {
  Position p = P("2.1.3");
  EXPECT_EQ(p.front(), 2u);
  EXPECT_EQ(p.back(), 3u);
  EXPECT_EQ(p.rest(), P("1.3"));
  EXPECT_EQ(p.parent(), P("2.1"));
  EXPECT_EQ(p.next_sibling(), P("2.1.4"));
  EXPECT_EQ(P("1.3").prefixed(2), p);
  EXPECT_TRUE(p.has_prefix(P("2.1")));
  EXPECT_TRUE(p.has_prefix(Position()));
  EXPECT_FALSE(P("2").has_prefix(p));
  EXPECT_THROW(Position().parent(), PreconditionError);
}

TEST(SignatureTest, RejectsDuplicatesAndBadNames) {
  Signature sig{{"f", 2}};
  EXPECT_THROW(sig.declare("f", 1), DuplicateSymbolError);
  EXPECT_THROW(sig.declare("X", 0), InvalidArgumentError);
  EXPECT_EQ(sig.arity("f"), 2u);
  EXPECT_FALSE(sig.arity("g").has_value());
}

TEST(TermTest, ConstructionChecksArity) {
  const Signature& sig = testing::wide_signature();
  EXPECT_THROW(Term::app(sig, "f", {Term::var("X")}), ArityMismatchError);
  EXPECT_THROW(Term::app(sig, "k", {}), UnknownSymbolError);
  EXPECT_THROW(Term::var("x"), InvalidArgumentError);
  EXPECT_NO_THROW(Term::var("?x"));
  Term g = T("g(a)");
  EXPECT_THROW(g.with_args({}), ArityMismatchError);
  EXPECT_EQ(g.with_args({T("b")}), T("g(b)"));
}

TEST(TermTest, PositionsOf) {
  EXPECT_EQ(positions_of(T("X")), PositionSet{Position()});
  EXPECT_EQ(positions_of(T("a")), PositionSet{Position()});
  Term t = T("f(X, g(a))");
  PositionSet expected = brute_force_positions(t);
  ASSERT_EQ(expected, (PositionSet{Position(), P("1"), P("2"), P("2.1")}));
  EXPECT_EQ(positions_of(t), expected);
  EXPECT_EQ(to_string(positions_of(t)), "e 1 2 2.1");
}

TEST(TermTest, IsValidPosition) {
  EXPECT_TRUE(is_valid_position(T("X"), Position()));
  EXPECT_FALSE(is_valid_position(T("f(a,b)"), P("3")));
  EXPECT_TRUE(is_valid_position(T("f(X, g(a))"), P("2.1")));
  EXPECT_FALSE(is_valid_position(T("f(X, g(a))"), P("1.1")));
}

TEST(TermTest, SubtermAt) {
  Term t = T("f(X, g(a))");
  EXPECT_EQ(subterm_at(t, Position()), t);
  EXPECT_EQ(subterm_at(t, P("2.1")), T("a"));
  try {
    subterm_at(t, P("1.1"));
    FAIL() << "expected InvalidPositionError";
  } catch (const InvalidPositionError& e) {
    EXPECT_EQ(e.position(), "1.1");
    EXPECT_EQ(e.offending_prefix(), "1.1");
  }
  try {
    subterm_at(t, P("3.1"));
    FAIL() << "expected InvalidPositionError";
  } catch (const InvalidPositionError& e) {
    EXPECT_EQ(e.offending_prefix(), "3");
  }
}

TEST(TermTest, ReplaceAt) {
  EXPECT_EQ(replace_at(T("f(X,Y)"), Position(), T("b")), T("b"));
  EXPECT_EQ(replace_at(T("f(X, g(a))"), P("2.1"), T("b")), T("f(X, g(b))"));
  EXPECT_EQ(replace_at(T("f(X, Y)"), P("2"), T("g(a)")), T("f(X, g(a))"));
  EXPECT_THROW(replace_at(T("f(X, Y)"), P("1.1"), T("a")), InvalidPositionError);
}

TEST(TermTest, VarsOf) {
  EXPECT_TRUE(vars_of(T("a")).empty());
  EXPECT_EQ(vars_of(T("X")), VarSet{"X"});
  EXPECT_EQ(vars_of(T("h(X, g(X), Y)")), (VarSet{"X", "Y"}));
}

TEST(TermTest, Occurrences) {
  Term t = T("f(X, g(X))");
  EXPECT_TRUE(occurrences(t, t).contains(Position()));
  EXPECT_EQ(occurrences(t, T("X")), (PositionSet{P("1"), P("2.1")}));
  EXPECT_TRUE(occurrences(T("f(a, b)"), T("X")).empty());
}

TEST(TermTest, SizeAndHeight) {
  EXPECT_EQ(term_size(T("X")), 1u);
  EXPECT_EQ(term_size(T("a")), 1u);
  EXPECT_EQ(term_size(T("f(X, g(a))")), 4u);
  EXPECT_EQ(term_height(T("a")), 0u);
  EXPECT_EQ(term_height(T("f(X, g(a))")), 2u);
}

TEST(TermTest, PrintsCanonicalForm) {
  EXPECT_EQ(to_string(T("f( X ,g( a() ) )")), "f(X,g(a))");
  EXPECT_EQ(to_string(T("h(a,b,c)")), "h(a,b,c)");
}

TEST(TermTest, StructuralOrderIsTotal) {
  std::vector<Term> ts = {T("X"), T("Y"), T("a"), T("g(a)"), T("f(a,b)"),
                          T("f(a,X)")};
  for (const Term& a : ts) {
    for (const Term& b : ts) {
      EXPECT_EQ(compare(a, b) == 0, a == b);
      EXPECT_EQ(compare(a, b), -compare(b, a));
    }
  }
}

TEST(TermPropertyTest, PositionInvariants) {
  TermGenerator gen(7, testing::wide_signature(), {"X", "Y", "Z"});
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(4);
    PositionSet ps = positions_of(t);
    ASSERT_EQ(ps, brute_force_positions(t)) << to_string(t);
    EXPECT_EQ(term_size(t), ps.size());
    for (const Position& p : ps) {
      if (!p.is_root()) {
        EXPECT_TRUE(ps.contains(p.parent())) << "prefix-closed";
      }
      EXPECT_EQ(replace_at(t, p, subterm_at(t, p)), t);
    }
    Position q = gen.any_position(4, 3);
    EXPECT_EQ(is_valid_position(t, q), ps.contains(q));
  }
}

TEST(TermPropertyTest, ReplaceLeavesDisjointPositionsAlone) {
  TermGenerator gen(11, testing::wide_signature(), {"X", "Y"});
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(4);
    Position p = gen.position_in(t);
    Term s = gen.term(2);
    Term r = replace_at(t, p, s);
    EXPECT_EQ(subterm_at(r, p), s);
    for (const Position& q : positions_of(t)) {
      if (q.has_prefix(p) || p.has_prefix(q)) continue;
      EXPECT_EQ(subterm_at(r, q), subterm_at(t, q));
    }
  }
}

}  // namespace
}  // namespace termunify
