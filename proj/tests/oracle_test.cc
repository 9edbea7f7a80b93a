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

#include "termunify/oracle.h"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "support/test_util.h"
#include "termunify/unify.h"

namespace termunify {
namespace {

using testing::S;
using testing::T;
using testing::TermGenerator;

// Number of terms of height <= depth: leaves plus, per symbol of arity n,
// n-tuples over the previous level.
std::size_t count_terms(std::size_t depth, std::size_t vars,
                        const Signature& sig) {
  std::size_t leaves = vars;
  for (const auto& [name, arity] : sig.entries()) leaves += arity == 0;
  std::size_t level = leaves;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::size_t next = leaves;
    for (const auto& [name, arity] : sig.entries()) {
      if (arity == 0) continue;
      std::size_t tuples = 1;
      for (std::size_t i = 0; i < arity; ++i) tuples *= level;
      next += tuples;
    }
    level = next;
  }
  return level;
}

TEST(SolveEquationsTest, Examples) {
  UnifyOutcome out = solve_equations({{T("X"), T("a")}});
  ASSERT_TRUE(out.unified());
  EXPECT_EQ(out.mgu(), S("{X -> a}"));

  out = solve_equations({{T("X"), T("g(X)")}});
  ASSERT_TRUE(out.failed());
  EXPECT_TRUE(std::holds_alternative<OccursCheck>(out.cause()));

  Term s = T("f(X, g(Y))");
  Term t = T("f(g(Z), X)");
  out = solve_equations({{s, t}});
  ASSERT_TRUE(out.unified());
  Substitution expected = S("{X -> g(Z), Y -> Z}");
  EXPECT_TRUE(subst_equal(out.mgu(), expected) ||
              (more_general(out.mgu(), expected) &&
               more_general(expected, out.mgu())));
  EXPECT_TRUE(is_unifier(out.mgu(), s, t));
}

TEST(SolveEquationsTest, Systems) {
  EXPECT_TRUE(solve_equations({}).unified());
  UnifyOutcome out = solve_equations({{T("X"), T("Y")}, {T("Y"), T("a")}});
  ASSERT_TRUE(out.unified());
  EXPECT_EQ(apply(out.mgu(), T("X")), T("a"));
  EXPECT_TRUE(is_idempotent(out.mgu()));

  out = solve_equations({{T("X"), T("a")}, {T("X"), T("b")}});
  ASSERT_TRUE(out.failed());
  EXPECT_TRUE(std::holds_alternative<Clash>(out.cause()));

  out = solve_equations({{T("g(a)"), T("f(X, Y)")}});
  ASSERT_TRUE(out.failed());
  EXPECT_EQ(out.cause(), FailureCause(Clash{Position(), "g", "f"}));
}

TEST(EnumTermsTest, Examples) {
  EXPECT_EQ(enum_terms({0, {"X"}, Signature{{"a", 0}}}),
            (std::vector<Term>{T("X"), T("a")}));
  EXPECT_EQ(enum_terms({1, {}, Signature{{"a", 0}, {"g", 1}}}),
            (std::vector<Term>{T("a"), T("g(a)")}));
  EXPECT_TRUE(enum_terms({0, {}, Signature{{"g", 1}}}).empty());
  EXPECT_TRUE(enum_terms({3, {}, Signature{{"g", 1}}}).empty());
}

TEST(EnumTermsTest, OrderAtDepthOne) {
  std::vector<Term> terms = enum_terms({1, {"X"}, Signature{{"a", 0}, {"f", 2}}});
  std::vector<Term> expected = {T("X"),       T("a"),       T("f(X, X)"),
                                T("f(X, a)"), T("f(a, X)"), T("f(a, a)")};
  EXPECT_EQ(terms, expected);
}

TEST(EnumTermsTest, CountsAndHeights) {
  const Signature& sig = testing::small_signature();
  for (std::size_t depth = 0; depth <= 2; ++depth) {
    std::vector<Term> terms = enum_terms({depth, {"X", "Y"}, sig});
    EXPECT_EQ(terms.size(), count_terms(depth, 2, sig));
    std::set<Term> distinct(terms.begin(), terms.end());
    EXPECT_EQ(distinct.size(), terms.size());
    for (const Term& t : terms) EXPECT_LE(term_height(t), depth);
  }
  EXPECT_EQ(enum_terms({2, {"X", "Y"}, sig}).size(), 604u);
}

TEST(EnumTermsTest, CoversRandomTerms) {
  const Signature& sig = testing::small_signature();
  std::vector<Term> terms = enum_terms({2, {"X", "Y"}, sig});
  std::set<Term> all(terms.begin(), terms.end());
  TermGenerator gen(21, sig, {"X", "Y"});
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(all.count(gen.term(2)));
}

TEST(EnumSubstitutionsTest, Examples) {
  Signature sig{{"a", 0}};
  EXPECT_EQ(enum_substitutions({}, {1, {"X"}, sig}),
            std::vector<Substitution>{Substitution()});
  EXPECT_EQ(enum_substitutions({"X"}, {0, {"X"}, sig}),
            (std::vector<Substitution>{Substitution(), S("{X -> a}")}));
  EXPECT_EQ(enum_substitutions({"X", "Y"}, {0, {}, sig}),
            (std::vector<Substitution>{Substitution(), S("{X -> a}"),
                                       S("{Y -> a}"), S("{X -> a, Y -> a}")}));
}

TEST(SubstitutionEnumeratorTest, RandomAccess) {
  std::vector<Term> terms = {T("X"), T("Y"), T("a"), T("b")};
  SubstitutionEnumerator e({"X", "Y"}, terms);
  EXPECT_EQ(e.size(), 16u);  // three choices each: unbound or two others
  ASSERT_EQ(e.variables(), (std::vector<std::string>{"X", "Y"}));
  EXPECT_EQ(e.candidates(0), (std::vector<Term>{T("Y"), T("a"), T("b")}));
  std::set<std::string> seen;
  for (std::size_t i = 0; i < e.size(); ++i) {
    Substitution s = e.at(i);
    std::vector<std::size_t> d = e.digits(i);
    EXPECT_EQ(d[0] + 4 * d[1], i);
    for (std::size_t v = 0; v < 2; ++v) {
      Term image = s.image(e.variables()[v]);
      if (d[v] == 0) {
        EXPECT_EQ(image, Term::var(e.variables()[v]));
      } else {
        EXPECT_EQ(image, e.candidates(v)[d[v] - 1]);
      }
    }
    EXPECT_TRUE(seen.insert(to_string(s)).second);
  }
  // X and Y take the values Y and X in one of them.
  EXPECT_TRUE(seen.count("{X -> Y, Y -> X}"));
}

TEST(EnumeratedUnifiersTest, Examples) {
  EnumBound bound{0, {"X"}, Signature{{"a", 0}, {"b", 0}}};
  EXPECT_EQ(enumerated_unifiers(T("a"), T("a"), bound),
            enum_substitutions({}, bound));
  EXPECT_TRUE(enumerated_unifiers(T("a"), T("b"), bound).empty());
  EXPECT_EQ(enumerated_unifiers(T("X"), T("a"), bound),
            std::vector<Substitution>{S("{X -> a}")});
}

TEST(EnumeratedUnifiersTest, SoundAndCertifiesMgu) {
  EnumBound bound{1, {"X", "Y"}, testing::small_signature()};
  TermGenerator gen(23, testing::small_signature(), {"X", "Y"});
  int certified = 0;
  for (int i = 0; i < 200; ++i) {
    auto [s, t] = gen.related_pair(2);
    std::vector<Substitution> unifiers = enumerated_unifiers(s, t, bound);
    for (const Substitution& u : unifiers) EXPECT_TRUE(is_unifier(u, s, t));
    UnifyOutcome out = robinson_unify(s, t);
    if (!out.unified()) {
      EXPECT_TRUE(unifiers.empty());
      continue;
    }
    EXPECT_TRUE(is_mgu(out.mgu(), s, t, unifiers));
    certified += !unifiers.empty();
  }
  EXPECT_GT(certified, 50);
}

}  // namespace
}  // namespace termunify
