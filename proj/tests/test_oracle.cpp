#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "subdirekt/oracle.hpp"

using namespace subdirekt;

namespace {

GradedElement el(long long grade, std::vector<long long> fiber) {
  return GradedElement{grade, std::move(fiber)};
}

// value of an exponent vector over the generators (1, m_i) of S_M
std::pair<long long, long long> evaluate(const std::vector<long long>& exps,
                                         const std::vector<long long>& m) {
  long long grade = 0, fiber = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    grade += exps[i];
    fiber += exps[i] * m[i];
  }
  return {grade, fiber};
}

}  // namespace

TEST_CASE("relations_up_to") {
  CHECK(relations_up_to(build_sm({1, 2}), 6).empty());  // free

  RelationTable t = relations_up_to(build_sm({1, 2, 4}), 7);
  CHECK_FALSE(t.empty());
  RelationWitness eq2;
  eq2.lhs = {2, 4, 1};
  eq2.rhs = {4, 1, 2};
  CHECK(t.contains(eq2));

  // symmetry of containment
  RelationWitness flipped;
  flipped.lhs = eq2.rhs;
  flipped.rhs = eq2.lhs;
  CHECK(t.contains(flipped));

  // powers of an idempotent fiber stay distinct across grades
  FiniteSemigroup lz(2, {0, 0, 1, 1});
  GeneratedSub mono(Ambient::nxs(lz), {el(1, {0})});
  CHECK(relations_up_to(mono, 4).empty());

  CHECK_THROWS_AS(relations_up_to(build_sm({1, 2}), 1), Error);
}

TEST_CASE("relation groups are deduplicated and value-consistent") {
  RelationTable t = relations_up_to(build_sm({1, 2, 4}), 6);
  for (const RelationGroup& g : t.groups) {
    CHECK(g.expressions.size() >= 2);
    std::set<std::vector<long long>> seen;
    for (const auto& e : g.expressions) {
      CHECK(seen.insert(e).second);  // no duplicates
      auto val = evaluate(e, {1, 2, 4});
      CHECK(val.first == g.value.grade);
      CHECK(val.second == g.value.fiber[0]);
    }
  }
}

TEST_CASE("map_preserves") {
  GeneratedSub s124 = build_sm({1, 2, 4});
  CHECK(map_preserves(GeneratorMap(s124, s124, {0, 1, 2}), 8).preserved);

  // (1,2,3) -> (3,2,1) satisfies the exchange criterion and preserves
  GeneratedSub s123 = build_sm({1, 2, 3});
  CHECK(map_preserves(GeneratorMap(s123, s123, {2, 1, 0}), 7).preserved);

  // (1,2,4) -> (2,1,4) violates: the degree-7 relation maps to
  // (7,12) != (7,17)
  GeneratedSub s214 = build_sm({1, 2, 4});
  MapVerdict v =
      map_preserves(GeneratorMap(s124, s214, {1, 0, 2}), 7);
  CHECK_FALSE(v.preserved);
  REQUIRE(v.violation.has_value());
  // source sides agree, images differ
  auto src_l = evaluate(v.violation->lhs, {1, 2, 4});
  auto src_r = evaluate(v.violation->rhs, {1, 2, 4});
  CHECK(src_l == src_r);
  auto img_l = evaluate(v.violation->lhs, {2, 1, 4});
  auto img_r = evaluate(v.violation->rhs, {2, 1, 4});
  CHECK(img_l != img_r);
  // the degree-7 witness is among the violated relations
  auto eq2_l = evaluate({2, 4, 1}, {2, 1, 4});
  auto eq2_r = evaluate({4, 1, 2}, {2, 1, 4});
  CHECK(eq2_l == std::pair<long long, long long>{7, 12});
  CHECK(eq2_r == std::pair<long long, long long>{7, 17});
}

TEST_CASE("iso_semidecision") {
  GeneratedSub s124 = build_sm({1, 2, 4});
  IsoVerdict same = iso_semidecision(s124, s124, 8);
  CHECK_FALSE(same.non_isomorphic);

  IsoVerdict counts = iso_semidecision(build_sm({1, 2}), s124, 8);
  CHECK(counts.non_isomorphic);  // 2 vs 3 indecomposables

  // distinct 3-subsets of a strongly 3-separating pool
  IsoVerdict pair =
      iso_semidecision(build_sm({1, 2, 4}), build_sm({1, 2, 9}), 24);
  CHECK(pair.non_isomorphic);
}

TEST_CASE("census") {
  CHECK(census(1).size() == 1);
  CHECK(census(2).size() == 5);
  CHECK(census(3).size() == 24);
  CHECK(census(4).size() == 188);
  CHECK_THROWS_AS(census(5), Error);

  // members are valid (constructor re-checks associativity) and canonical
  for (int n = 1; n <= 3; ++n) {
    auto list = census(n);
    std::set<std::vector<int>> tables;
    for (const FiniteSemigroup& s : list) {
      CHECK(s.order() == n);
      CHECK(tables.insert(s.table()).second);
    }
  }
}

TEST_CASE("enumerate_subsemigroups") {
  Ambient nn = Ambient::nxn();
  GeneratedSub diag(nn, {el(1, {1})});
  // 3-chain: closed subsets are {}, {3}, {2}, {2,3}, {1,2,3}
  CHECK(enumerate_subsemigroups(truncated_closure(diag, 3), nn) == 5);

  Truncation empty;
  empty.bound = 0;
  CHECK(enumerate_subsemigroups(empty, nn) == 1);

  // two incomparable grade-1 elements, no products within bound
  GeneratedSub s12 = build_sm({1, 2});
  CHECK(enumerate_subsemigroups(truncated_closure(s12, 1), nn) == 4);
}
