#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "subdirekt/oracle.hpp"
#include "subdirekt/semigroup.hpp"

using namespace subdirekt;

namespace {

FiniteSemigroup trivial() { return FiniteSemigroup(1, {0}); }

FiniteSemigroup z2() { return FiniteSemigroup(2, {0, 1, 1, 0}); }

FiniteSemigroup z3() {
  return FiniteSemigroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
}

// all products 0; element 1 plays the role of "a"
FiniteSemigroup null2() { return FiniteSemigroup(2, {0, 0, 0, 0}, {"0", "a"}); }

// xy = x
FiniteSemigroup left_zero2() {
  return FiniteSemigroup(2, {0, 0, 1, 1}, {"a", "b"});
}

// null {0,a} with an adjoined identity e (index 2)
FiniteSemigroup null2_monoid() {
  return FiniteSemigroup(3, {0, 0, 0, 0, 0, 1, 0, 1, 2}, {"0", "a", "e"});
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(trivial().order() == 1);
  CHECK(z2().product(1, 1) == 0);

  // max(x, y) on {0, 1} is associative, so this table is accepted
  FiniteSemigroup lor = FiniteSemigroup::parse("2\n0 1\n1 1\n");
  CHECK(lor.product(0, 1) == 1);

  // 0*(0*1) = 1 but (0*0)*1 = 0
  CHECK_THROWS_WITH_AS(FiniteSemigroup(2, {1, 0, 0, 0}), doctest::Contains("NotAssociative"),
                       Error);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 2, 0}), Error);  // entry out of range
  CHECK_THROWS_AS(FiniteSemigroup::parse("2\n0 1\n1\n"), Error);

  FiniteSemigroup labeled = FiniteSemigroup::parse("2\n0 0\n0 0\nlabels: z a\n");
  CHECK(labeled.label(1) == "a");
  CHECK(FiniteSemigroup::parse(labeled.to_table_text()) == labeled);
}

TEST_CASE("green structure") {
  // a group is a single H-class
  GreenStructure gz = green(z3());
  CHECK(gz.h_classes.size() == 1);
  CHECK(gz.r_classes.size() == 1);
  CHECK(gz.j_classes.size() == 1);

  // null semigroup: H-classes {0}, {a}
  GreenStructure gn = green(null2());
  CHECK(gn.h_classes == std::vector<std::vector<int>>{{0}, {1}});

  // left-zero (xy = x): s = tu forces s = t, so R-classes are singletons,
  // while s = ut always has the solution u = s, so L is everything
  GreenStructure gl = green(left_zero2());
  CHECK(gl.r_classes == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(gl.l_classes == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("power profile") {
  // idempotent
  PowerProfile pe = power_profile(left_zero2(), 0);
  CHECK(pe.index_i == 1);
  CHECK(pe.period_p == 1);
  CHECK(pe.idem_k == 1);

  // a in the null semigroup: a^2 = 0, 0^2 = 0
  CHECK(power_profile(null2(), 1).idem_k == 2);

  // generator of Z3
  PowerProfile pg = power_profile(z3(), 1);
  CHECK(pg.period_p == 3);
  CHECK(pg.idem_k == 3);
}

TEST_CASE("union of groups and relative identities") {
  CHECK(is_union_of_groups(z2()).is_union_of_groups);
  CHECK(is_union_of_groups(left_zero2()).is_union_of_groups);

  UnionOfGroupsVerdict v = is_union_of_groups(null2());
  CHECK_FALSE(v.is_union_of_groups);
  CHECK(v.witness == 1);

  CHECK(has_relative_identities(null2_monoid()).all_have);  // any monoid
  CHECK(has_relative_identities(left_zero2()).all_have);

  RelativeIdentitiesVerdict r = has_relative_identities(null2());
  CHECK_FALSE(r.all_have);
  CHECK(r.violators == std::vector<int>{1});

  // the monoid over null {0,a} separates the two classes
  CHECK_FALSE(is_union_of_groups(null2_monoid()).is_union_of_groups);
}

TEST_CASE("green partition identities on the census") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemigroup& s : census(n)) {
      GreenStructure g = green(s);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          // H = R cap L
          bool h = g.h_class[a] == g.h_class[b];
          bool rl = g.r_class[a] == g.r_class[b] && g.l_class[a] == g.l_class[b];
          CHECK(h == rl);
          // J = R o L = L o R
          bool j = g.j_class[a] == g.j_class[b];
          bool r_then_l = false, l_then_r = false;
          for (int u = 0; u < n; ++u) {
            r_then_l |= g.r_class[a] == g.r_class[u] && g.l_class[u] == g.l_class[b];
            l_then_r |= g.l_class[a] == g.l_class[u] && g.r_class[u] == g.r_class[b];
          }
          CHECK(j == r_then_l);
          CHECK(j == l_then_r);
        }
      }
    }
  }
}

TEST_CASE("power profile idempotency on the census") {
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteSemigroup& s : census(n)) {
      for (int x = 0; x < n; ++x) {
        int k = power_profile(s, x).idem_k;
        int xk = s.power(x, k);
        CHECK(s.product(xk, xk) == xk);
      }
    }
  }
}

TEST_CASE("union of groups implies relative identities on the census") {
  bool gap_found = false;
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteSemigroup& s : census(n)) {
      bool uog = is_union_of_groups(s).is_union_of_groups;
      bool rel = has_relative_identities(s).all_have;
      if (uog) CHECK(rel);
      gap_found = gap_found || (rel && !uog);
    }
  }
  CHECK(gap_found);  // the inclusion is strict (e.g. the 3-element monoid)
}

TEST_CASE("no element divides the witness through its idempotent power") {
  FiniteSemigroup s = null2();
  UnionOfGroupsVerdict v = is_union_of_groups(s);
  REQUIRE_FALSE(v.is_union_of_groups);
  int x = v.witness;
  int xk = s.power(x, power_profile(s, x).idem_k);
  for (int y = 0; y < s.order(); ++y) {
    CHECK(s.product(y, xk) != x);
    CHECK(s.product(xk, y) != x);
  }
}
