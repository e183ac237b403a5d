#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "subdirekt/graded.hpp"
#include "subdirekt/witness.hpp"

using namespace subdirekt;

namespace {

FiniteSemigroup z2() { return FiniteSemigroup(2, {0, 1, 1, 0}, {"e", "g"}); }

FiniteSemigroup null2() { return FiniteSemigroup(2, {0, 0, 0, 0}, {"0", "a"}); }

FiniteSemigroup left_zero2() {
  return FiniteSemigroup(2, {0, 0, 1, 1}, {"a", "b"});
}

GradedElement el(long long grade, std::vector<long long> fiber) {
  return GradedElement{grade, std::move(fiber)};
}

}  // namespace

TEST_CASE("products and serialization") {
  Ambient nn = Ambient::nxn();
  CHECK(product(nn, el(1, {2}), el(1, {4})) == el(2, {6}));

  Ambient ns = Ambient::nxs(left_zero2());
  CHECK(product(ns, el(1, {0}), el(3, {1})) == el(4, {0}));  // xy = x

  GeneratedSub g = build_sm({1, 2, 4});
  GeneratedSub back = GeneratedSub::parse(g.serialize(), Ambient::nxn());
  CHECK(back.generators == g.generators);

  GeneratedSub h(ns, {el(1, {0}), el(3, {1})});
  CHECK(GeneratedSub::parse(h.serialize(), ns).generators == h.generators);
}

TEST_CASE("truncated closure examples") {
  Truncation t = truncated_closure(build_sm({1, 2, 4}), 2);
  std::vector<GradedElement> expected = {
      el(1, {1}), el(1, {2}), el(1, {4}), el(2, {2}), el(2, {3}),
      el(2, {4}), el(2, {5}), el(2, {6}), el(2, {8})};
  CHECK(t.elements == expected);

  Truncation diag = truncated_closure(
      GeneratedSub(Ambient::nxn(), {el(1, {1})}), 3);
  CHECK(diag.elements == std::vector<GradedElement>{el(1, {1}), el(2, {2}),
                                                    el(3, {3})});

  // (2,t) with t idempotent: t^2 = t, grades 2 and 4 only
  Ambient ns = Ambient::nxs(left_zero2());
  Truncation idem = truncated_closure(GeneratedSub(ns, {el(2, {0})}), 5);
  CHECK(idem.elements == std::vector<GradedElement>{el(2, {0}), el(4, {0})});
}

TEST_CASE("serial and parallel closures agree") {
  GeneratedSub sm = build_sm({1, 2, 4});
  Truncation a = truncated_closure(sm, 10);
  Truncation b = truncated_closure_serial(sm, 10);
  CHECK(a.elements == b.elements);
  CHECK(a.decomposable == b.decomposable);

  GeneratedSub e = thm_e_witness(null2(), {3, 5});
  Truncation c = truncated_closure(e, 15);
  Truncation d = truncated_closure_serial(e, 15);
  CHECK(c.elements == d.elements);
  CHECK(c.decomposable == d.decomposable);
}

TEST_CASE("closure size guard") {
  setenv("SUBDIREKT_MAX_CELLS", "5", 1);
  CHECK_THROWS_AS(truncated_closure(build_sm({1, 2, 4}), 8), Error);
  unsetenv("SUBDIREKT_MAX_CELLS");
  CHECK_NOTHROW(truncated_closure(build_sm({1, 2, 4}), 8));
}

TEST_CASE("membership") {
  GeneratedSub sm = build_sm({1, 2, 4});
  CHECK(membership(sm, el(2, {3}), 4));
  CHECK_FALSE(membership(sm, el(1, {3}), 4));
  CHECK(membership(sm, el(3, {12}), 4));
}

TEST_CASE("indecomposables") {
  auto ind = indecomposables(truncated_closure(build_sm({1, 2, 4}), 6));
  CHECK(ind == std::vector<GradedElement>{el(1, {1}), el(1, {2}), el(1, {4})});

  auto mono = indecomposables(
      truncated_closure(GeneratedSub(Ambient::nxn(), {el(1, {1})}), 5));
  CHECK(mono == std::vector<GradedElement>{el(1, {1})});

  // uncountable-family witness: every generator indecomposable
  GeneratedSub e = thm_e_witness(null2(), {3, 5});
  auto wind = indecomposables(truncated_closure(e, 10));
  for (const auto& gen : e.generators) {
    CHECK(std::binary_search(wind.begin(), wind.end(), gen));
  }
}

TEST_CASE("grading replay") {
  Truncation t = truncated_closure(build_sm({1, 2, 4}), 8);
  Ambient nn = Ambient::nxn();
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    const GradedElement& e = t.elements[i];
    if (e.grade == 1) continue;  // generators
    CHECK(t.decomposable[i]);
    bool witnessed = false;
    for (const GradedElement& u : t.elements) {
      if (u.grade >= e.grade) continue;
      for (const GradedElement& v : t.elements) {
        if (v.grade >= e.grade) continue;
        if (product(nn, u, v) == e) witnessed = true;
      }
    }
    CHECK(witnessed);
  }
}

TEST_CASE("is_subdirect") {
  CHECK(is_subdirect(build_tm({1, 2, 4}, 3)));
  Ambient ns = Ambient::nxs(left_zero2());
  CHECK_FALSE(is_subdirect(GeneratedSub(ns, {el(2, {0})})));
  CHECK(is_subdirect(thm_e_witness(null2(), {3})));
}

TEST_CASE("layer sequence over Z2") {
  Ambient ns = Ambient::nxs(z2());
  GeneratedSub g(ns, {el(1, {1})});
  LayerSequence seq = layer_sequence(g, 12);
  CHECK(seq.period_m == 2);
  CHECK(seq.threshold_n0 == 1);
  CHECK(seq.layer(1) == std::vector<int>{1});
  CHECK(seq.layer(2) == std::vector<int>{0});
  CHECK(seq.layer(3) == std::vector<int>{1});
}

TEST_CASE("layer sequence over the left-zero semigroup") {
  Ambient ns = Ambient::nxs(left_zero2());
  GeneratedSub g(ns, {el(1, {0}), el(3, {1})});
  LayerSequence seq = layer_sequence(g, 12);
  CHECK(seq.period_m == 3);  // m_a = 1, m_b = 3, lcm = 3
  CHECK(seq.threshold_n0 == 3);
  CHECK(seq.layer(1) == std::vector<int>{0});
  CHECK(seq.layer(2) == std::vector<int>{0});
  for (long long n = 3; n <= 12; ++n) {
    CHECK(seq.layer(n) == std::vector<int>{0, 1});
  }
  // layer monotonicity
  for (long long n = 1; n + seq.period_m <= 12; ++n) {
    CHECK(std::includes(seq.layer(n + seq.period_m).begin(),
                        seq.layer(n + seq.period_m).end(),
                        seq.layer(n).begin(), seq.layer(n).end()));
  }
}

TEST_CASE("extract_generators") {
  Ambient z = Ambient::nxs(z2());
  auto x = extract_generators(GeneratedSub(z, {el(1, {1})}));
  CHECK(x == std::vector<GradedElement>{el(1, {1}), el(2, {0})});

  auto mono = extract_generators(GeneratedSub(z, {el(1, {0})}));
  CHECK(mono == std::vector<GradedElement>{el(1, {0})});

  Ambient lz = Ambient::nxs(left_zero2());
  GeneratedSub t(lz, {el(1, {0}), el(3, {1})});
  auto xt = extract_generators(t);
  std::vector<GradedElement> expected = {
      el(1, {0}), el(2, {0}), el(3, {0}), el(3, {1}),
      el(4, {0}), el(4, {1}), el(5, {0}), el(5, {1})};
  CHECK(xt == expected);
  CHECK(regenerates(xt, t, 18));

  // neither a group fiber nor relative identities: a in the null semigroup
  Ambient ns = Ambient::nxs(null2());
  CHECK_THROWS_AS(extract_generators(GeneratedSub(ns, {el(1, {1})})), Error);
}

TEST_CASE("regenerates") {
  GeneratedSub sm = build_sm({1, 2, 4});
  CHECK(regenerates(sm.generators, sm, 6));  // identity case
  // dropping an indecomposable breaks regeneration
  std::vector<GradedElement> missing = {el(1, {1}), el(1, {2})};
  CHECK_FALSE(regenerates(missing, sm, 6));
}

TEST_CASE("numerical form") {
  NumericalForm two = numerical_form({2});
  CHECK(two.sporadic_a.empty());
  CHECK(two.d == 2);
  CHECK(two.n0 == 1);

  NumericalForm both = numerical_form({2, 3});
  CHECK(both.sporadic_a.empty());
  CHECK(both.d == 1);
  CHECK(both.n0 == 2);

  NumericalForm odd = numerical_form({3, 5});
  CHECK(odd.sporadic_a == std::vector<long long>{3, 5, 6});
  CHECK(odd.d == 1);
  CHECK(odd.n0 == 8);
}

TEST_CASE("numerical form round-trip") {
  for (const IntSet& gens :
       {IntSet{2}, IntSet{2, 3}, IntSet{3, 5}, IntSet{4, 6, 9}, IntSet{6, 10, 15}}) {
    NumericalForm f = numerical_form(gens);
    long long window = 5 * std::max<long long>(1, f.n0) * f.d;
    // brute-force closure on [1, window]
    std::vector<bool> in(window + 1, false);
    for (long long g : gens) {
      if (g <= window) in[g] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (long long v = 1; v <= window; ++v) {
        if (!in[v]) continue;
        for (long long w = 1; v + w <= window; ++w) {
          if (in[w] && !in[v + w]) {
            in[v + w] = true;
            changed = true;
          }
        }
      }
    }
    // regenerate from (A, d, n0) and compare
    for (long long v = 1; v <= window; ++v) {
      bool from_form =
          std::find(f.sporadic_a.begin(), f.sporadic_a.end(), v)
              != f.sporadic_a.end()
          || (v % f.d == 0 && v / f.d >= f.n0);
      CHECK(from_form == static_cast<bool>(in[v]));
    }
  }
}
