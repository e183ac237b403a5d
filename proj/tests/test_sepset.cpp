#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "subdirekt/sepset.hpp"

using namespace subdirekt;

namespace {

// direct exhaustive verification, independent of the library kernels
bool brute_ok(const IntSet& m) {
  std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        for (std::size_t d = 0; d < n; ++d) {
          for (std::size_t e = 0; e < n; ++e) {
            for (std::size_t f = 0; f < n; ++f) {
              if (d == e || e == f || d == f) continue;
              long long m1 = m[a], m2 = m[b], m3 = m[c];
              long long n1 = m[d], n2 = m[e], n3 = m[f];
              if (n2 * (m3 - m1) == n1 * (m3 - m2) + n3 * (m2 - m1)
                  && !(m1 == n1 && m2 == n2 && m3 == n3)) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t e = 0; e < n; ++e) {
          if (d == e) continue;
          if (m[a] - m[b] + m[e] - m[d] == 0
              && !(m[a] == m[d] && m[b] == m[e])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("check_s1 examples") {
  S1Result bad = check_s1({1, 2, 3});
  REQUIRE_FALSE(bad.separating);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->m == std::array<long long, 3>{1, 2, 3});
  CHECK(bad.counterexample->n == std::array<long long, 3>{3, 2, 1});

  CHECK(check_s1({1, 2, 4}).separating);
  CHECK_THROWS_AS(check_s1({1, 2}), Error);
}

TEST_CASE("check_s2 examples") {
  CHECK(check_s2({1, 2, 4}).separating);

  S2Result bad = check_s2({1, 2, 4, 5});
  REQUIRE_FALSE(bad.separating);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->m == std::array<long long, 2>{1, 4});
  CHECK(bad.counterexample->n == std::array<long long, 2>{2, 5});

  CHECK(check_s2({1, 2}).separating);
}

TEST_CASE("kernel agrees with the literal formula") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> pick(1, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    IntSet m;
    while (m.size() < 5) {
      long long x = pick(rng);
      if (std::find(m.begin(), m.end(), x) == m.end()) m.push_back(x);
    }
    std::sort(m.begin(), m.end());
    S1Result fast = check_s1(m);
    S1Result slow = check_s1_literal(m);
    REQUIRE(fast.separating == slow.separating);
    if (!fast.separating) {
      REQUIRE(fast.counterexample->m == slow.counterexample->m);
      REQUIRE(fast.counterexample->n == slow.counterexample->n);
    }
    S2Result s2fast = check_s2(m);
    S2Result s2slow = check_s2_pairs(m);
    REQUIRE(s2fast.separating == s2slow.separating);
  }
}

TEST_CASE("forbidden_values for {1,2,4}") {
  SeparatingSet m = SeparatingSet::verified({1, 2, 4});
  std::vector<long long> f = forbidden_values(m);
  for (long long x : {5, 6, 7}) {
    CHECK(std::find(f.begin(), f.end(), x) != f.end());
  }
  // 8 survives (S2) ({1,2,4,8} has all differences distinct) but fails (S1)
  CHECK(check_s2({1, 2, 4, 8}).separating);
  CHECK_FALSE(check_s1({1, 2, 4, 8}).separating);
  CHECK(std::find(f.begin(), f.end(), 8) != f.end());
  // domain restriction: members of M never appear
  for (long long x : m.elements()) {
    CHECK(std::find(f.begin(), f.end(), x) == f.end());
  }
}

TEST_CASE("forbidden_values agrees with brute force up to 10*max") {
  for (const IntSet& seed : {IntSet{1, 2, 4}, IntSet{2, 3, 7}}) {
    SeparatingSet m = SeparatingSet::verified(seed);
    std::vector<long long> f = forbidden_values(m);
    for (long long x = 1; x <= 10 * m.max(); ++x) {
      if (m.contains(x)) continue;
      IntSet with = seed;
      with.push_back(x);
      std::sort(with.begin(), with.end());
      bool forbidden = std::find(f.begin(), f.end(), x) != f.end();
      CHECK(forbidden == !brute_ok(with));
    }
  }
}

TEST_CASE("extend examples and regression constants") {
  SeparatingSet m = SeparatingSet::verified({1, 2, 4});
  SeparatingSet m1 = extend(m);
  CHECK(m1.elements() == IntSet{1, 2, 4, 9});  // 5,6,7,8 are forbidden
  CHECK(m1.elements().back() > m.max());       // monotone growth policy

  SeparatingSet m2 = extend(m1);
  CHECK(m2.size() == 5);
  CHECK(m2.elements() == IntSet{1, 2, 4, 9, 15});

  // two-path cross-check: exhaustive verification of the extended set
  CHECK(check_s1(m2.elements()).separating);
  CHECK(check_s2(m2.elements()).separating);
  CHECK(brute_ok(m2.elements()));
}

TEST_CASE("build_prefix") {
  SeparatingSet m = SeparatingSet::verified({1, 2, 4});
  CHECK(build_prefix(m, 3).elements() == IntSet{1, 2, 4});

  SeparatingSet six = build_prefix(m, 6);
  CHECK(six.size() == 6);
  CHECK(six.elements() == IntSet{1, 2, 4, 9, 15, 24});
  CHECK(brute_ok(six.elements()));

  CHECK_THROWS_AS(SeparatingSet::verified({1, 2, 3}), Error);
}

TEST_CASE("subsets of strongly 3-separating sets are strongly 3-separating") {
  IntSet pool = build_prefix(SeparatingSet::verified({1, 2, 4}), 6).elements();
  std::size_t n = pool.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IntSet sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sub.push_back(pool[i]);
    }
    if (sub.size() >= 3) CHECK(check_s1(sub).separating);
    if (sub.size() >= 2) CHECK(check_s2(sub).separating);
  }
}
