#include "subdirekt/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "subdirekt/graded.hpp"
#include "subdirekt/oracle.hpp"
#include "subdirekt/semigroup.hpp"
#include "subdirekt/sepset.hpp"
#include "subdirekt/witness.hpp"

namespace subdirekt::verify {

namespace {

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail = "ok") {
  return {std::move(name), true, std::move(detail)};
}

std::vector<IntSet> subsets_of_size(const IntSet& pool, int k) {
  std::vector<IntSet> out;
  int n = static_cast<int>(pool.size());
  std::vector<int> idx(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      IntSet s;
      for (int i : idx) s.push_back(pool[i]);
      out.push_back(std::move(s));
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool strongly_separating(const IntSet& m) {
  return check_s1(m).separating && check_s2(m).separating;
}

// --- criterion 1: worked ground-truth examples ---------------------------

CheckResult c1() {
  const std::string name = "criterion-1 separating-set ground truth";
  auto bad = check_s1({1, 2, 3});
  if (bad.separating) return fail(name, "{1,2,3} reported 3-separating");
  const auto& ce = *bad.counterexample;
  if (ce.m != std::array<long long, 3>{1, 2, 3}
      || ce.n != std::array<long long, 3>{3, 2, 1}) {
    return fail(name, "unexpected counterexample for {1,2,3}");
  }
  if (!check_s1({1, 2, 4}).separating) {
    return fail(name, "{1,2,4} reported not 3-separating");
  }
  return pass(name, "counterexample ((1,2,3),(3,2,1)); {1,2,4} separating");
}

// --- criterion 2: extension pipeline vs exhaustive verdicts --------------

CheckResult c2() {
  const std::string name = "criterion-2 extension pipeline";
  SeparatingSet cur = SeparatingSet::verified({1, 2, 4});
  for (std::size_t step = cur.size(); step <= 10; ++step) {
    // full O(n^6) literal scan and O(n^4) pair scan of the prefix
    if (!check_s1_literal(cur.elements()).separating
        || !check_s2_pairs(cur.elements()).separating) {
      return fail(name, "prefix of size " + std::to_string(cur.size())
                            + " fails exhaustive verification");
    }
    if (step == 10) break;
    auto forbidden = forbidden_values(cur);
    for (long long x = 1; x <= 10 * cur.max(); ++x) {
      if (cur.contains(x)) continue;
      IntSet ext = cur.elements();
      ext.insert(std::lower_bound(ext.begin(), ext.end(), x), x);
      bool brute_bad = !strongly_separating(ext);
      bool listed =
          std::binary_search(forbidden.begin(), forbidden.end(), x);
      if (brute_bad != listed) {
        return fail(name, "forbidden_values disagrees with brute force at x="
                              + std::to_string(x) + " for prefix size "
                              + std::to_string(cur.size()));
      }
    }
    cur = extend(cur);
  }
  std::ostringstream detail;
  detail << "prefix:";
  for (long long v : cur.elements()) detail << " " << v;
  return pass(name, detail.str());
}

// --- criterion 3: dag criterion vs relation-enumeration oracle -----------

CheckResult c3() {
  const std::string name = "criterion-3 isomorphism criterion equivalence";
  IntSet universe;
  for (long long v = 1; v <= 12; ++v) universe.push_back(v);
  auto subs = subsets_of_size(universe, 3);
  long long checked = 0;
  for (const auto& ms : subs) {
    GeneratedSub sm = build_sm(ms);
    std::array<long long, 3> mt = {ms[0], ms[1], ms[2]};
    long long degree = 2 * (ms[0] + ms[1] + ms[2]);
    for (const auto& ns : subs) {
      GeneratedSub sn = build_sm(ns);
      std::array<int, 3> perm = {0, 1, 2};
      do {
        std::array<long long, 3> nt = {ns[perm[0]], ns[perm[1]], ns[perm[2]]};
        bool dag = dag_holds(mt, nt);
        bool preserved =
            map_preserves(GeneratorMap(sm, sn, {perm[0], perm[1], perm[2]}),
                          degree)
                .preserved;
        if (dag != preserved) {
          std::ostringstream d;
          d << "disagreement for M=(" << mt[0] << "," << mt[1] << "," << mt[2]
            << ") N=(" << nt[0] << "," << nt[1] << "," << nt[2] << ")";
          return fail(name, d.str());
        }
        ++checked;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return pass(name, std::to_string(checked) + " bijections, zero disagreements");
}

// --- criterion 4: freeness boundary ---------------------------------------

CheckResult c4() {
  const std::string name = "criterion-4 freeness classification";
  IntSet upto10;
  for (long long v = 1; v <= 10; ++v) upto10.push_back(v);
  for (int k = 1; k <= 2; ++k) {
    for (const auto& ms : subsets_of_size(upto10, k)) {
      if (!relations_up_to(build_sm(ms), 8).empty()) {
        return fail(name, "relation found for |M| = " + std::to_string(k));
      }
    }
  }
  IntSet upto8;
  for (long long v = 1; v <= 8; ++v) upto8.push_back(v);
  for (const auto& ms : subsets_of_size(upto8, 3)) {
    if (relations_up_to(build_sm(ms), 8).empty()) {
      return fail(name, "no relation found for a 3-subset");
    }
    // the degree-(m1+m2+m3) witness lives above degree 8 for most
    // 3-subsets, so it is checked at its own degree
    auto witness = freeness_class(ms).witness;
    long long deg = ms[0] + ms[1] + ms[2];
    if (!relations_up_to(build_sm(ms), deg).contains(*witness)) {
      return fail(name, "enumeration misses the canonical witness");
    }
  }
  return pass(name, "free iff |M| <= 2 on the scanned range");
}

// --- criterion 5: indecomposables are exactly the generators --------------

CheckResult c5() {
  const std::string name = "criterion-5 indecomposables";
  IntSet upto10;
  for (long long v = 1; v <= 10; ++v) upto10.push_back(v);
  for (int k = 3; k <= 4; ++k) {
    for (const auto& ms : subsets_of_size(upto10, k)) {
      GeneratedSub sm = build_sm(ms);
      auto indec = indecomposables(truncated_closure(sm, 8));
      if (indec != sm.generators) {
        return fail(name, "indecomposables != 1 x M for a "
                              + std::to_string(k) + "-subset");
      }
    }
  }
  return pass(name, "330 subsets scanned at D = 8");
}

// --- criterion 6: pairwise non-isomorphism over a separating pool ---------

CheckResult c6() {
  const std::string name = "criterion-6 pairwise non-isomorphism";
  SeparatingSet pool = build_prefix(SeparatingSet::verified({1, 2, 4}), 6);
  auto subs = subsets_of_size(pool.elements(), 3);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      long long degree = 2 * (subs[i][0] + subs[i][1] + subs[i][2]);
      auto verdict =
          iso_semidecision(build_sm(subs[i]), build_sm(subs[j]), degree);
      if (!verdict.non_isomorphic) {
        return fail(name, "pair not certified: " + verdict.detail);
      }
    }
  }
  return pass(name, std::to_string(subs.size() * (subs.size() - 1) / 2)
                        + " pairs certified non-isomorphic");
}

// --- criterion 7: T_M flattens onto S_M -----------------------------------

CheckResult c7() {
  const std::string name = "criterion-7 subdirect powers of N";
  IntSet m = {1, 2, 4};
  GeneratedSub tm = build_tm(m, 3);
  if (!is_subdirect(tm)) return fail(name, "T_M not subdirect");
  Truncation tt = truncated_closure(tm, 10);
  Truncation st = truncated_closure(build_sm(m), 10);
  auto flatten = [](const GradedElement& e) {
    return GradedElement{e.grade, {e.fiber.back()}};
  };
  std::vector<GradedElement> image;
  for (const auto& e : tt.elements) {
    // elements of T_M have all leading coordinates equal to the grade
    for (std::size_t c = 0; c + 1 < e.fiber.size(); ++c) {
      if (e.fiber[c] != e.grade) {
        return fail(name, "element off the diagonal in T_M");
      }
    }
    image.push_back(flatten(e));
  }
  std::sort(image.begin(), image.end());
  if (image != st.elements) return fail(name, "flattening is not a bijection");
  for (const auto& u : tt.elements) {
    for (const auto& v : tt.elements) {
      if (u.grade + v.grade > 10) continue;
      GradedElement lhs = flatten(product(tm.ambient, u, v));
      GradedElement rhs =
          product(Ambient::nxn(), flatten(u), flatten(v));
      if (lhs != rhs) return fail(name, "flattening is not a homomorphism");
    }
  }
  return pass(name, std::to_string(tt.elements.size())
                        + " elements matched at D = 10");
}

// --- criterion 8: generator extraction over census(3) ---------------------

GeneratedSub random_subdirect(const FiniteSemigroup& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> grade_dist(1, 4);
  std::uniform_int_distribution<int> fiber_dist(0, s.order() - 1);
  std::uniform_int_distribution<int> count_dist(1, 4);
  for (;;) {
    std::vector<GradedElement> gens;
    gens.push_back({1, {static_cast<long long>(fiber_dist(rng))}});
    int extra = count_dist(rng);
    for (int i = 0; i < extra; ++i) {
      gens.push_back({static_cast<long long>(grade_dist(rng)),
                      {static_cast<long long>(fiber_dist(rng))}});
    }
    GeneratedSub g(Ambient::nxs(s), gens);
    if (is_subdirect(g)) return g;
  }
}

CheckResult c8() {
  const std::string name = "criterion-8 finite-generation extraction";
  std::mt19937 rng(20240817);
  int semigroups = 0;
  long long runs = 0;
  for (const auto& s : census(3)) {
    if (!has_relative_identities(s).all_have) continue;
    ++semigroups;
    for (int trial = 0; trial < 100; ++trial) {
      GeneratedSub g = random_subdirect(s, rng);
      auto x = extract_generators(g);
      long long bound = 16;
      LayerSequence seq = [&] {
        for (;;) {
          try {
            return layer_sequence(g, bound);
          } catch (const Error& err) {
            if (err.code() != ErrorCode::PeriodNotDetected) throw;
            bound *= 2;
          }
        }
      }();
      long long check = 3 * (seq.threshold_n0 + seq.period_m);
      if (!regenerates(x, g, check)) {
        return fail(name, "extracted set fails to regenerate");
      }
      for (long long n = 1; n + seq.period_m <= seq.bound; ++n) {
        const auto& lo = seq.layer(n);
        const auto& hi = seq.layer(n + seq.period_m);
        if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) {
          return fail(name, "layer inclusion fails at n=" + std::to_string(n));
        }
      }
      ++runs;
    }
  }
  return pass(name, std::to_string(runs) + " extractions over "
                        + std::to_string(semigroups) + " semigroups");
}

// --- criterion 9: uncountable witness families ------------------------------

CheckResult c9() {
  const std::string name = "criterion-9 witness families";
  FiniteSemigroup null2(2, {0, 0, 0, 0});
  std::vector<IntSet> ms = {{3}, {5}, {3, 5}};
  std::vector<std::vector<std::pair<long long, long long>>> profiles;
  for (const auto& m : ms) {
    long long top = std::max<long long>(2, m.back());
    long long bound = 2 * top;
    for (GeneratedSub g : {thm_d_witness(null2, m), thm_e_witness(null2, m)}) {
      auto indec = indecomposables(truncated_closure(g, bound));
      for (const auto& gen : g.generators) {
        if (!std::binary_search(indec.begin(), indec.end(), gen)) {
          return fail(name, "decomposable generator in a witness family");
        }
      }
      // (1, x^k)^{mk} = (m, x)^k with x = a, k = 2 over the null semigroup
      GradedElement base = g.generators.front();  // (1, x^k), least grade
      for (long long mv : m) {
        GradedElement left = base;
        for (long long i = 1; i < mv * 2; ++i) {
          left = product(g.ambient, left, base);
        }
        GradedElement gen_m{mv, {1}};
        GradedElement right = product(g.ambient, gen_m, gen_m);
        if (left != right) return fail(name, "key relation fails");
      }
    }
    profiles.push_back(power_linkage_profile(thm_d_witness(null2, m), 20));
  }
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      if (profiles[i] == profiles[j]) {
        return fail(name, "power-linkage profiles coincide across M");
      }
    }
  }
  return pass(name, "indecomposability, key relation and profiles verified");
}

// --- criterion 10: census counts and classification gap --------------------

CheckResult c10() {
  const std::string name = "criterion-10 census cross-check";
  const long long expected[] = {1, 5, 24};
  for (int n = 1; n <= 3; ++n) {
    auto list = census(n);
    if (static_cast<long long>(list.size()) != expected[n - 1]) {
      return fail(name, "census(" + std::to_string(n) + ") = "
                            + std::to_string(list.size()));
    }
  }
  bool monoid_in_gap = false;
  for (const auto& s : census(3)) {
    bool uog = is_union_of_groups(s).is_union_of_groups;
    bool rel = has_relative_identities(s).all_have;
    if (uog && !rel) {
      return fail(name, "union of groups without relative identities");
    }
    if (rel && !uog) {
      int identity = -1;
      for (int e = 0; e < s.order(); ++e) {
        bool ident = true;
        for (int x = 0; x < s.order(); ++x) {
          if (s.product(e, x) != x || s.product(x, e) != x) ident = false;
        }
        if (ident) identity = e;
      }
      if (identity >= 0) monoid_in_gap = true;
    }
  }
  if (!monoid_in_gap) {
    return fail(name, "no order-3 monoid strictly between the classes");
  }
  return pass(name, "counts 1,5,24; strict inclusion with a monoid witness");
}

// --- criterion 11: numerical canonical form --------------------------------

CheckResult c11() {
  const std::string name = "criterion-11 numerical form";
  NumericalForm f = numerical_form({3, 5});
  if (f.sporadic_a != std::vector<long long>{3, 5, 6} || f.d != 1
      || f.n0 != 8) {
    return fail(name, "unexpected form for <3,5>");
  }
  // brute-force closure of {3,5} on [1,30]
  std::vector<char> in(31, 0);
  in[3] = in[5] = 1;
  for (int i = 1; i <= 30; ++i) {
    if (!in[i] && ((i > 3 && in[i - 3]) || (i > 5 && in[i - 5]))) in[i] = 1;
  }
  for (long long i = 1; i <= 30; ++i) {
    bool from_form =
        std::find(f.sporadic_a.begin(), f.sporadic_a.end(), i)
            != f.sporadic_a.end()
        || (i % f.d == 0 && i / f.d >= f.n0);
    if (from_form != static_cast<bool>(in[i])) {
      return fail(name, "round-trip mismatch at " + std::to_string(i));
    }
  }
  return pass(name, "A = {3,5,6}, d = 1, n0 = 8 matches closure on [1,30]");
}

}  // namespace

CheckResult criterion(int number) {
  switch (number) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
    case 10: return c10();
    case 11: return c11();
    default:
      throw Error(ErrorCode::UnknownSuite,
                  "no criterion " + std::to_string(number));
  }
}

std::vector<CheckResult> run_all() {
  std::vector<CheckResult> out;
  for (int i = 1; i <= 11; ++i) out.push_back(criterion(i));
  return out;
}

namespace {

const std::map<std::string, std::vector<int>>& suites() {
  static const std::map<std::string, std::vector<int>> s = {
      {"lemma21", {5}},       {"lemma22", {4}}, {"lemma23", {1, 3}},
      {"lemma24", {2}},       {"thmA", {6}},    {"thmB", {7}},
      {"lemma31", {8, 11}},   {"thmD", {9, 10}}, {"thmE", {8, 9, 10}},
  };
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : suites()) out.push_back(k);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  auto it = suites().find(name);
  if (it == suites().end()) {
    throw Error(ErrorCode::UnknownSuite, name);
  }
  std::vector<CheckResult> out;
  for (int c : it->second) out.push_back(criterion(c));
  return out;
}

}  // namespace subdirekt::verify
