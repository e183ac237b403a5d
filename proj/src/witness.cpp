#include "subdirekt/witness.hpp"

#include <algorithm>
#include <set>

namespace subdirekt {

bool dag_holds(const std::array<long long, 3>& m,
               const std::array<long long, 3>& n) {
  if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2] || n[0] == n[1]
      || n[1] == n[2] || n[0] == n[2]) {
    throw Error(ErrorCode::DegenerateTriple,
                "triples must have pairwise-distinct entries");
  }
  return n[1] * (m[2] - m[0]) == n[0] * (m[2] - m[1]) + n[2] * (m[1] - m[0]);
}

FreenessResult freeness_class(const IntSet& m) {
  if (m.empty()) {
    throw Error(ErrorCode::EmptySet, "freeness_class needs a nonempty set");
  }
  if (m.size() <= 2) return {true, std::nullopt};
  // the non-trivial relation among the three smallest generators:
  //   m2 (1,m1) + m3 (1,m2) + m1 (1,m3) = m3 (1,m1) + m1 (1,m2) + m2 (1,m3)
  RelationWitness w;
  w.lhs.assign(m.size(), 0);
  w.rhs.assign(m.size(), 0);
  w.lhs[0] = m[1];
  w.lhs[1] = m[2];
  w.lhs[2] = m[0];
  w.rhs[0] = m[2];
  w.rhs[1] = m[0];
  w.rhs[2] = m[1];
  return {false, w};
}

GeneratedSub build_sm(const IntSet& m) {
  if (m.empty()) {
    throw Error(ErrorCode::EmptySet, "build_sm needs a nonempty set");
  }
  std::vector<GradedElement> gens;
  for (long long v : m) gens.push_back({1, {v}});
  return GeneratedSub(Ambient::nxn(), std::move(gens));
}

GeneratedSub build_tm(const IntSet& m, int k) {
  if (m.empty()) {
    throw Error(ErrorCode::EmptySet, "build_tm needs a nonempty set");
  }
  if (std::find(m.begin(), m.end(), 1LL) == m.end()) {
    throw Error(ErrorCode::MissingOne, "build_tm requires 1 in M");
  }
  std::vector<GradedElement> gens;
  for (long long v : m) {
    std::vector<long long> fiber(k - 1, 1);
    fiber.back() = v;
    gens.push_back({1, std::move(fiber)});
  }
  return GeneratedSub(Ambient::nxk(k), std::move(gens));
}

GeneratedSub thm_d_witness(const FiniteSemigroup& s, const IntSet& m) {
  if (m.empty()) {
    throw Error(ErrorCode::EmptySet, "thm_d_witness needs a nonempty M");
  }
  if (std::find(m.begin(), m.end(), 1LL) != m.end()) {
    throw Error(ErrorCode::BadM, "M must not contain 1");
  }
  auto verdict = is_union_of_groups(s);
  if (verdict.is_union_of_groups) {
    throw Error(ErrorCode::IsUnionOfGroups,
                "no idempotent-free H-class to build the witness from");
  }
  int x = verdict.witness;
  int k = power_profile(s, x).idem_k;
  std::vector<GradedElement> gens;
  gens.push_back({1, {static_cast<long long>(s.power(x, k))}});
  for (long long v : m) gens.push_back({v, {static_cast<long long>(x)}});
  return GeneratedSub(Ambient::nxs(s), std::move(gens));
}

GeneratedSub thm_e_witness(const FiniteSemigroup& s, const IntSet& m) {
  if (m.empty()) {
    throw Error(ErrorCode::EmptySet, "thm_e_witness needs a nonempty M");
  }
  for (long long v : m) {
    if (v == 1 || v % 2 == 0) {
      throw Error(ErrorCode::BadM, "M must consist of odd integers > 1");
    }
  }
  auto verdict = has_relative_identities(s);
  if (verdict.all_have) {
    throw Error(ErrorCode::HasRelativeIdentities,
                "every element has a relative identity");
  }
  int viol = verdict.violators.front();
  int k = power_profile(s, viol).idem_k;
  int sk = s.power(viol, k);
  std::vector<GradedElement> gens;
  gens.push_back({1, {static_cast<long long>(sk)}});
  for (int t = 0; t < s.order(); ++t) {
    if (t != viol && t != sk) {
      gens.push_back({2, {static_cast<long long>(t)}});
    }
  }
  for (long long v : m) gens.push_back({v, {static_cast<long long>(viol)}});
  return GeneratedSub(Ambient::nxs(s), std::move(gens));
}

NonIsoCertificate pairwise_noniso_certificate(
    const SeparatingSet& pool, const std::vector<IntSet>& subsets) {
  const SeparatingSet verified_pool =
      pool.s1_verified() && pool.s2_verified()
          ? pool
          : SeparatingSet::verified(pool.elements());
  for (const auto& sub : subsets) {
    if (sub.size() != 3) {
      throw Error(ErrorCode::TooSmall, "subsets must have exactly 3 elements");
    }
    for (long long v : sub) {
      if (!verified_pool.contains(v)) {
        throw Error(ErrorCode::NotSeparating,
                    "subset element " + std::to_string(v) + " not in pool");
      }
    }
  }

  NonIsoCertificate cert;
  cert.all_certified = true;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (subsets[i] == subsets[j]) continue;  // identity map: isomorphic
      NonIsoPair pair;
      pair.m = subsets[i];
      pair.n = subsets[j];
      std::array<long long, 3> mt = {pair.m[0], pair.m[1], pair.m[2]};
      std::array<int, 3> perm = {0, 1, 2};
      pair.non_isomorphic = true;
      do {
        std::array<long long, 3> nt = {pair.n[perm[0]], pair.n[perm[1]],
                                       pair.n[perm[2]]};
        bool holds = dag_holds(mt, nt);
        pair.orderings.emplace_back(nt, holds);
        if (holds) pair.non_isomorphic = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!pair.non_isomorphic) cert.all_certified = false;
      cert.pairs.push_back(std::move(pair));
    }
  }
  return cert;
}

std::vector<std::pair<long long, long long>> power_linkage_profile(
    const GeneratedSub& g, long long bound) {
  Truncation t = truncated_closure(g, bound);
  std::vector<GradedElement> indec = indecomposables(t);

  std::vector<std::pair<long long, long long>> profile;
  for (const auto& base : indec) {
    for (const auto& other : indec) {
      if (other == base) continue;
      // powers of each within the bound
      std::vector<GradedElement> base_pow, other_pow;
      GradedElement acc = base;
      while (acc.grade <= bound) {
        base_pow.push_back(acc);
        acc = product(g.ambient, acc, base);
      }
      acc = other;
      while (acc.grade <= bound) {
        other_pow.push_back(acc);
        acc = product(g.ambient, acc, other);
      }
      std::pair<long long, long long> best{0, 0};
      for (std::size_t p = 0; p < other_pow.size() && best.first == 0; ++p) {
        for (std::size_t q = 0; q < base_pow.size(); ++q) {
          if (other_pow[p] == base_pow[q]) {
            best = {static_cast<long long>(p + 1),
                    static_cast<long long>(q + 1)};
            break;
          }
        }
      }
      if (best.first != 0) profile.push_back(best);
    }
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace subdirekt
