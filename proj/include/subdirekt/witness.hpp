#ifndef SUBDIREKT_WITNESS_HPP_
#define SUBDIREKT_WITNESS_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded.hpp"
#include "semigroup.hpp"
#include "sepset.hpp"

namespace subdirekt {

// Exact integer test of n2(m3-m1) = n1(m3-m2) + n3(m2-m1) for ordered
// triples of pairwise-distinct positive integers.
bool dag_holds(const std::array<long long, 3>& m,
               const std::array<long long, 3>& n);

// A pair of distinct generator expressions evaluating to the same element:
// exponent vectors for commutative ambients, generator-index words for NxS.
struct RelationWitness {
  std::vector<long long> lhs, rhs;
  bool words = false;
};

struct FreenessResult {
  bool free;
  std::optional<RelationWitness> witness;  // over the three smallest elements
};

// S_M is free commutative over M iff |M| <= 2; the non-free witness is the
// degree (m1+m2+m3) relation among the three smallest generators.
FreenessResult freeness_class(const IntSet& m);

GeneratedSub build_sm(const IntSet& m);

// T_M <= N^k generated by (1,...,1,m); requires 1 in M so that the diagonal
// is contained and T_M is subdirect.
GeneratedSub build_tm(const IntSet& m, int k);

// Uncountable-family witness over N x S for S not a union of groups:
// generators (1, x^k) and (m, x), with x from an idempotent-free H-class
// and k its least idempotent power. M must avoid 1.
GeneratedSub thm_d_witness(const FiniteSemigroup& s, const IntSet& m);

// Subdirect witness over N x S for S with a relative-identity violator s:
// generators (1, s^k), (2, t) for t outside {s, s^k}, and (m, s) for m in
// M. M must consist of odd integers > 1.
GeneratedSub thm_e_witness(const FiniteSemigroup& s, const IntSet& m);

struct NonIsoPair {
  IntSet m, n;
  // dag verdict per generator bijection, keyed by the permuted n-triple
  std::vector<std::pair<std::array<long long, 3>, bool>> orderings;
  bool non_isomorphic;  // every ordering fails the criterion
};

struct NonIsoCertificate {
  std::vector<NonIsoPair> pairs;
  bool all_certified;
};

// Certifies pairwise non-isomorphism of { S_M : M in subsets } for
// 3-subsets of a strongly 3-separating pool by scanning all 6 generator
// bijections against the criterion.
NonIsoCertificate pairwise_noniso_certificate(
    const SeparatingSet& pool, const std::vector<IntSet>& subsets);

// Isomorphism-invariant of the generating data: for each ordered pair of
// distinct indecomposables (g, h), the lexicographically least (p, q) with
// h^p = g^q among powers of grade <= bound, as a sorted multiset.
std::vector<std::pair<long long, long long>> power_linkage_profile(
    const GeneratedSub& g, long long bound);

}  // namespace subdirekt

#endif  // SUBDIREKT_WITNESS_HPP_
