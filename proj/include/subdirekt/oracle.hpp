#ifndef SUBDIREKT_ORACLE_HPP_
#define SUBDIREKT_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graded.hpp"
#include "semigroup.hpp"
#include "witness.hpp"

namespace subdirekt {

// Exhaustive relation enumeration up to a degree bound: exponent vectors
// for commutative ambients, length-bounded words for NxS. Ground truth for
// the lemma-level operations.
struct RelationGroup {
  GradedElement value;
  std::vector<std::vector<long long>> expressions;
};

struct RelationTable {
  long long degree;
  bool words;
  std::vector<RelationGroup> groups;  // only values with >= 2 expressions

  bool empty() const { return groups.empty(); }
  // symmetric membership of an (lhs, rhs) witness
  bool contains(const RelationWitness& w) const;
};

RelationTable relations_up_to(const GeneratedSub& g, long long degree);

// Generator bijection between two finitely generated subsemigroups.
struct GeneratorMap {
  GeneratedSub source, target;
  std::vector<int> image;  // source generator index -> target index

  GeneratorMap(GeneratedSub src, GeneratedSub tgt, std::vector<int> img);
  std::vector<int> inverse() const;
};

struct MapVerdict {
  bool preserved;
  std::optional<RelationWitness> violation;  // in source generator indices
};

// Checks that every coincidence of generator expressions up to the degree
// bound is preserved by the map, in both directions; first violation in
// lexicographic enumeration order.
MapVerdict map_preserves(const GeneratorMap& phi, long long degree);

struct IsoVerdict {
  bool non_isomorphic;  // false means consistent up to the degree, NOT iso
  long long degree;
  std::string detail;
};

// Pins candidate isomorphisms on indecomposables and tries every bijection
// through map_preserves.
IsoVerdict iso_semidecision(const GeneratedSub& a, const GeneratedSub& b,
                            long long degree);

// All semigroups of the given order up to isomorphism, canonicalized by the
// lexicographically minimal table under element relabeling.
std::vector<FiniteSemigroup> census(int n);

// Number of subsets of the truncation closed under products staying within
// the grade bound.
long long enumerate_subsemigroups(const Truncation& t, const Ambient& ambient);

}  // namespace subdirekt

#endif  // SUBDIREKT_ORACLE_HPP_
