#ifndef SUBDIREKT_SEPSET_HPP_
#define SUBDIREKT_SEPSET_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"

namespace subdirekt {

using IntSet = std::vector<long long>;  // strictly increasing, entries >= 1

struct TriplePair {
  std::array<long long, 3> m, n;
};

struct S1Result {
  bool separating;
  std::optional<TriplePair> counterexample;
};

struct PairPair {
  std::array<long long, 2> m, n;
};

struct S2Result {
  bool separating;
  std::optional<PairPair> counterexample;
};

// True iff for all ordered triples of pairwise-distinct entries of M,
// the relation n2(m3-m1) = n1(m3-m2) + n3(m2-m1) forces triple equality.
// The kernel tests collinearity of the points (m_i, n_i); the literal
// formula is kept as a serial reference.
S1Result check_s1(const IntSet& m);
S1Result check_s1_literal(const IntSet& m);

// True iff m1-m2+n2-n1 = 0 forces (m1,m2) = (n1,n2) over ordered pairs of
// distinct entries; equivalently all differences of distinct elements are
// distinct. check_s2_pairs is the quartic-scan reference.
S2Result check_s2(const IntSet& m);
S2Result check_s2_pairs(const IntSet& m);

class SeparatingSet {
 public:
  explicit SeparatingSet(IntSet elements);

  // Runs both checks; throws NotSeparating (with the counterexample in the
  // message) unless the set is strongly 3-separating.
  static SeparatingSet verified(IntSet elements);

  const IntSet& elements() const noexcept { return elements_; }
  long long max() const { return elements_.back(); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool s1_verified() const noexcept { return s1_verified_; }
  bool s2_verified() const noexcept { return s2_verified_; }
  bool contains(long long x) const;

 private:
  IntSet elements_;
  bool s1_verified_ = false;
  bool s2_verified_ = false;
};

// All x not in M for which M u {x} violates (S1) or (S2), computed by
// solving the linear/quadratic case equations over all placements of x and
// rechecking each integer root exhaustively. M must be strongly
// 3-separating.
std::vector<long long> forbidden_values(const SeparatingSet& m);

// M u {x} for the least admissible x > max(M); re-verified exhaustively.
SeparatingSet extend(const SeparatingSet& m);

// Iterates extend until |elements| = size.
SeparatingSet build_prefix(const SeparatingSet& seed, std::size_t size);

}  // namespace subdirekt

#endif  // SUBDIREKT_SEPSET_HPP_
