#ifndef SUBDIREKT_GRADED_HPP_
#define SUBDIREKT_GRADED_HPP_

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"
#include "sepset.hpp"

namespace subdirekt {

// Ambient product the graded elements live in: N x N, N^k, or N x S with S
// a finite semigroup given by table.
struct Ambient {
  enum class Kind { NxN, NxK, NxS };

  Kind kind = Kind::NxN;
  int coords = 2;  // total number of coordinates (NxN, NxK)
  std::shared_ptr<const FiniteSemigroup> table;  // NxS only

  static Ambient nxn() { return Ambient{Kind::NxN, 2, nullptr}; }
  static Ambient nxk(int k);
  static Ambient nxs(FiniteSemigroup s);

  int fiber_len() const { return kind == Kind::NxS ? 1 : coords - 1; }
  bool commutative() const { return kind != Kind::NxS; }
  bool same(const Ambient& other) const;
};

// Element (grade, fiber) of an ambient product. The grade is the first,
// N-valued coordinate; the fiber holds the remaining N-coordinates, or a
// single semigroup element index for N x S.
struct GradedElement {
  long long grade;
  std::vector<long long> fiber;

  auto operator<=>(const GradedElement&) const = default;
};

GradedElement product(const Ambient& a, const GradedElement& u,
                      const GradedElement& v);

struct GeneratedSub {
  Ambient ambient;
  std::vector<GradedElement> generators;  // sorted, duplicates removed

  GeneratedSub(Ambient a, std::vector<GradedElement> gens);

  std::string serialize() const;
  // one generator per line, "grade : fiber"; fiber is comma-separated for
  // vector fibers, a single element index for N x S
  static GeneratedSub parse(const std::string& text, Ambient a);

  long long max_generator_grade() const;
};

// All elements of grade <= bound, with decomposability marks (member of
// S\SS restricted to the truncation, which is exact for grades <= bound).
struct Truncation {
  long long bound;
  std::vector<GradedElement> elements;  // sorted
  std::vector<bool> decomposable;

  bool contains(const GradedElement& e) const;
  long long index_of(const GradedElement& e) const;  // -1 if absent
};

// Breadth-first product closure by grade level; the level-g products only
// need completed lower levels, which is what the parallel kernel exploits.
Truncation truncated_closure(const GeneratedSub& g, long long bound);
Truncation truncated_closure_serial(const GeneratedSub& g, long long bound);

bool membership(const GeneratedSub& g, const GradedElement& e,
                long long bound);

std::vector<GradedElement> indecomposables(const Truncation& t);

bool is_subdirect(const GeneratedSub& g);

// The sets S_n = { s : (n, s) in T } for T <= N x S, with detected period m
// and threshold n0 such that S_n = S_{n+m} for n0 <= n <= bound - m.
struct LayerSequence {
  long long bound;
  std::vector<std::vector<int>> layers;  // layers[n-1], sorted fiber indices
  long long period_m;
  long long threshold_n0;
  std::map<int, long long> least_grade;  // s -> least n with (n, s) present

  const std::vector<int>& layer(long long n) const { return layers[n - 1]; }
};

LayerSequence layer_sequence(const GeneratedSub& g, long long bound);

// Finite generating set X = union over 1 <= n < n0 + m of {n} x S_n, valid
// when the fiber closure is a group or every fiber value has a relative
// identity inside it; verified by regenerates before returning.
std::vector<GradedElement> extract_generators(const GeneratedSub& g);

bool regenerates(const std::vector<GradedElement>& x, const GeneratedSub& g,
                 long long bound);

// Canonical A u { n*d : n >= n0 } form of a subsemigroup of N.
struct NumericalForm {
  std::vector<long long> sporadic_a;  // in original units
  long long d;
  long long n0;
};

NumericalForm numerical_form(const IntSet& gens);

}  // namespace subdirekt

#endif  // SUBDIREKT_GRADED_HPP_
