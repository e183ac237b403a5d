#ifndef SUBDIREKT_SEMIGROUP_HPP_
#define SUBDIREKT_SEMIGROUP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "error.hpp"

namespace subdirekt {

// A finite semigroup given by its Cayley table. Closure and associativity
// are checked at construction; instances are immutable afterwards.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int order, std::vector<int> table,
                  std::vector<std::string> labels = {});

  // Parses the Cayley-table text format: first line n, then n rows of n
  // indices, optionally followed by "labels: a b c ...".
  static FiniteSemigroup parse(std::istream& in);
  static FiniteSemigroup parse(const std::string& text);

  int order() const noexcept { return order_; }
  int product(int i, int j) const { return table_[i * order_ + j]; }
  // x^e for e >= 1.
  int power(int x, long long e) const;
  bool is_idempotent(int x) const { return product(x, x) == x; }
  const std::vector<int>& table() const noexcept { return table_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string to_table_text() const;

  bool operator==(const FiniteSemigroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

struct GreenStructure {
  // class id per element, ids dense from 0 in order of least member
  std::vector<int> r_class, l_class, j_class, h_class;
  std::vector<std::vector<int>> r_classes, l_classes, j_classes, h_classes;
  // preorders: r_leq[s][t] iff s <=_R t (with the adjoined identity, so
  // the preorders are reflexive without materializing an extra element)
  std::vector<std::vector<bool>> r_leq, l_leq, j_leq;
};

GreenStructure green(const FiniteSemigroup& s);

struct PowerProfile {
  int element;
  int index_i;   // least i with x^i inside the cycle of powers
  int period_p;  // cycle length
  int idem_k;    // least k >= 1 with x^{2k} = x^k
};

PowerProfile power_profile(const FiniteSemigroup& s, int x);

struct UnionOfGroupsVerdict {
  bool is_union_of_groups;
  int witness = -1;  // element of an idempotent-free H-class when false
};

UnionOfGroupsVerdict is_union_of_groups(const FiniteSemigroup& s);

struct RelativeIdentitiesVerdict {
  bool all_have;
  std::vector<int> violators;  // s with ts != s and st != s for all t
};

RelativeIdentitiesVerdict has_relative_identities(const FiniteSemigroup& s);

}  // namespace subdirekt

#endif  // SUBDIREKT_SEMIGROUP_HPP_
