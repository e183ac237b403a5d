#include "subdirekt/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace subdirekt {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::PeriodNotDetected: return "PeriodNotDetected";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MissingOne: return "MissingOne";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::IsUnionOfGroups: return "IsUnionOfGroups";
    case ErrorCode::HasRelativeIdentities: return "HasRelativeIdentities";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

FiniteSemigroup::FiniteSemigroup(int order, std::vector<int> table,
                                 std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ < 1) {
    throw Error(ErrorCode::MalformedTable, "order must be positive");
  }
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw Error(ErrorCode::MalformedTable,
                "expected " + std::to_string(order_ * order_) + " entries, got "
                    + std::to_string(table_.size()));
  }
  for (int v : table_) {
    if (v < 0 || v >= order_) {
      throw Error(ErrorCode::MalformedTable,
                  "entry " + std::to_string(v) + " out of range 0.."
                      + std::to_string(order_ - 1));
    }
  }
  // exhaustive O(n^3) associativity check; n is small throughout
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      int ij = product(i, j);
      for (int k = 0; k < order_; ++k) {
        if (product(ij, k) != product(i, product(j, k))) {
          throw Error(ErrorCode::NotAssociative,
                      "(i,j,k) = (" + std::to_string(i) + ","
                          + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < order_; ++i) {
      labels_.push_back(std::to_string(i));
    }
  } else if (labels_.size() != static_cast<std::size_t>(order_)) {
    throw Error(ErrorCode::MalformedTable, "label count != order");
  }
}

FiniteSemigroup FiniteSemigroup::parse(std::istream& in) {
  int n;
  if (!(in >> n)) {
    throw Error(ErrorCode::MalformedTable, "missing order line");
  }
  if (n < 1) {
    throw Error(ErrorCode::MalformedTable, "order must be positive");
  }
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n * n; ++c) {
    int v;
    if (!(in >> v)) {
      throw Error(ErrorCode::MalformedTable,
                  "table truncated after " + std::to_string(c) + " entries");
    }
    table.push_back(v);
  }
  std::vector<std::string> labels;
  std::string word;
  if (in >> word) {
    if (word != "labels:") {
      throw Error(ErrorCode::MalformedTable, "unexpected token '" + word + "'");
    }
    std::string lab;
    while (in >> lab) {
      labels.push_back(lab);
    }
  }
  return FiniteSemigroup(n, std::move(table), std::move(labels));
}

FiniteSemigroup FiniteSemigroup::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

int FiniteSemigroup::power(int x, long long e) const {
  int acc = x;
  for (long long i = 1; i < e; ++i) {
    acc = product(acc, x);
  }
  return acc;
}

std::string FiniteSemigroup::to_table_text() const {
  std::ostringstream out;
  out << order_ << "\n";
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      out << product(i, j) << (j + 1 == order_ ? "" : " ");
    }
    out << "\n";
  }
  return out.str();
}

namespace {

// dense class ids in order of least member
std::pair<std::vector<int>, std::vector<std::vector<int>>> classes_of(
    const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    for (int j = i; j < n; ++j) {
      if (cls[j] < 0 && leq[i][j] && leq[j][i]) {
        cls[j] = id;
        members[id].push_back(j);
      }
    }
  }
  return {cls, members};
}

}  // namespace

GreenStructure green(const FiniteSemigroup& s) {
  int n = s.order();
  GreenStructure g;
  g.r_leq.assign(n, std::vector<bool>(n, false));
  g.l_leq.assign(n, std::vector<bool>(n, false));
  g.j_leq.assign(n, std::vector<bool>(n, false));

  for (int a = 0; a < n; ++a) {
    // reflexivity stands in for the adjoined identity of S^1
    g.r_leq[a][a] = g.l_leq[a][a] = g.j_leq[a][a] = true;
  }
  for (int t = 0; t < n; ++t) {
    for (int u = 0; u < n; ++u) {
      g.r_leq[s.product(t, u)][t] = true;
      g.l_leq[s.product(u, t)][t] = true;
      g.j_leq[s.product(t, u)][t] = true;
      g.j_leq[s.product(u, t)][t] = true;
      for (int v = 0; v < n; ++v) {
        g.j_leq[s.product(s.product(u, t), v)][t] = true;
      }
    }
  }

  std::tie(g.r_class, g.r_classes) = classes_of(g.r_leq);
  std::tie(g.l_class, g.l_classes) = classes_of(g.l_leq);
  std::tie(g.j_class, g.j_classes) = classes_of(g.j_leq);

  // H = R cap L
  std::vector<std::vector<bool>> h_leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h_leq[i][j] = g.r_leq[i][j] && g.l_leq[i][j];
    }
  }
  std::tie(g.h_class, g.h_classes) = classes_of(h_leq);
  return g;
}

PowerProfile power_profile(const FiniteSemigroup& s, int x) {
  // exponent of first appearance per element; powers cycle in a finite
  // semigroup so a repeat occurs within n+1 steps
  std::vector<int> first_seen(s.order(), 0);
  int cur = x;
  int e = 1;
  while (first_seen[cur] == 0) {
    first_seen[cur] = e;
    cur = s.product(cur, x);
    ++e;
  }
  int index_i = first_seen[cur];
  int period_p = e - index_i;
  // idem_k: the unique multiple of period_p in [index_i, index_i + period_p)
  int idem_k = ((index_i + period_p - 1) / period_p) * period_p;
  return PowerProfile{x, index_i, period_p, idem_k};
}

UnionOfGroupsVerdict is_union_of_groups(const FiniteSemigroup& s) {
  GreenStructure g = green(s);
  for (const auto& h : g.h_classes) {
    bool has_idem = false;
    for (int e : h) {
      if (s.is_idempotent(e)) {
        has_idem = true;
        break;
      }
    }
    if (!has_idem) {
      return {false, h.front()};
    }
  }
  return {true, -1};
}

RelativeIdentitiesVerdict has_relative_identities(const FiniteSemigroup& s) {
  RelativeIdentitiesVerdict v{true, {}};
  for (int a = 0; a < s.order(); ++a) {
    bool found = false;
    for (int t = 0; t < s.order(); ++t) {
      if (s.product(t, a) == a || s.product(a, t) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      v.all_have = false;
      v.violators.push_back(a);
    }
  }
  return v;
}

}  // namespace subdirekt
