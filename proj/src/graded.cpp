#include "subdirekt/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace subdirekt {

namespace {

using Fiber = std::vector<long long>;

long long max_cells_cap() {
  if (const char* env = std::getenv("SUBDIREKT_MAX_CELLS")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 2'000'000;
}

Fiber fiber_product(const Ambient& a, const Fiber& u, const Fiber& v) {
  if (a.kind == Ambient::Kind::NxS) {
    return {static_cast<long long>(
        a.table->product(static_cast<int>(u[0]), static_cast<int>(v[0])))};
  }
  Fiber w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

// closure of a set of element indices under the table product
std::vector<int> semigroup_closure(const FiniteSemigroup& s,
                                   std::vector<int> seed) {
  std::vector<bool> in(s.order(), false);
  for (int x : seed) in[x] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < s.order(); ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < s.order(); ++y) {
        if (!in[y]) continue;
        int p = s.product(x, y);
        if (!in[p]) {
          in[p] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

Ambient Ambient::nxk(int k) {
  if (k < 2) throw Error(ErrorCode::TooSmall, "NxK needs k >= 2");
  return Ambient{Kind::NxK, k, nullptr};
}

Ambient Ambient::nxs(FiniteSemigroup s) {
  return Ambient{Kind::NxS, 2,
                 std::make_shared<const FiniteSemigroup>(std::move(s))};
}

bool Ambient::same(const Ambient& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::NxS) return *table == *other.table;
  return coords == other.coords;
}

GradedElement product(const Ambient& a, const GradedElement& u,
                      const GradedElement& v) {
  return {u.grade + v.grade, fiber_product(a, u.fiber, v.fiber)};
}

GeneratedSub::GeneratedSub(Ambient a, std::vector<GradedElement> gens)
    : ambient(std::move(a)), generators(std::move(gens)) {
  if (generators.empty()) {
    throw Error(ErrorCode::EmptySet, "a GeneratedSub needs generators");
  }
  for (const auto& g : generators) {
    if (g.grade < 1) {
      throw Error(ErrorCode::TooSmall, "generator grades must be >= 1");
    }
    if (g.fiber.size() != static_cast<std::size_t>(ambient.fiber_len())) {
      throw Error(ErrorCode::TooSmall, "fiber length does not match ambient");
    }
    if (ambient.kind == Ambient::Kind::NxS) {
      if (g.fiber[0] < 0 || g.fiber[0] >= ambient.table->order()) {
        throw Error(ErrorCode::TooLarge, "fiber index out of range");
      }
    } else {
      for (long long c : g.fiber) {
        if (c < 1) {
          throw Error(ErrorCode::TooSmall, "fiber entries must be >= 1");
        }
      }
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
}

std::string GeneratedSub::serialize() const {
  std::ostringstream out;
  for (const auto& g : generators) {
    out << g.grade << " : ";
    for (std::size_t i = 0; i < g.fiber.size(); ++i) {
      out << (i ? "," : "") << g.fiber[i];
    }
    out << "\n";
  }
  return out.str();
}

GeneratedSub GeneratedSub::parse(const std::string& text, Ambient a) {
  std::vector<GradedElement> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long grade;
    char colon;
    if (!(ls >> grade >> colon) || colon != ':') {
      throw Error(ErrorCode::TooSmall, "bad generator line: " + line);
    }
    Fiber fiber;
    long long v;
    while (ls >> v) {
      fiber.push_back(v);
      char comma;
      if (!(ls >> comma)) break;
      if (comma != ',') {
        throw Error(ErrorCode::TooSmall, "bad fiber in line: " + line);
      }
    }
    gens.push_back({grade, std::move(fiber)});
  }
  return GeneratedSub(std::move(a), std::move(gens));
}

long long GeneratedSub::max_generator_grade() const {
  long long m = 0;
  for (const auto& g : generators) m = std::max(m, g.grade);
  return m;
}

bool Truncation::contains(const GradedElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

long long Truncation::index_of(const GradedElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return -1;
  return it - elements.begin();
}

namespace {

Truncation closure_impl(const GeneratedSub& g, long long bound,
                        bool parallel) {
  if (bound < g.max_generator_grade()) {
    throw Error(ErrorCode::BoundTooSmall,
                "bound " + std::to_string(bound)
                    + " below max generator grade "
                    + std::to_string(g.max_generator_grade()));
  }
  const long long cap = max_cells_cap();
  // level[n]: fiber -> decomposable flag, complete once grade n is processed
  std::vector<std::map<Fiber, bool>> level(bound + 1);
  long long cells = 0;
  for (const auto& gen : g.generators) {
    if (gen.grade <= bound && level[gen.grade].emplace(gen.fiber, false).second)
      ++cells;
  }

  std::vector<const Fiber*> us, vs;
  std::vector<Fiber> prods;
  for (long long n = 2; n <= bound; ++n) {
    for (long long g1 = 1; g1 < n; ++g1) {
      long long g2 = n - g1;
      if (level[g1].empty() || level[g2].empty()) continue;
      us.clear();
      vs.clear();
      for (const auto& [u, du] : level[g1]) {
        for (const auto& [v, dv] : level[g2]) {
          us.push_back(&u);
          vs.push_back(&v);
        }
      }
      prods.assign(us.size(), {});
      int nt = static_cast<int>(us.size());
      if (parallel) {
#pragma omp parallel for schedule(static) if (nt > 512)
        for (int i = 0; i < nt; ++i) {
          prods[i] = fiber_product(g.ambient, *us[i], *vs[i]);
        }
      } else {
        for (int i = 0; i < nt; ++i) {
          prods[i] = fiber_product(g.ambient, *us[i], *vs[i]);
        }
      }
      for (auto& p : prods) {
        auto [it, inserted] = level[n].emplace(std::move(p), true);
        if (inserted) {
          if (++cells > cap) {
            throw Error(ErrorCode::TooLarge,
                        "closure exceeds SUBDIREKT_MAX_CELLS = "
                            + std::to_string(cap));
          }
        } else {
          it->second = true;
        }
      }
    }
  }

  Truncation t;
  t.bound = bound;
  t.elements.reserve(cells);
  for (long long n = 1; n <= bound; ++n) {
    for (const auto& [f, dec] : level[n]) {
      t.elements.push_back({n, f});
      t.decomposable.push_back(dec);
    }
  }
  return t;
}

}  // namespace

Truncation truncated_closure(const GeneratedSub& g, long long bound) {
  return closure_impl(g, bound, true);
}

Truncation truncated_closure_serial(const GeneratedSub& g, long long bound) {
  return closure_impl(g, bound, false);
}

bool membership(const GeneratedSub& g, const GradedElement& e,
                long long bound) {
  if (e.grade > bound) {
    throw Error(ErrorCode::BoundTooSmall, "element grade exceeds bound");
  }
  return truncated_closure(g, bound).contains(e);
}

std::vector<GradedElement> indecomposables(const Truncation& t) {
  std::vector<GradedElement> out;
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    if (!t.decomposable[i]) out.push_back(t.elements[i]);
  }
  return out;
}

bool is_subdirect(const GeneratedSub& g) {
  if (g.ambient.kind == Ambient::Kind::NxS) {
    bool grade_one = false;
    std::vector<int> fibers;
    for (const auto& gen : g.generators) {
      if (gen.grade == 1) grade_one = true;
      fibers.push_back(static_cast<int>(gen.fiber[0]));
    }
    if (!grade_one) return false;
    return semigroup_closure(*g.ambient.table, fibers).size()
           == static_cast<std::size_t>(g.ambient.table->order());
  }
  // a subsemigroup of N is all of N iff 1 is among its generators
  int k = g.ambient.coords;
  for (int c = 0; c < k; ++c) {
    bool has_one = false;
    for (const auto& gen : g.generators) {
      long long val = c == 0 ? gen.grade : gen.fiber[c - 1];
      if (val == 1) {
        has_one = true;
        break;
      }
    }
    if (!has_one) return false;
  }
  return true;
}

namespace {

struct FiberStructure {
  std::vector<int> closure;  // fiber closure of the generator fibers
  bool is_group;
  int identity;  // of the group when is_group
};

FiberStructure fiber_structure(const GeneratedSub& g) {
  const FiniteSemigroup& s = *g.ambient.table;
  std::vector<int> seed;
  for (const auto& gen : g.generators) {
    seed.push_back(static_cast<int>(gen.fiber[0]));
  }
  FiberStructure fs;
  fs.closure = semigroup_closure(s, seed);
  fs.is_group = false;
  fs.identity = -1;
  for (int e : fs.closure) {
    bool ident = true;
    for (int x : fs.closure) {
      if (s.product(e, x) != x || s.product(x, e) != x) {
        ident = false;
        break;
      }
    }
    if (ident) {
      fs.identity = e;
      break;
    }
  }
  if (fs.identity >= 0) {
    fs.is_group = true;
    for (int x : fs.closure) {
      bool has_inverse = false;
      for (int y : fs.closure) {
        if (s.product(x, y) == fs.identity
            && s.product(y, x) == fs.identity) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        fs.is_group = false;
        break;
      }
    }
  }
  return fs;
}

// relative identity of s within the candidate set, -1 if none
int relative_identity_in(const FiniteSemigroup& sg, int s,
                         const std::vector<int>& candidates) {
  for (int t : candidates) {
    if (sg.product(t, s) == s || sg.product(s, t) == s) return t;
  }
  return -1;
}

}  // namespace

LayerSequence layer_sequence(const GeneratedSub& g, long long bound) {
  if (g.ambient.kind != Ambient::Kind::NxS) {
    throw Error(ErrorCode::NotApplicable, "layer_sequence needs an NxS ambient");
  }
  const FiniteSemigroup& s = *g.ambient.table;
  Truncation t = truncated_closure(g, bound);

  LayerSequence seq;
  seq.bound = bound;
  seq.layers.assign(bound, {});
  for (const auto& e : t.elements) {
    int fib = static_cast<int>(e.fiber[0]);
    seq.layers[e.grade - 1].push_back(fib);
    if (!seq.least_grade.count(fib)) seq.least_grade[fib] = e.grade;
  }

  FiberStructure fs = fiber_structure(g);
  if (fs.is_group) {
    // least grade at which the identity of the fiber group appears
    auto it = seq.least_grade.find(fs.identity);
    if (it == seq.least_grade.end()) {
      throw Error(ErrorCode::PeriodNotDetected,
                  "fiber identity not reached below bound; raise the bound");
    }
    seq.period_m = it->second;
  } else {
    long long m = 1;
    for (int x : fs.closure) {
      if (relative_identity_in(s, x, fs.closure) < 0) {
        throw Error(ErrorCode::NotApplicable,
                    "fiber value " + s.label(x)
                        + " has no relative identity in the fiber closure");
      }
      auto it = seq.least_grade.find(x);
      if (it == seq.least_grade.end()) {
        throw Error(ErrorCode::PeriodNotDetected,
                    "fiber value " + s.label(x)
                        + " not reached below bound; raise the bound");
      }
      m = std::lcm(m, it->second);
    }
    seq.period_m = m;
  }

  long long m = seq.period_m;
  if (bound <= m) {
    throw Error(ErrorCode::PeriodNotDetected, "bound does not exceed period");
  }
  long long n0 = 1;
  for (long long n = bound - m; n >= 1; --n) {
    if (seq.layer(n) != seq.layer(n + m)) {
      n0 = n + 1;
      break;
    }
  }
  // insist on a verified stable window of length >= 2m before trusting the
  // empirical periodicity
  if (bound - m - n0 + 1 < 2 * m) {
    throw Error(ErrorCode::PeriodNotDetected,
                "stable window shorter than 2m below bound "
                    + std::to_string(bound));
  }
  seq.threshold_n0 = n0;
  return seq;
}

std::vector<GradedElement> extract_generators(const GeneratedSub& g) {
  if (g.ambient.kind != Ambient::Kind::NxS) {
    throw Error(ErrorCode::NotApplicable,
                "extract_generators needs an NxS ambient");
  }
  const FiniteSemigroup& s = *g.ambient.table;
  FiberStructure fs = fiber_structure(g);
  if (!fs.is_group) {
    if (!is_subdirect(g)) {
      throw Error(ErrorCode::NotApplicable,
                  "fiber closure is not a group and the subsemigroup is not "
                  "subdirect");
    }
    std::vector<int> all(s.order());
    std::iota(all.begin(), all.end(), 0);
    for (int x = 0; x < s.order(); ++x) {
      if (relative_identity_in(s, x, all) < 0) {
        throw Error(ErrorCode::NotApplicable,
                    "fiber value " + s.label(x) + " has no relative identity");
      }
    }
  }

  long long bound = std::max<long long>(16, 4 * g.max_generator_grade());
  LayerSequence seq = [&] {
    for (;;) {
      try {
        return layer_sequence(g, bound);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::PeriodNotDetected || bound > (1 << 16)) {
          throw;
        }
        bound *= 2;
      }
    }
  }();

  std::vector<GradedElement> x;
  for (long long n = 1; n < seq.threshold_n0 + seq.period_m; ++n) {
    for (int fib : seq.layer(n)) {
      x.push_back({n, {static_cast<long long>(fib)}});
    }
  }
  long long check_bound = 3 * (seq.threshold_n0 + seq.period_m);
  if (!regenerates(x, g, check_bound)) {
    throw Error(ErrorCode::PeriodNotDetected,
                "extracted set fails to regenerate the truncation");
  }
  return x;
}

bool regenerates(const std::vector<GradedElement>& x, const GeneratedSub& g,
                 long long bound) {
  Truncation orig = truncated_closure(g, bound);
  for (const auto& e : x) {
    if (!orig.contains(e)) {
      throw Error(ErrorCode::BoundTooSmall,
                  "candidate generators must lie in the truncation");
    }
  }
  Truncation regen = truncated_closure(GeneratedSub(g.ambient, x), bound);
  return regen.elements == orig.elements;
}

NumericalForm numerical_form(const IntSet& gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::EmptySet, "numerical_form needs generators");
  }
  for (long long v : gens) {
    if (v < 1) throw Error(ErrorCode::TooSmall, "generators must be >= 1");
  }
  long long d = 0;
  for (long long v : gens) d = std::gcd(d, v);
  std::vector<long long> reduced;
  for (long long v : gens) reduced.push_back(v / d);
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());

  // closure window covering the Frobenius number: F <= (min-1)(max-1)
  long long window = reduced.front() * reduced.back() + reduced.back() + 1;
  std::vector<char> in(window + 1, 0);
  for (long long v : reduced) {
    if (v <= window) in[v] = 1;
  }
  for (long long i = 1; i <= window; ++i) {
    if (in[i]) continue;
    for (long long v : reduced) {
      if (i > v && in[i - v]) {
        in[i] = 1;
        break;
      }
    }
  }
  long long n0 = 1;
  for (long long i = window; i >= 1; --i) {
    if (!in[i]) {
      n0 = i + 1;
      break;
    }
  }
  NumericalForm form;
  form.d = d;
  form.n0 = n0;
  for (long long i = 1; i < n0; ++i) {
    if (in[i]) form.sporadic_a.push_back(i * d);
  }
  return form;
}

}  // namespace subdirekt
