#include "subdirekt/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace subdirekt {

bool RelationTable::contains(const RelationWitness& w) const {
  for (const auto& grp : groups) {
    bool has_l = std::find(grp.expressions.begin(), grp.expressions.end(),
                           w.lhs) != grp.expressions.end();
    bool has_r = std::find(grp.expressions.begin(), grp.expressions.end(),
                           w.rhs) != grp.expressions.end();
    if (has_l && has_r) return true;
  }
  return false;
}

namespace {

constexpr long long kEnumCap = 5'000'000;

long long exponent_vector_count(int ng, long long degree) {
  // C(degree + ng, ng), capped
  long long c = 1;
  for (int i = 1; i <= ng; ++i) {
    c = c * (degree + i) / i;
    if (c > kEnumCap) return kEnumCap + 1;
  }
  return c;
}

void require_tractable(const GeneratedSub& g, long long degree) {
  int ng = static_cast<int>(g.generators.size());
  if (ng > 8) {
    throw Error(ErrorCode::TooManyGenerators,
                std::to_string(ng) + " generators (max 8)");
  }
  long long count;
  if (g.ambient.commutative()) {
    count = exponent_vector_count(ng, degree);
  } else {
    count = 0;
    long long pw = 1;
    for (long long l = 1; l <= degree && count <= kEnumCap; ++l) {
      pw *= ng;
      count += pw;
    }
  }
  if (count > kEnumCap) {
    throw Error(ErrorCode::TooLarge, "enumeration would exceed the cap");
  }
}

// recursive enumeration of exponent vectors with incremental evaluation;
// visit(alpha, value) for every nonzero vector of total degree <= degree
template <typename Visit>
void enum_commutative(const GeneratedSub& g, long long degree, Visit&& visit) {
  int ng = static_cast<int>(g.generators.size());
  std::vector<long long> alpha(ng, 0);
  GradedElement val{0, std::vector<long long>(g.ambient.fiber_len(), 0)};
  auto rec = [&](auto&& self, int i, long long rem) -> void {
    if (i == ng) {
      if (val.grade > 0) visit(alpha, val);
      return;
    }
    const GradedElement& gen = g.generators[i];
    for (long long e = 0; e <= rem; ++e) {
      alpha[i] = e;
      self(self, i + 1, rem - e);
      val.grade += gen.grade;
      for (std::size_t c = 0; c < val.fiber.size(); ++c) {
        val.fiber[c] += gen.fiber[c];
      }
    }
    val.grade -= (rem + 1) * gen.grade;
    for (std::size_t c = 0; c < val.fiber.size(); ++c) {
      val.fiber[c] -= (rem + 1) * gen.fiber[c];
    }
    alpha[i] = 0;
  };
  rec(rec, 0, degree);
}

// enumeration of generator words of length <= max_len with memoized left
// products
template <typename Visit>
void enum_words(const GeneratedSub& g, long long max_len, Visit&& visit) {
  int ng = static_cast<int>(g.generators.size());
  std::vector<long long> word;
  auto rec = [&](auto&& self, const GradedElement* prefix) -> void {
    if (static_cast<long long>(word.size()) == max_len) return;
    for (int i = 0; i < ng; ++i) {
      GradedElement val = prefix == nullptr
                              ? g.generators[i]
                              : product(g.ambient, *prefix, g.generators[i]);
      word.push_back(i);
      visit(word, val);
      self(self, &val);
      word.pop_back();
    }
  };
  rec(rec, nullptr);
}

}  // namespace

RelationTable relations_up_to(const GeneratedSub& g, long long degree) {
  if (degree < 2) {
    throw Error(ErrorCode::TooSmall, "degree bound must be >= 2");
  }
  require_tractable(g, degree);
  std::map<GradedElement, std::vector<std::vector<long long>>> buckets;
  if (g.ambient.commutative()) {
    enum_commutative(g, degree,
                     [&](const std::vector<long long>& alpha,
                         const GradedElement& val) {
                       buckets[val].push_back(alpha);
                     });
  } else {
    // degree bounds the word length for NxS enumeration
    enum_words(g, degree,
               [&](const std::vector<long long>& word,
                   const GradedElement& val) { buckets[val].push_back(word); });
  }

  RelationTable table;
  table.degree = degree;
  table.words = !g.ambient.commutative();
  for (auto& [val, exprs] : buckets) {
    if (exprs.size() >= 2) {
      table.groups.push_back({val, std::move(exprs)});
    }
  }
  return table;
}

GeneratorMap::GeneratorMap(GeneratedSub src, GeneratedSub tgt,
                           std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
  std::size_t n = source.generators.size();
  if (image.size() != n || target.generators.size() != n) {
    throw Error(ErrorCode::TooSmall, "image must be a generator bijection");
  }
  std::vector<bool> hit(n, false);
  for (int v : image) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v]) {
      throw Error(ErrorCode::TooSmall, "image must be a generator bijection");
    }
    hit[v] = true;
  }
}

std::vector<int> GeneratorMap::inverse() const {
  std::vector<int> inv(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    inv[image[i]] = static_cast<int>(i);
  }
  return inv;
}

namespace {

std::vector<long long> unpack_alpha(std::uint64_t packed, int ng) {
  std::vector<long long> alpha(ng);
  for (int i = 0; i < ng; ++i) {
    alpha[i] = (packed >> (8 * i)) & 0xff;
  }
  return alpha;
}

// dense-table direction check for NxN ambients: buckets keyed by the source
// value (grade, fiber), slots stamped by epoch so the buffers persist
// across calls
std::optional<RelationWitness> direction_dense(const GeneratedSub& src,
                                               const GeneratedSub& tgt,
                                               const std::vector<int>& img,
                                               long long degree) {
  int ng = static_cast<int>(src.generators.size());
  long long max_sg = 0, max_sf = 0;
  for (const auto& g : src.generators) {
    max_sg = std::max(max_sg, g.grade);
    max_sf = std::max(max_sf, g.fiber[0]);
  }
  long long cols = degree * max_sf + 1;
  long long slots = (degree * max_sg + 1) * cols;

  thread_local std::vector<std::int64_t> tval, first_alpha;
  thread_local std::vector<std::uint32_t> epoch;
  thread_local std::uint32_t cur_epoch = 0;
  if (static_cast<long long>(epoch.size()) < slots) {
    tval.assign(slots, 0);
    first_alpha.assign(slots, 0);
    epoch.assign(slots, 0);
    cur_epoch = 0;
  }
  ++cur_epoch;

  std::optional<RelationWitness> out;
  std::vector<long long> alpha(ng, 0);
  std::uint64_t packed = 0;
  long long sg = 0, sf = 0, tg = 0, tf = 0;
  auto rec = [&](auto&& self, int i, long long rem) -> void {
    if (out) return;
    if (i == ng) {
      if (sg == 0) return;
      long long idx = sg * cols + sf;
      std::int64_t tv = (tg << 32) | tf;
      if (epoch[idx] != cur_epoch) {
        epoch[idx] = cur_epoch;
        tval[idx] = tv;
        first_alpha[idx] = static_cast<std::int64_t>(packed);
      } else if (tval[idx] != tv) {
        out = RelationWitness{
            unpack_alpha(static_cast<std::uint64_t>(first_alpha[idx]), ng),
            alpha, false};
      }
      return;
    }
    const GradedElement& s = src.generators[i];
    const GradedElement& t = tgt.generators[img[i]];
    long long steps = 0;
    for (long long e = 0; e <= rem && !out; ++e) {
      alpha[i] = e;
      packed |= static_cast<std::uint64_t>(e) << (8 * i);
      self(self, i + 1, rem - e);
      packed &= ~(0xffULL << (8 * i));
      sg += s.grade;
      sf += s.fiber[0];
      tg += t.grade;
      tf += t.fiber[0];
      ++steps;
    }
    sg -= steps * s.grade;
    sf -= steps * s.fiber[0];
    tg -= steps * t.grade;
    tf -= steps * t.fiber[0];
    alpha[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

std::optional<RelationWitness> direction_generic(const GeneratedSub& src,
                                                 const GeneratedSub& tgt,
                                                 const std::vector<int>& img,
                                                 long long degree) {
  std::optional<RelationWitness> out;
  if (src.ambient.commutative()) {
    std::map<GradedElement, std::pair<GradedElement, std::vector<long long>>>
        buckets;
    enum_commutative(src, degree,
                     [&](const std::vector<long long>& alpha,
                         const GradedElement& val) {
                       if (out) return;
                       GradedElement image{0, std::vector<long long>(
                                                  tgt.ambient.fiber_len(), 0)};
                       for (std::size_t i = 0; i < alpha.size(); ++i) {
                         const GradedElement& t = tgt.generators[img[i]];
                         image.grade += alpha[i] * t.grade;
                         for (std::size_t c = 0; c < image.fiber.size(); ++c) {
                           image.fiber[c] += alpha[i] * t.fiber[c];
                         }
                       }
                       auto [it, inserted] =
                           buckets.emplace(val, std::make_pair(image, alpha));
                       if (!inserted && it->second.first != image) {
                         out = RelationWitness{it->second.second, alpha, false};
                       }
                     });
  } else {
    std::map<GradedElement, std::pair<GradedElement, std::vector<long long>>>
        buckets;
    enum_words(src, degree, [&](const std::vector<long long>& word,
                                const GradedElement& val) {
      if (out) return;
      GradedElement image = tgt.generators[img[word[0]]];
      for (std::size_t i = 1; i < word.size(); ++i) {
        image = product(tgt.ambient, image, tgt.generators[img[word[i]]]);
      }
      auto [it, inserted] = buckets.emplace(val, std::make_pair(image, word));
      if (!inserted && it->second.first != image) {
        out = RelationWitness{it->second.second, word, true};
      }
    });
  }
  return out;
}

std::optional<RelationWitness> check_direction(const GeneratedSub& src,
                                               const GeneratedSub& tgt,
                                               const std::vector<int>& img,
                                               long long degree) {
  bool dense_ok = src.ambient.kind == Ambient::Kind::NxN
                  && tgt.ambient.kind == Ambient::Kind::NxN && degree < 250
                  && src.generators.size() <= 8;
  if (dense_ok) {
    long long max_sg = 0, max_sf = 0, max_t = 0;
    for (const auto& g : src.generators) {
      max_sg = std::max(max_sg, g.grade);
      max_sf = std::max(max_sf, g.fiber[0]);
    }
    for (const auto& g : tgt.generators) {
      max_t = std::max({max_t, g.grade, g.fiber[0]});
    }
    if ((degree * max_sg + 1) * (degree * max_sf + 1) <= (1 << 23)
        && degree * max_t < (1LL << 31)) {
      return direction_dense(src, tgt, img, degree);
    }
  }
  return direction_generic(src, tgt, img, degree);
}

}  // namespace

MapVerdict map_preserves(const GeneratorMap& phi, long long degree) {
  require_tractable(phi.source, degree);
  require_tractable(phi.target, degree);
  if (auto v = check_direction(phi.source, phi.target, phi.image, degree)) {
    return {false, v};
  }
  if (auto v = check_direction(phi.target, phi.source, phi.inverse(),
                               degree)) {
    return {false, v};
  }
  return {true, std::nullopt};
}

IsoVerdict iso_semidecision(const GeneratedSub& a, const GeneratedSub& b,
                            long long degree) {
  auto indec_of = [](const GeneratedSub& g) {
    return indecomposables(truncated_closure(g, g.max_generator_grade()));
  };
  std::vector<GradedElement> ia = indec_of(a);
  std::vector<GradedElement> ib = indec_of(b);
  if (ia.size() != ib.size()) {
    return {true, degree,
            "indecomposable counts differ: " + std::to_string(ia.size())
                + " vs " + std::to_string(ib.size())};
  }
  if (ia.size() > 8) {
    throw Error(ErrorCode::TooManyGenerators,
                "too many indecomposables for bijection search");
  }
  GeneratedSub sub_a(a.ambient, ia);
  GeneratedSub sub_b(b.ambient, ib);
  std::vector<int> perm(ia.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  do {
    GeneratorMap phi(sub_a, sub_b, perm);
    if (map_preserves(phi, degree).preserved) {
      return {false, degree, "a relation-preserving bijection exists"};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {true, degree, "every indecomposable bijection violates a relation"};
}

namespace {

// conflict scan over the partially filled table; -1 marks unknown cells
bool partial_associative(const std::vector<int>& tab, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = tab[a * n + b];
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        int bc = tab[b * n + c];
        if (bc < 0) continue;
        int left = tab[ab * n + c];
        int right = tab[a * n + bc];
        if (left >= 0 && right >= 0 && left != right) return false;
      }
    }
  }
  return true;
}

std::vector<int> canonical_table(const std::vector<int>& tab, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> best;
  std::vector<int> relab(n * n);
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        relab[perm[i] * n + perm[j]] = perm[tab[i * n + j]];
      }
    }
    if (best.empty() || relab < best) best = relab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteSemigroup> census(int n) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "order must be positive");
  if (n > 4) throw Error(ErrorCode::TooLarge, "census supports order <= 4");
  std::set<std::vector<int>> canon;
  std::vector<int> tab(n * n, -1);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n * n) {
      canon.insert(canonical_table(tab, n));
      return;
    }
    for (int v = 0; v < n; ++v) {
      tab[pos] = v;
      if (partial_associative(tab, n)) self(self, pos + 1);
    }
    tab[pos] = -1;
  };
  rec(rec, 0);
  std::vector<FiniteSemigroup> out;
  for (const auto& t : canon) {
    out.emplace_back(n, t);
  }
  return out;
}

long long enumerate_subsemigroups(const Truncation& t,
                                  const Ambient& ambient) {
  int n = static_cast<int>(t.elements.size());
  if (n > 20) {
    throw Error(ErrorCode::TooLarge, "truncation too large for subset scan");
  }
  struct Rule {
    std::uint32_t need, want;
  };
  std::vector<Rule> rules;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.elements[i].grade + t.elements[j].grade > t.bound) continue;
      GradedElement p = product(ambient, t.elements[i], t.elements[j]);
      long long k = t.index_of(p);
      if (k < 0) {
        throw Error(ErrorCode::BoundTooSmall, "truncation is not product-closed");
      }
      rules.push_back({(1u << i) | (1u << j), 1u << k});
    }
  }
  long long total = 0;
  std::uint64_t limit = 1ull << n;
#pragma omp parallel for schedule(static) reduction(+ : total) if (n > 14)
  for (long long mask = 0; mask < static_cast<long long>(limit); ++mask) {
    bool closed = true;
    for (const Rule& r : rules) {
      if ((mask & r.need) == r.need && !(mask & r.want)) {
        closed = false;
        break;
      }
    }
    if (closed) ++total;
  }
  return total;
}

}  // namespace subdirekt
