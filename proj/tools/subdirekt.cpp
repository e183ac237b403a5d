#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "subdirekt/graded.hpp"
#include "subdirekt/oracle.hpp"
#include "subdirekt/semigroup.hpp"
#include "subdirekt/sepset.hpp"
#include "subdirekt/verify.hpp"
#include "subdirekt/witness.hpp"

namespace {

using json = nlohmann::json;
using namespace subdirekt;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

IntSet parse_int_set(const std::string& text) {
  IntSet out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoll(tok));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_int_set(const IntSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedTable, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteSemigroup load_table(const std::string& path) {
  return FiniteSemigroup::parse(read_file(path));
}

json element_json(const GradedElement& e) {
  return json{{"grade", e.grade}, {"fiber", e.fiber}};
}

std::string element_text(const GradedElement& e) {
  std::string out = "(" + std::to_string(e.grade);
  for (long long f : e.fiber) out += "," + std::to_string(f);
  return out + ")";
}

// ambient from the optional table path and the fiber width of the file
GeneratedSub load_generators(const std::string& path,
                             const std::string& table_path) {
  std::string text = read_file(path);
  if (!table_path.empty()) {
    return GeneratedSub::parse(text, Ambient::nxs(load_table(table_path)));
  }
  // peek at the first generator line to size the ambient
  std::istringstream in(text);
  std::string line;
  int width = 1;
  while (std::getline(in, line)) {
    if (line.find(':') == std::string::npos) continue;
    width = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
    break;
  }
  return GeneratedSub::parse(text, width == 1 ? Ambient::nxn()
                                              : Ambient::nxk(width + 1));
}

int cmd_classify(const std::string& table_path, bool as_json) {
  FiniteSemigroup s = load_table(table_path);
  auto uog = is_union_of_groups(s);
  auto rel = has_relative_identities(s);
  if (as_json) {
    json rec{{"subsemigroups", uog.is_union_of_groups ? "countable" : "uncountable"},
             {"condition", "union-of-groups"},
             {"holds", uog.is_union_of_groups}};
    if (!uog.is_union_of_groups) rec["witness"] = s.label(uog.witness);
    std::cout << rec.dump() << "\n";
    json rec2{{"subdirect_products", rel.all_have ? "countable" : "uncountable"},
              {"condition", "relative-identities"},
              {"holds", rel.all_have}};
    if (!rel.all_have) rec2["witness"] = s.label(rel.violators.front());
    std::cout << rec2.dump() << "\n";
  } else {
    std::cout << "subsemigroups: "
              << (uog.is_union_of_groups ? "countable" : "uncountable")
              << " (union-of-groups "
              << (uog.is_union_of_groups ? "holds" : "fails") << ")";
    if (!uog.is_union_of_groups) {
      std::cout << ", witness " << s.label(uog.witness);
    }
    std::cout << "\n";
    std::cout << "subdirect products: "
              << (rel.all_have ? "countable" : "uncountable")
              << " (relative-identities "
              << (rel.all_have ? "holds" : "fails") << ")";
    if (!rel.all_have) std::cout << ", witness " << s.label(rel.violators.front());
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_sepset_check(const IntSet& m, bool as_json) {
  auto s1 = check_s1(m);
  auto s2 = check_s2(m);
  json rec{{"set", format_int_set(m)},
           {"s1", s1.separating},
           {"s2", s2.separating}};
  if (!s1.separating) {
    const auto& c = *s1.counterexample;
    rec["s1_counterexample"] = {{c.m[0], c.m[1], c.m[2]}, {c.n[0], c.n[1], c.n[2]}};
  }
  if (!s2.separating) {
    const auto& c = *s2.counterexample;
    rec["s2_counterexample"] = {{c.m[0], c.m[1]}, {c.n[0], c.n[1]}};
  }
  if (as_json) {
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "{" << format_int_set(m) << "}: "
              << (s1.separating && s2.separating ? "strongly 3-separating"
                                                 : "not strongly 3-separating")
              << "\n";
    if (!s1.separating) {
      const auto& c = *s1.counterexample;
      std::cout << "(S1) counterexample: (" << c.m[0] << "," << c.m[1] << ","
                << c.m[2] << ") vs (" << c.n[0] << "," << c.n[1] << ","
                << c.n[2] << ")\n";
    }
    if (!s2.separating) {
      const auto& c = *s2.counterexample;
      std::cout << "(S2) counterexample: (" << c.m[0] << "," << c.m[1]
                << ") vs (" << c.n[0] << "," << c.n[1] << ")\n";
    }
  }
  return s1.separating && s2.separating ? kExitOk : kExitVerificationFailed;
}

int cmd_sepset_extend(const IntSet& m, std::size_t to, bool as_json) {
  SeparatingSet result =
      build_prefix(SeparatingSet::verified(m), std::max(to, m.size()));
  if (as_json) {
    std::cout << json{{"set", format_int_set(result.elements())},
                      {"s1", true},
                      {"s2", true}}
                     .dump()
              << "\n";
  } else {
    std::cout << format_int_set(result.elements()) << "\n";
  }
  return kExitOk;
}

int cmd_sm_iso(const IntSet& m, const IntSet& n, long long degree,
               bool as_json) {
  if (m.size() != 3 || n.size() != 3) {
    throw Error(ErrorCode::TooSmall, "sm iso expects 3-element sets");
  }
  if (degree <= 0) degree = 2 * (m[0] + m[1] + m[2]);
  std::array<long long, 3> mt = {m[0], m[1], m[2]};
  GeneratedSub sm = build_sm(m), sn = build_sm(n);
  bool any = false;
  std::array<int, 3> perm = {0, 1, 2};
  do {
    std::array<long long, 3> nt = {n[perm[0]], n[perm[1]], n[perm[2]]};
    bool dag = dag_holds(mt, nt);
    bool preserved =
        map_preserves(GeneratorMap(sm, sn, {perm[0], perm[1], perm[2]}),
                      degree)
            .preserved;
    any = any || dag;
    if (as_json) {
      std::cout << json{{"m", mt},
                        {"n", nt},
                        {"criterion", dag},
                        {"oracle_preserved", preserved},
                        {"degree", degree}}
                       .dump()
                << "\n";
    } else {
      std::cout << "(" << nt[0] << "," << nt[1] << "," << nt[2]
                << "): criterion " << (dag ? "holds" : "fails") << ", oracle "
                << (preserved ? "preserved" : "violated") << " at degree "
                << degree << "\n";
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::cout << (any ? "isomorphic via a generator bijection"
                    : "no generator bijection induces an isomorphism")
            << "\n";
  return kExitOk;
}

int cmd_witness(bool thm_d, const std::string& table_path, const IntSet& m,
                bool as_json) {
  FiniteSemigroup s = load_table(table_path);
  GeneratedSub g = thm_d ? thm_d_witness(s, m) : thm_e_witness(s, m);
  long long top = std::max<long long>(2, m.back());
  auto indec = indecomposables(truncated_closure(g, 2 * top));
  bool all_indec = true;
  for (const auto& gen : g.generators) {
    if (!std::binary_search(indec.begin(), indec.end(), gen)) {
      all_indec = false;
    }
  }
  if (as_json) {
    json gens = json::array();
    for (const auto& gen : g.generators) gens.push_back(element_json(gen));
    std::cout << json{{"family", thm_d ? "thmD" : "thmE"},
                      {"M", m},
                      {"generators", gens},
                      {"all_indecomposable", all_indec},
                      {"subdirect", is_subdirect(g)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "generators:";
    for (const auto& gen : g.generators) std::cout << " " << element_text(gen);
    std::cout << "\nall indecomposable: " << (all_indec ? "yes" : "no")
              << "\nsubdirect: " << (is_subdirect(g) ? "yes" : "no") << "\n";
  }
  return all_indec ? kExitOk : kExitVerificationFailed;
}

int cmd_gens_extract(const std::string& gens_path,
                     const std::string& table_path, const std::string& out,
                     bool as_json) {
  GeneratedSub g = load_generators(gens_path, table_path);
  auto x = extract_generators(g);
  long long max_grade = 0;
  for (const auto& e : x) max_grade = std::max(max_grade, e.grade);
  long long bound = 3 * (max_grade + 1);
  bool ok = regenerates(x, g, bound);
  GeneratedSub extracted(g.ambient, x);
  std::string payload = extracted.serialize();
  if (!out.empty()) {
    std::ofstream f(out);
    f << payload;
  } else {
    std::cout << payload;
  }
  if (as_json) {
    std::cout << json{{"generators", x.size()},
                      {"regeneration_bound", bound},
                      {"regenerates", ok}}
                     .dump()
              << "\n";
  } else {
    std::cout << "# regeneration verified to grade " << bound << ": "
              << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_closure(const std::string& gens_path, const std::string& table_path,
                long long bound, bool as_json) {
  GeneratedSub g = load_generators(gens_path, table_path);
  Truncation t = truncated_closure(g, bound);
  if (as_json) {
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      json rec = element_json(t.elements[i]);
      rec["decomposable"] = static_cast<bool>(t.decomposable[i]);
      std::cout << rec.dump() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
      std::cout << element_text(t.elements[i])
                << (t.decomposable[i] ? "" : " *") << "\n";
    }
    std::cout << "# " << t.elements.size() << " elements at D = " << bound
              << "; * marks indecomposables\n";
  }
  return kExitOk;
}

int cmd_oracle_relations(const std::string& gens_path,
                         const std::string& table_path, long long degree,
                         bool as_json) {
  GeneratedSub g = load_generators(gens_path, table_path);
  RelationTable table = relations_up_to(g, degree);
  for (const auto& grp : table.groups) {
    if (as_json) {
      std::cout << json{{"value", element_json(grp.value)},
                        {"expressions", grp.expressions}}
                       .dump()
                << "\n";
    } else {
      std::cout << element_text(grp.value) << ":";
      for (const auto& e : grp.expressions) {
        std::cout << " [";
        for (std::size_t i = 0; i < e.size(); ++i) {
          std::cout << (i ? " " : "") << e[i];
        }
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  std::cout << "# " << table.groups.size() << " relation groups up to degree "
            << degree << "\n";
  return kExitOk;
}

int cmd_oracle_iso(const IntSet& m, const IntSet& n, long long degree,
                   bool as_json) {
  if (degree <= 0) {
    degree = 2 * std::accumulate(m.begin(), m.end(), 0LL);
  }
  auto verdict = iso_semidecision(build_sm(m), build_sm(n), degree);
  if (as_json) {
    std::cout << json{{"verdict", verdict.non_isomorphic ? "non-isomorphic"
                                                         : "consistent-up-to"},
                      {"degree", verdict.degree},
                      {"detail", verdict.detail}}
                     .dump()
              << "\n";
  } else {
    std::cout << (verdict.non_isomorphic
                      ? "non-isomorphic: "
                      : "consistent up to degree (NOT a proof of isomorphism): ")
              << verdict.detail << "\n";
  }
  return kExitOk;
}

int cmd_oracle_census(int n, const std::string& out_dir) {
  auto list = census(n);
  if (!out_dir.empty()) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::ofstream f(out_dir + "/sg_" + std::to_string(n) + "_"
                      + std::to_string(i) + ".tbl");
      f << list[i].to_table_text();
    }
  } else {
    for (const auto& s : list) std::cout << s.to_table_text() << "\n";
  }
  std::cout << "# " << list.size() << " semigroups of order " << n
            << " up to isomorphism\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, bool as_json) {
  auto results = verify::run_suite(suite);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    if (as_json) {
      std::cout << json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}}
                       .dump()
                << "\n";
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " — "
                << r.detail << "\n";
    }
  }
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with subsemigroups of NxN, N^k and NxS"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output, one record per line");

  std::string table_path, gens_path, out_path, set_m, set_n, suite;
  long long bound = 20, degree = 8;
  std::size_t to_size = 0;
  int census_n = 3;

  auto* classify = app.add_subcommand("classify", "countability verdicts for NxS");
  classify->add_option("table", table_path, "Cayley table file")->required();

  auto* sepset = app.add_subcommand("sepset", "strongly 3-separating sets");
  sepset->require_subcommand(1);
  auto* sep_check = sepset->add_subcommand("check", "check (S1)/(S2)");
  sep_check->add_option("set", set_m, "comma-separated integers")->required();
  auto* sep_extend = sepset->add_subcommand("extend", "grow by least admissible x");
  sep_extend->add_option("set", set_m, "comma-separated integers")->required();
  sep_extend->add_option("--to", to_size, "target size")->required();

  auto* sm = app.add_subcommand("sm", "the S_M family");
  sm->require_subcommand(1);
  auto* sm_iso = sm->add_subcommand("iso", "generator-bijection isomorphism test");
  sm_iso->add_option("--M", set_m)->required();
  sm_iso->add_option("--N", set_n)->required();
  long long iso_degree = 0;
  sm_iso->add_option("-L,--degree", iso_degree, "oracle degree bound");

  auto* witness = app.add_subcommand("witness", "uncountable-family witnesses");
  witness->require_subcommand(1);
  auto* wd = witness->add_subcommand("thmD", "non-union-of-groups family");
  auto* we = witness->add_subcommand("thmE", "relative-identity-violator family");
  for (auto* w : {wd, we}) {
    w->add_option("--table", table_path, "Cayley table file")->required();
    w->add_option("--M", set_m)->required();
  }

  auto* gens = app.add_subcommand("gens", "finitely generated subsemigroups");
  gens->require_subcommand(1);
  auto* extract = gens->add_subcommand("extract", "finite generating set for NxS");
  extract->add_option("file", gens_path, "generators file")->required();
  extract->add_option("--table", table_path, "Cayley table file")->required();
  extract->add_option("-o,--out", out_path, "output file");

  auto* closure = app.add_subcommand("closure", "graded truncated closure");
  closure->add_option("file", gens_path, "generators file")->required();
  closure->add_option("-D,--bound", bound, "grade bound");
  closure->add_option("--table", table_path, "Cayley table for NxS");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* orel = oracle->add_subcommand("relations", "relation enumeration");
  orel->add_option("file", gens_path, "generators file")->required();
  orel->add_option("-L,--degree", degree, "degree bound");
  orel->add_option("--table", table_path, "Cayley table for NxS");
  auto* oiso = oracle->add_subcommand("iso", "isomorphism semi-decision for S_M");
  oiso->add_option("--M", set_m)->required();
  oiso->add_option("--N", set_n)->required();
  oiso->add_option("-L,--degree", iso_degree, "degree bound");
  auto* ocensus = oracle->add_subcommand("census", "small semigroups up to iso");
  ocensus->add_option("-n,--order", census_n, "order (<= 4)");
  ocensus->add_option("--out", out_path, "directory for table files");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "lemma21|lemma22|lemma23|lemma24|thmA|thmB|lemma31|thmD|thmE")
      ->required();

  // let --json given after a subcommand fall through to the main app
  for (auto* top : {classify, sepset, sm, witness, gens, closure, oracle, ver}) {
    top->fallthrough();
    for (auto* sub : top->get_subcommands({})) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(table_path, as_json);
    if (*sep_check) return cmd_sepset_check(parse_int_set(set_m), as_json);
    if (*sep_extend) {
      return cmd_sepset_extend(parse_int_set(set_m), to_size, as_json);
    }
    if (*sm_iso) {
      return cmd_sm_iso(parse_int_set(set_m), parse_int_set(set_n), iso_degree,
                        as_json);
    }
    if (*wd) return cmd_witness(true, table_path, parse_int_set(set_m), as_json);
    if (*we) return cmd_witness(false, table_path, parse_int_set(set_m), as_json);
    if (*extract) {
      return cmd_gens_extract(gens_path, table_path, out_path, as_json);
    }
    if (*closure) return cmd_closure(gens_path, table_path, bound, as_json);
    if (*orel) {
      return cmd_oracle_relations(gens_path, table_path, degree, as_json);
    }
    if (*oiso) {
      return cmd_oracle_iso(parse_int_set(set_m), parse_int_set(set_n),
                            iso_degree, as_json);
    }
    if (*ocensus) return cmd_oracle_census(census_n, out_path);
    if (*ver) return cmd_verify(suite, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
