// Offline generator for the packaged exceptional-type data files
// (classes, character tables, family records).  The shipped data/*.tbl
// were produced by this tool; re-run it to regenerate them.

#include <cstdio>
#include <cstring>
#include <chrono>

#include "alcove/gen/classgen.hpp"
#include "alcove/gen/chargen.hpp"
#include "alcove/gen/famsolve.hpp"
#include "alcove/tablefile.hpp"
#include "alcove/families.hpp"

using namespace alcove;

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int gen_table(const std::string& label, const std::string& dir) {
  TableRegistry reg(dir);
  RootSystem rs = build_root_system(label);
  double t0 = now_s();
  std::fprintf(stderr, "[%s] class discovery...\n", label.c_str());
  gen::ClassGen cg(rs, reg);
  auto classes = cg.run();
  std::fprintf(stderr, "[%s] %zu classes in %.1fs\n", label.c_str(),
               classes.size(), now_s() - t0);
  t0 = now_s();
  gen::CharGen ch(rs, reg, classes);
  CharTable t = ch.build();
  std::fprintf(stderr, "[%s] %d irreducibles in %.1fs\n", label.c_str(),
               t.n_irreps(), now_s() - t0);
  finalize_table(t);
  check(poincare_identity_holds(t), "Poincare identity fails for " + label);

  TableFile tf;
  // declare fingerprint collisions, if any, for the loader
  std::map<Fingerprint, std::vector<std::string>> by_fp;
  for (auto& c : t.classes) by_fp[c.fp].push_back(c.label);
  for (auto& [fp, names] : by_fp)
    if (names.size() > 1) tf.ambig_sets.push_back(names);
  tf.table = std::move(t);
  std::string fn = dir + "/";
  for (char c : label) fn += (char)std::tolower((unsigned char)c);
  fn += ".tbl";
  emit_table_file(tf, fn);
  // round trip: reload with full verification
  TableFile back = parse_table_file(fn);
  finalize_table(back.table, false);
  std::fprintf(stderr, "[%s] wrote %s (verified on reload)\n", label.c_str(),
               fn.c_str());
  return 0;
}

int gen_families(const std::string& label, const std::string& dir) {
  TableRegistry reg(dir);
  std::string fn = dir + "/";
  for (char c : label) fn += (char)std::tolower((unsigned char)c);
  fn += ".tbl";
  TableFile tf = parse_table_file(fn);
  finalize_table(tf.table, false);
  double t0 = now_s();
  auto fams = gen::solve_families(tf.table, reg);
  std::fprintf(stderr, "[%s] %zu families in %.1fs\n", label.c_str(),
               fams.size(), now_s() - t0);
  tf.families.clear();
  for (auto& f : fams) {
    FamilyRec fr;
    fr.D = f.special_degree;
    fr.a = f.a;
    for (int m : f.members) fr.members.push_back(tf.table.irreps[m].label);
    tf.families.push_back(fr);
  }
  emit_table_file(tf, fn);
  // reload through the runtime path, which re-verifies a/a' consistency
  TableRegistry reg2(dir);
  auto loaded = families(reg2, label);
  check(loaded.size() == fams.size(), "family reload mismatch");
  std::fprintf(stderr, "[%s] rewrote %s with FAMILY records\n", label.c_str(),
               fn.c_str());
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr,
                 "usage: gen_wtables table|families E6|E7|E8 [datadir]\n");
    return 2;
  }
  std::string mode = argv[1], label = argv[2];
  std::string dir = argc > 3 ? argv[3] : resolve_data_dir();
  try {
    if (mode == "table") return gen_table(label, dir);
    if (mode == "families") return gen_families(label, dir);
    std::fprintf(stderr, "unknown mode %s\n", mode.c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
