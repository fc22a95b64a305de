#pragma once

#include <fstream>
#include <sstream>
#include <filesystem>

#include "alcove/weylchar.hpp"
#include "alcove/fakedeg.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Packaged table format (UTF-8, line oriented):
//   GROUP <label> ORDER <n> CLASSES <k> IRRS <m>
//   CLASS <name> SIZE <s> WORD <i1,i2,...>     (word in simple
//       reflections, 1-based Bourbaki numbering, "-" for the identity)
//   CHAR <phi_label> : v1 v2 ... vk
//   FAMILY <D>,<a> : phi1 phi2 ...
//   CHECK ORTHO <sum>
// Lines starting with '#' are comments; "# AMBIG c1 c2 ..." marks class
// fingerprint collisions that need an explicit conjugacy search.
// ---------------------------------------------------------------------

struct FamilyRec {
  i64 D = 0;
  i64 a = 0;
  std::vector<std::string> members;
};

constexpr i64 kChecksumMod = (1LL << 61) - 1;
constexpr i64 kChecksumMul = 1099511628211LL;

inline i64 table_checksum(const std::vector<IrrData>& irreps) {
  i128 h = 0;
  for (auto& ir : irreps)
    for (i64 v : ir.values) {
      i64 x = v % kChecksumMod;
      if (x < 0) x += kChecksumMod;
      h = (h * kChecksumMul + x) % kChecksumMod;
    }
  return (i64)h;
}

struct TableFile {
  CharTable table;
  std::vector<FamilyRec> families;
  std::vector<std::vector<std::string>> ambig_sets;
};

inline TableFile parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open group data file " + path);
  TableFile tf;
  CharTable& t = tf.table;
  std::string line;
  i64 want_classes = -1, want_irrs = -1, want_check = -1;
  bool have_group = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& m) {
      throw data_error(path + ":" + std::to_string(lineno) + ": " + m);
    };
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line);
      std::string hash, tag;
      ss >> hash >> tag;
      if (tag == "AMBIG") {
        std::vector<std::string> names;
        std::string nm;
        while (ss >> nm) names.push_back(nm);
        tf.ambig_sets.push_back(names);
      }
      continue;
    }
    std::istringstream ss(line);
    std::string kw;
    ss >> kw;
    if (kw == "GROUP") {
      std::string label, okw, ckw, ikw;
      i64 order;
      ss >> label >> okw >> order >> ckw >> want_classes >> ikw >> want_irrs;
      if (okw != "ORDER" || ckw != "CLASSES" || ikw != "IRRS")
        fail("malformed GROUP header");
      t.type = parse_type(label);
      t.rs = build_root_system(t.type);
      t.order = order;
      if (order != label_weyl_order(t.type)) fail("ORDER disagrees with type");
      have_group = true;
    } else if (kw == "CLASS") {
      if (!have_group) fail("CLASS before GROUP");
      ClassData c;
      std::string skw, wkw, word;
      ss >> c.label >> skw >> c.size >> wkw >> word;
      if (skw != "SIZE" || wkw != "WORD") fail("malformed CLASS line");
      if (word != "-") {
        std::istringstream ws(word);
        std::string tok;
        while (std::getline(ws, tok, ',')) {
          int idx = std::stoi(tok);
          if (idx < 1 || idx > t.rs.rank) fail("reflection index out of range");
          c.word.push_back(idx - 1);
        }
      }
      c.rep = word_to_matrix(t.rs, c.word);
      t.classes.push_back(std::move(c));
    } else if (kw == "CHAR") {
      IrrData ir;
      std::string colon;
      ss >> ir.label >> colon;
      if (colon != ":") fail("malformed CHAR line");
      i64 v;
      while (ss >> v) ir.values.push_back(v);
      if ((i64)ir.values.size() != (i64)t.classes.size())
        fail("CHAR row length != class count");
      for (size_t c = 0; c < t.classes.size(); ++c)
        if (t.classes[c].rep.is_identity()) ir.dim = ir.values[c];
      t.irreps.push_back(std::move(ir));
    } else if (kw == "FAMILY") {
      FamilyRec fr;
      std::string key, colon;
      ss >> key >> colon;
      if (colon != ":") fail("malformed FAMILY line");
      auto comma = key.find(',');
      if (comma == std::string::npos) fail("FAMILY key needs D,a");
      fr.D = std::stoll(key.substr(0, comma));
      fr.a = std::stoll(key.substr(comma + 1));
      std::string nm;
      while (ss >> nm) fr.members.push_back(nm);
      tf.families.push_back(std::move(fr));
    } else if (kw == "CHECK") {
      std::string what;
      ss >> what >> want_check;
      if (what != "ORTHO") fail("malformed CHECK line");
    } else {
      fail("unknown record '" + kw + "'");
    }
  }
  if (!have_group) throw data_error(path + ": missing GROUP header");
  if ((i64)t.classes.size() != want_classes)
    throw data_error(path + ": CLASSES count mismatch");
  if ((i64)t.irreps.size() != want_irrs)
    throw data_error(path + ": IRRS count mismatch");
  if (want_check < 0) throw data_error(path + ": missing CHECK ORTHO line");
  if (table_checksum(t.irreps) != want_check)
    throw data_error(path + ": checksum mismatch (corrupt values)");
  verify_table(t, path);
  // class fingerprints; collisions must be declared via AMBIG notes
  std::map<Fingerprint, std::vector<std::string>> by_fp;
  for (auto& c : t.classes) {
    c.fp = fingerprint(t.rs, c.rep);
    by_fp[c.fp].push_back(c.label);
  }
  for (auto& [fp, names] : by_fp) {
    if (names.size() < 2) continue;
    bool declared = false;
    for (auto& amb : tf.ambig_sets) {
      std::set<std::string> a(amb.begin(), amb.end()), b(names.begin(), names.end());
      if (a == b) declared = true;
    }
    if (!declared) {
      std::string msg = path + ": undeclared fingerprint collision:";
      for (auto& n : names) msg += " " + n;
      throw data_error(msg);
    }
    t.ambig_note = names;
  }
  return tf;
}

inline void emit_table_file(const TableFile& tf, const std::string& path) {
  const CharTable& t = tf.table;
  std::ofstream out(path);
  check((bool)out, "cannot write " + path);
  out << "# Weyl group character table, " << label_str(t.type) << "\n";
  out << "# classes carry reduced words in the simple reflections"
         " (1-based)\n";
  out << "GROUP " << label_str(t.type) << " ORDER " << t.order << " CLASSES "
      << t.classes.size() << " IRRS " << t.irreps.size() << "\n";
  for (auto& c : t.classes) {
    out << "CLASS " << c.label << " SIZE " << c.size << " WORD ";
    if (c.word.empty()) {
      out << "-";
    } else {
      for (size_t i = 0; i < c.word.size(); ++i) {
        if (i) out << ",";
        out << c.word[i] + 1;
      }
    }
    out << "\n";
  }
  for (auto& ir : t.irreps) {
    out << "CHAR " << ir.label << " :";
    for (i64 v : ir.values) out << " " << v;
    out << "\n";
  }
  for (auto& fr : tf.families) {
    out << "FAMILY " << fr.D << "," << fr.a << " :";
    for (auto& m : fr.members) out << " " << m;
    out << "\n";
  }
  for (auto& amb : tf.ambig_sets) {
    out << "# AMBIG";
    for (auto& n : amb) out << " " << n;
    out << "\n";
  }
  out << "CHECK ORTHO " << table_checksum(t.irreps) << "\n";
}

// ---------------------------------------------------------------------
// Data directory resolution: explicit path, then ALCOVE_DATA_DIR, then
// the packaged default.
// ---------------------------------------------------------------------

inline std::string resolve_data_dir(const std::string& flag = "") {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ALCOVE_DATA_DIR"); env && *env)
    return env;
#ifdef ALCOVE_SOURCE_DATA_DIR
  return ALCOVE_SOURCE_DATA_DIR;
#else
  return "data";
#endif
}

} // namespace alcove
