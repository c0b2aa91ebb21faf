#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "repknit/ar_knit.hpp"
#include "repknit/hom_engine.hpp"
#include "repknit/orbits.hpp"
#include "repknit/projectivization.hpp"
#include "repknit/qchar.hpp"

namespace repknit {

/// V-dimensions of every class of dimension vector d. Rows are the slots in
/// the union of the V-supports (level descending, then column); columns are
/// ordered by total V ascending, then by the V-column read top to bottom,
/// descending.
struct BijectionTable {
  std::vector<Slot> rows;
  std::vector<ModuleClass> columns;
  std::vector<DominantPair> pairs;
  std::vector<std::vector<std::int64_t>> cells;  // cells[row][column]
};

inline BijectionTable bijection_table(const HomEngine& eng, const DimVector& d) {
  BijectionTable t;
  const auto classes = enumerate_modules(eng, d);
  std::set<Slot> support;
  std::vector<DominantPair> pairs;
  for (const auto& c : classes) {
    pairs.push_back(module_to_pair(eng, c));
    for (const auto& [s, v] : pairs.back().V) support.insert(s);
  }
  t.rows.assign(support.begin(), support.end());
  std::sort(t.rows.begin(), t.rows.end(), [](Slot a, Slot b) { return a.level != b.level ? a.level > b.level : a.column < b.column; });
  auto column_of = [&](const DominantPair& p) {
    std::vector<std::int64_t> col;
    for (Slot s : t.rows) col.push_back(p.v(s));
    return col;
  };
  std::vector<std::size_t> order(classes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = column_of(pairs[a]), cb = column_of(pairs[b]);
    std::int64_t sa = 0, sb = 0;
    for (auto x : ca) sa += x;
    for (auto x : cb) sb += x;
    if (sa != sb) return sa < sb;
    return ca > cb;
  });
  t.cells.assign(t.rows.size(), std::vector<std::int64_t>(order.size(), 0));
  for (std::size_t c = 0; c < order.size(); ++c) {
    t.columns.push_back(classes[order[c]]);
    t.pairs.push_back(pairs[order[c]]);
    const auto col = column_of(pairs[order[c]]);
    for (std::size_t r = 0; r < t.rows.size(); ++r) t.cells[r][c] = col[r];
  }
  return t;
}

inline std::string bijection_table_tsv(const ARWindow& w, const BijectionTable& t) {
  std::ostringstream os;
  os << "slot";
  for (const auto& c : t.columns) os << '\t' << format_class(w, c);
  os << '\n';
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << "V" << w.slot_label(t.rows[r]);
    for (auto v : t.cells[r]) os << '\t' << v;
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json bijection_table_json(const ARWindow& w, const BijectionTable& t) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (Slot s : t.rows) j["rows"].push_back(w.slot_label(s));
  j["columns"] = nlohmann::json::array();
  for (const auto& c : t.columns) j["columns"].push_back(format_class(w, c));
  j["cells"] = t.cells;
  return j;
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// The AR window as a DOT graph, projectives drawn as boxes.
inline std::string knit_dot(const ARWindow& w) {
  std::ostringstream os;
  os << "digraph knit {\n  rankdir=BT;\n  node [fontsize=10];\n";
  for (const auto& v : w.vertices()) {
    os << "  v" << v.id << " [label=\"" << dot_escape(w.slot_label(v.slot)) << "\\n" << dot_escape(w.label(v.id)) << "\"";
    if (v.is_projective()) os << ", shape=box";
    os << "];\n";
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& m : w.meshes()) {
    auto middles = m.middles;
    if (m.projective >= 0) middles.push_back(m.projective);
    for (int mid : middles) {
      edges.insert({m.start, mid});
      edges.insert({mid, m.end});
    }
  }
  for (auto [a, b] : edges) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

/// Hasse diagram of the degeneration order; an edge a -> b means b lies in
/// the closure of the orbit of a.
inline std::string poset_dot(const ARWindow& w, const StrataPoset& p) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=TB;\n";
  for (std::size_t k = 0; k < p.elements.size(); ++k)
    os << "  n" << k << " [label=\"" << dot_escape(format_class(w, p.elements[k])) << "\"];\n";
  for (auto [a, b] : p.hasse()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string poset_tsv(const ARWindow& w, const StrataPoset& p) {
  std::ostringstream os;
  os << "index\tclass\tV\n";
  for (std::size_t k = 0; k < p.elements.size(); ++k) {
    os << k << '\t' << format_class(w, p.elements[k]) << '\t';
    if (p.pairs[k].V.empty()) os << '0';
    bool first = true;
    for (const auto& [s, v] : p.pairs[k].V) {
      if (!first) os << ' ';
      first = false;
      os << w.slot_label(s) << '=' << v;
    }
    os << '\n';
  }
  os << "cover\tfrom\tto\n";
  for (auto [a, b] : p.hasse()) os << "cover\t" << a << '\t' << b << '\n';
  return os.str();
}

/// Graded table of e_Sigma Lambda e_Sigma followed by arrows and relations.
inline std::string sigma_algebra_tsv(const DynkinQuiver& q, const SigmaAlgebra& a) {
  auto slot = [&](Slot s) { return "(" + q.name(s.column) + "," + std::to_string(s.level) + ")"; };
  std::ostringstream os;
  os << "vertices\t" << a.hull.sigma.size() << '\n';
  os << "hull_vertices\t" << a.hull.slots.size() << '\n';
  os << "arrows\t" << a.arrows.size() << '\n';
  os << "length_two_paths\t" << a.length_two.size() << '\n';
  os << "length_two_rank\t" << a.length_two_rank << '\n';
  os << "relations\t" << a.relations.size() << '\n';
  os << "total_dim\t" << a.total_dim << '\n';
  os << "from\tto\tlength\tdim\n";
  for (const auto& e : a.table) os << slot(e.from) << '\t' << slot(e.to) << '\t' << e.length << '\t' << e.dim << '\n';
  os << "arrow\tfrom\tto\n";
  for (const auto& ar : a.arrows) os << ar.name << '\t' << slot(a.hull.sigma[ar.from]) << '\t' << slot(a.hull.sigma[ar.to]) << '\n';
  for (const auto& r : a.relations) os << "relation\t" << format_relation(a, r) << '\n';
  return os.str();
}

inline nlohmann::json sigma_algebra_json(const DynkinQuiver& q, const SigmaAlgebra& a) {
  auto slot = [&](Slot s) { return "(" + q.name(s.column) + "," + std::to_string(s.level) + ")"; };
  nlohmann::json j;
  j["vertices"] = a.hull.sigma.size();
  j["hull_vertices"] = a.hull.slots.size();
  j["length_two_rank"] = a.length_two_rank;
  j["total_dim"] = a.total_dim;
  j["table"] = nlohmann::json::array();
  for (const auto& e : a.table) j["table"].push_back({{"from", slot(e.from)}, {"to", slot(e.to)}, {"length", e.length}, {"dim", e.dim}});
  j["arrows"] = nlohmann::json::array();
  for (const auto& ar : a.arrows)
    j["arrows"].push_back({{"name", ar.name}, {"from", slot(a.hull.sigma[ar.from])}, {"to", slot(a.hull.sigma[ar.to])}});
  j["relations"] = nlohmann::json::array();
  for (const auto& r : a.relations) j["relations"].push_back(format_relation(a, r));
  return j;
}

}  // namespace repknit
