#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "repknit/ar_knit.hpp"
#include "repknit/error.hpp"
#include "repknit/orbits.hpp"
#include "repknit/qchar.hpp"
#include "repknit/quiver.hpp"

namespace repknit {

struct QuiverSpec {
  std::string type;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> arrows;
  std::optional<std::vector<int>> height;
};

/// One job: a quiver with height function, window parameters, and the
/// inputs of the individual subcommands. Slots and vertices are kept as
/// text until the quiver is built.
struct JobConfig {
  QuiverSpec quiver;
  int anchor_shift = 0;
  int margin = -1;
  std::optional<LevelRange> window;   // explicit level range
  std::optional<LevelRange> degrees;  // degree range to cover instead
  std::map<std::string, std::int64_t> dim;
  std::vector<std::tuple<std::string, int, std::int64_t>> w;
  std::vector<std::pair<std::string, int>> sigma;
  std::vector<std::tuple<std::string, int, std::string, int, std::string>> sigma_arrows;
  std::map<std::string, std::int64_t> monomial;
  std::vector<std::string> hom;  // two vertex labels or projective names
  std::uint64_t seed = 1;
  std::string out;
};

namespace detail {

inline nlohmann::json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::ConfigError, "cli", "cannot open " + p.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, "cli", p.string() + ": " + e.what());
  }
}

inline LevelRange parse_range(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::ConfigError, "cli", field + ": expected [lo, hi]");
  LevelRange r{j[0].get<int>(), j[1].get<int>()};
  if (r.lo >= r.hi) throw Error(ErrorCode::ConfigError, "cli", field + ": empty range");
  return r;
}

inline QuiverSpec parse_quiver(const nlohmann::json& j) {
  QuiverSpec q;
  try {
    q.type = j.at("type").get<std::string>();
    q.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& a : j.at("arrows")) q.arrows.push_back({a.at(0).get<std::string>(), a.at(1).get<std::string>()});
    if (j.contains("height")) q.height = j.at("height").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, "cli", std::string("quiver: ") + e.what());
  }
  return q;
}

}  // namespace detail

/// Reads a job from JSON. "quiver" is either inline or a path relative to
/// `base_dir`.
inline JobConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = ".") {
  if (!j.is_object()) throw Error(ErrorCode::ConfigError, "cli", "config must be a JSON object");
  static const std::vector<std::string> known = {"quiver", "anchor_shift", "margin", "window", "degrees", "dim", "w",
                                                 "sigma", "sigma_arrows", "monomial", "hom", "seed", "out", "comment"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw Error(ErrorCode::ConfigError, "cli", "unknown field '" + key + "'");
  JobConfig c;
  if (!j.contains("quiver")) throw Error(ErrorCode::ConfigError, "cli", "missing field 'quiver'");
  const auto& qj = j.at("quiver");
  c.quiver = detail::parse_quiver(qj.is_string() ? detail::read_json_file(base_dir / qj.get<std::string>()) : qj);
  try {
    if (j.contains("anchor_shift")) c.anchor_shift = j.at("anchor_shift").get<int>();
    if (j.contains("margin")) c.margin = j.at("margin").get<int>();
    if (j.contains("window")) c.window = detail::parse_range(j.at("window"), "window");
    if (j.contains("degrees")) c.degrees = detail::parse_range(j.at("degrees"), "degrees");
    if (j.contains("dim")) c.dim = j.at("dim").get<std::map<std::string, std::int64_t>>();
    if (j.contains("w"))
      for (const auto& e : j.at("w")) c.w.emplace_back(e.at(0).get<std::string>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
    if (j.contains("sigma"))
      for (const auto& e : j.at("sigma")) c.sigma.emplace_back(e.at(0).get<std::string>(), e.at(1).get<int>());
    if (j.contains("sigma_arrows"))
      for (const auto& e : j.at("sigma_arrows"))
        c.sigma_arrows.emplace_back(e.at(0).get<std::string>(), e.at(1).get<int>(), e.at(2).get<std::string>(), e.at(3).get<int>(),
                                    e.at(4).get<std::string>());
    if (j.contains("monomial")) c.monomial = j.at("monomial").get<std::map<std::string, std::int64_t>>();
    if (j.contains("hom")) c.hom = j.at("hom").get<std::vector<std::string>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, "cli", e.what());
  }
  if (c.anchor_shift % 2 != 0) throw Error(ErrorCode::ConfigError, "cli", "anchor_shift must be even");
  return c;
}

inline JobConfig load_config(const std::filesystem::path& p) {
  return parse_config(detail::read_json_file(p), p.parent_path());
}

inline DynkinQuiver build_quiver(const JobConfig& c) {
  return DynkinQuiver(DynkinType::parse(c.quiver.type), c.quiver.vertices, c.quiver.arrows);
}

inline HeightFunction build_height(const DynkinQuiver& q, const JobConfig& c) {
  if (!c.quiver.height) return default_height(q);
  HeightFunction h{*c.quiver.height};
  validate_height_function(q, h);
  return h;
}

inline DimVector resolve_dim(const DynkinQuiver& q, const JobConfig& c) {
  DimVector d;
  for (const auto& [v, k] : c.dim) {
    if (k < 0) throw Error(ErrorCode::ConfigError, "cli", "dim: negative entry at " + v);
    d.add(parse_vertex(q, v), k);
  }
  return d;
}

inline Slot resolve_slot(const DynkinQuiver& q, const std::string& name, int level) {
  const auto i = q.index_of(name);
  if (!i) throw Error(ErrorCode::ConfigError, "cli", "unknown vertex '" + name + "'");
  return {*i, level};
}

inline std::map<Slot, std::int64_t> resolve_w(const DynkinQuiver& q, const JobConfig& c) {
  std::map<Slot, std::int64_t> w;
  for (const auto& [name, level, mult] : c.w) {
    if (mult < 0) throw Error(ErrorCode::ConfigError, "cli", "w: negative multiplicity at " + name);
    set_entry(w, resolve_slot(q, name, level), mult);
  }
  return w;
}

inline std::vector<Slot> resolve_sigma(const DynkinQuiver& q, const JobConfig& c) {
  std::vector<Slot> s;
  for (const auto& [name, level] : c.sigma) s.push_back(resolve_slot(q, name, level));
  return s;
}

inline std::vector<std::pair<std::pair<Slot, Slot>, std::string>> resolve_sigma_arrows(const DynkinQuiver& q, const JobConfig& c) {
  std::vector<std::pair<std::pair<Slot, Slot>, std::string>> out;
  for (const auto& [a, la, b, lb, name] : c.sigma_arrows) out.push_back({{resolve_slot(q, a, la), resolve_slot(q, b, lb)}, name});
  return out;
}

/// "Y[i,n]" -> slot (i, n).
inline Slot parse_variable(const DynkinQuiver& q, const std::string& text) {
  if (text.size() < 6 || text.rfind("Y[", 0) != 0 || text.back() != ']')
    throw Error(ErrorCode::ConfigError, "cli", "monomial: expected Y[i,n], got '" + text + "'");
  const std::string body = text.substr(2, text.size() - 3);
  const auto comma = body.rfind(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ConfigError, "cli", "monomial: expected Y[i,n], got '" + text + "'");
  int level = 0;
  try {
    std::size_t used = 0;
    level = std::stoi(body.substr(comma + 1), &used);
    if (used != body.size() - comma - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, "cli", "monomial: bad level in '" + text + "'");
  }
  return resolve_slot(q, body.substr(0, comma), level);
}

inline LaurentMonomial resolve_monomial(const DynkinQuiver& q, const JobConfig& c) {
  LaurentMonomial m;
  for (const auto& [v, e] : c.monomial) m.mul(parse_variable(q, v), e);
  return m;
}

/// Degree range to cover: the config's, else the support of dim, else [0, 2).
inline LevelRange job_degrees(const DynkinQuiver& q, const JobConfig& c) {
  if (c.degrees) return *c.degrees;
  const DimVector d = resolve_dim(q, c);
  if (d.total() > 0) return {d.min_degree(), d.max_degree() + 1};
  return {0, 2};
}

/// The AR window of the job: an explicit level range if one is given,
/// otherwise one covering the degree range.
inline ARWindow build_window(const DynkinQuiver& q, const HeightFunction& xi, const JobConfig& c) {
  if (c.window) return knit(q, xi, KnitOptions{*c.window, c.margin, c.anchor_shift});
  return knit_for_degrees(q, xi, job_degrees(q, c), c.margin, c.anchor_shift);
}

}  // namespace repknit
