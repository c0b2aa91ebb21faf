#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "repknit/repknit.hpp"

namespace {

using namespace repknit;
using nlohmann::json;

struct Options {
  std::string config;
  std::string window;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  bool dot = false;
};

struct Job {
  JobConfig cfg;
  DynkinQuiver q;
  HeightFunction xi;
};

Job load_job(const Options& opt) {
  if (opt.config.empty()) throw Error(ErrorCode::ConfigError, "cli", "--config is required");
  JobConfig cfg = load_config(opt.config);
  if (!opt.window.empty()) {
    const auto colon = opt.window.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ConfigError, "cli", "--window expects n_min:n_max");
    try {
      cfg.window = LevelRange{std::stoi(opt.window.substr(0, colon)), std::stoi(opt.window.substr(colon + 1))};
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "cli", "--window expects integers, got '" + opt.window + "'");
    }
    if (cfg.window->empty()) throw Error(ErrorCode::ConfigError, "cli", "--window is empty");
  }
  if (opt.seed) cfg.seed = *opt.seed;
  if (!opt.out.empty()) cfg.out = opt.out;
  DynkinQuiver q = build_quiver(cfg);
  HeightFunction xi = build_height(q, cfg);
  return {std::move(cfg), std::move(q), std::move(xi)};
}

std::string format_of(const Options& opt, const std::string& fallback) {
  if (opt.dot) return "dot";
  return opt.format.empty() ? fallback : opt.format;
}

void require_format(const std::string& fmt, std::initializer_list<const char*> allowed, const std::string& command) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw Error(ErrorCode::ConfigError, "cli", command + " does not support --format " + fmt);
}

void emit(const Job& job, const std::string& name, const std::string& fmt, const std::string& text) {
  if (job.cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(job.cfg.out);
  const auto path = std::filesystem::path(job.cfg.out) / (name + "." + fmt);
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ConfigError, "cli", "cannot write " + path.string());
  f << text;
  spdlog::info("wrote {}", path.string());
}

std::string pair_text(const ARWindow& w, const DominantPair& p) {
  std::string s;
  for (const auto& [slot, v] : p.V) s += (s.empty() ? "" : " ") + w.slot_label(slot) + "=" + std::to_string(v);
  return s.empty() ? "0" : s;
}

std::string pair_text(const DynkinQuiver& q, const DominantPair& p) {
  std::string s;
  for (const auto& [slot, v] : p.V)
    s += (s.empty() ? "" : " ") + ("(" + q.name(slot.column) + "," + std::to_string(slot.level) + ")") + "=" + std::to_string(v);
  return s.empty() ? "0" : s;
}

int run_describe(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "describe");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const auto gamma = build_gamma_hat(job.q, job.xi, w.range());
  const LevelRange degrees = job_degrees(job.q, job.cfg);
  const auto pres = build_repetitive_presentation(job.q, {degrees.lo, degrees.hi + 1});
  std::size_t commutation = 0;
  for (const auto& r : pres.relations) commutation += r.commutation ? 1 : 0;
  json j;
  j["type"] = job.q.type().name();
  j["vertices"] = job.q.names();
  json arrows = json::array();
  for (const auto& a : job.q.arrows()) arrows.push_back({job.q.name(a.source), job.q.name(a.target)});
  j["arrows"] = arrows;
  j["height"] = job.xi.xi;
  j["coxeter_number"] = job.q.type().coxeter_number();
  j["positive_roots"] = positive_roots(job.q).size();
  j["window"] = {w.range().lo, w.range().hi};
  j["gamma_vertices"] = gamma.slots.size();
  j["gamma_arrows"] = gamma.arrows.size();
  j["gamma_relations"] = gamma.relations.size();
  j["repetitive_degrees"] = {pres.degrees.lo, pres.degrees.hi};
  j["repetitive_vertices"] = pres.vertices.size();
  j["repetitive_arrows"] = pres.arrows.size();
  j["repetitive_zero_relations"] = pres.relations.size() - commutation;
  j["repetitive_commutation_relations"] = commutation;
  if (fmt == "json") {
    emit(job, "describe", fmt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  emit(job, "describe", fmt, os.str());
  return 0;
}

int run_knit(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json", "dot"}, "knit");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  if (fmt == "dot") {
    emit(job, "knit", fmt, knit_dot(w));
    return 0;
  }
  if (fmt == "json") {
    json j = json::array();
    for (const auto& v : w.vertices())
      j.push_back({{"id", v.id}, {"slot", w.slot_label(v.slot)}, {"projective", v.is_projective()}, {"label", w.label(v.id)},
                   {"dim", format_dim(job.q, v.dim)}});
    emit(job, "knit", fmt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "id\tslot\tkind\tlabel\tdim\n";
  for (const auto& v : w.vertices())
    os << v.id << '\t' << w.slot_label(v.slot) << '\t' << (v.is_projective() ? "projective" : "stable") << '\t' << w.label(v.id) << '\t'
       << format_dim(job.q, v.dim) << '\n';
  emit(job, "knit", fmt, os.str());
  return 0;
}

int run_orbits(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "orbits");
  std::ostringstream os;
  json j;
  if (job.cfg.dim.empty() && !job.cfg.w.empty()) {
    const auto pairs = enumerate_dominant_pairs(job.q, job.xi, resolve_w(job.q, job.cfg));
    os << "index\tV\tmonomial\n";
    j["pairs"] = json::array();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto m = format_monomial(job.q, pair_to_monomial(job.q, job.xi, pairs[k]));
      os << k << '\t' << pair_text(job.q, pairs[k]) << '\t' << m << '\n';
      j["pairs"].push_back({{"V", pair_text(job.q, pairs[k])}, {"monomial", m}});
    }
    os << "dominant_pairs\t" << pairs.size() << '\n';
    j["dominant_pairs"] = pairs.size();
  } else {
    const ARWindow w = build_window(job.q, job.xi, job.cfg);
    const HomEngine eng(w);
    const DimVector d = resolve_dim(job.q, job.cfg);
    const auto classes = enumerate_modules(eng, d);
    os << "index\tclass\tV\tmonomial\n";
    j["classes"] = json::array();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto p = module_to_pair(eng, classes[k]);
      const auto m = format_monomial(job.q, pair_to_monomial(job.q, job.xi, p));
      os << k << '\t' << format_class(w, classes[k]) << '\t' << pair_text(w, p) << '\t' << m << '\n';
      j["classes"].push_back({{"class", format_class(w, classes[k])}, {"V", pair_text(w, p)}, {"monomial", m}});
    }
    const BijectionReport rep = verify_bijection(eng, d);
    os << "classes\t" << rep.classes << "\ndominant_pairs\t" << rep.pairs << "\nbijection\t" << (rep.ok() ? "ok" : "FAILED") << '\n';
    for (const auto& p : rep.problems) os << "problem\t" << p << '\n';
    j["classes_count"] = rep.classes;
    j["dominant_pairs"] = rep.pairs;
    j["bijection"] = rep.ok();
    if (!rep.ok()) {
      emit(job, "orbits", fmt, fmt == "json" ? j.dump(2) + "\n" : os.str());
      return 1;
    }
  }
  emit(job, "orbits", fmt, fmt == "json" ? j.dump(2) + "\n" : os.str());
  return 0;
}

int run_bijection_table(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "bijection-table");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const HomEngine eng(w);
  const auto t = bijection_table(eng, resolve_dim(job.q, job.cfg));
  emit(job, "bijection-table", fmt, fmt == "json" ? bijection_table_json(w, t).dump(2) + "\n" : bijection_table_tsv(w, t));
  return 0;
}

int run_poset(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "dot"}, "poset");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const HomEngine eng(w);
  const auto p = degeneration_order(eng, enumerate_modules(eng, resolve_dim(job.q, job.cfg)));
  emit(job, "poset", fmt, fmt == "dot" ? poset_dot(w, p) : poset_tsv(w, p));
  return 0;
}

int run_monomial(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "monomial");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const HomEngine eng(w);
  std::ostringstream os;
  json j = json::array();
  os << "direction\tclass\tmonomial\n";
  if (!job.cfg.dim.empty())
    for (const auto& c : enumerate_modules(eng, resolve_dim(job.q, job.cfg))) {
      const auto m = format_monomial(job.q, monomial_of_module(eng, c));
      os << "module_to_monomial\t" << format_class(w, c) << '\t' << m << '\n';
      j.push_back({{"direction", "module_to_monomial"}, {"class", format_class(w, c)}, {"monomial", m}});
    }
  if (!job.cfg.monomial.empty()) {
    const LaurentMonomial m = resolve_monomial(job.q, job.cfg);
    const ModuleClass c = module_of_monomial(eng, m);
    os << "monomial_to_module\t" << format_class(w, c) << '\t' << format_monomial(job.q, m) << '\n';
    j.push_back({{"direction", "monomial_to_module"}, {"class", format_class(w, c)}, {"monomial", format_monomial(job.q, m)}});
    for (const auto& cand : composition_candidates(eng, m)) {
      os << "candidate\t" << format_class(w, cand.module) << '\t' << format_monomial(job.q, cand.monomial) << '\t'
         << (cand.in_closure ? "in_closure" : "not_in_closure") << '\n';
      j.push_back({{"direction", "candidate"}, {"class", format_class(w, cand.module)}, {"monomial", format_monomial(job.q, cand.monomial)},
                   {"in_closure", cand.in_closure}});
    }
  }
  if (job.cfg.dim.empty() && job.cfg.monomial.empty()) throw Error(ErrorCode::ConfigError, "cli", "monomial needs 'dim' or 'monomial' in the config");
  emit(job, "monomial", fmt, fmt == "json" ? j.dump(2) + "\n" : os.str());
  return 0;
}

int run_sigma_algebra(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "sigma-algebra");
  std::vector<Slot> sigma = resolve_sigma(job.q, job.cfg);
  if (sigma.empty())
    for (const auto& [s, c] : resolve_w(job.q, job.cfg)) sigma.push_back(s);
  if (sigma.empty()) throw Error(ErrorCode::ConfigError, "cli", "sigma-algebra needs 'sigma' or 'w' in the config");
  SigmaAlgebra a = sigma_algebra(job.q, job.xi, sigma);
  rename_arrows(a, resolve_sigma_arrows(job.q, job.cfg));
  std::string text = fmt == "json" ? sigma_algebra_json(job.q, a).dump(2) + "\n" : sigma_algebra_tsv(job.q, a);
  if (fmt == "tsv") text += "elimination_total_dim\t" + std::to_string(sigma_total_dim_by_elimination(a)) + "\n";
  emit(job, "sigma-algebra", fmt, text);
  return 0;
}

/// "P4[0]" names a projective, "(1,5)" a slot.
int resolve_module(const ARWindow& w, const std::string& text) {
  if (!text.empty() && text.front() == 'P') {
    const RepVertex x = parse_vertex(w.quiver(), text.substr(1));
    if (auto id = w.find_projective(x)) return *id;
    throw Error(ErrorCode::WindowTooSmall, "cli", "projective " + text + " is outside the window");
  }
  if (text.size() > 2 && text.front() == '(' && text.back() == ')') {
    const auto comma = text.rfind(',');
    if (comma != std::string::npos) {
      const Slot s = resolve_slot(w.quiver(), text.substr(1, comma - 1), std::stoi(text.substr(comma + 1)));
      return *w.lookup(s, "hom");
    }
  }
  throw Error(ErrorCode::ConfigError, "cli", "hom: expected P<vertex> or (name,level), got '" + text + "'");
}

int run_hom(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "hom");
  if (job.cfg.hom.size() != 2) throw Error(ErrorCode::ConfigError, "cli", "hom needs two entries in 'hom'");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const HomEngine eng(w);
  const int a = resolve_module(w, job.cfg.hom[0]), b = resolve_module(w, job.cfg.hom[1]);
  const auto h = eng.hom(a, b);
  const auto p = eng.proj_dim(a, ModuleClass::of(b));
  if (fmt == "json") {
    emit(job, "hom", fmt, json{{"source", w.label(a)}, {"target", w.label(b)}, {"hom", h}, {"proj", p}}.dump(2) + "\n");
    return 0;
  }
  emit(job, "hom", fmt, "source\ttarget\thom\tproj\n" + w.label(a) + "\t" + w.label(b) + "\t" + std::to_string(h) + "\t" + std::to_string(p) + "\n");
  return 0;
}

int run_selfcheck(const Options& opt) {
  const Job job = load_job(opt);
  const auto fmt = format_of(opt, "tsv");
  require_format(fmt, {"tsv", "json"}, "selfcheck");
  const ARWindow w = build_window(job.q, job.xi, job.cfg);
  const SelfcheckReport rep = selfcheck(w, job_degrees(job.q, job.cfg), job.cfg.seed);
  std::ostringstream os;
  json j = json::array();
  for (const auto& c : rep.checks) {
    os << (c.passed ? "PASS" : "FAIL") << '\t' << c.name << '\t' << c.detail << '\n';
    j.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  emit(job, "selfcheck", fmt, fmt == "json" ? j.dump(2) + "\n" : os.str());
  return rep.ok() ? 0 : 1;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("repknit");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("REPKNIT_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Repetitive algebras of Dynkin quivers: AR knitting, orbits, strata and monomials"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "job configuration (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--window", opt.window, "level window n_min:n_max (half-open)");
    sub->add_option("--seed", seed, "seed for random choices");
    sub->add_option("--out", opt.out, "write the artifact into this directory");
    sub->add_option("--format", opt.format, "tsv, json or dot")->check(CLI::IsMember({"tsv", "json", "dot"}));
  };
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"describe", "quiver, slot quiver and repetitive presentation", run_describe},
      {"knit", "AR window", run_knit},
      {"orbits", "classes of a dimension vector and their dominant pairs", run_orbits},
      {"bijection-table", "V-dimensions of every class as a table", run_bijection_table},
      {"poset", "degeneration order", run_poset},
      {"monomial", "monomials of classes and the class of a monomial", run_monomial},
      {"sigma-algebra", "graded dimensions and presentation of the corner algebra", run_sigma_algebra},
      {"hom", "Hom and proj dimensions between two indecomposables", run_hom},
      {"selfcheck", "engine against oracle and invariant suite", run_selfcheck},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    if (std::string(c.name) == "poset") sub->add_flag("--dot", opt.dot, "emit DOT");
    subs.push_back({sub, &c});
  }
  CLI11_PARSE(app, argc, argv);
  try {
    for (const auto& [sub, c] : subs) {
      if (!sub->parsed()) continue;
      if (sub->count("--seed")) opt.seed = seed;
      spdlog::debug("running {}", c->name);
      return c->run(opt);
    }
  } catch (const Error& e) {
    json err{{"error", std::string(to_string(e.code()))}, {"module", e.module()}, {"detail", e.what()}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Unexpected"}, {"detail", e.what()}}.dump() << '\n';
    return 3;
  }
  return 0;
}
