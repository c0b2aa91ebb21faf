#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repknit/checked.hpp"
#include "repknit/error.hpp"
#include "repknit/hom_engine.hpp"
#include "repknit/orbits.hpp"

namespace repknit {

/// Laurent monomial in the variables Y_{i,n}, (i, n) a projective slot.
struct LaurentMonomial {
  std::map<Slot, std::int64_t> exponents;

  static LaurentMonomial variable(Slot s, std::int64_t e = 1) {
    LaurentMonomial m;
    m.mul(s, e);
    return m;
  }

  void mul(Slot s, std::int64_t e) {
    if (e == 0) return;
    auto& x = exponents[s];
    x = checked::add(x, e);
    if (x == 0) exponents.erase(s);
  }

  LaurentMonomial& operator*=(const LaurentMonomial& o) {
    for (const auto& [s, e] : o.exponents) mul(s, e);
    return *this;
  }
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }

  LaurentMonomial pow(std::int64_t k) const {
    LaurentMonomial out;
    for (const auto& [s, e] : exponents) out.mul(s, checked::mul(e, k));
    return out;
  }

  std::int64_t exponent(Slot s) const {
    auto it = exponents.find(s);
    return it == exponents.end() ? 0 : it->second;
  }

  bool is_one() const { return exponents.empty(); }

  bool dominant() const {
    for (const auto& [s, e] : exponents)
      if (e < 0) return false;
    return true;
  }

  bool is_single_variable() const { return exponents.size() == 1 && exponents.begin()->second == 1; }

  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// Y[i,n]^e factors sorted by (column, level); "1" for the empty monomial.
inline std::string format_monomial(const DynkinQuiver& q, const LaurentMonomial& m) {
  if (m.is_one()) return "1";
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> terms;
  for (const auto& [s, e] : m.exponents) terms.push_back({{s.column, s.level}, e});
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [key, e] : terms) {
    if (!out.empty()) out += " ";
    out += "Y[" + q.name(key.first) + "," + std::to_string(key.second) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string variable_name(const DynkinQuiver& q, Slot s) {
  return "Y[" + q.name(s.column) + "," + std::to_string(s.level) + "]";
}

/// A_{i,n} = Y_{i,n-1} Y_{i,n+1} prod_{j ~ i} Y_{j,n}^{-1}, for a stable slot.
inline LaurentMonomial a_monomial(const DynkinQuiver& q, const HeightFunction& xi, Slot s) {
  if (!is_stable(xi, s))
    throw Error(ErrorCode::ConfigError, "qchar", "A_{i,n} needs a stable slot, got (" + q.name(s.column) + "," + std::to_string(s.level) + ")");
  LaurentMonomial m;
  m.mul({s.column, s.level - 1}, 1);
  m.mul({s.column, s.level + 1}, 1);
  for (int j : q.neighbors(s.column)) m.mul({j, s.level}, -1);
  return m;
}

/// Y^W A^{-V}.
inline LaurentMonomial pair_to_monomial(const DynkinQuiver& q, const HeightFunction& xi, const DominantPair& p) {
  LaurentMonomial m;
  for (const auto& [s, w] : p.W) m.mul(s, w);
  for (const auto& [s, v] : p.V) m *= a_monomial(q, xi, s).pow(-v);
  return m;
}

inline LaurentMonomial monomial_of_module(const HomEngine& eng, const ModuleClass& n) {
  const ARWindow& w = eng.window();
  return pair_to_monomial(w.quiver(), w.height(), module_to_pair(eng, n));
}

/// The projective-free class whose monomial is m: the summand
/// Omega^{-1} tau psi^{-1}(i, n+1) with multiplicity the exponent of Y_{i,n}.
inline ModuleClass module_of_monomial(const HomEngine& eng, const LaurentMonomial& m) {
  const ARWindow& w = eng.window();
  ModuleClass n;
  for (const auto& [s, e] : m.exponents) {
    if (e < 0) throw Error(ErrorCode::NotDominant, "qchar", "negative exponent at " + variable_name(w.quiver(), s));
    if (is_stable(w.height(), s)) throw Error(ErrorCode::ConfigError, "qchar", variable_name(w.quiver(), s) + " is not a projective slot");
    const int top = w.psi_inv({s.column, s.level + 1});
    n.add(eng.omega_inv(w.tau(top)), e);
  }
  return n;
}

struct CompositionCandidate {
  LaurentMonomial monomial;
  ModuleClass module;
  bool in_closure = false;  // N' lies in the closure of the orbit of N
};

/// Every class N with the dimension vector of N', with its monomial and
/// whether N' lies in the orbit closure of N. The flagged entries are the
/// pairs (O_N, N') at which an intersection cohomology stalk can be nonzero.
inline std::vector<CompositionCandidate> composition_candidates(const HomEngine& eng, const ModuleClass& n_prime) {
  const ARWindow& w = eng.window();
  auto classes = enumerate_modules(eng, n_prime.dim(w));
  const StrataPoset poset = degeneration_order(eng, classes);
  int self = -1;
  for (std::size_t k = 0; k < poset.elements.size(); ++k)
    if (poset.elements[k] == n_prime) self = static_cast<int>(k);
  if (self < 0) throw Error(ErrorCode::InternalInconsistency, "qchar", "class not found among its own dimension vector");
  std::vector<CompositionCandidate> out;
  for (std::size_t k = 0; k < poset.elements.size(); ++k) {
    CompositionCandidate c;
    c.module = poset.elements[k];
    c.monomial = pair_to_monomial(w.quiver(), w.height(), poset.pairs[k]);
    c.in_closure = poset.leq[k][static_cast<std::size_t>(self)];
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<CompositionCandidate> composition_candidates(const HomEngine& eng, const LaurentMonomial& m_prime) {
  if (!m_prime.dominant()) throw Error(ErrorCode::NotDominant, "qchar", "composition_candidates needs a dominant monomial");
  return composition_candidates(eng, module_of_monomial(eng, m_prime));
}

}  // namespace repknit
