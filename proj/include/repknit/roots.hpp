#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "repknit/quiver.hpp"

namespace repknit {

using Root = std::vector<int>;

/// Symmetric Cartan pairing of two dimension vectors of Q.
inline int cartan_pairing(const DynkinQuiver& q, const Root& a, const Root& b) {
  int s = 0;
  for (int i = 0; i < q.size(); ++i) s += 2 * a[i] * b[i];
  for (const auto& arr : q.arrows()) s -= a[arr.source] * b[arr.target] + a[arr.target] * b[arr.source];
  return s;
}

/// Positive roots of the underlying diagram, generated from the simple roots
/// by simple reflections that increase height. Sorted by height then
/// lexicographically.
inline std::vector<Root> positive_roots(const DynkinQuiver& q) {
  const int n = q.size();
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier)
      for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        const int c = cartan_pairing(q, r, e);
        if (c >= 0) continue;
        Root s = r;
        s[i] -= c;
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  std::vector<Root> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

}  // namespace repknit
