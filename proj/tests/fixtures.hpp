#pragma once

#include <string>

#include "repknit/repknit.hpp"

namespace repknit::testing {

inline DynkinQuiver a2() { return DynkinQuiver(DynkinType::parse("A2"), {"1", "2"}, {{"1", "2"}}); }
inline HeightFunction a2_xi() { return HeightFunction{{1, 0}}; }

inline DynkinQuiver a3() { return DynkinQuiver(DynkinType::parse("A3"), {"1", "2", "3"}, {{"1", "2"}, {"3", "2"}}); }
inline HeightFunction a3_xi() { return HeightFunction{{1, 0, 1}}; }

inline DynkinQuiver a3_linear() { return DynkinQuiver(DynkinType::parse("A3"), {"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}); }
inline HeightFunction a3_linear_xi() { return HeightFunction{{2, 1, 0}}; }

inline DynkinQuiver a4() {
  return DynkinQuiver(DynkinType::parse("A4"), {"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"1", "4"}});
}
inline HeightFunction a4_xi() { return HeightFunction{{3, 2, 1, 2}}; }

inline DynkinQuiver d4() {
  return DynkinQuiver(DynkinType::parse("D4"), {"1", "2", "3", "4"}, {{"1", "2"}, {"3", "2"}, {"4", "2"}});
}
inline HeightFunction d4_xi() { return HeightFunction{{1, 0, 1, 1}}; }

/// The window of the A4 example whose W sits at three projective slots.
inline ARWindow a4_final_window() { return knit_for_degrees(a4(), a4_xi(), {0, 2}, -1, 10); }

inline DimVector a4_final_dim(const DynkinQuiver& q) {
  return DimVector{{parse_vertex(q, "4[0]"), 1}, {parse_vertex(q, "1[1]"), 1}, {parse_vertex(q, "4[1]"), 1}};
}

inline std::string config_path(const std::string& name) { return std::string(REPKNIT_CONFIG_DIR) + "/" + name; }

}  // namespace repknit::testing
