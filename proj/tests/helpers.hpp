#pragma once

#include <initializer_list>
#include <utility>

#include "newtonspec/numerics.hpp"

namespace newtonspec::testing {

// series({{"1/2", 1}, {"1", 3}}) builds z^{1/2} + 3z.
inline Series series(std::initializer_list<std::pair<const char*, Series::Coefficient>> terms) {
  Series s;
  for (const auto& [e, c] : terms) s.add_term(parse_rat(e), c);
  return s;
}

inline Rat q(const char* text) { return parse_rat(text); }

}  // namespace newtonspec::testing
