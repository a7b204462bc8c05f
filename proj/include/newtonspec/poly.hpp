#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "newtonspec/numerics.hpp"

namespace newtonspec {

/// Exponent vector m in N^n.
using ExpVec = std::vector<std::int64_t>;

/// Global: the Newton polytope of a polynomial on C^n (max of facet forms).
/// Local: the Newton polyhedron of a germ at the origin (min of facet forms).
enum class Mode { Global, Local };

const char* to_string(Mode mode);

struct Poly {
  std::vector<std::string> vars;
  std::map<ExpVec, Rat> terms;  // never holds a zero coefficient
  Mode mode = Mode::Global;

  std::size_t nvars() const noexcept { return vars.size(); }

  /// Canonical text that parse_polynomial reads back to the same Poly.
  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Grammar:
///   poly   := term (('+'|'-') term)*      (a leading sign is allowed)
///   term   := [coeff '*'?] factor*
///   factor := var ('^' uint)? with factors separated by '*'
///   coeff  := int | int '/' uint
///   var    := letter (letter|digit|'_')*
///
/// Variables are ordered by var_order when given, else by first appearance.
Poly parse_polynomial(std::string_view text, Mode mode = Mode::Global,
                      const std::optional<std::vector<std::string>>& var_order = std::nullopt);

/// Parses a single monomial such as "u^2*v" over the given variables.
ExpVec parse_monomial(std::string_view text, const std::vector<std::string>& vars);

/// Renders an exponent vector as "u^2*v", or "1" for the zero vector.
std::string monomial_to_string(const ExpVec& m, const std::vector<std::string>& vars);

/// For each axis i, the smallest n_i >= 1 with u_i^{n_i} in the support.
/// Throws NotConvenientError naming the missing axes.
std::vector<std::int64_t> check_convenient(const Poly& p);

/// Sets the variables in zero_set (0-based indices) to zero and drops them.
/// Throws InvalidArgument if zero_set covers every variable.
Poly restrict_poly(const Poly& p, const std::set<std::size_t>& zero_set);

}  // namespace newtonspec
