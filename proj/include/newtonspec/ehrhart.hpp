#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "newtonspec/numerics.hpp"
#include "newtonspec/polytope.hpp"

namespace newtonspec {

/// Numerator delta_0 + delta_1 z + ... + delta_n z^n of the Ehrhart series.
struct DeltaVector {
  std::vector<std::int64_t> entries;

  std::size_t dim() const noexcept { return entries.empty() ? 0 : entries.size() - 1; }
  std::int64_t sum() const;
  Series as_series() const;
  std::string to_string() const { return as_series().to_string(); }

  friend bool operator==(const DeltaVector&, const DeltaVector&) = default;
};

/// delta_k = number of spectrum exponents in ]k-1, k].
/// Throws ExponentOutOfRange when an exponent exceeds n or is negative.
DeltaVector delta_from_spectrum(const Series& spectrum, std::size_t n);

/// delta_k = sum_{j<=k} (-1)^j C(n+1, j) L_P(k-j) from direct lattice counts.
/// Throws NegativeDelta if an entry comes out negative.
DeltaVector delta_from_counts(const PolytopeModel& m);

/// L_P(z) = sum_k delta_k C(z+n-k, n).
struct EhrhartPolynomial {
  std::size_t n = 0;
  std::vector<std::int64_t> delta;

  std::int64_t evaluate(std::int64_t z) const;
  /// "C(z+2,2) + 14 C(z+1,2) + 5 C(z,2)"
  std::string to_string() const;
  nlohmann::json to_json() const;
};

EhrhartPolynomial ehrhart_polynomial(const DeltaVector& d);

/// Sum of (z-1)^{n - dim tau} over cones tau containing the smallest cone of v:
/// all cones of the fan (relative = false, the zero cone included), or only
/// cones off the coordinate hyperplanes (relative = true).
Series hodge_deligne(const PolytopeModel& m, const ExpVec& v, bool relative);

/// Lattice points of the union of Box(D) over distinguished faces, each once,
/// mapped to their Newton values.
std::map<ExpVec, Rat> box_of_polytope(const PolytopeModel& m);

/// sum over v in Box(P) of E*_v(z) z^{nu(v)}: graded dimensions of the
/// orbifold cohomology of the stacky fan. Throws NotSimplicial.
Series orbifold_dimensions(const PolytopeModel& m);

}  // namespace newtonspec
