#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "newtonspec/numerics.hpp"
#include "newtonspec/poly.hpp"

namespace newtonspec {

/// A Newton-boundary facet {x : <u_F, x> = 1}.
struct FacetForm {
  std::vector<Rat> normal;            // u_F
  std::vector<std::size_t> vertices;  // indices into PolytopeModel::vertices()

  // u_F = numerators / denominator, for integer-only evaluation in hot loops.
  std::vector<std::int64_t> numerators;
  std::int64_t denominator = 1;
};

/// A closed face of the Newton boundary, identified by its vertex set.
struct Face {
  std::vector<std::size_t> vertices;  // sorted
  int dim = 0;
  bool in_coordinate_hyperplane = false;
  std::vector<std::size_t> containing_facets;
  bool is_simplex = false;

  /// Member of the distinguished set: not inside any coordinate hyperplane.
  bool distinguished() const noexcept { return !in_coordinate_hyperplane; }
};

/// A lattice point of the half-open parallelepiped spanned by a simplex face.
struct BoxPoint {
  ExpVec v;
  std::size_t host_face = 0;
  std::vector<Rat> q;  // barycentric-like coordinates in [0, 1)
  Rat nu;              // sum of q, equal to the Newton value of v
};

/// Exact model of the Newton polytope (global) or Newton polyhedron (local).
///
/// Facets are found by exhaustive enumeration of hyperplanes through n
/// support points, which is exact and adequate for n <= 6 and a few dozen
/// support points. The face lattice covers the whole Newton boundary,
/// including faces lying in coordinate hyperplanes; P itself is not a face.
class PolytopeModel {
 public:
  /// Requires a convenient polynomial; throws NotConvenientError otherwise.
  static PolytopeModel build(const Poly& p);

  Mode mode() const noexcept { return mode_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<ExpVec>& vertices() const noexcept { return vertices_; }
  const std::vector<FacetForm>& facets() const noexcept { return facets_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  /// Indices of faces not contained in a coordinate hyperplane.
  const std::vector<std::size_t>& distinguished_faces() const noexcept { return distinguished_; }
  /// Every Newton-boundary face is a simplex.
  bool simplicial_fan() const noexcept { return simplicial_fan_; }
  /// Every distinguished face is a simplex (what the box formula needs).
  bool distinguished_simplicial() const noexcept { return distinguished_simplicial_; }

  /// max_F <u_F, v> (global) or min_F <u_F, v> (local).
  Rat newton_value(const ExpVec& v) const;

  /// Newton value as an unreduced fraction of 64-bit integers.
  std::pair<std::int64_t, std::int64_t> newton_value_fraction(const ExpVec& v) const;

  /// nu(a + b) = nu(a) + nu(b), i.e. a and b lie in a common cone.
  bool same_cone(const ExpVec& a, const ExpVec& b) const;

  /// Smallest face whose cone contains v; nullopt is the zero cone (v = 0).
  std::optional<std::size_t> smallest_cone(const ExpVec& v) const;

  /// Index of the face with exactly this (sorted) vertex set.
  std::optional<std::size_t> find_face(const std::vector<std::size_t>& vertices) const;

  /// Whether face `inner` is a face of `outer` (vertex containment).
  bool face_contains(std::size_t outer, std::size_t inner) const;

  /// Throws Error(NotSimplex) for non-simplex faces.
  std::vector<BoxPoint> box_points(std::size_t face) const;

  /// n! vol(P), summed over cones on triangulated Newton-boundary facets.
  std::int64_t normalized_volume() const;

  /// #{v in N^n : nu(v) <= level}.
  std::int64_t lattice_count(std::int64_t level) const;

  /// Calls fn(v, nu(v)) for every v in N^n with nu(v) <= bound.
  void for_each_point_up_to(const Rat& bound, const std::function<void(const ExpVec&, const Rat&)>& fn) const;

  std::int64_t max_coordinate() const noexcept { return max_coord_; }

  nlohmann::json to_json(const std::vector<std::string>& vars = {}) const;

 private:
  PolytopeModel() = default;

  void enumerate_facets(const std::vector<ExpVec>& support);
  void find_vertices(const std::vector<ExpVec>& support);
  void build_face_lattice();
  std::vector<std::vector<std::size_t>> triangulate(std::size_t face) const;
  bool value_at_most(const ExpVec& v, std::int64_t num, std::int64_t den) const;

  Mode mode_ = Mode::Global;
  std::size_t n_ = 0;
  std::int64_t max_coord_ = 0;
  std::vector<ExpVec> vertices_;
  std::vector<FacetForm> facets_;
  std::vector<Face> faces_;
  std::vector<std::size_t> distinguished_;
  bool simplicial_fan_ = false;
  bool distinguished_simplicial_ = false;
};

}  // namespace newtonspec
