#include "newtonspec/polytope.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "newtonspec/error.hpp"
#include "newtonspec/linalg.hpp"

namespace newtonspec {

namespace {

using linalg::Matrix;
using linalg::Vector;

Vector to_rat_vector(const ExpVec& v) {
  Vector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Rat dot(const std::vector<Rat>& u, const ExpVec& v) {
  Rat acc(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc += u[i] * v[i];
  return acc;
}

std::int64_t dot_int(const std::vector<std::int64_t>& w, const ExpVec& v) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += w[i] * v[i];
  return acc;
}

bool is_zero(const ExpVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool is_subset(const std::vector<std::size_t>& inner, const std::vector<std::size_t>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

PolytopeModel PolytopeModel::build(const Poly& p) {
  check_convenient(p);

  PolytopeModel m;
  m.mode_ = p.mode;
  m.n_ = p.nvars();

  std::vector<ExpVec> support;
  for (const auto& [e, c] : p.terms)
    if (!is_zero(e)) support.push_back(e);

  m.enumerate_facets(support);
  if (m.facets_.empty())
    throw Error(ErrorKind::NotFullDimensional, "no Newton-boundary facet found for a convenient input");
  m.find_vertices(support);
  m.build_face_lattice();
  return m;
}

void PolytopeModel::enumerate_facets(const std::vector<ExpVec>& support) {
  const std::size_t n = n_;
  std::set<std::vector<Rat>> normals;
  std::vector<std::size_t> chosen;
  Matrix rows;

  // Depth-first over n-subsets, pruning as soon as the chosen points become
  // linearly dependent: B u = 1 then has no unique solution.
  std::function<void(std::size_t)> recurse = [&](std::size_t start) {
    if (chosen.size() == n) {
      auto u = linalg::solve_unique(rows, Vector(n, Rat(1)));
      if (!u) return;
      if (mode_ == Mode::Local) {
        for (const auto& x : *u)
          if (x <= 0) return;
        for (const auto& a : support)
          if (dot(*u, a) < 1) return;
      } else {
        for (const auto& a : support)
          if (dot(*u, a) > 1) return;
      }
      normals.insert(*u);
      return;
    }
    for (std::size_t i = start; i + (n - chosen.size()) <= support.size(); ++i) {
      rows.push_back(to_rat_vector(support[i]));
      if (linalg::rank(rows) == rows.size()) {
        chosen.push_back(i);
        recurse(i + 1);
        chosen.pop_back();
      }
      rows.pop_back();
    }
  };
  recurse(0);

  for (const auto& u : normals) {
    FacetForm f;
    f.normal = u;
    mpz_class den(1);
    for (const auto& x : u) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    f.denominator = den.get_si();
    for (const auto& x : u) {
      mpz_class num = x.get_num() * (den / x.get_den());
      f.numerators.push_back(num.get_si());
    }
    facets_.push_back(std::move(f));
  }
}

void PolytopeModel::find_vertices(const std::vector<ExpVec>& support) {
  const std::size_t n = n_;
  for (const auto& a : support) {
    Matrix active;
    bool on_facet = false;
    for (const auto& f : facets_) {
      if (dot(f.normal, a) == 1) {
        active.push_back(f.normal);
        on_facet = true;
      }
    }
    if (!on_facet) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != 0) continue;
      Vector e(n, Rat(0));
      e[i] = 1;
      active.push_back(std::move(e));
    }
    if (linalg::rank(active) == n) vertices_.push_back(a);
  }
  max_coord_ = 0;
  for (const auto& v : vertices_)
    for (auto x : v) max_coord_ = std::max(max_coord_, x);
  for (auto& f : facets_) {
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (dot(f.normal, vertices_[j]) == 1) f.vertices.push_back(j);
  }
}

void PolytopeModel::build_face_lattice() {
  const std::size_t n = n_;
  std::vector<std::vector<std::size_t>> generators;
  for (const auto& f : facets_) generators.push_back(f.vertices);
  std::vector<std::vector<std::size_t>> coordinate_sets;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (vertices_[j][i] == 0) s.push_back(j);
    if (!s.empty()) coordinate_sets.push_back(std::move(s));
  }

  // Every boundary face is the intersection of the facets of P through it:
  // at least one boundary facet, plus possibly coordinate hyperplanes.
  std::set<std::vector<std::size_t>> seen(generators.begin(), generators.end());
  std::deque<std::vector<std::size_t>> queue(seen.begin(), seen.end());
  auto all_generators = generators;
  all_generators.insert(all_generators.end(), coordinate_sets.begin(), coordinate_sets.end());
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : all_generators) {
      std::vector<std::size_t> meet;
      std::set_intersection(cur.begin(), cur.end(), g.begin(), g.end(), std::back_inserter(meet));
      if (meet.empty() || meet.size() == cur.size()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  for (const auto& verts : seen) {
    Face face;
    face.vertices = verts;
    Matrix rows;
    for (auto j : verts) rows.push_back(to_rat_vector(vertices_[j]));
    // the affine hull misses the origin, so affine dimension = linear rank - 1
    face.dim = static_cast<int>(linalg::rank(rows)) - 1;
    face.is_simplex = verts.size() == static_cast<std::size_t>(face.dim + 1);
    for (std::size_t i = 0; i < n && !face.in_coordinate_hyperplane; ++i) {
      bool all_zero = true;
      for (auto j : verts) all_zero = all_zero && vertices_[j][i] == 0;
      face.in_coordinate_hyperplane = all_zero;
    }
    for (std::size_t fi = 0; fi < facets_.size(); ++fi)
      if (is_subset(verts, facets_[fi].vertices)) face.containing_facets.push_back(fi);
    faces_.push_back(std::move(face));
  }
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) { return a.dim < b.dim; });

  simplicial_fan_ = true;
  distinguished_simplicial_ = true;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    simplicial_fan_ = simplicial_fan_ && faces_[i].is_simplex;
    if (faces_[i].distinguished()) {
      distinguished_.push_back(i);
      distinguished_simplicial_ = distinguished_simplicial_ && faces_[i].is_simplex;
    }
  }
}

std::pair<std::int64_t, std::int64_t> PolytopeModel::newton_value_fraction(const ExpVec& v) const {
  std::int64_t best_num = 0, best_den = 1;
  bool first = true;
  for (const auto& f : facets_) {
    std::int64_t num = dot_int(f.numerators, v);
    std::int64_t den = f.denominator;
    if (first) {
      best_num = num;
      best_den = den;
      first = false;
      continue;
    }
    __int128 lhs = static_cast<__int128>(num) * best_den;
    __int128 rhs = static_cast<__int128>(best_num) * den;
    bool better = mode_ == Mode::Global ? lhs > rhs : lhs < rhs;
    if (better) {
      best_num = num;
      best_den = den;
    }
  }
  return {best_num, best_den};
}

Rat PolytopeModel::newton_value(const ExpVec& v) const {
  auto [num, den] = newton_value_fraction(v);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool PolytopeModel::value_at_most(const ExpVec& v, std::int64_t num, std::int64_t den) const {
  // nu(v) <= num/den, facet by facet, without building rationals.
  if (mode_ == Mode::Global) {
    for (const auto& f : facets_)
      if (static_cast<__int128>(dot_int(f.numerators, v)) * den > static_cast<__int128>(num) * f.denominator)
        return false;
    return true;
  }
  for (const auto& f : facets_)
    if (static_cast<__int128>(dot_int(f.numerators, v)) * den <= static_cast<__int128>(num) * f.denominator)
      return true;
  return false;
}

bool PolytopeModel::same_cone(const ExpVec& a, const ExpVec& b) const {
  ExpVec sum(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
  return newton_value(sum) == newton_value(a) + newton_value(b);
}

std::optional<std::size_t> PolytopeModel::smallest_cone(const ExpVec& v) const {
  if (is_zero(v)) return std::nullopt;
  Rat value = newton_value(v);
  std::vector<std::size_t> active;
  for (std::size_t fi = 0; fi < facets_.size(); ++fi)
    if (dot(facets_[fi].normal, v) == value) active.push_back(fi);
  std::vector<std::size_t> verts;
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    bool ok = true;
    for (auto fi : active) ok = ok && dot(facets_[fi].normal, vertices_[j]) == 1;
    for (std::size_t i = 0; i < n_ && ok; ++i) ok = v[i] != 0 || vertices_[j][i] == 0;
    if (ok) verts.push_back(j);
  }
  auto face = find_face(verts);
  if (!face) throw Error(ErrorKind::InternalMismatch, "smallest cone: active constraints do not cut out a face");
  return face;
}

std::optional<std::size_t> PolytopeModel::find_face(const std::vector<std::size_t>& vertices) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == vertices) return i;
  return std::nullopt;
}

bool PolytopeModel::face_contains(std::size_t outer, std::size_t inner) const {
  return is_subset(faces_[inner].vertices, faces_[outer].vertices);
}

std::vector<BoxPoint> PolytopeModel::box_points(std::size_t face_index) const {
  const Face& face = faces_.at(face_index);
  if (!face.is_simplex) throw Error(ErrorKind::NotSimplex, "box points need a simplex face");
  const std::size_t n = n_;
  const std::size_t k = face.vertices.size();

  // Pick k coordinates on which the vertex vectors are independent, and
  // invert that k x k block once; the other coordinates are checked per point.
  std::vector<std::size_t> coords;
  Matrix picked;
  for (std::size_t i = 0; i < n && coords.size() < k; ++i) {
    Vector row;
    for (auto j : face.vertices) row.emplace_back(vertices_[j][i]);
    picked.push_back(row);
    if (linalg::rank(picked) == picked.size())
      coords.push_back(i);
    else
      picked.pop_back();
  }
  if (coords.size() != k) throw Error(ErrorKind::NotSimplex, "face vertices are linearly dependent");
  Matrix inverse(k, Vector(k));
  for (std::size_t c = 0; c < k; ++c) {
    Vector unit(k, Rat(0));
    unit[c] = 1;
    auto col = linalg::solve_unique(picked, unit);
    for (std::size_t r = 0; r < k; ++r) inverse[r][c] = (*col)[r];
  }

  ExpVec upper(n, 0);
  for (auto j : face.vertices)
    for (std::size_t i = 0; i < n; ++i) upper[i] += vertices_[j][i];

  std::vector<BoxPoint> out;
  ExpVec v(n, 0);
  for (;;) {
    std::vector<Rat> q(k, Rat(0));
    bool inside = true;
    for (std::size_t r = 0; r < k && inside; ++r) {
      for (std::size_t c = 0; c < k; ++c) q[r] += inverse[r][c] * v[coords[c]];
      inside = q[r] >= 0 && q[r] < 1;
    }
    for (std::size_t i = 0; i < n && inside; ++i) {
      Rat coord(0);
      for (std::size_t r = 0; r < k; ++r) coord += q[r] * vertices_[face.vertices[r]][i];
      inside = coord == v[i];
    }
    if (inside) {
      BoxPoint bp;
      bp.v = v;
      bp.host_face = face_index;
      bp.nu = std::accumulate(q.begin(), q.end(), Rat(0));
      bp.q = std::move(q);
      out.push_back(std::move(bp));
    }
    // odometer over 0 <= v_i < upper_i (v_i = 0 where upper_i = 0)
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (v[i] + 1 < upper[i]) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> PolytopeModel::triangulate(std::size_t face_index) const {
  const Face& face = faces_[face_index];
  if (face.is_simplex) return {face.vertices};
  // pulling triangulation: cone from the first vertex over the sub-faces missing it
  const std::size_t apex = face.vertices.front();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < faces_.size(); ++g) {
    const Face& sub = faces_[g];
    if (sub.dim != face.dim - 1 || !is_subset(sub.vertices, face.vertices)) continue;
    if (std::binary_search(sub.vertices.begin(), sub.vertices.end(), apex)) continue;
    for (auto simplex : triangulate(g)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

std::int64_t PolytopeModel::normalized_volume() const {
  Rat total(0);
  for (std::size_t fi = 0; fi < faces_.size(); ++fi) {
    if (faces_[fi].dim != static_cast<int>(n_) - 1) continue;
    for (const auto& simplex : triangulate(fi)) {
      Matrix m;
      for (auto j : simplex) m.push_back(to_rat_vector(vertices_[j]));
      total += abs(linalg::determinant(m));
    }
  }
  if (total.get_den() != 1) throw Error(ErrorKind::InternalMismatch, "normalized volume is not an integer");
  return total.get_num().get_si();
}

void PolytopeModel::for_each_point_up_to(const Rat& bound,
                                         const std::function<void(const ExpVec&, const Rat&)>& fn) const {
  if (bound < 0) return;
  const std::size_t n = n_;
  const Rat scaled = bound * Rat(static_cast<long>(max_coord_));
  mpz_class limit_z = scaled.get_num() / scaled.get_den();
  const std::int64_t limit = limit_z.get_si();
  const std::int64_t bnum = bound.get_num().get_si();
  const std::int64_t bden = bound.get_den().get_si();
  ExpVec v(n, 0);
  for (;;) {
    if (value_at_most(v, bnum, bden)) fn(v, newton_value(v));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (v[i] < limit) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
    if (i == n) break;
  }
}

std::int64_t PolytopeModel::lattice_count(std::int64_t level) const {
  if (level < 0) return 0;
  const std::size_t n = n_;
  const std::int64_t limit = level * max_coord_;
  std::int64_t count = 0;
  ExpVec v(n, 0);
  for (;;) {
    if (value_at_most(v, level, 1)) ++count;
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (v[i] < limit) {
        ++v[i];
        break;
      }
      v[i] = 0;
    }
    if (i == n) break;
  }
  return count;
}

nlohmann::json PolytopeModel::to_json(const std::vector<std::string>& vars) const {
  nlohmann::json j;
  j["mode"] = to_string(mode_);
  j["dimension"] = n_;
  if (!vars.empty()) j["variables"] = vars;
  j["vertices"] = vertices_;
  auto facets = nlohmann::json::array();
  for (const auto& f : facets_) {
    auto u = nlohmann::json::array();
    for (const auto& x : f.normal) u.push_back(x.get_str());
    facets.push_back({{"u_F", u}, {"vertices", f.vertices}});
  }
  j["facets"] = facets;
  auto faces = nlohmann::json::array();
  for (const auto& f : faces_)
    faces.push_back({{"vertices", f.vertices}, {"dim", f.dim}, {"in_F_of_P", f.distinguished()}, {"simplex", f.is_simplex}});
  j["faces"] = faces;
  j["simplicial_fan"] = simplicial_fan_;
  j["normalized_volume"] = normalized_volume();
  return j;
}

}  // namespace newtonspec
