#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "newtonspec/error.hpp"
#include "newtonspec/polytope.hpp"

using namespace newtonspec;
using testing::q;

namespace {

PolytopeModel square() { return PolytopeModel::build(parse_polynomial("u^2 + u^2*v^2 + v^2")); }
PolytopeModel quintic() { return PolytopeModel::build(parse_polynomial("x^5 + x^2*y^2 + y^5", Mode::Local)); }

std::set<std::vector<Rat>> normals(const PolytopeModel& m) {
  std::set<std::vector<Rat>> out;
  for (const auto& f : m.facets()) out.insert(f.normal);
  return out;
}

std::size_t face_with(const PolytopeModel& m, std::vector<ExpVec> pts) {
  std::vector<std::size_t> idx;
  for (const auto& p : pts) {
    auto it = std::find(m.vertices().begin(), m.vertices().end(), p);
    REQUIRE(it != m.vertices().end());
    idx.push_back(static_cast<std::size_t>(it - m.vertices().begin()));
  }
  std::sort(idx.begin(), idx.end());
  auto f = m.find_face(idx);
  REQUIRE(f);
  return *f;
}

}  // namespace

TEST_CASE("facets of the worked examples") {
  auto sq = square();
  CHECK(normals(sq) == std::set<std::vector<Rat>>{{q("1/2"), q("0")}, {q("0"), q("1/2")}});
  CHECK(sq.vertices().size() == 3);

  auto lin = PolytopeModel::build(parse_polynomial("u + v"));
  CHECK(normals(lin) == std::set<std::vector<Rat>>{{q("1"), q("1")}});

  CHECK(normals(quintic()) == std::set<std::vector<Rat>>{{q("1/5"), q("3/10")}, {q("3/10"), q("1/5")}});
}

TEST_CASE("distinguished faces of the square") {
  auto sq = square();
  std::set<std::vector<std::size_t>> dist;
  for (auto fi : sq.distinguished_faces()) dist.insert(sq.faces()[fi].vertices);
  CHECK(dist.size() == 3);
  CHECK(dist.count(sq.faces()[face_with(sq, {{2, 2}})].vertices) == 1);
  CHECK(dist.count(sq.faces()[face_with(sq, {{2, 0}, {2, 2}})].vertices) == 1);
  CHECK(dist.count(sq.faces()[face_with(sq, {{0, 2}, {2, 2}})].vertices) == 1);
  CHECK_FALSE(sq.faces()[face_with(sq, {{2, 0}})].distinguished());
  CHECK(sq.simplicial_fan());
}

TEST_CASE("Newton function") {
  auto sq = square();
  CHECK(sq.newton_value({1, 1}) == q("1/2"));
  CHECK(sq.newton_value({0, 0}) == 0);
  CHECK(sq.newton_value({3, 1}) == q("3/2"));
  auto x = quintic();
  CHECK(x.newton_value({2, 1}) == q("7/10"));
  CHECK(x.newton_value({0, 0}) == 0);
  auto [num, den] = x.newton_value_fraction({2, 1});
  CHECK(num == 7);
  CHECK(den == 10);
}

TEST_CASE("same_cone") {
  auto sq = square();
  CHECK_FALSE(sq.same_cone({2, 0}, {0, 2}));
  CHECK(sq.same_cone({0, 0}, {3, 5}));
  CHECK(sq.same_cone({1, 0}, {1, 1}));
  CHECK_FALSE(sq.same_cone({1, 0}, {0, 1}));
}

TEST_CASE("smallest cone") {
  auto sq = square();
  CHECK(sq.smallest_cone({1, 1}) == face_with(sq, {{2, 2}}));
  CHECK_FALSE(sq.smallest_cone({0, 0}).has_value());
  CHECK(sq.smallest_cone({2, 1}) == face_with(sq, {{2, 0}, {2, 2}}));
  CHECK(sq.smallest_cone({3, 0}) == face_with(sq, {{2, 0}}));
}

TEST_CASE("box points") {
  auto sq = square();
  auto edge = sq.box_points(face_with(sq, {{2, 0}, {2, 2}}));
  std::set<std::pair<ExpVec, Rat>> got;
  for (const auto& b : edge) got.emplace(b.v, b.nu);
  CHECK(got == std::set<std::pair<ExpVec, Rat>>{
                   {{0, 0}, q("0")}, {{1, 0}, q("1/2")}, {{1, 1}, q("1/2")}, {{2, 1}, q("1")}});

  auto vertex = sq.box_points(face_with(sq, {{2, 2}}));
  got.clear();
  for (const auto& b : vertex) got.emplace(b.v, b.nu);
  CHECK(got == std::set<std::pair<ExpVec, Rat>>{{{0, 0}, q("0")}, {{1, 1}, q("1/2")}});

  auto x = quintic();
  auto qedge = x.box_points(face_with(x, {{5, 0}, {2, 2}}));
  std::set<Rat> values;
  for (const auto& b : qedge) values.insert(b.nu);
  CHECK(qedge.size() == 10);
  CHECK(values == std::set<Rat>{q("0"), q("1/5"), q("2/5"), q("3/5"), q("4/5"), q("1/2"), q("7/10"), q("9/10"),
                                q("11/10"), q("13/10")});
  for (const auto& b : qedge)
    for (const auto& c : b.q) CHECK((c >= 0 && c < 1));
}

TEST_CASE("box points refuse non-simplex faces") {
  auto cube = PolytopeModel::build(
      parse_polynomial("2*u^2+3*v^2+5*w^2+7*u^2*v^2+11*v^2*w^2+13*u^2*w^2+17*u^2*v^2*w^2"));
  CHECK_FALSE(cube.distinguished_simplicial());
  CHECK_FALSE(cube.simplicial_fan());
  bool refused = false;
  for (std::size_t fi = 0; fi < cube.faces().size(); ++fi) {
    if (cube.faces()[fi].is_simplex) continue;
    CHECK_THROWS_AS(cube.box_points(fi), Error);
    refused = true;
  }
  CHECK(refused);
  CHECK(cube.normalized_volume() == 48);
}

TEST_CASE("normalized volume") {
  CHECK(square().normalized_volume() == 8);
  CHECK(PolytopeModel::build(parse_polynomial("u+v+w")).normalized_volume() == 1);
  CHECK(PolytopeModel::build(parse_polynomial("u+v")).normalized_volume() == 1);
  CHECK(quintic().normalized_volume() == 20);
  CHECK(PolytopeModel::build(parse_polynomial("u+v+w+u^2*v^2*w^2+v^2*w^2")).normalized_volume() == 12);
}

TEST_CASE("lattice counts") {
  auto sq = square();
  CHECK(sq.lattice_count(0) == 1);
  CHECK(sq.lattice_count(1) == 9);
  CHECK(sq.lattice_count(2) == 25);
  CHECK(quintic().lattice_count(0) == 1);
}

TEST_CASE("model JSON") {
  auto sq = square();
  auto j = sq.to_json({"u", "v"});
  CHECK(j["normalized_volume"] == 8);
  CHECK(j["dimension"] == 2);
  CHECK(j["facets"].size() == 2);
}
