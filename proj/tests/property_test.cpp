#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "newtonspec/ehrhart.hpp"
#include "newtonspec/invariants.hpp"
#include "newtonspec/linalg.hpp"
#include "newtonspec/polytope.hpp"
#include "newtonspec/spectrum.hpp"

using namespace newtonspec;

namespace {

std::vector<Poly> global_corpus() {
  testing::CorpusOptions o;
  o.seed = 7;
  o.count = 30;
  return testing::random_corpus(o);
}

std::vector<Poly> local_corpus() {
  testing::CorpusOptions o;
  o.seed = 11;
  o.count = 20;
  o.mode = Mode::Local;
  return testing::random_corpus(o);
}

Series random_series(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(0, 12), den(1, 4), coeff(-3, 3), len(0, 5);
  Series s;
  for (long k = len(rng); k > 0; --k) s.add_term(make_rat(num(rng), den(rng)), coeff(rng));
  return s;
}

ExpVec random_point(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> coord(0, 7);
  ExpVec v(n);
  for (auto& x : v) x = coord(rng);
  return v;
}

bool share_maximal_cone(const PolytopeModel& m, const ExpVec& a, const ExpVec& b) {
  auto sa = m.smallest_cone(a), sb = m.smallest_cone(b);
  for (std::size_t fi = 0; fi < m.faces().size(); ++fi) {
    if (m.faces()[fi].dim != static_cast<int>(m.dim()) - 1) continue;
    if ((!sa || m.face_contains(fi, *sa)) && (!sb || m.face_contains(fi, *sb))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("series arithmetic laws") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(series_add(a, b) == series_add(b, a));
    CHECK(series_add(series_add(a, b), c) == series_add(a, series_add(b, c)));
    CHECK(mul_one_minus_z_pow(mul_one_minus_z_pow(a, 1), 2) == mul_one_minus_z_pow(a, 3));
    CHECK(reciprocal_reflect(reciprocal_reflect(a, 3), 3) == a);
    CHECK(eval_at_one(series_add(a, b)) == eval_at_one(a) + eval_at_one(b));
    CHECK(eval_at_one(mul_one_minus_z_pow(a, 1)) == 0);
    CHECK(Series::from_json(a.to_json()) == a);
  }
}

TEST_CASE("echelon pivots do not depend on insertion order") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<linalg::SparseEchelon::Row> rows(6);
    for (auto& r : rows)
      for (std::size_t c = 0; c < 8; ++c)
        if (long x = entry(rng); x != 0) r[c] = Rat(x);
    linalg::SparseEchelon a(8), b(8);
    for (const auto& r : rows) a.insert(r);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (const auto& r : rows) b.insert(r);
    CHECK(a.pivot_columns() == b.pivot_columns());
    linalg::SparseEchelon::Row probe;
    for (std::size_t c = 0; c < 8; ++c) probe[c] = Rat(entry(rng));
    CHECK(a.reduce(probe) == b.reduce(probe));
  }
}

TEST_CASE("parser round trip and restrictions on the corpus") {
  for (const auto& p : global_corpus()) {
    auto again = parse_polynomial(p.to_string(), p.mode, p.vars);
    CHECK(again == p);
    const std::size_t n = p.nvars();
    for (std::size_t i = 0; i < n; ++i) {
      auto r = restrict_poly(p, {i});
      CHECK_NOTHROW(check_convenient(r));
      for (std::size_t j = i + 1; j < n && n > 2; ++j) {
        // j shifts down by one once i is dropped
        CHECK(restrict_poly(r, {j - 1}) == restrict_poly(p, {i, j}));
      }
    }
  }
}

TEST_CASE("Newton function: homogeneity, sub- and superadditivity, cones") {
  std::mt19937 rng(13);
  auto check_model = [&](const Poly& p) {
    auto m = PolytopeModel::build(p);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_point(rng, m.dim()), b = random_point(rng, m.dim());
      ExpVec sum(a.size()), twice(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        sum[i] = a[i] + b[i];
        twice[i] = 2 * a[i];
      }
      CHECK(m.newton_value(twice) == 2 * m.newton_value(a));
      Rat lhs = m.newton_value(sum), rhs = m.newton_value(a) + m.newton_value(b);
      if (m.mode() == Mode::Global)
        CHECK(lhs <= rhs);
      else
        CHECK(lhs >= rhs);
      CHECK(m.same_cone(a, b) == m.same_cone(b, a));
      CHECK(m.same_cone(a, b) == share_maximal_cone(m, a, b));
    }
  };
  for (const auto& p : global_corpus()) check_model(p);
  for (const auto& p : local_corpus()) check_model(p);
}

TEST_CASE("lattice counts agree with enumeration") {
  for (const auto& p : global_corpus()) {
    auto m = PolytopeModel::build(p);
    for (std::int64_t level = 0; level <= 2; ++level) {
      std::int64_t count = 0;
      m.for_each_point_up_to(Rat(level), [&](const ExpVec&, const Rat&) { ++count; });
      CHECK(m.lattice_count(level) == count);
    }
  }
}

TEST_CASE("full invariant suite on random global inputs") {
  for (const auto& p : global_corpus()) {
    for (const auto& r : run_invariants(p)) {
      INFO(p.to_string() << " :: " << r.name << " :: " << r.detail);
      CHECK(r.status != CheckStatus::Fail);
    }
  }
}

TEST_CASE("full invariant suite on random local inputs") {
  for (const auto& p : local_corpus()) {
    for (const auto& r : run_invariants(p)) {
      INFO(p.to_string() << " :: " << r.name << " :: " << r.detail);
      CHECK(r.status != CheckStatus::Fail);
    }
  }
}
