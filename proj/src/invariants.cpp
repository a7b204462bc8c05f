#include "newtonspec/invariants.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "newtonspec/ehrhart.hpp"
#include "newtonspec/error.hpp"
#include "newtonspec/graded_ring.hpp"
#include "newtonspec/polytope.hpp"

namespace newtonspec {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

bool all_passed(const std::vector<InvariantResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::Skip, std::move(detail)}; }
Outcome verdict(bool ok, std::string detail) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)}; }

std::string mismatch(const std::string& lhs_name, const Series& lhs, const std::string& rhs_name, const Series& rhs) {
  return lhs_name + " = " + lhs.to_string() + "; " + rhs_name + " = " + rhs.to_string();
}

bool in_coordinate_hyperplane(const ExpVec& v) {
  for (auto x : v)
    if (x == 0) return true;
  return false;
}

}  // namespace

std::vector<InvariantResult> run_invariants(const Poly& p, const SpectrumOptions& opts) {
  std::vector<InvariantResult> results;
  auto run = [&](const std::string& name, const std::function<Outcome()>& check) {
    try {
      auto o = check();
      results.push_back({name, o.status, o.detail});
    } catch (const std::exception& e) {
      results.push_back({name, CheckStatus::Fail, e.what()});
    }
  };

  const PolytopeModel model = PolytopeModel::build(p);
  const auto n = static_cast<long>(model.dim());
  const std::int64_t mu_p = model.normalized_volume();

  std::optional<Series> oracle;
  std::optional<Series> toric;
  run("toric spectrum: generating series converges", [&] {
    oracle = toric_spectrum_oracle(model, opts);
    return pass(oracle->to_string());
  });
  run("toric spectrum: box formula = generating series", [&] {
    if (!model.distinguished_simplicial()) return skip("a face off the coordinate hyperplanes is not a simplex");
    Series box = toric_spectrum_box(model);
    toric = box;
    if (!oracle) return Outcome{CheckStatus::Fail, "generating series unavailable"};
    return verdict(box == *oracle, mismatch("box", box, "series", *oracle));
  });
  if (!toric && oracle) toric = oracle;
  if (!toric) return results;
  const Series& spec = *toric;

  run("toric spectrum: Koszul linear algebra = generating series", [&] {
    Series k = koszul_spectrum(p, model);
    std::string detail = mismatch("koszul", k, "toric", spec);
    if (!(k == spec)) detail += "; the input may be Newton degenerate";
    return verdict(k == spec, detail);
  });
  run("toric spectrum: total mass = normalized volume", [&] {
    return verdict(eval_at_one(spec) == mu_p,
                   "sum " + std::to_string(eval_at_one(spec)) + ", volume " + std::to_string(mu_p));
  });
  run("toric spectrum: nonnegative coefficients", [&] { return verdict(spec.has_nonnegative_coefficients(), spec.to_string()); });
  run("toric spectrum: exponent 0 has multiplicity 1", [&] {
    return verdict(spec.coefficient(Rat(0)) == 1, "multiplicity " + std::to_string(spec.coefficient(Rat(0))));
  });
  run("toric spectrum: exponents in [0, n) for simplicial fans", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    bool ok = spec.min_exponent() >= 0 && spec.max_exponent() < n;
    return verdict(ok, "max exponent " + spec.max_exponent().get_str());
  });
  run("toric spectrum: part below 1 = sum of z^nu(v) with nu(v) < 1", [&] {
    Series direct;
    model.for_each_point_up_to(Rat(1), [&](const ExpVec&, const Rat& nu) {
      if (nu < 1) direct.add_term(nu, 1);
    });
    Series lower = spec.below(Rat(1));
    return verdict(lower == direct, mismatch("spectrum below 1", lower, "lattice sum", direct));
  });
  run("toric spectrum: coefficient of z = boundary lattice points - n", [&] {
    auto boundary = boundary_lattice_points(model);
    return verdict(spec.coefficient(Rat(1)) == boundary - n,
                   "coefficient " + std::to_string(spec.coefficient(Rat(1))) + ", boundary points " +
                       std::to_string(boundary));
  });
  run("toric spectrum: integral shifts of interior box points", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    for (const auto& [v, nu] : box_of_polytope(model)) {
      if (in_coordinate_hyperplane(v)) continue;
      auto sigma = model.smallest_cone(v);
      int face_dim = sigma ? model.faces()[*sigma].dim : -1;
      for (long j = 0; j <= n - 1 - face_dim; ++j)
        if (spec.coefficient(nu + j) < 1)
          return Outcome{CheckStatus::Fail, "missing exponent " + Rat(nu + j).get_str()};
    }
    return pass();
  });

  run("Newton function: support values and vertices at level 1", [&] {
    for (const auto& [m, c] : p.terms) {
      bool zero = true;
      for (auto x : m) zero = zero && x == 0;
      if (zero) continue;
      Rat nu = model.newton_value(m);
      bool ok = model.mode() == Mode::Global ? nu <= 1 : nu >= 1;
      if (!ok) return Outcome{CheckStatus::Fail, "support point with value " + nu.get_str()};
    }
    for (const auto& v : model.vertices())
      if (model.newton_value(v) != 1) return Outcome{CheckStatus::Fail, "vertex off level 1"};
    return pass();
  });
  run("box points: coordinates sum to the Newton value", [&] {
    if (!model.distinguished_simplicial()) return skip("a face off the coordinate hyperplanes is not a simplex");
    for (auto fi : model.distinguished_faces())
      for (const auto& bp : model.box_points(fi))
        if (bp.nu != model.newton_value(bp.v)) return Outcome{CheckStatus::Fail, "box point value mismatch"};
    return pass();
  });
  run("box points: facet boxes hold normalized-volume many points", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    std::int64_t count = 0;
    for (std::size_t fi = 0; fi < model.faces().size(); ++fi)
      if (model.faces()[fi].dim == n - 1) count += static_cast<std::int64_t>(model.box_points(fi).size());
    return verdict(count == mu_p, std::to_string(count) + " points, volume " + std::to_string(mu_p));
  });

  std::optional<Series> infinity;
  run("spectrum at infinity: computed", [&] {
    infinity = spectrum_at_infinity(p, opts);
    return pass(infinity->to_string());
  });
  if (infinity) {
    run("spectrum at infinity: symmetric about n/2", [&] {
      Series r = reciprocal_reflect(*infinity, n);
      return verdict(r == *infinity, mismatch("reflected", r, "spectrum", *infinity));
    });
    run("spectrum at infinity: exponents positive, coefficients nonnegative", [&] {
      bool ok = infinity->has_nonnegative_coefficients() && (infinity->empty() || infinity->min_exponent() > 0);
      return verdict(ok, infinity->to_string());
    });
  }
  run("Milnor number: spectrum route = alternating volume route", [&] {
    auto r = milnor_routes(p, opts);
    return verdict(r.from_spectrum == r.from_volumes,
                   std::to_string(r.from_spectrum) + " vs " + std::to_string(r.from_volumes));
  });

  run("delta vector: spectrum buckets = lattice-count inversion", [&] {
    auto a = delta_from_spectrum(spec, model.dim());
    auto b = delta_from_counts(model);
    return verdict(a == b, "from spectrum " + a.to_string() + ", from counts " + b.to_string());
  });
  run("delta vector: delta_0 = 1 and sum = normalized volume", [&] {
    auto d = delta_from_counts(model);
    return verdict(d.entries[0] == 1 && d.sum() == mu_p, d.to_string());
  });
  run("Ehrhart polynomial: matches lattice count at level n+1", [&] {
    auto poly = ehrhart_polynomial(delta_from_counts(model));
    auto predicted = poly.evaluate(n + 1);
    auto counted = model.lattice_count(n + 1);
    return verdict(predicted == counted, std::to_string(predicted) + " vs " + std::to_string(counted));
  });

  run("Hodge-Deligne: z^n E_0(1/z) = E*_0", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    ExpVec zero(model.dim(), 0);
    Series full = hodge_deligne(model, zero, false);
    Series rel = hodge_deligne(model, zero, true);
    Series reflected = reciprocal_reflect(full, n);
    return verdict(reflected == rel, mismatch("z^n E_0(1/z)", reflected, "E*_0", rel));
  });
  run("Hodge-Deligne: E*_v nonnegative, E*_v(1) counts maximal cones", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    for (const auto& [v, nu] : box_of_polytope(model)) {
      Series e = hodge_deligne(model, v, true);
      if (!e.has_nonnegative_coefficients()) return Outcome{CheckStatus::Fail, "negative coefficient"};
      auto sigma = model.smallest_cone(v);
      std::int64_t maximal = 0;
      for (auto fi : model.distinguished_faces())
        if (model.faces()[fi].dim == n - 1 && (!sigma || model.face_contains(fi, *sigma))) ++maximal;
      if (eval_at_one(e) != maximal) return Outcome{CheckStatus::Fail, "E*_v(1) differs from the cone count"};
    }
    return pass();
  });
  run("orbifold dimensions = toric spectrum", [&] {
    if (!model.simplicial_fan()) return skip("fan not simplicial");
    Series orb = orbifold_dimensions(model);
    return verdict(orb == spec, mismatch("orbifold", orb, "toric", spec));
  });
  return results;
}

}  // namespace newtonspec
