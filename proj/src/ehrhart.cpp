#include "newtonspec/ehrhart.hpp"

#include <numeric>
#include <sstream>

#include "newtonspec/error.hpp"

namespace newtonspec {

std::int64_t DeltaVector::sum() const { return std::accumulate(entries.begin(), entries.end(), std::int64_t{0}); }

Series DeltaVector::as_series() const {
  Series s;
  for (std::size_t k = 0; k < entries.size(); ++k) s.add_term(Rat(static_cast<long>(k)), entries[k]);
  return s;
}

DeltaVector delta_from_spectrum(const Series& spectrum, std::size_t n) {
  DeltaVector d;
  d.entries.assign(n + 1, 0);
  for (const auto& [e, c] : spectrum.terms()) {
    if (e < 0 || e > static_cast<long>(n))
      throw Error(ErrorKind::ExponentOutOfRange, "delta vector: spectrum exponent " + e.get_str() + " outside [0, n]");
    // bucket ]k-1, k] is k = ceil(e)
    mpz_class k;
    mpz_cdiv_q(k.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
    d.entries[k.get_ui()] += c;
  }
  return d;
}

DeltaVector delta_from_counts(const PolytopeModel& m) {
  const auto n = static_cast<std::int64_t>(m.dim());
  std::vector<std::int64_t> counts;
  for (std::int64_t level = 0; level <= n; ++level) counts.push_back(m.lattice_count(level));
  DeltaVector d;
  for (std::int64_t k = 0; k <= n; ++k) {
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j <= k; ++j) acc += (j % 2 == 0 ? 1 : -1) * binomial(n + 1, j) * counts[k - j];
    if (acc < 0)
      throw Error(ErrorKind::NegativeDelta, "delta vector from lattice counts has negative entry " +
                                                std::to_string(acc) + " at index " + std::to_string(k));
    d.entries.push_back(acc);
  }
  return d;
}

EhrhartPolynomial ehrhart_polynomial(const DeltaVector& d) { return {d.dim(), d.entries}; }

std::int64_t EhrhartPolynomial::evaluate(std::int64_t z) const {
  std::int64_t total = 0;
  const auto dim = static_cast<std::int64_t>(n);
  for (std::size_t k = 0; k < delta.size(); ++k)
    total += delta[k] * binomial(z + dim - static_cast<std::int64_t>(k), dim);
  return total;
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (delta[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (delta[k] != 1) out << delta[k] << ' ';
    std::size_t shift = n - k;
    out << "C(z";
    if (shift != 0) out << '+' << shift;
    out << ',' << n << ')';
  }
  return first ? "0" : out.str();
}

nlohmann::json EhrhartPolynomial::to_json() const {
  auto terms = nlohmann::json::array();
  for (std::size_t k = 0; k < delta.size(); ++k)
    terms.push_back({{"coefficient", delta[k]}, {"binomial", {{"shift", n - k}, {"k", n}}}});
  return {{"dimension", n}, {"terms", terms}, {"text", to_string()}};
}

Series hodge_deligne(const PolytopeModel& m, const ExpVec& v, bool relative) {
  const auto n = static_cast<int>(m.dim());
  auto sigma = m.smallest_cone(v);
  Series e;
  for (std::size_t fi = 0; fi < m.faces().size(); ++fi) {
    const Face& face = m.faces()[fi];
    if (relative && !face.distinguished()) continue;
    if (sigma && !m.face_contains(fi, *sigma)) continue;
    // the cone over a face of dimension d has dimension d + 1
    e += z_minus_one_pow(static_cast<unsigned>(n - 1 - face.dim));
  }
  if (!relative && !sigma) e += z_minus_one_pow(static_cast<unsigned>(n));
  return e;
}

std::map<ExpVec, Rat> box_of_polytope(const PolytopeModel& m) {
  std::map<ExpVec, Rat> points;
  for (auto fi : m.distinguished_faces())
    for (const auto& bp : m.box_points(fi)) points.emplace(bp.v, bp.nu);
  return points;
}

Series orbifold_dimensions(const PolytopeModel& m) {
  if (!m.simplicial_fan()) throw Error(ErrorKind::NotSimplicial, "orbifold dimensions need a simplicial fan");
  Series total;
  for (const auto& [v, nu] : box_of_polytope(m)) total += hodge_deligne(m, v, true).shifted(nu);
  return total;
}

}  // namespace newtonspec
