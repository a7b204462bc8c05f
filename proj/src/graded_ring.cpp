#include "newtonspec/graded_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "newtonspec/error.hpp"

namespace newtonspec {

namespace {

std::int64_t total_degree(const ExpVec& m) { return std::accumulate(m.begin(), m.end(), std::int64_t{0}); }

// Ascending by total degree, then lexicographic.
bool monomial_less(const ExpVec& a, const ExpVec& b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

ExpVec add(const ExpVec& a, const ExpVec& b) {
  ExpVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

using Buckets = std::map<Rat, std::vector<ExpVec>>;

Buckets monomials_by_degree(const PolytopeModel& m, const Rat& top) {
  Buckets buckets;
  m.for_each_point_up_to(top, [&](const ExpVec& v, const Rat& nu) { buckets[nu].push_back(v); });
  for (auto& [d, list] : buckets) std::sort(list.begin(), list.end(), monomial_less);
  return buckets;
}

// Builds one graded piece. `preferred_basis` monomials are placed in the
// rightmost columns so that pivots land elsewhere whenever possible; without
// a preference, columns run in descending monomial order, which makes the
// free columns the greedy ascending basis.
DegreePiece build_piece(const PolytopeModel& model, const Rat& degree, const Buckets& buckets,
                        const std::vector<GradedClass>& leading, const std::vector<ExpVec>* preferred_basis) {
  DegreePiece piece;
  piece.degree = degree;
  const auto& mons = buckets.at(degree);
  std::vector<ExpVec> order(mons.rbegin(), mons.rend());
  if (preferred_basis) {
    std::stable_partition(order.begin(), order.end(), [&](const ExpVec& x) {
      return std::find(preferred_basis->begin(), preferred_basis->end(), x) == preferred_basis->end();
    });
  }
  piece.columns = order;
  std::map<ExpVec, std::size_t> column_of;
  for (std::size_t c = 0; c < order.size(); ++c) column_of[order[c]] = c;
  piece.relations = linalg::SparseEchelon(order.size());

  auto lower = buckets.find(degree - 1);
  if (lower != buckets.end()) {
    for (const auto& f : leading) {
      for (const auto& m : lower->second) {
        linalg::SparseEchelon::Row row;
        for (const auto& [k, c] : f.terms) {
          if (!model.same_cone(k, m)) continue;
          auto it = column_of.find(add(k, m));
          if (it == column_of.end())
            throw Error(ErrorKind::ReductionFailure, "relation lands outside its degree");
          row[it->second] += c;
        }
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
        if (!row.empty()) piece.relations.insert(std::move(row));
      }
    }
  }
  for (auto c : piece.relations.free_columns()) piece.basis.push_back(order[c]);
  std::sort(piece.basis.begin(), piece.basis.end(), monomial_less);
  return piece;
}

std::string render_class_terms(const std::vector<std::pair<ExpVec, Rat>>& terms, const std::vector<std::string>& vars) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = monomial_to_string(m, vars);
    if (mag == 1)
      out += mono;
    else if (mono == "1")
      out += mag.get_str();
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace

std::string GradedClass::to_string(const std::vector<std::string>& vars) const {
  std::vector<std::pair<ExpVec, Rat>> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return render_class_terms(sorted, vars);
}

GradedClass b_product(const PolytopeModel& m, const ExpVec& m1, const ExpVec& m2) {
  GradedClass out;
  out.degree = m.newton_value(m1) + m.newton_value(m2);
  if (m.same_cone(m1, m2)) out.terms.emplace(add(m1, m2), Rat(1));
  return out;
}

std::vector<GradedClass> leading_classes(const Poly& p, const PolytopeModel& m) {
  std::vector<GradedClass> out(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    out[i].degree = 1;
    for (const auto& [e, c] : p.terms) {
      if (e[i] == 0 || m.newton_value(e) != 1) continue;
      out[i].terms.emplace(e, c * e[i]);
    }
  }
  return out;
}

Series GradedBasis::hilbert_series() const {
  Series s;
  for (const auto& [d, piece] : pieces_) s.add_term(d, static_cast<Series::Coefficient>(piece.quotient_dim()));
  return s;
}

GradedClass GradedBasis::reduce(const GradedClass& c) const {
  GradedClass out;
  out.degree = c.degree;
  if (c.is_zero() || c.degree > top_degree_) return out;
  auto it = pieces_.find(c.degree);
  if (it == pieces_.end()) throw Error(ErrorKind::ReductionFailure, "no graded piece for degree " + c.degree.get_str());
  const DegreePiece& piece = it->second;
  linalg::SparseEchelon::Row row;
  for (const auto& [m, coeff] : c.terms) {
    auto col = std::find(piece.columns.begin(), piece.columns.end(), m);
    if (col == piece.columns.end())
      throw Error(ErrorKind::ReductionFailure, "monomial outside its graded piece");
    row[static_cast<std::size_t>(col - piece.columns.begin())] += coeff;
  }
  for (const auto& [col, coeff] : piece.relations.reduce(std::move(row))) {
    if (coeff == 0) continue;
    const ExpVec& mono = piece.columns[col];
    if (std::find(piece.basis.begin(), piece.basis.end(), mono) == piece.basis.end())
      throw Error(ErrorKind::ReductionFailure, "residual outside the basis");
    out.terms.emplace(mono, coeff);
  }
  return out;
}

Series koszul_spectrum(const Poly& p, const PolytopeModel& m, const std::optional<Rat>& max_degree) {
  const Rat top = max_degree.value_or(Rat(static_cast<long>(m.dim())));
  auto buckets = monomials_by_degree(m, top);
  auto leading = leading_classes(p, m);
  Series s;
  for (const auto& [d, mons] : buckets) {
    DegreePiece piece = build_piece(m, d, buckets, leading, nullptr);
    s.add_term(d, static_cast<Series::Coefficient>(piece.quotient_dim()));
  }
  return s;
}

GradedBasis quotient_basis(const Poly& p, const PolytopeModel& m, const Series& spectrum,
                           const std::optional<std::vector<ExpVec>>& hint) {
  if (spectrum.empty()) throw Error(ErrorKind::DimensionMismatch, "empty toric spectrum");
  GradedBasis gb;
  gb.model_ = std::make_shared<const PolytopeModel>(m);
  gb.vars_ = p.vars;
  gb.top_degree_ = spectrum.max_exponent();

  auto buckets = monomials_by_degree(m, gb.top_degree_);
  auto leading = leading_classes(p, m);

  for (const auto& [exp, coeff] : spectrum.terms())
    if (!buckets.count(exp))
      throw Error(ErrorKind::DimensionMismatch, "spectrum exponent " + exp.get_str() + " is not a Newton value");

  if (hint) {
    std::set<ExpVec> unique(hint->begin(), hint->end());
    if (unique.size() != hint->size()) throw Error(ErrorKind::HintNotABasis, "basis hint repeats a monomial");
    for (const auto& x : *hint) {
      if (x.size() != m.dim()) throw Error(ErrorKind::HintNotABasis, "basis hint monomial has wrong length");
      if (m.newton_value(x) > gb.top_degree_)
        throw Error(ErrorKind::HintNotABasis,
                    "basis hint monomial " + monomial_to_string(x, p.vars) + " lies above the top degree");
    }
  }

  for (const auto& [d, mons] : buckets) {
    DegreePiece piece = build_piece(m, d, buckets, leading, hint ? &*hint : nullptr);
    const auto expected = spectrum.coefficient(d);
    if (static_cast<Series::Coefficient>(piece.quotient_dim()) != expected) {
      std::ostringstream msg;
      msg << "graded quotient has dimension " << piece.quotient_dim() << " in degree " << d.get_str()
          << " but the toric spectrum has coefficient " << expected;
      throw Error(ErrorKind::DimensionMismatch, msg.str());
    }
    if (hint) {
      std::size_t in_hint = 0;
      for (const auto& x : mons)
        if (std::find(hint->begin(), hint->end(), x) != hint->end()) ++in_hint;
      bool spans = in_hint == piece.quotient_dim();
      for (auto c : piece.relations.pivot_columns())
        spans = spans && std::find(hint->begin(), hint->end(), piece.columns[c]) == hint->end();
      if (!spans)
        throw Error(ErrorKind::HintNotABasis, "basis hint does not span the quotient in degree " + d.get_str());
    }
    gb.pieces_.emplace(d, std::move(piece));
  }

  if (hint) {
    gb.basis_ = *hint;
  } else {
    for (const auto& [d, piece] : gb.pieces_) gb.basis_.insert(gb.basis_.end(), piece.basis.begin(), piece.basis.end());
  }
  return gb;
}

ProductTable product_table(const GradedBasis& basis) {
  ProductTable t;
  t.basis = basis.basis();
  const std::size_t k = t.basis.size();
  t.entries.assign(k, std::vector<GradedClass>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      t.entries[i][j] = basis.reduce(b_product(basis.model(), t.basis[i], t.basis[j]));
  return t;
}

std::string ProductTable::to_text(const std::vector<std::string>& vars) const {
  const std::size_t k = basis.size();
  std::vector<std::vector<std::string>> cells(k + 1, std::vector<std::string>(k + 1));
  cells[0][0] = "*";
  for (std::size_t i = 0; i < k; ++i) {
    cells[0][i + 1] = monomial_to_string(basis[i], vars);
    cells[i + 1][0] = cells[0][i + 1];
    for (std::size_t j = 0; j < k; ++j) cells[i + 1][j + 1] = entries[i][j].to_string(vars);
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= k; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (std::size_t r = 0; r <= k; ++r) {
    for (std::size_t c = 0; c <= k; ++c) {
      out << (c == 0 ? "| " : " | ") << cells[r][c] << std::string(width[c] - cells[r][c].size(), ' ');
    }
    out << " |\n";
  }
  return out.str();
}

nlohmann::json ProductTable::to_json(const std::vector<std::string>& vars) const {
  nlohmann::json j;
  auto labels = nlohmann::json::array();
  for (const auto& b : basis) labels.push_back(monomial_to_string(b, vars));
  j["basis"] = labels;
  auto rows = nlohmann::json::array();
  for (const auto& row : entries) {
    auto r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_string(vars));
    rows.push_back(r);
  }
  j["entries"] = rows;
  return j;
}

}  // namespace newtonspec
