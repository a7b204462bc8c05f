#pragma once

// The graded ring B = gr of C[u] under the Newton filtration, its quotient by
// the ideal generated by the leading classes of u_i df/du_i, and the induced
// product on a chosen monomial basis of that quotient.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "newtonspec/linalg.hpp"
#include "newtonspec/numerics.hpp"
#include "newtonspec/poly.hpp"
#include "newtonspec/polytope.hpp"

namespace newtonspec {

/// Homogeneous element sum c_m delta_m of B; every m has Newton value `degree`.
struct GradedClass {
  Rat degree;
  std::map<ExpVec, Rat> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  std::string to_string(const std::vector<std::string>& vars) const;

  friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

/// delta_{m1} . delta_{m2}: delta_{m1+m2} when m1, m2 share a cone, else 0.
GradedClass b_product(const PolytopeModel& m, const ExpVec& m1, const ExpVec& m2);

/// F_i = class of u_i df/du_i in degree 1: only terms with Newton value 1 survive.
std::vector<GradedClass> leading_classes(const Poly& p, const PolytopeModel& m);

/// One graded piece of B/F: the monomials of a degree, the relation space
/// F_1 B_{d-1} + ... + F_n B_{d-1} in echelon form, and the chosen basis.
struct DegreePiece {
  Rat degree;
  std::vector<ExpVec> columns;  // monomial of each echelon column
  linalg::SparseEchelon relations;
  std::vector<ExpVec> basis;    // ascending by (total degree, lex)

  std::size_t quotient_dim() const noexcept { return columns.size() - relations.rank(); }
};

class GradedBasis {
 public:
  const std::map<Rat, DegreePiece>& pieces() const noexcept { return pieces_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }

  /// Basis monomials: the hint order when one was given, else by degree.
  const std::vector<ExpVec>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }

  /// Per-degree quotient dimensions as a series.
  Series hilbert_series() const;

  /// Expresses a homogeneous class in the basis modulo relations. Degrees
  /// above the top computed degree reduce to zero.
  GradedClass reduce(const GradedClass& c) const;

  const PolytopeModel& model() const noexcept { return *model_; }

 private:
  friend GradedBasis quotient_basis(const Poly&, const PolytopeModel&, const Series&,
                                    const std::optional<std::vector<ExpVec>>&);

  std::shared_ptr<const PolytopeModel> model_;
  std::vector<std::string> vars_;
  std::map<Rat, DegreePiece> pieces_;
  std::vector<ExpVec> basis_;
  Rat top_degree_;
};

/// Hilbert series of B/F from per-degree linear algebra, for every Newton
/// value up to max_degree (default n). Independent of both other spectrum routes.
Series koszul_spectrum(const Poly& p, const PolytopeModel& m, const std::optional<Rat>& max_degree = std::nullopt);

/// Builds the quotient up to the top exponent of `spectrum` and checks each
/// degree's dimension against it (DimensionMismatch otherwise). With a hint,
/// validates that those monomials span a complement of the relations
/// (HintNotABasis otherwise).
GradedBasis quotient_basis(const Poly& p, const PolytopeModel& m, const Series& spectrum,
                           const std::optional<std::vector<ExpVec>>& hint = std::nullopt);

struct ProductTable {
  std::vector<ExpVec> basis;
  std::vector<std::vector<GradedClass>> entries;  // entries[i][j] = basis[i] . basis[j]

  std::string to_text(const std::vector<std::string>& vars) const;
  nlohmann::json to_json(const std::vector<std::string>& vars) const;
};

ProductTable product_table(const GradedBasis& basis);

}  // namespace newtonspec
