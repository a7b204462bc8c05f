#pragma once

// Exact rationals and finitely supported series in z with rational exponents.

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include <json.hpp>

namespace newtonspec {

/// Exact rational. GMP keeps every value canonical (reduced, positive denominator).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rat& r);

/// Parses "p" or "p/q"; throws Error(InvalidArgument) on malformed text or q = 0.
Rat parse_rat(const std::string& text);

/// A generalized polynomial sum c_a z^a with a in Q and integer c.
///
/// Zero coefficients are never stored, and iteration is by ascending exponent,
/// so two equal series always serialize identically.
class Series {
 public:
  using Coefficient = std::int64_t;
  using TermMap = std::map<Rat, Coefficient>;

  Series() = default;

  static Series constant(Coefficient c);
  static Series monomial(const Rat& exponent, Coefficient c = 1);

  void add_term(const Rat& exponent, Coefficient c);

  Coefficient coefficient(const Rat& exponent) const;
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest exponent; the series must be nonempty.
  const Rat& max_exponent() const;
  const Rat& min_exponent() const;

  bool has_nonnegative_coefficients() const;

  /// Multiplies every exponent by z^shift.
  Series shifted(const Rat& shift) const;

  /// Terms with exponent in [lo, hi] (inclusive bounds).
  Series truncated(const Rat& lo, const Rat& hi) const;
  /// Terms with exponent strictly below bound.
  Series below(const Rat& bound) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(Coefficient scalar);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, Coefficient s) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

  /// Human-readable form: "1 + 3 z^{1/2} + 3 z + z^{3/2}"; "0" when empty.
  std::string to_string() const;

  /// [{"exponent": "p/q", "coefficient": c}, ...] ascending.
  nlohmann::json to_json() const;
  static Series from_json(const nlohmann::json& j);

 private:
  TermMap terms_;
};

Series series_add(const Series& a, const Series& b);

/// s * (1 - z)^k expanded with binomial coefficients.
Series mul_one_minus_z_pow(const Series& s, unsigned k);

/// (z - 1)^k.
Series z_minus_one_pow(unsigned k);

/// Sum of coefficients.
std::int64_t eval_at_one(const Series& s);

/// z^n s(1/z): every exponent a becomes n - a.
Series reciprocal_reflect(const Series& s, long n);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace newtonspec
