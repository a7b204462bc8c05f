#include "newtonspec/numerics.hpp"

#include <cassert>
#include <sstream>

#include "newtonspec/error.hpp"

namespace newtonspec {

Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  Rat r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

Series Series::constant(Coefficient c) { return monomial(Rat(0), c); }

Series Series::monomial(const Rat& exponent, Coefficient c) {
  Series s;
  s.add_term(exponent, c);
  return s;
}

void Series::add_term(const Rat& exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series::Coefficient Series::coefficient(const Rat& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

const Rat& Series::max_exponent() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Rat& Series::min_exponent() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

bool Series::has_nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Series Series::shifted(const Rat& shift) const {
  Series out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

Series Series::truncated(const Rat& lo, const Rat& hi) const {
  Series out;
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  return out;
}

Series Series::below(const Rat& bound) const {
  Series out;
  for (auto it = terms_.begin(); it != terms_.end() && it->first < bound; ++it)
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  return out;
}

Series& Series::operator+=(const Series& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Series& Series::operator*=(Coefficient scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  Series out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

namespace {

std::string render_power(const Rat& e) {
  if (e == 0) return "";
  if (e == 1) return "z";
  if (e.get_den() == 1) return "z^" + e.get_num().get_str();
  return "z^{" + e.get_str() + "}";
}

}  // namespace

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coefficient magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string power = render_power(e);
    if (power.empty()) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << ' ';
      out << power;
    }
  }
  return out.str();
}

nlohmann::json Series::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({{"exponent", e.get_str()}, {"coefficient", c}});
  return arr;
}

Series Series::from_json(const nlohmann::json& j) {
  Series s;
  for (const auto& term : j)
    s.add_term(parse_rat(term.at("exponent").get<std::string>()), term.at("coefficient").get<Coefficient>());
  return s;
}

Series series_add(const Series& a, const Series& b) { return a + b; }

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Series mul_one_minus_z_pow(const Series& s, unsigned k) {
  Series out;
  for (unsigned j = 0; j <= k; ++j) {
    std::int64_t sign = (j % 2 == 0) ? 1 : -1;
    Series part = s.shifted(Rat(j));
    part *= sign * binomial(k, j);
    out += part;
  }
  return out;
}

Series z_minus_one_pow(unsigned k) {
  // (z - 1)^k = (-1)^k (1 - z)^k
  Series s = mul_one_minus_z_pow(Series::constant(1), k);
  if (k % 2 == 1) s *= -1;
  return s;
}

std::int64_t eval_at_one(const Series& s) {
  std::int64_t total = 0;
  for (const auto& [e, c] : s.terms()) total += c;
  return total;
}

Series reciprocal_reflect(const Series& s, long n) {
  Series out;
  Rat top(n);
  for (const auto& [e, c] : s.terms()) out.add_term(top - e, c);
  return out;
}

}  // namespace newtonspec
