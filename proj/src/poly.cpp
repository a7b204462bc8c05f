#include "newtonspec/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "newtonspec/error.hpp"

namespace newtonspec {

const char* to_string(Mode mode) { return mode == Mode::Global ? "global" : "local"; }

namespace {

struct RawTerm {
  Rat coeff;
  std::map<std::string, std::int64_t> powers;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse_poly() {
    std::vector<RawTerm> out;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out.push_back(parse_term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      out.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return out;
  }

  RawTerm parse_term(int sign) {
    skip_ws();
    RawTerm term{Rat(sign), {}, pos_};
    bool have_coeff = false;
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(parse_digits());
      mpz_class den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        den = mpz_class(parse_digits());
        if (den == 0) fail("zero denominator");
      }
      Rat c(num, den);
      c.canonicalize();
      term.coeff *= c;
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    bool have_factor = false;
    for (;;) {
      skip_ws();
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        if (need_factor) fail("expected variable");
        break;
      }
      std::string name = parse_name();
      std::int64_t exp = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (peek() == '-') throw ParseError(ErrorKind::NegativeExponent, pos_, "negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::size_t at = pos_;
        std::string digits = parse_digits();
        if (digits.size() > 15) throw ParseError(ErrorKind::Syntax, at, "exponent too large");
        exp = std::stoll(digits);
      }
      term.powers[name] += exp;
      have_factor = true;
      need_factor = false;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
        continue;
      }
      break;
    }
    if (!have_coeff && !have_factor) fail("expected term");
    return term;
  }

  std::size_t pos() const { return pos_; }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input" : std::string("'") + text_[pos_] + "'";
    throw ParseError(ErrorKind::Syntax, pos_, what + ", found " + found);
  }
  std::string parse_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string parse_name() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_coeff_prefix(const Rat& c, bool first, bool is_constant) {
  std::string out;
  Rat mag = abs(c);
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (is_constant) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out;
}

}  // namespace

Poly parse_polynomial(std::string_view text, Mode mode, const std::optional<std::vector<std::string>>& var_order) {
  Parser parser(text);
  std::vector<RawTerm> raw = parser.parse_poly();

  Poly p;
  p.mode = mode;
  if (var_order) {
    p.vars = *var_order;
    std::vector<std::string> sorted = p.vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, "duplicate variable in variable order");
  }
  if (var_order) {
    for (const auto& t : raw)
      for (const auto& [name, e] : t.powers)
        if (std::find(p.vars.begin(), p.vars.end(), name) == p.vars.end())
          throw ParseError(ErrorKind::UnknownVariable, t.offset,
                           "variable '" + name + "' not in the variable order");
  } else {
    // RawTerm::powers is name-ordered, so recover first appearance from the text.
    // The text already parsed, hence every identifier token is a variable.
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string name(text.substr(start, i - start));
        if (std::find(p.vars.begin(), p.vars.end(), name) == p.vars.end()) p.vars.push_back(name);
      } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      } else {
        ++i;
      }
    }
  }
  if (p.vars.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial involves no variables");

  std::map<ExpVec, std::size_t> first_offset;
  for (const auto& t : raw) {
    ExpVec m(p.nvars(), 0);
    for (const auto& [name, e] : t.powers) {
      auto idx = std::find(p.vars.begin(), p.vars.end(), name) - p.vars.begin();
      m[idx] += e;
    }
    first_offset.try_emplace(m, t.offset);
    auto [it, inserted] = p.terms.try_emplace(m, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  for (auto it = p.terms.begin(); it != p.terms.end();) {
    if (it->second == 0)
      it = p.terms.erase(it);
    else
      ++it;
  }
  if (mode == Mode::Local) {
    ExpVec zero(p.nvars(), 0);
    if (p.terms.count(zero))
      throw ParseError(ErrorKind::ConstantTermInLocalMode, first_offset[zero],
                       "constant term not allowed in local mode");
  }
  return p;
}

ExpVec parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  Poly p = parse_polynomial(text, Mode::Global, vars);
  if (p.terms.size() != 1 || p.terms.begin()->second != 1)
    throw Error(ErrorKind::InvalidArgument, "'" + std::string(text) + "' is not a monomial");
  return p.terms.begin()->first;
}

std::string monomial_to_string(const ExpVec& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Poly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool is_constant = std::all_of(m.begin(), m.end(), [](std::int64_t e) { return e == 0; });
    out += render_coeff_prefix(c, first, is_constant);
    if (!is_constant) out += monomial_to_string(m, vars);
    first = false;
  }
  return out;
}

std::vector<std::int64_t> check_convenient(const Poly& p) {
  const std::size_t n = p.nvars();
  std::vector<std::int64_t> powers(n, 0);
  for (const auto& [m, c] : p.terms) {
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        ++nonzero;
        axis = i;
      }
    }
    if (nonzero != 1) continue;
    if (powers[axis] == 0 || m[axis] < powers[axis]) powers[axis] = m[axis];
  }
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < n; ++i)
    if (powers[i] == 0) missing.push_back(i + 1);
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "polynomial is not convenient: no pure power of";
    for (std::size_t k = 0; k < missing.size(); ++k)
      msg << (k ? ", " : " ") << p.vars[missing[k] - 1] << " (axis " << missing[k] << ")";
    throw NotConvenientError(std::move(missing), msg.str());
  }
  return powers;
}

Poly restrict_poly(const Poly& p, const std::set<std::size_t>& zero_set) {
  const std::size_t n = p.nvars();
  for (std::size_t i : zero_set)
    if (i >= n) throw Error(ErrorKind::InvalidArgument, "restriction index out of range");
  if (zero_set.size() >= n)
    throw Error(ErrorKind::InvalidArgument, "cannot restrict every variable to zero");

  Poly out;
  out.mode = p.mode;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (zero_set.count(i)) continue;
    keep.push_back(i);
    out.vars.push_back(p.vars[i]);
  }
  for (const auto& [m, c] : p.terms) {
    bool killed = false;
    for (std::size_t i : zero_set) killed = killed || m[i] != 0;
    if (killed) continue;
    ExpVec r;
    r.reserve(keep.size());
    for (std::size_t i : keep) r.push_back(m[i]);
    out.terms.emplace(std::move(r), c);
  }
  return out;
}

}  // namespace newtonspec
