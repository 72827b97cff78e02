#pragma once

// Integer polynomials in x0..xn: a small recursive-descent parser for the
// grammar  expr := term (('+'|'-') term)*,  term := factor ('*' factor)*,
// factor := '-' factor | atom ('^' digits)?,  atom := digits | x<k> | '(' expr ')'.

#include "deltabound/rational.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace deltabound {

/// Sparse polynomial: exponent vector (length nvars) -> coefficient.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial(a.nvars_) - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Polynomial pow(unsigned k) const {
    Polynomial out = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Total degrees of the monomials present.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      out.push_back(d);
    }
    return out;
  }
  bool is_homogeneous() const {
    const auto d = degrees();
    return d.empty() || std::all_of(d.begin(), d.end(), [&](int k) { return k == d.front(); });
  }
  int degree() const {
    const auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }
  int degree_in(std::size_t var) const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return best;
  }

  /// Coefficient of var^k as a polynomial in the remaining variables (var exponent zeroed).
  Polynomial coefficient_of(std::size_t var, int k) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(var) != k) continue;
      Exponents f(e);
      f[var] = 0;
      out.add_term(f, c);
    }
    return out;
  }

  Integer evaluate(const std::vector<Integer>& x) const {
    if (x.size() != nvars_) throw DomainError("evaluate: point has wrong number of coordinates");
    Integer total = 0;
    for (const auto& [e, c] : terms_) {
      Integer m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) m *= boost::multiprecision::pow(x[i], static_cast<unsigned>(e[i]));
      total += m;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest exponents first, the way forms are usually written.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c < 0;
      const Integer mag = neg ? Integer(-c) : c;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty())
        out += mag.str();
      else
        out += (mag == 1 ? std::string() : mag.str() + "*") + mono;
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars_ = 0;
  std::map<Exponents, Integer> terms_;
};

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 64;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }
  Polynomial factor() {
    if (accept('-')) return -factor();
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::string d = digits();
      if (d.empty()) fail("'^' must be followed by a nonnegative integer literal");
      if (d.size() > 3 || std::stoul(d) > kMaxExponent) fail("exponent " + d + " is too large");
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }
  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(nvars_, parse_integer(digits()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const bool numbered = name.size() >= 2 && name[0] == 'x' &&
                            std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(ch); });
      if (!numbered || name.size() > 8 || std::stoul(name.substr(1)) >= nvars_) {
        pos_ = start;
        fail("unknown variable '" + name + "' (expected x0..x" + std::to_string(nvars_ - 1) + ")");
      }
      return Polynomial::variable(nvars_, std::stoul(name.substr(1)));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an integer polynomial in x0..x(nvars-1). Errors carry line/column in text.
inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DomainError("parse_polynomial needs at least one variable");
  return detail::PolynomialParser(text, nvars).parse();
}

}  // namespace deltabound
