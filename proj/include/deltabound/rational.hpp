#pragma once

// Exact arithmetic primitives shared by every module: big integers, rationals,
// extended values (+infinity), closed rational intervals and the error types.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deltabound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A violated precondition. The message names the precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource cap was hit (never a silent truncation).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

namespace detail {

inline bool parse_integer_text(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i >= text.size()) return false;
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? Integer(-value) : value;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p", "p/q" (q != 0) with optional sign on p.
inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  const auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer_text(text, num))
      throw DomainError("not a rational: '" + std::string(text) + "'");
  } else {
    if (!detail::parse_integer_text(detail::trim(text.substr(0, slash)), num) ||
        !detail::parse_integer_text(detail::trim(text.substr(slash + 1)), den))
      throw DomainError("not a rational: '" + std::string(text) + "'");
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

inline Integer parse_integer(std::string_view text) {
  Integer z;
  if (!detail::parse_integer_text(detail::trim(text), z))
    throw DomainError("not an integer: '" + std::string(text) + "'");
  return z;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  // Newton from a safe overestimate.
  std::uint64_t x = static_cast<std::uint64_t>(1) << ((64 - __builtin_clzll(n)) / 2 + 1);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  while (static_cast<unsigned __int128>(x) * x > n) --x;
  while (static_cast<unsigned __int128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline bool is_perfect_square_u64(std::uint64_t n) {
  // Squares mod 16 are 0, 1, 4, 9.
  constexpr std::uint32_t kMask16 = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 9);
  if (((kMask16 >> (n & 15u)) & 1u) == 0) return false;
  const std::uint64_t r = isqrt_u64(n);
  return r * r == n;
}

/// A rational or +infinity (the Fujita invariant of a non-big class).
class Extended {
 public:
  static Extended infinity() { return Extended(); }
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw DomainError("value requested from an infinite quantity");
    return *value_;
  }
  std::string str() const { return value_ ? to_string(*value_) : std::string("+inf"); }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }

 private:
  Extended() = default;
  std::optional<Rational> value_;
};

/// Closed interval [lo, hi] with lo <= hi; a degenerate interval is an exact value.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational& q) { return {q, q}; }
  static RationalInterval make(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("interval with lo > hi");
    return {lo, hi};
  }
  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  RationalInterval scaled(const Rational& c) const {
    if (c < 0) return make(hi * c, lo * c);
    return make(lo * c, hi * c);
  }
  std::string str() const {
    if (is_exact()) return to_string(lo);
    return "[" + to_string(lo) + ", " + to_string(hi) + "]";
  }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Smallest-denominator rational in the closed interval [lo, hi] (lo <= hi),
/// via the Stern-Brocot descent. Used by oracles and for canonical output.
inline Rational simplest_rational_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  // Continued-fraction walk on [lo, hi] with lo > 0.
  std::vector<Integer> terms;
  Rational a = lo, b = hi;
  while (true) {
    const Integer fa = numerator_of(a) / denominator_of(a);
    const Integer fb = numerator_of(b) / denominator_of(b);
    if (Rational(fa) == a) {
      terms.push_back(fa);
      break;
    }
    if (fa < fb) {
      terms.push_back(fa + 1);
      break;
    }
    terms.push_back(fa);
    // Here floor(a) == floor(b) and a is not an integer, so b - fb > 0.
    const Rational ra = a - Rational(fa);
    const Rational rb = b - Rational(fb);
    a = 1 / rb;
    b = 1 / ra;
  }
  Rational value = Rational(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) value = Rational(terms[i]) + 1 / value;
  return value;
}

}  // namespace deltabound
