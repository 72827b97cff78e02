#pragma once

// Pell equations and the s-invariant / counting exponents of Picard-rank-one
// K3 surfaces (degree 2d) and unnodal Enriques surfaces.

#include "deltabound/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deltabound {

struct PellSolution {
  Integer x;
  Integer y;
  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Simple continued fraction of sqrt(D): [a0; period...], plus the convergent
/// (p, q) at the end of the first period and p^2 - D q^2 (which is +-1).
struct SqrtContinuedFraction {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> period;
  Integer p_end;
  Integer q_end;
  Integer norm_end;
};

namespace detail {

// One step of the sqrt(D) expansion: m' = d a - m, d' = (D - m'^2) / d, a' = (a0 + m') / d'.
struct SqrtCfState {
  std::int64_t m = 0;
  std::int64_t d = 1;
  std::int64_t a = 0;
};

inline void require_nonsquare(std::int64_t D, const char* what) {
  if (D < 2) throw DomainError(std::string(what) + " requires D >= 2, got " + std::to_string(D));
  if (is_perfect_square_u64(static_cast<std::uint64_t>(D)))
    throw DomainError(std::string(what) + " requires a nonsquare D, got " + std::to_string(D));
  if (D > (std::int64_t{1} << 61)) throw DomainError(std::string(what) + ": D too large");
}

}  // namespace detail

inline SqrtContinuedFraction sqrt_continued_fraction(std::int64_t D) {
  detail::require_nonsquare(D, "sqrt_continued_fraction");
  SqrtContinuedFraction cf;
  cf.a0 = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(D)));
  detail::SqrtCfState s{0, 1, cf.a0};
  Integer p_prev = 1, p = cf.a0;
  Integer q_prev = 0, q = 1;
  while (true) {
    s.m = s.d * s.a - s.m;
    s.d = (D - s.m * s.m) / s.d;
    s.a = (cf.a0 + s.m) / s.d;
    cf.period.push_back(s.a);
    if (s.a == 2 * cf.a0) break;
    Integer p_next = s.a * p + p_prev;
    Integer q_next = s.a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  cf.p_end = p;
  cf.q_end = q;
  cf.norm_end = p * p - Integer(D) * q * q;
  return cf;
}

/// Minimal positive solution of x^2 - D y^2 = 1 (D >= 2 nonsquare).
inline PellSolution pell_fundamental(std::int64_t D) {
  const auto cf = sqrt_continued_fraction(D);
  if (cf.norm_end == 1) return {cf.p_end, cf.q_end};
  if (cf.norm_end != -1) throw std::logic_error("continued fraction period end has norm other than +-1");
  // Odd period: square the negative-norm unit.
  return {cf.p_end * cf.p_end + Integer(D) * cf.q_end * cf.q_end, 2 * cf.p_end * cf.q_end};
}

struct GeneralPellOptions {
  /// Brute-force cross-check horizon over even y.
  std::int64_t fallback_y_bound = 1'000'000;
};

namespace detail {

inline bool better(const std::optional<PellSolution>& best, const Integer& x) { return !best || x < best->x; }

// Candidates with even y > 0 in the orbits of the representatives under the unit (u, v).
// The parity of y repeats after two unit steps, so three steps per direction suffice.
inline void scan_orbits(const std::vector<PellSolution>& reps, const PellSolution& unit, const Integer& D,
                        std::optional<PellSolution>& best) {
  for (const auto& rep : reps) {
    Integer x = rep.x, y = rep.y;
    for (int k = 0; k < 4; ++k) {
      if (x > 0 && y > 0 && (y & 1) == 0 && better(best, x)) best = PellSolution{x, y};
      Integer nx = x * unit.x + D * y * unit.y;
      Integer ny = x * unit.y + y * unit.x;
      x = std::move(nx);
      y = std::move(ny);
    }
  }
}

// Lagrange: when 0 < N < sqrt(D) every primitive positive solution of
// x^2 - D y^2 = N has x / y a convergent of sqrt(D). Norms follow from
// p_j^2 - D q_j^2 = (-1)^(j+1) Q_(j+1), so only hits need big integers.
inline std::optional<PellSolution> convergent_search(std::int64_t D, std::int64_t N) {
  const std::int64_t a0 = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(D)));
  // Period length of the expansion decides how far the unit shift reaches.
  std::size_t period = 0;
  {
    SqrtCfState s{0, 1, a0};
    do {
      s.m = s.d * s.a - s.m;
      s.d = (D - s.m * s.m) / s.d;
      s.a = (a0 + s.m) / s.d;
      ++period;
    } while (s.a != 2 * a0);
  }
  const std::size_t unit_shift = period % 2 == 0 ? period : 2 * period;
  const std::size_t horizon = 3 * unit_shift;

  SqrtCfState s{0, 1, a0};
  Integer p_prev = 1, p = a0, q_prev = 0, q = 1;
  for (std::size_t j = 0; j <= horizon; ++j) {
    // Here (p, q) is convergent j and s holds a_j; compute Q_(j+1).
    SqrtCfState next = s;
    next.m = next.d * next.a - next.m;
    next.d = (D - next.m * next.m) / next.d;
    next.a = (a0 + next.m) / next.d;
    const std::int64_t norm = (j % 2 == 0) ? -next.d : next.d;
    if (norm == N && (q & 1) == 0 && q > 0) {
      if (p * p - Integer(D) * q * q != N) throw std::logic_error("convergent norm identity failed");
      return PellSolution{p, q};
    }
    Integer p_next = next.a * p + p_prev;
    Integer q_next = next.a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
    s = next;
  }
  return std::nullopt;
}

}  // namespace detail

/// Solution of x^2 - 4 d y^2 = 5 with minimal x > 0 among those with y > 0 even.
inline std::optional<PellSolution> pell_general_min_even(std::int64_t d, const GeneralPellOptions& opts = {}) {
  if (d < 1) throw DomainError("pell_general_min_even requires d >= 1");
  if (d > (std::int64_t{1} << 58)) throw DomainError("pell_general_min_even: d too large");
  const std::int64_t D = 4 * d;
  std::optional<PellSolution> best;

  if (is_perfect_square_u64(static_cast<std::uint64_t>(d))) {
    // (x - k y)(x + k y) = 5 with k = 2 sqrt(d): only 1 * 5 has x > 0.
    const std::int64_t k = 2 * static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(d)));
    const std::int64_t f = 1, g = 5;
    const std::int64_t x = (f + g) / 2, ky = (g - f) / 2;
    if (ky % k == 0) {
      const std::int64_t y = ky / k;
      if (y > 0 && y % 2 == 0) best = PellSolution{x, y};
    }
  } else if (D > 25) {
    best = detail::convergent_search(D, 5);
  } else {
    // Small D: class representatives satisfy 0 < x <= sqrt(5 (u + 1) / 2).
    const PellSolution unit = pell_fundamental(D);
    const Integer x_max = isqrt(5 * (unit.x + 1) / 2);
    std::vector<PellSolution> reps;
    for (Integer x = 1; x <= x_max; ++x) {
      const Integer t = x * x - 5;
      if (t <= 0 || t % D != 0) continue;
      const Integer y2 = t / D;
      if (!is_perfect_square(y2)) continue;
      const Integer y = isqrt(y2);
      reps.push_back({x, y});
      reps.push_back({x, -y});
    }
    detail::scan_orbits(reps, unit, Integer(D), best);
  }

  // Brute-force cross-check over even y up to the fallback horizon.
  const unsigned __int128 dd = static_cast<unsigned __int128>(D);
  for (std::int64_t y = 2; y <= opts.fallback_y_bound; y += 2) {
    const unsigned __int128 v = 5 + dd * static_cast<unsigned __int128>(y) * static_cast<unsigned __int128>(y);
    constexpr std::uint32_t kMask16 = (1u << 0) | (1u << 1) | (1u << 4) | (1u << 9);
    if (((kMask16 >> static_cast<unsigned>(v & 15u)) & 1u) == 0) continue;
    Integer vv = static_cast<std::uint64_t>(v >> 64);
    vv = (vv << 64) + static_cast<std::uint64_t>(v);
    if (!is_perfect_square(vv)) continue;
    const Integer x = isqrt(vv);
    if (detail::better(best, x)) throw std::logic_error("fallback search found a solution the class search missed");
    break;
  }
  return best;
}

/// c / sqrt(radicand); radicand 1 means the rational c.
struct SValue {
  Rational coefficient;
  Integer radicand = 1;

  Rational squared() const { return coefficient * coefficient / Rational(radicand); }
  std::optional<Rational> as_rational() const {
    if (!is_perfect_square(radicand)) return std::nullopt;
    return coefficient / Rational(isqrt(radicand));
  }
  std::string str() const {
    if (auto q = as_rational()) return to_string(*q);
    return to_string(coefficient) + "/sqrt(" + radicand.str() + ")";
  }
  /// Symbolic form, e.g. "1/sqrt(4)" for the inverse-square-root branch.
  std::string symbolic() const {
    if (radicand == 1) return to_string(coefficient);
    return to_string(coefficient) + "/sqrt(" + radicand.str() + ")";
  }
  SValue scaled(const Rational& c) const { return {coefficient * c, radicand}; }
};

enum class SBranch { kEvenYSolution, kSquareD, kPellUnit };

inline std::string to_string(SBranch b) {
  switch (b) {
    case SBranch::kEvenYSolution: return "EVEN_Y_SOLUTION";
    case SBranch::kSquareD: return "SQUARE_D";
    case SBranch::kPellUnit: return "PELL_UNIT";
  }
  return "?";
}

struct SInvariantResult {
  std::int64_t d = 0;
  SValue value;
  SBranch branch = SBranch::kPellUnit;
  std::optional<PellSolution> witness;
  /// value^2 <= 4/d + 5/d^2, checked as value^2 d^2 <= 4d + 5 in integers.
  bool bound_ok = false;
  /// value^2 <= 1/d + 1/d^2 (informational; the Pell-unit branch sub-bound).
  bool sub_bound_ok = false;
  bool sub_bound_tight = false;
};

namespace detail {

// Compares v^2 with (a d + b) / d^2 exactly: returns sign of v^2 d^2 - (a d + b).
inline int compare_square_bound(const Rational& v_squared, std::int64_t d, std::int64_t a, std::int64_t b) {
  const Integer dd = Integer(d) * d;
  const Integer lhs = numerator_of(v_squared) * dd;
  const Integer rhs = (Integer(a) * d + b) * denominator_of(v_squared);
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace detail

/// s(S, H) for a K3 surface with Pic = ZH, H^2 = 2d.
inline SInvariantResult k3_s_invariant(std::int64_t d, const GeneralPellOptions& opts = {}) {
  if (d < 1) throw DomainError("k3_s_invariant requires d >= 1, got " + std::to_string(d));
  SInvariantResult out;
  out.d = d;
  if (auto sol = pell_general_min_even(d, opts)) {
    out.branch = SBranch::kEvenYSolution;
    out.value = {Rational(sol->x, Integer(d) * sol->y), 1};
    out.witness = sol;
  } else if (is_perfect_square_u64(static_cast<std::uint64_t>(d))) {
    out.branch = SBranch::kSquareD;
    out.value = {Rational(1), Integer(d)};
  } else {
    const auto unit = pell_fundamental(d);
    out.branch = SBranch::kPellUnit;
    out.value = {Rational(unit.x, Integer(d) * unit.y), 1};
    out.witness = unit;
  }
  const Rational sq = out.value.squared();
  out.bound_ok = detail::compare_square_bound(sq, d, 4, 5) <= 0;
  const int sub = detail::compare_square_bound(sq, d, 1, 1);
  out.sub_bound_ok = sub <= 0;
  out.sub_bound_tight = sub == 0;
  return out;
}

struct K3Exponent {
  SInvariantResult s;
  SValue exponent;        // 4 s
  bool exponent_bound_check;  // 4 s <= 4 sqrt(4/d + 5/d^2)
};

inline K3Exponent k3_exponent(std::int64_t d, const GeneralPellOptions& opts = {}) {
  K3Exponent out{k3_s_invariant(d, opts), {}, false};
  out.exponent = out.s.value.scaled(4);
  // (4s)^2 <= 16 (4/d + 5/d^2) iff s^2 <= 4/d + 5/d^2.
  out.exponent_bound_check = detail::compare_square_bound(out.exponent.squared() / 16, d, 4, 5) <= 0;
  return out;
}

/// s(Y, H) <= 2 / (k + 2) for a k-very ample H on an unnodal Enriques surface.
inline Rational enriques_bound(std::int64_t k) {
  if (k < 1) throw DomainError("enriques_bound requires k >= 1, got " + std::to_string(k));
  return Rational(2, k + 2);
}

inline Rational enriques_exponent(std::int64_t k) { return 4 * enriques_bound(k); }

}  // namespace deltabound
