#pragma once

// Test-side reference implementations. They share nothing with the library
// beyond the Integer/Rational types and deliberately use the plainest method
// that is still affordable: scanning, brute force over boxes, bisection.

#include "deltabound/heights.hpp"
#include "deltabound/lattice.hpp"
#include "deltabound/rational.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using deltabound::Integer;
using deltabound::Rational;

inline bool is_square_u64(std::uint64_t n, std::uint64_t& root) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  root = r;
  return r * r == n;
}

/// Smallest y >= 1 with 1 + D y^2 a square, scanning y up to limit.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> pell_scan(std::uint64_t D, std::uint64_t limit) {
  for (std::uint64_t y = 1; y <= limit; ++y) {
    const unsigned __int128 v = 1 + static_cast<unsigned __int128>(D) * y * y;
    if (v >> 62) return std::nullopt;  // leave the 64-bit range to the big-integer oracle
    std::uint64_t x;
    if (is_square_u64(static_cast<std::uint64_t>(v), x)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

/// Chakravala (Bhaskara II) method: an algorithm independent of continued fractions.
inline std::pair<Integer, Integer> pell_chakravala(std::int64_t D) {
  const Integer n = D;
  Integer a = boost::multiprecision::sqrt(n);
  if (a * a == n) throw std::logic_error("square D");
  if ((a + 1) * (a + 1) - n < n - a * a) a += 1;
  Integer b = 1;
  Integer k = a * a - n;
  while (k != 1) {
    const Integer absk = k < 0 ? Integer(-k) : k;
    // m = a + b m' with (a + b m) divisible by |k|, minimizing |m^2 - D|.
    Integer m0 = 0;
    while (((a + b * m0) % absk) != 0) ++m0;
    Integer best_m = m0;
    Integer best = -1;
    const Integer root = boost::multiprecision::sqrt(n);
    // Candidates of the right residue around sqrt(D).
    Integer start = m0 + ((root - m0) / absk) * absk;
    for (Integer m = start - 2 * absk; m <= start + 2 * absk; m += absk) {
      if (m <= 0) continue;
      Integer diff = m * m - n;
      if (diff < 0) diff = -diff;
      if (best < 0 || diff < best) {
        best = diff;
        best_m = m;
      }
    }
    const Integer m = best_m;
    const Integer na = (a * m + n * b) / absk;
    const Integer nb = (a + b * m) / absk;
    const Integer nk = (m * m - n) / k;
    a = na < 0 ? Integer(-na) : na;
    b = nb < 0 ? Integer(-nb) : nb;
    k = nk;
  }
  return {a, b};
}

/// Minimal x over solutions of x^2 - 4 d y^2 = 5 with 0 < y <= limit and y even.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> general_pell_even_scan(std::uint64_t d,
                                                                                     std::uint64_t limit) {
  for (std::uint64_t y = 2; y <= limit; y += 2) {
    const std::uint64_t v = 5 + 4 * d * y * y;
    std::uint64_t x;
    if (is_square_u64(v, x)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

/// Any solution (odd or even y) of x^2 - 4 d y^2 = 5 with y <= limit, smallest y first.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> general_pell_any_scan(std::uint64_t d,
                                                                                    std::uint64_t limit) {
  for (std::uint64_t y = 1; y <= limit; ++y) {
    const std::uint64_t v = 5 + 4 * d * y * y;
    std::uint64_t x;
    if (is_square_u64(v, x)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

/// s-invariant of a Picard-rank-one K3 of degree 2d, squared, from scans alone.
inline Rational k3_s_squared(std::uint64_t d) {
  if (auto e = general_pell_even_scan(d, 10'000)) return Rational(e->first * e->first, Integer(d) * d * e->second * e->second);
  std::uint64_t r;
  if (is_square_u64(d, r)) return Rational(1, d);
  auto p = pell_scan(d, 100'000);
  Integer x, y;
  if (p) {
    x = p->first;
    y = p->second;
  } else {
    std::tie(x, y) = pell_chakravala(static_cast<std::int64_t>(d));
  }
  return Rational(x * x, Integer(d) * d * y * y);
}

/// (-1)-classes aH - sum bi Ei on Bl_r P^2 by scanning the box a in [-2, 7], bi in [-2, 4].
/// For r <= 8 every (-1)-class has 0 <= a <= 6 and -1 <= bi <= 3, so the box is exhaustive.
inline std::size_t count_minus_one_classes(int r) {
  std::size_t count = 0;
  std::vector<int> b(static_cast<std::size_t>(r), -2);
  for (int a = -2; a <= 7; ++a) {
    std::fill(b.begin(), b.end(), -2);
    while (true) {
      long s = 0, q = 0;
      for (int v : b) {
        s += v;
        q += v * v;
      }
      // D^2 = a^2 - sum b^2 = -1 and -K.D = 3a - sum b = 1.
      if (static_cast<long>(a) * a - q == -1 && 3L * a - s == 1) ++count;
      int i = 0;
      while (i < r && b[static_cast<std::size_t>(i)] == 4) b[static_cast<std::size_t>(i++)] = -2;
      if (i == r) break;
      ++b[static_cast<std::size_t>(i)];
    }
    if (r == 0) break;
  }
  return count;
}

namespace detail {

// Determinant of an integer matrix by Bareiss elimination (exact in __int128).
inline __int128 det(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Cone membership by Caratheodory: target is in cone(gens) iff it is a
/// nonnegative combination of some n linearly independent generators
/// (gens must span). Cramer's rule on every n-subset.
inline bool in_cone(const std::vector<std::vector<std::int64_t>>& gens, const std::vector<Rational>& target) {
  const std::size_t n = target.size();
  Integer lcm = 1;
  for (const auto& t : target) lcm = boost::multiprecision::lcm(lcm, deltabound::denominator_of(t));
  std::vector<__int128> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer v = deltabound::numerator_of(target[i] * Rational(lcm));
    rhs[i] = static_cast<long long>(v);
  }
  bool zero = std::all_of(rhs.begin(), rhs.end(), [](__int128 v) { return v == 0; });
  if (zero) return true;
  const std::size_t m = gens.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (m < n) return false;
  while (true) {
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) a[r][c] = gens[idx[c]][r];
    const __int128 dA = detail::det(a);
    if (dA != 0) {
      bool ok = true;
      for (std::size_t c = 0; c < n && ok; ++c) {
        auto ac = a;
        for (std::size_t r = 0; r < n; ++r) ac[r][c] = rhs[r];
        const __int128 dc = detail::det(ac);
        if ((dc > 0 && dA < 0) || (dc < 0 && dA > 0)) ok = false;
      }
      if (ok) return true;
    }
    // Next n-subset of [0, m).
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// a(X, L) by bisection on t with Caratheodory membership of K + tL, then
/// the simplest rational in the final bracket. Assumes a(L) in [0, hi].
inline Rational fujita_bisect(const std::vector<std::vector<std::int64_t>>& gens, const std::vector<Rational>& canonical,
                              const std::vector<Rational>& l, Rational hi = 16, int iterations = 40) {
  const auto member = [&](const Rational& t) {
    std::vector<Rational> v(canonical.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = canonical[i] + t * l[i];
    return in_cone(gens, v);
  };
  Rational lo = 0;
  if (!member(hi)) throw std::logic_error("bisection upper end not effective");
  for (int it = 0; it < iterations; ++it) {
    const Rational mid = (lo + hi) / 2;
    (member(mid) ? hi : lo) = mid;
  }
  return deltabound::simplest_rational_between(lo, hi);
}

/// Point counts by max-norm for T <= box, by scanning [-box, box]^(n+1) and
/// keeping primitive vectors with positive leading coordinate.
inline std::vector<std::uint64_t> naive_shell_counts(const deltabound::VarietyModel& model, std::int64_t box) {
  const std::size_t n = model.coordinate_count();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(box) + 1, 0);
  std::vector<std::int64_t> x(n, -box);
  while (true) {
    std::int64_t g = 0, h = 0;
    for (auto v : x) {
      g = std::gcd(g, v < 0 ? -v : v);
      h = std::max(h, v < 0 ? -v : v);
    }
    const auto lead = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (g == 1 && *lead > 0) {
      std::vector<Integer> pt(x.begin(), x.end());
      bool on = std::all_of(model.equations.begin(), model.equations.end(),
                            [&](const deltabound::Polynomial& p) { return p.evaluate(pt) == 0; });
      if (on && !model.exclusions.empty() &&
          std::all_of(model.exclusions.begin(), model.exclusions.end(),
                      [&](const deltabound::Polynomial& p) { return p.evaluate(pt) == 0; }))
        on = false;
      if (on) ++counts[static_cast<std::size_t>(h)];
    }
    std::size_t i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) break;
    ++x[i];
  }
  return counts;
}

/// Minimum of dist^2 * (H(P) H(Q))^2 over distinct pairs, by the definition.
inline Rational naive_min_product_delta1(const std::vector<deltabound::PointRecord>& pts) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Integer xx = 0, yy = 0, xy = 0;
      for (std::size_t k = 0; k < pts[i].coords.size(); ++k) {
        xx += Integer(pts[i].coords[k]) * pts[i].coords[k];
        yy += Integer(pts[j].coords[k]) * pts[j].coords[k];
        xy += Integer(pts[i].coords[k]) * pts[j].coords[k];
      }
      const Rational d2(xx * yy - xy * xy, xx * yy);
      const Integer hh = pts[i].height * pts[j].height;
      const Rational v = d2 * Rational(hh * hh);
      if (!best || v < *best) best = v;
    }
  return *best;
}

}  // namespace oracle
