#pragma once

// Membership in finitely generated effective cones and the Fujita invariant
// a(X, L) = min{t : K + tL effective}, both by exact rational linear programming.

#include "deltabound/lattice.hpp"
#include "deltabound/linear_program.hpp"

#include <optional>
#include <vector>

namespace deltabound {

/// Nonnegative combination of the effective generators reproducing a class.
struct ConeMembershipWitness {
  std::vector<Rational> coefficients;  // one per generator
  DivisorClass residual;               // queried class minus the combination; zero
};

inline DivisorClass combine(const std::vector<DivisorClass>& gens, const std::vector<Rational>& coeffs) {
  if (gens.size() != coeffs.size()) throw DomainError("combine: coefficient count mismatch");
  if (gens.empty()) throw DomainError("combine: no generators");
  DivisorClass total = DivisorClass::zero(gens.front().size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (coeffs[i] != 0) total += coeffs[i] * gens[i];
  return total;
}

inline std::optional<ConeMembershipWitness> is_pseudo_effective(const IntersectionLattice& lat,
                                                                const DivisorClass& d) {
  const auto& gens = effective_generators(lat);
  if (gens.empty()) throw DomainError("is_pseudo_effective: lattice has no effective generators");
  if (d.size() != lat.rank()) throw DomainError("is_pseudo_effective: class rank mismatch");
  const std::size_t n = lat.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = gens[j][i];
  const auto res = lp::solve(a, d.coords(), std::vector<Rational>(gens.size(), Rational(0)));
  if (res.status != lp::Status::kOptimal) return std::nullopt;
  ConeMembershipWitness w{res.x, d - combine(gens, res.x)};
  if (!w.residual.is_zero()) throw std::logic_error("cone witness does not reproduce the class");
  return w;
}

/// Fujita invariant of a nef class. Returns +infinity when L is not big
/// (on surfaces: nef with L.L <= 0). Throws DomainError for non-nef L.
inline Extended fujita_a(const IntersectionLattice& lat, const DivisorClass& l) {
  if (!is_nef(lat, l))
    throw DomainError("fujita_a requires a nef class; " + lat.format(l) +
                      " pairs negatively with an effective generator");
  if (intersect(lat, l, l) <= 0) return Extended::infinity();

  const auto& gens = effective_generators(lat);
  const std::size_t n = lat.rank();
  const std::size_t m = gens.size();
  // Columns: generators, then t+ and t- with K + (t+ - t-) L = sum lambda_j g_j.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m + 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = gens[j][i];
    a[i][m] = -l[i];
    a[i][m + 1] = l[i];
  }
  std::vector<Rational> cost(m + 2, Rational(0));
  cost[m] = 1;
  cost[m + 1] = -1;
  const auto res = lp::solve(a, lat.canonical_class().coords(), cost);
  if (res.status == lp::Status::kInfeasible) return Extended::infinity();
  if (res.status == lp::Status::kUnbounded)
    throw DomainError("fujita_a: K + tL effective for all t; L is not big");
  return Extended(res.objective);
}

/// delta(X, H) <= a(X, H) * delta(X, -K_X) for smooth weak Fano X.
inline Rational delta_upper_via_a(const Rational& a_value, const Rational& delta_minus_k) {
  if (a_value <= 0 || delta_minus_k <= 0)
    throw DomainError("delta_upper_via_a requires positive a-invariant and delta(X, -K_X)");
  return a_value * delta_minus_k;
}

/// The comparison a(X, L) <= 2 n delta(X, L); reporting only.
inline bool check_conjecture_a_vs_delta(const Rational& a_value, const Rational& delta_value, int n) {
  if (a_value <= 0 || delta_value <= 0 || n <= 0)
    throw DomainError("check_conjecture_a_vs_delta requires positive inputs");
  return a_value <= 2 * n * delta_value;
}

}  // namespace deltabound
