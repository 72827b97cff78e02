#pragma once

// Certificate arithmetic on W', the blow-up of X x X along the diagonal.
//
// A class on W' is pi1^* d1 + pi2^* d2 + e E. Curves carry their two push-forward
// classes and m = E.C >= 0. Geometric facts (dominance of curve families,
// non-dominance of base-locus components) are not decided here: they are
// carried as tagged assumptions and reported with every conclusion.

#include "deltabound/lattice.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace deltabound {

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

/// pi1^* d1 + pi2^* d2 + e E, with e the signed E-coefficient (sH[2] - E has e = -1).
struct WDivisor {
  DivisorClass d1;
  DivisorClass d2;
  Rational e = 0;

  /// L[2] + e E.
  static WDivisor symmetric(const DivisorClass& l, const Rational& e) { return {l, l, e}; }

  WDivisor& operator+=(const WDivisor& o) {
    d1 += o.d1;
    d2 += o.d2;
    e += o.e;
    return *this;
  }
  friend WDivisor operator+(WDivisor a, const WDivisor& b) { return a += b; }
  friend WDivisor operator-(WDivisor a, const WDivisor& b) {
    a.d1 -= b.d1;
    a.d2 -= b.d2;
    a.e -= b.e;
    return a;
  }
  friend WDivisor operator*(const Rational& c, WDivisor a) {
    a.d1 *= c;
    a.d2 *= c;
    a.e *= c;
    return a;
  }
  bool is_zero() const { return d1.is_zero() && d2.is_zero() && e == 0; }
  friend bool operator==(const WDivisor&, const WDivisor&) = default;
};

/// A curve on W' by its push-forwards to X1, X2 and m = E.C.
struct WCurve {
  CurveClass c1;
  CurveClass c2;
  Rational m = 0;
};

/// d1.c1 + d2.c2 + e m.
inline Rational pair_w(const IntersectionLattice& lat, const WDivisor& d, const WCurve& c) {
  if (d.d1.size() != lat.rank() || d.d2.size() != lat.rank() || c.c1.size() != lat.rank() ||
      c.c2.size() != lat.rank())
    throw DomainError("pair_w: class dimension does not match lattice rank");
  return intersect(lat, d.d1, c.c1) + intersect(lat, d.d2, c.c2) + d.e * c.m;
}

inline std::string format_w(const IntersectionLattice& lat, const WDivisor& d) {
  std::string out;
  if (d.d1 == d.d2) {
    out = "(" + lat.format(d.d1) + ")[2]";
  } else {
    out = "pi1*(" + lat.format(d.d1) + ") + pi2*(" + lat.format(d.d2) + ")";
  }
  if (d.e != 0) {
    const bool neg = d.e < 0;
    const Rational mag = neg ? Rational(-d.e) : d.e;
    out += neg ? " - " : " + ";
    if (mag != 1) out += to_string(mag);
    out += "E";
  }
  return out;
}

enum class AssumptionTag { kSemiample, kBirationalSystem, kConicDelta, kFactorPullback };

inline std::string to_string(AssumptionTag t) {
  switch (t) {
    case AssumptionTag::kSemiample: return "SEMIAMPLE";
    case AssumptionTag::kBirationalSystem: return "BIRATIONAL_SYSTEM";
    case AssumptionTag::kConicDelta: return "CONIC_DELTA";
    case AssumptionTag::kFactorPullback: return "FACTOR_PULLBACK";
  }
  return "?";
}

inline AssumptionTag parse_assumption_tag(const std::string& s) {
  if (s == "SEMIAMPLE") return AssumptionTag::kSemiample;
  if (s == "BIRATIONAL_SYSTEM") return AssumptionTag::kBirationalSystem;
  if (s == "CONIC_DELTA") return AssumptionTag::kConicDelta;
  if (s == "FACTOR_PULLBACK") return AssumptionTag::kFactorPullback;
  throw DomainError("unknown assumption tag '" + s + "'");
}

struct Assumption {
  AssumptionTag tag;
  std::string citation;
  friend bool operator==(const Assumption&, const Assumption&) = default;
};

/// A covering family of curves in the fibres of W' -> X1.
struct LowerCert {
  LatticePtr lattice;
  DivisorClass H;
  WCurve curve;
  std::string dominance_note;
};

struct DecompositionTerm {
  Rational coefficient;
  WDivisor piece;
  Assumption assumption;
};

using Decomposition = std::vector<DecompositionTerm>;

/// Exact decompositions of target = s H[2] - c E into pieces whose base loci
/// are controlled by the tagged assumptions.
struct UpperCert {
  LatticePtr lattice;
  DivisorClass H;
  WDivisor target;
  std::vector<Decomposition> decompositions;
};

struct VerificationReport {
  bool accepted = false;
  std::vector<std::string> identities;
  std::vector<Assumption> assumptions;
  std::optional<Rational> bound;
  std::string conclusion;
  std::vector<std::string> failures;
};

struct CertifiedLowerBound {
  Rational value;
  std::string dominance_note;
};

/// s0 = m / (H.c1 + H.c2), the value at which (s0 H[2] - E).C vanishes.
inline CertifiedLowerBound check_lower_cert(const LowerCert& cert) {
  if (!cert.lattice) throw DomainError("lower certificate without a lattice");
  const auto& lat = *cert.lattice;
  if (cert.curve.m < 0) throw DomainError("lower certificate: E.C must be nonnegative");
  const Rational degree = intersect(lat, cert.H, cert.curve.c1) + intersect(lat, cert.H, cert.curve.c2);
  if (degree == 0) throw DomainError("lower certificate: H.c1 + H.c2 is zero");
  if (degree < 0) throw DomainError("lower certificate: H.c1 + H.c2 must be positive");
  const Rational s0 = cert.curve.m / degree;
  if (pair_w(lat, WDivisor::symmetric(s0 * cert.H, -1), cert.curve) != 0)
    throw std::logic_error("lower certificate pairing does not vanish at s0");
  return {s0, cert.dominance_note};
}

/// Checks every decomposition identity exactly and reports the bound s with
/// target proportional to s H[2] - E, modulo the listed assumptions.
inline VerificationReport check_upper_cert(const UpperCert& cert) {
  VerificationReport report;
  if (!cert.lattice) throw DomainError("upper certificate without a lattice");
  const auto& lat = *cert.lattice;
  const auto& t = cert.target;

  std::optional<Rational> lambda;
  if (t.e < 0 && t.d1 == t.d2) {
    for (std::size_t i = 0; i < cert.H.size() && !lambda; ++i)
      if (cert.H[i] != 0) lambda = t.d1[i] / cert.H[i];
    if (lambda && !(*lambda * cert.H == t.d1)) lambda.reset();
  }
  if (!lambda) {
    report.failures.push_back("target " + format_w(lat, t) + " is not of the form s H[2] - c E with c > 0");
    report.conclusion = "rejected";
    return report;
  }
  if (cert.decompositions.empty()) report.failures.push_back("no decompositions supplied");

  for (std::size_t k = 0; k < cert.decompositions.size(); ++k) {
    const auto& dec = cert.decompositions[k];
    WDivisor sum{DivisorClass::zero(lat.rank()), DivisorClass::zero(lat.rank()), 0};
    std::string rhs;
    bool ok = true;
    for (const auto& term : dec) {
      if (term.coefficient < 0) {
        report.failures.push_back("decomposition " + std::to_string(k + 1) + ": negative coefficient");
        ok = false;
      }
      sum += term.coefficient * term.piece;
      if (!rhs.empty()) rhs += " + ";
      rhs += (term.coefficient == 1 ? std::string() : to_string(term.coefficient) + "*") + "(" +
             format_w(lat, term.piece) + ")";
      if (std::find(report.assumptions.begin(), report.assumptions.end(), term.assumption) ==
          report.assumptions.end())
        report.assumptions.push_back(term.assumption);
    }
    const WDivisor residual = t - sum;
    if (!residual.is_zero()) {
      report.failures.push_back("decomposition " + std::to_string(k + 1) +
                                " fails; residual = " + format_w(lat, residual));
      ok = false;
    }
    if (ok) report.identities.push_back(format_w(lat, t) + " = " + rhs);
  }
  report.accepted = report.failures.empty();
  if (report.accepted) {
    report.bound = *lambda / -t.e;
    report.conclusion = "delta <= " + to_string(*report.bound) + ", certified modulo listed assumptions";
  } else {
    report.conclusion = "rejected";
  }
  return report;
}

/// p alpha + q.
struct AffineForm {
  Rational p;
  Rational q;
  Rational operator()(const Rational& alpha) const { return p * alpha + q; }
};

/// form(alpha) >= bound.
struct AlphaConstraint {
  AffineForm form;
  Rational bound;
};

struct RewritePiece {
  DivisorClass piece;
  AffineForm coeff;
};

/// alpha (-K_X - f^*(-K_S)) + ((2 alpha - 1)/2) f^*(-K_S) = sum c(alpha) piece.
struct AlphaTemplate {
  LatticePtr lattice;
  DivisorClass base_pullback;
  DivisorClass anticanonical;
  std::vector<RewritePiece> rewrite_pieces;
  std::vector<AlphaConstraint> constraints;
};

struct AlphaSolution {
  Rational alpha_min;
  Rational two_alpha;
  Rational beta;  // alpha - 1/2, so 2 alpha - 2 beta = 1
};

inline DivisorClass alpha_template_lhs(const AlphaTemplate& t, const Rational& alpha) {
  return alpha * (t.anticanonical - t.base_pullback) + ((2 * alpha - 1) / 2) * t.base_pullback;
}

inline DivisorClass alpha_template_rhs(const AlphaTemplate& t, const Rational& alpha) {
  DivisorClass sum = DivisorClass::zero(t.anticanonical.size());
  for (const auto& rp : t.rewrite_pieces) sum += rp.coeff(alpha) * rp.piece;
  return sum;
}

/// Both sides are affine in alpha, so agreement at two values is an identity.
inline bool alpha_template_identity_holds(const AlphaTemplate& t) {
  for (const Rational& alpha : {Rational(0), Rational(1)})
    if (!(alpha_template_lhs(t, alpha) == alpha_template_rhs(t, alpha))) return false;
  return true;
}

/// Minimal alpha meeting every constraint, with beta = alpha - 1/2 > 0.
inline AlphaSolution solve_alpha(const AlphaTemplate& t) {
  if (!alpha_template_identity_holds(t)) throw DomainError("solve_alpha: template identity fails");
  std::optional<Rational> lower, upper;
  for (const auto& c : t.constraints) {
    const Rational slack = c.bound - c.form.q;  // p alpha >= slack
    if (c.form.p == 0) {
      if (slack > 0) throw DomainError("solve_alpha: constant constraint is violated");
      continue;
    }
    const Rational root = slack / c.form.p;
    if (c.form.p > 0) {
      if (!lower || root > *lower) lower = root;
    } else {
      if (!upper || root < *upper) upper = root;
    }
  }
  if (!lower) throw DomainError("solve_alpha: constraints give no lower bound on alpha");
  if (upper && *lower > *upper) throw DomainError("solve_alpha: constraints are infeasible");
  if (*lower <= Rational(1, 2))
    throw DomainError("solve_alpha: minimum would need beta = alpha - 1/2 <= 0");
  return {*lower, 2 * *lower, *lower - Rational(1, 2)};
}

inline bool alpha_feasible(const AlphaTemplate& t, const Rational& alpha) {
  if (alpha <= Rational(1, 2)) return false;
  return std::all_of(t.constraints.begin(), t.constraints.end(),
                     [&](const AlphaConstraint& c) { return c.form(alpha) >= c.bound; });
}

/// delta(P^1 x S, -K) = delta(S, -K_S), valid when delta(S, -K_S) >= 1/2.
inline RationalInterval product_delta(const RationalInterval& delta_s) {
  if (delta_s.lo < Rational(1, 2))
    throw DomainError("product_delta requires delta(S, -K_S) >= 1/2, got " + delta_s.str());
  return delta_s;
}

}  // namespace deltabound
