#pragma once

// Encoded delta(S, -K_S) certificates for del Pezzo surfaces of degree 1..9.
// Degree d is modelled as P^2 blown up in r = 9 - d general points.

#include "deltabound/delta_cert.hpp"

#include <memory>
#include <string>
#include <vector>

namespace deltabound {

struct DelPezzoCertificates {
  int degree = 0;
  LatticePtr lattice;
  LowerCert lower;
  UpperCert upper;
};

struct DelPezzoDelta {
  int degree = 0;
  RationalInterval delta;
  bool certified = false;  // both certificates checked
  CertifiedLowerBound lower;
  VerificationReport upper;
};

namespace detail {

inline DivisorClass dp_class(std::size_t rank, std::int64_t h, std::initializer_list<int> minus_e) {
  DivisorClass d = DivisorClass::basis(rank, 0) * Rational(h);
  for (int i : minus_e) d -= DivisorClass::basis(rank, static_cast<std::size_t>(i));
  return d;
}

inline DecompositionTerm unit_term(const DivisorClass& d, const Rational& e, AssumptionTag tag, std::string why) {
  return {Rational(1), WDivisor::symmetric(d, e), {tag, std::move(why)}};
}

inline bool is_conic_class(const IntersectionLattice& lat, const DivisorClass& d) {
  return intersect(lat, d, d) == 0 && intersect(lat, lat.anticanonical(), d) == 2;
}

// -K[2] - 2E = (F[2] - E) + ((-K - F)[2] - E) for a conic class F.
inline Decomposition conic_split(const IntersectionLattice& lat, const DivisorClass& f) {
  const DivisorClass g = lat.anticanonical() - f;
  Decomposition dec;
  dec.push_back(unit_term(f, -1, AssumptionTag::kConicDelta,
                          "F[2] - E is the pullback of the diagonal of P^1 x P^1 under the conic fibration |" +
                              lat.format(f) + "|, minus E; its base locus beyond E is not dominant"));
  if (is_conic_class(lat, g)) {
    dec.push_back(unit_term(g, -1, AssumptionTag::kConicDelta,
                            "second conic fibration |" + lat.format(g) + "|"));
  } else {
    dec.push_back(unit_term(g, -1, AssumptionTag::kBirationalSystem,
                            "|" + lat.format(g) + "| defines a birational map, so the base locus of G[2] - E "
                                                  "lies in E and preimages of a proper closed subset"));
  }
  return dec;
}

}  // namespace detail

/// Certificates for degree 1..9. Throws DomainError outside that range.
inline DelPezzoCertificates delpezzo_certificates(int degree) {
  if (degree < 1 || degree > 9) throw DomainError("del Pezzo degree must be in 1..9, got " + std::to_string(degree));
  const int r = 9 - degree;
  auto lat = std::make_shared<const IntersectionLattice>(make_del_pezzo_lattice(r));
  const std::size_t n = lat->rank();
  const DivisorClass mk = lat->anticanonical();
  const CurveClass zero = CurveClass::zero(n);

  DelPezzoCertificates out;
  out.degree = degree;
  out.lattice = lat;
  out.lower.lattice = lat;
  out.lower.H = mk;
  out.upper.lattice = lat;
  out.upper.H = mk;

  using detail::dp_class;
  using detail::unit_term;

  if (degree == 9) {
    out.lower.curve = {zero, as_curve(dp_class(n, 1, {})), 1};
    out.lower.dominance_note = "lines through a general point P cover P^2; -K.line = 3, mult_P = 1";
    out.upper.target = WDivisor::symmetric(mk, -3);
    Decomposition dec;
    dec.push_back({3, WDivisor::symmetric(dp_class(n, 1, {}), -1),
                   {AssumptionTag::kBirationalSystem, "|H| embeds P^2, so H[2] - E has base locus in E"}});
    out.upper.decompositions.push_back(std::move(dec));
  } else if (degree >= 4) {
    out.lower.curve = {zero, as_curve(dp_class(n, 1, {1})), 1};
    out.lower.dominance_note =
        "conics of a conic fibration through a general point cover S; their Seshadri ratio -K.C / mult_P = 2 "
        "is the Seshadri constant of -K_S at a general point";
    out.upper.target = WDivisor::symmetric(mk, -2);
    if (degree == 4) {
      out.upper.decompositions.push_back(detail::conic_split(*lat, dp_class(n, 1, {5})));
      out.upper.decompositions.push_back(detail::conic_split(*lat, dp_class(n, 1, {4})));
    } else {
      out.upper.decompositions.push_back(detail::conic_split(*lat, dp_class(n, 1, {1})));
      if (r >= 2) out.upper.decompositions.push_back(detail::conic_split(*lat, dp_class(n, 1, {2})));
    }
  } else if (degree == 3) {
    out.lower.curve = {zero, as_curve(mk), 2};
    out.lower.dominance_note =
        "tangent hyperplane sections at a general point P are cubics with a node at P; they cover S";
    out.upper.target = WDivisor::symmetric(2 * mk, -3);
    // -2K[2] - 3E = (D[2] - 2E) + (F[2] - E), F a conic, E' = -K - F a line, D = -K + E'.
    for (const auto& [conic, line] :
         {std::pair{dp_class(n, 2, {1, 2, 3, 4}), dp_class(n, 1, {5, 6})},
          std::pair{dp_class(n, 2, {3, 4, 5, 6}), dp_class(n, 1, {1, 2})}}) {
      const DivisorClass d = mk + line;
      Decomposition dec;
      dec.push_back(unit_term(d, -2, AssumptionTag::kBirationalSystem,
                              lat->format(d) + " is the pullback of -K from the degree 4 del Pezzo obtained by "
                                               "contracting the line " + lat->format(line) +
                                  "; delta = 1/2 there and delta is a birational invariant"));
      dec.push_back(unit_term(conic, -1, AssumptionTag::kConicDelta,
                              "conic fibration |" + lat->format(conic) + "|"));
      out.upper.decompositions.push_back(std::move(dec));
    }
  } else if (degree == 2) {
    // Graph of the Geiser involution: C in |-K| maps to (C, iota C) meeting the
    // diagonal along C.R with R in |-2K|.
    out.lower.curve = {as_curve(mk), as_curve(mk), 4};
    out.lower.dominance_note =
        "curves P -> (P, iota(P)) for the anticanonical double cover involution iota; the graph of iota is "
        "dominant to both factors and meets the diagonal along the ramification curve R ~ -2K";
    out.upper.target = WDivisor::symmetric(3 * mk, -3);
    // -3K = (-K + L1) + (-K + L2) with L1 + L2 = -K, each -K + Li pulled back from a cubic surface.
    Decomposition dec;
    for (const auto& line : {dp_class(n, 2, {1, 2, 3, 4, 5}), dp_class(n, 1, {6, 7})}) {
      const DivisorClass d = mk + line;
      dec.push_back({1, WDivisor::symmetric(d, Rational(-3, 2)),
                     {AssumptionTag::kBirationalSystem,
                      lat->format(d) + " is the pullback of -K from the cubic surface obtained by contracting " +
                          lat->format(line) + "; delta = 2/3 there"}});
    }
    out.upper.decompositions.push_back(std::move(dec));
  } else {  // degree 1
    out.lower.curve = {as_curve(mk), as_curve(mk), 3};
    out.lower.dominance_note =
        "curves P -> (P, iota(P)) for the bianticanonical double cover onto a quadric cone; the ramification "
        "curve is R ~ -3K, so the graph meets the diagonal in 3 points per anticanonical curve";
    out.upper.target = WDivisor::symmetric(4 * mk, -2);
    // -2K = E8 + E' with both (-1)-curves; -4K = (-K + E8) + (-K + E').
    const DivisorClass e8 = DivisorClass::basis(n, 8);
    const DivisorClass other = 2 * mk - e8;
    Decomposition dec;
    for (const auto& line : {e8, other}) {
      const DivisorClass d = mk + line;
      dec.push_back(unit_term(d, -1, AssumptionTag::kBirationalSystem,
                              lat->format(d) + " is the pullback of -K from the degree 2 del Pezzo obtained by "
                                               "contracting " + lat->format(line) + "; delta = 1 there"));
    }
    out.upper.decompositions.push_back(std::move(dec));
  }
  return out;
}

/// delta(S, -K_S) for degree 1..9, exact except the interval [3/2, 2] in degree 1.
/// Without certify the tabulated value is returned unchecked.
inline DelPezzoDelta delpezzo_delta(int degree, bool certify = true) {
  static const Rational kAsTabulated[] = {0, 0, 1, Rational(2, 3), Rational(1, 2), Rational(1, 2),
                                          Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 3)};
  if (degree < 1 || degree > 9) throw DomainError("del Pezzo degree must be in 1..9, got " + std::to_string(degree));
  DelPezzoDelta out;
  out.degree = degree;
  if (!certify) {
    out.delta = degree == 1 ? RationalInterval::make(Rational(3, 2), 2) : RationalInterval::point(kAsTabulated[degree]);
    return out;
  }
  const auto certs = delpezzo_certificates(degree);
  out.lower = check_lower_cert(certs.lower);
  out.upper = check_upper_cert(certs.upper);
  if (!out.upper.accepted || !out.upper.bound)
    throw DomainError("del Pezzo upper certificate rejected for degree " + std::to_string(degree));
  out.delta = RationalInterval::make(out.lower.value, *out.upper.bound);
  out.certified = true;
  return out;
}

}  // namespace deltabound
