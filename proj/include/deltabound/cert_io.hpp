#pragma once

// JSON form of lattices and certificates. Certificate files are JSON Lines:
// one object per line with "kind" in {"lower", "upper", "alpha"} and an
// embedded "lattice". Rationals are "p/q" strings.

#include "deltabound/delpezzo.hpp"
#include "deltabound/delta_cert.hpp"
#include "deltabound/fano_db.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <sstream>
#include <string>
#include <vector>

namespace deltabound {

using Json = nlohmann::json;

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw DomainError("expected a rational as a \"p/q\" string or an integer");
}

template <typename Tag>
Json class_json(const ClassVector<Tag>& v) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(to_string(v[i]));
  return arr;
}

template <typename Tag>
ClassVector<Tag> class_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) throw DomainError("class must be an array of " + std::to_string(rank) + " rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return ClassVector<Tag>(std::move(c));
}

inline Json lattice_json(const IntersectionLattice& lat) {
  if (auto r = lat.del_pezzo_blowups()) return Json{{"del_pezzo_blowups", *r}};
  Json j{{"labels", lat.basis_labels()}, {"gram", lat.gram()}, {"canonical", class_json(lat.canonical_class())}};
  if (!lat.stored_generators().empty()) {
    j["effective_generators"] = Json::array();
    for (const auto& g : lat.stored_generators()) j["effective_generators"].push_back(class_json(g));
  }
  return j;
}

inline LatticePtr lattice_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("lattice must be a JSON object");
  try {
    if (j.contains("del_pezzo_blowups"))
      return std::make_shared<const IntersectionLattice>(make_del_pezzo_lattice(j["del_pezzo_blowups"].get<int>()));
    auto labels = j.at("labels").get<std::vector<std::string>>();
    auto gram = j.at("gram").get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t n = labels.size();
    auto canonical = class_from_json<DivisorTag>(j.at("canonical"), n);
    std::vector<DivisorClass> gens;
    if (j.contains("effective_generators"))
      for (const auto& g : j["effective_generators"]) gens.push_back(class_from_json<DivisorTag>(g, n));
    return std::make_shared<const IntersectionLattice>(std::move(labels), std::move(gram), std::move(canonical),
                                                       std::move(gens));
  } catch (const Json::exception& ex) {
    throw DomainError(std::string("malformed lattice: ") + ex.what());
  }
}

/// "dp<r>" (P^2 blown up in r points), "p2" (= dp0), "f1" (= dp1), or a JSON lattice object.
inline LatticePtr lattice_from_spec(const std::string& spec) {
  if (spec == "p2") return std::make_shared<const IntersectionLattice>(make_del_pezzo_lattice(0));
  if (spec == "f1") return std::make_shared<const IntersectionLattice>(make_del_pezzo_lattice(1));
  if (spec.size() >= 3 && spec.rfind("dp", 0) == 0 &&
      std::all_of(spec.begin() + 2, spec.end(), [](char c) { return c >= '0' && c <= '9'; }) && spec.size() <= 4)
    return std::make_shared<const IntersectionLattice>(make_del_pezzo_lattice(std::stoi(spec.substr(2))));
  throw DomainError("unknown lattice spec '" + spec + "' (expected dp0..dp8, p2, f1, or a JSON file)");
}

inline Json wdivisor_json(const WDivisor& d) {
  return Json{{"d1", class_json(d.d1)}, {"d2", class_json(d.d2)}, {"e", rational_json(d.e)}};
}

inline WDivisor wdivisor_from_json(const Json& j, std::size_t n) {
  return {class_from_json<DivisorTag>(j.at("d1"), n), class_from_json<DivisorTag>(j.at("d2"), n),
          rational_from_json(j.at("e"))};
}

inline Json assumption_json(const Assumption& a) { return Json{{"tag", to_string(a.tag)}, {"citation", a.citation}}; }

inline Json lower_cert_json(const LowerCert& c) {
  return Json{{"kind", "lower"},
              {"lattice", lattice_json(*c.lattice)},
              {"H", class_json(c.H)},
              {"curve", {{"c1", class_json(c.curve.c1)}, {"c2", class_json(c.curve.c2)}, {"m", rational_json(c.curve.m)}}},
              {"dominance_note", c.dominance_note}};
}

inline Json upper_cert_json(const UpperCert& c) {
  Json decs = Json::array();
  for (const auto& dec : c.decompositions) {
    Json terms = Json::array();
    for (const auto& t : dec)
      terms.push_back(Json{{"coefficient", rational_json(t.coefficient)},
                           {"piece", wdivisor_json(t.piece)},
                           {"assumption", assumption_json(t.assumption)}});
    decs.push_back(std::move(terms));
  }
  return Json{{"kind", "upper"},
              {"lattice", lattice_json(*c.lattice)},
              {"H", class_json(c.H)},
              {"target", wdivisor_json(c.target)},
              {"decompositions", std::move(decs)}};
}

inline Json affine_json(const AffineForm& f) { return Json{{"p", rational_json(f.p)}, {"q", rational_json(f.q)}}; }

inline AffineForm affine_from_json(const Json& j) { return {rational_from_json(j.at("p")), rational_from_json(j.at("q"))}; }

inline Json alpha_template_json(const AlphaTemplate& t) {
  Json pieces = Json::array(), cons = Json::array();
  for (const auto& p : t.rewrite_pieces) pieces.push_back(Json{{"piece", class_json(p.piece)}, {"coeff", affine_json(p.coeff)}});
  for (const auto& c : t.constraints) cons.push_back(Json{{"form", affine_json(c.form)}, {"bound", rational_json(c.bound)}});
  return Json{{"kind", "alpha"},
              {"lattice", lattice_json(*t.lattice)},
              {"base_pullback", class_json(t.base_pullback)},
              {"anticanonical", class_json(t.anticanonical)},
              {"rewrite_pieces", std::move(pieces)},
              {"constraints", std::move(cons)}};
}

inline LowerCert lower_cert_from_json(const Json& j) {
  LowerCert c;
  c.lattice = lattice_from_json(j.at("lattice"));
  const std::size_t n = c.lattice->rank();
  c.H = class_from_json<DivisorTag>(j.at("H"), n);
  const auto& cv = j.at("curve");
  c.curve = {class_from_json<CurveTag>(cv.at("c1"), n), class_from_json<CurveTag>(cv.at("c2"), n),
             rational_from_json(cv.at("m"))};
  c.dominance_note = j.value("dominance_note", std::string());
  return c;
}

inline UpperCert upper_cert_from_json(const Json& j) {
  UpperCert c;
  c.lattice = lattice_from_json(j.at("lattice"));
  const std::size_t n = c.lattice->rank();
  c.H = class_from_json<DivisorTag>(j.at("H"), n);
  c.target = wdivisor_from_json(j.at("target"), n);
  for (const auto& dj : j.at("decompositions")) {
    Decomposition dec;
    for (const auto& tj : dj) {
      const auto& aj = tj.at("assumption");
      dec.push_back({rational_from_json(tj.at("coefficient")), wdivisor_from_json(tj.at("piece"), n),
                     {parse_assumption_tag(aj.at("tag").get<std::string>()), aj.value("citation", std::string())}});
    }
    c.decompositions.push_back(std::move(dec));
  }
  return c;
}

inline AlphaTemplate alpha_template_from_json(const Json& j) {
  AlphaTemplate t;
  t.lattice = lattice_from_json(j.at("lattice"));
  const std::size_t n = t.lattice->rank();
  t.base_pullback = class_from_json<DivisorTag>(j.at("base_pullback"), n);
  t.anticanonical = class_from_json<DivisorTag>(j.at("anticanonical"), n);
  for (const auto& p : j.at("rewrite_pieces"))
    t.rewrite_pieces.push_back({class_from_json<DivisorTag>(p.at("piece"), n), affine_from_json(p.at("coeff"))});
  for (const auto& c : j.at("constraints"))
    t.constraints.push_back({affine_from_json(c.at("form")), rational_from_json(c.at("bound"))});
  return t;
}

/// Every built-in certificate, one JSON object each, labelled by "source".
inline std::vector<Json> builtin_certificates() {
  std::vector<Json> out;
  for (int degree = 9; degree >= 1; --degree) {
    const auto c = delpezzo_certificates(degree);
    const std::string src = "del Pezzo degree " + std::to_string(degree);
    auto lo = lower_cert_json(c.lower);
    lo["source"] = src;
    auto up = upper_cert_json(c.upper);
    up["source"] = src;
    out.push_back(std::move(lo));
    out.push_back(std::move(up));
  }
  for (const char* id : {"conic-2-31", "conic-2-32", "conic-3-23", "conic-3-12", "conic-4-6"}) {
    const auto c = fano_certificates(id);
    for (Json j : {lower_cert_json(c.lower), upper_cert_json(c.upper), alpha_template_json(c.alpha)}) {
      j["source"] = id;
      out.push_back(std::move(j));
    }
  }
  return out;
}

/// Checks one certificate object; never throws for a rejected certificate.
inline Json verify_certificate_json(const Json& j) {
  Json r;
  const std::string kind = j.value("kind", std::string());
  r["kind"] = kind;
  if (j.contains("source")) r["source"] = j["source"];
  try {
    if (kind == "lower") {
      const auto res = check_lower_cert(lower_cert_from_json(j));
      r["accepted"] = true;
      r["lower_bound"] = rational_json(res.value);
      r["dominance_note"] = res.dominance_note;
    } else if (kind == "upper") {
      const auto rep = check_upper_cert(upper_cert_from_json(j));
      r["accepted"] = rep.accepted;
      if (rep.bound) r["upper_bound"] = rational_json(*rep.bound);
      r["identities"] = rep.identities;
      r["failures"] = rep.failures;
      r["assumptions"] = Json::array();
      for (const auto& a : rep.assumptions) r["assumptions"].push_back(assumption_json(a));
      r["conclusion"] = rep.conclusion;
    } else if (kind == "alpha") {
      const auto sol = solve_alpha(alpha_template_from_json(j));
      r["accepted"] = true;
      r["alpha_min"] = rational_json(sol.alpha_min);
      r["two_alpha"] = rational_json(sol.two_alpha);
      r["beta"] = rational_json(sol.beta);
    } else {
      throw DomainError("unknown certificate kind '" + kind + "'");
    }
  } catch (const std::exception& ex) {
    r["accepted"] = false;
    r["failures"] = Json::array({ex.what()});
  }
  return r;
}

}  // namespace deltabound
