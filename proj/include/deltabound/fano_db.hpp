#pragma once

// Queryable table of smooth Fano threefolds with a conic bundle structure that
// has a rational section: 6 delta(X, -K_X), the smallest certified 2 alpha, and
// the counting exponents they give. A few rows carry full certificates.

#include "deltabound/delpezzo.hpp"
#include "deltabound/delta_cert.hpp"
#include "deltabound/fano_data.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace deltabound {

/// A table cell: an exact value, a closed interval, or an upper bound "≤ q".
struct TableValue {
  enum class Kind { kExact, kInterval, kUpperBound };
  Kind kind = Kind::kExact;
  Rational lo;  // unused for upper bounds
  Rational hi;

  static TableValue exact(const Rational& q) { return {Kind::kExact, q, q}; }
  static TableValue interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw DomainError("table interval with lo > hi");
    if (lo == hi) return exact(lo);
    return {Kind::kInterval, lo, hi};
  }
  static TableValue upper_bound(const Rational& q) { return {Kind::kUpperBound, 0, q}; }

  bool is_exact() const { return kind == Kind::kExact; }
  /// The value any proved statement may use: the upper end.
  const Rational& proven_upper() const { return hi; }

  std::string str() const {
    switch (kind) {
      case Kind::kExact: return to_string(hi);
      case Kind::kInterval: return "[" + to_string(lo) + ", " + to_string(hi) + "]";
      case Kind::kUpperBound: return "≤ " + to_string(hi);
    }
    return "?";
  }
  static TableValue parse(const std::string& s) {
    const std::string le = "≤";
    if (s.rfind(le, 0) == 0) return upper_bound(parse_rational(s.substr(le.size())));
    if (!s.empty() && s.front() == '[' && s.back() == ']') {
      const auto comma = s.find(',');
      if (comma == std::string::npos) throw DomainError("malformed table interval '" + s + "'");
      return interval(parse_rational(s.substr(1, comma - 1)), parse_rational(s.substr(comma + 1, s.size() - comma - 2)));
    }
    return exact(parse_rational(s));
  }
  friend bool operator==(const TableValue& a, const TableValue& b) {
    return a.kind == b.kind && a.hi == b.hi && (a.kind == Kind::kUpperBound || a.lo == b.lo);
  }
};

enum class FanoFlag { kToric, kManinKnown };

inline std::string to_string(FanoFlag f) { return f == FanoFlag::kToric ? "TORIC" : "MANIN_KNOWN"; }

inline FanoFlag parse_fano_flag(const std::string& s) {
  if (s == "TORIC") return FanoFlag::kToric;
  if (s == "MANIN_KNOWN") return FanoFlag::kManinKnown;
  throw DomainError("unknown Fano flag '" + s + "'");
}

struct FanoEntry {
  int picard_rank = 0;
  int mm_number = 0;
  std::string description;
  std::optional<int> anticanonical_degree;
  TableValue six_delta;
  std::optional<TableValue> two_alpha;
  std::set<FanoFlag> flags;
  std::optional<std::string> certificates;

  friend bool operator==(const FanoEntry&, const FanoEntry&) = default;
};

inline nlohmann::json to_json(const FanoEntry& e) {
  nlohmann::json j;
  j["picard_rank"] = e.picard_rank;
  j["mm_number"] = e.mm_number;
  j["description"] = e.description;
  if (e.anticanonical_degree) j["anticanonical_degree"] = *e.anticanonical_degree;
  j["six_delta"] = e.six_delta.str();
  if (e.two_alpha) j["two_alpha"] = e.two_alpha->str();
  j["flags"] = nlohmann::json::array();
  for (auto f : e.flags) j["flags"].push_back(to_string(f));
  if (e.certificates) j["certificates"] = *e.certificates;
  return j;
}

inline FanoEntry fano_entry_from_json(const nlohmann::json& j) {
  FanoEntry e;
  try {
    e.picard_rank = j.at("picard_rank").get<int>();
    e.mm_number = j.at("mm_number").get<int>();
    e.description = j.at("description").get<std::string>();
    if (j.contains("anticanonical_degree")) e.anticanonical_degree = j["anticanonical_degree"].get<int>();
    e.six_delta = TableValue::parse(j.at("six_delta").get<std::string>());
    if (j.contains("two_alpha")) e.two_alpha = TableValue::parse(j["two_alpha"].get<std::string>());
    for (const auto& f : j.at("flags")) e.flags.insert(parse_fano_flag(f.get<std::string>()));
    if (j.contains("certificates")) e.certificates = j["certificates"].get<std::string>();
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed Fano entry: ") + ex.what());
  }
  return e;
}

inline std::string serialize_fano_table(const std::vector<FanoEntry>& entries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back(to_json(e));
  return arr.dump(2);
}

inline std::vector<FanoEntry> parse_fano_table(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw DomainError("Fano table must be a JSON array");
  std::vector<FanoEntry> out;
  for (const auto& j : arr) out.push_back(fano_entry_from_json(j));
  return out;
}

/// Rank 6..10: X = P^1 x S_(11 - rank), and 6 delta = 6 delta(S, -K_S) from the certified surface values.
inline FanoEntry product_entry(int rank) {
  if (rank < 6 || rank > 10) throw DomainError("product entries exist for Picard rank 6..10");
  const int degree = 11 - rank;
  FanoEntry e;
  e.picard_rank = rank;
  e.mm_number = 1;
  e.description = "P^1 x S_" + std::to_string(degree) + " (S_" + std::to_string(degree) +
                  " a smooth del Pezzo surface of degree " + std::to_string(degree) + ")";
  const RationalInterval six = product_delta(delpezzo_delta(degree).delta).scaled(6);
  e.six_delta = TableValue::interval(six.lo, six.hi);
  return e;
}

/// Entries in table order: embedded rows for rank 2..5, then generated rank 6..10.
inline const std::vector<FanoEntry>& fano_table() {
  static const std::vector<FanoEntry> table = [] {
    auto rows = parse_fano_table(data::kFanoTableJson);
    for (int rank = 6; rank <= 10; ++rank) rows.push_back(product_entry(rank));
    return rows;
  }();
  return table;
}

inline std::string embedded_fano_json() { return data::kFanoTableJson; }

inline const FanoEntry& lookup(int rank, int number) {
  for (const auto& e : fano_table())
    if (e.picard_rank == rank && e.mm_number == number) return e;
  throw DomainError("no Fano table entry for Picard rank " + std::to_string(rank) + ", number " +
                    std::to_string(number));
}

// ---------------------------------------------------------------------------
// Certificates for five threefolds.
//
// Threefold lattices pair a divisor basis with its dual curve basis (gram =
// identity), so a curve is given by its intersection numbers with the basis.

struct FanoCertificates {
  std::string id;
  LatticePtr lattice;
  std::string conic_bundle;  // the conic bundle f: X -> S used
  LowerCert lower;
  UpperCert upper;
  AlphaTemplate alpha;
};

namespace detail {

inline LatticePtr threefold_lattice(std::vector<std::string> labels, const DivisorClass& anticanonical) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) gram[i][i] = 1;
  return std::make_shared<const IntersectionLattice>(std::move(labels), std::move(gram), -anticanonical);
}

inline DecompositionTerm term(const Rational& c, const DivisorClass& d, const Rational& e, AssumptionTag tag,
                              std::string why) {
  return {c, WDivisor::symmetric(d, e), {tag, std::move(why)}};
}

inline FanoCertificates conic_certificates(std::string id, LatticePtr lat, std::string bundle,
                                           const CurveClass& fiber, const DivisorClass& base, Decomposition dec,
                                           std::vector<RewritePiece> pieces, std::vector<AlphaConstraint> cons) {
  FanoCertificates c;
  c.id = std::move(id);
  c.lattice = lat;
  c.conic_bundle = std::move(bundle);
  const DivisorClass mk = lat->anticanonical();
  c.lower = {lat, mk, {CurveClass::zero(lat->rank()), fiber, 1},
             "conics of the fibration through a general point cover X; -K.C = 2 and C meets the diagonal once"};
  c.upper = {lat, mk, WDivisor::symmetric(mk, -2), {std::move(dec)}};
  c.alpha = {lat, base, mk, std::move(pieces), std::move(cons)};
  return c;
}

inline AlphaConstraint at_least(const Rational& p, const Rational& q, const Rational& bound) { return {{p, q}, bound}; }

}  // namespace detail

/// Certificates by id ("conic-2-31", "conic-2-32", "conic-3-23", "conic-3-12", "conic-4-6").
inline FanoCertificates fano_certificates(const std::string& id) {
  using detail::at_least;
  using detail::term;
  using Tag = AssumptionTag;
  const auto three_halves = Rational(3, 2);

  if (id == "conic-2-31") {
    // Basis H2 (from Q in P^4), D (exceptional); H1 = H2 - D gives the bundle to P^2.
    const DivisorClass h2{1, 0}, d{0, 1}, h1 = h2 - d;
    auto lat = detail::threefold_lattice({"H2", "D"}, 3 * h2 - d);
    Decomposition dec{term(1, h1, 0, Tag::kSemiample, "H1 is base point free"),
                      term(2, h2, -1, Tag::kBirationalSystem, "|H2| is birational onto the quadric")};
    return detail::conic_certificates(id, lat, "|H1|: X -> P^2", {1, 1}, 3 * h1, std::move(dec),
                                      {{h2, {3, -three_halves}}, {d, {-1, three_halves}}},
                                      {at_least(3, -three_halves, 1), at_least(-2, 3, 0)});
  }
  if (id == "conic-2-32") {
    const DivisorClass h1{1, 0}, h2{0, 1};
    auto lat = detail::threefold_lattice({"H1", "H2"}, 2 * h1 + 2 * h2);
    Decomposition dec{term(2, h1 + h2, -1, Tag::kBirationalSystem, "|H1 + H2| embeds X as a divisor of bidegree (1, 1)")};
    return detail::conic_certificates(id, lat, "|H1|: X -> P^2", {0, 1}, 3 * h1, std::move(dec),
                                      {{h1, {2, -three_halves}}, {h2, {2, 0}}}, {at_least(2, -three_halves, 1)});
  }
  if (id == "conic-3-23") {
    // Basis H1 (to P^2), D2, D1; H2 = H1 + D2.
    const DivisorClass h1{1, 0, 0}, d2{0, 1, 0}, d1{0, 0, 1}, h2 = h1 + d2;
    auto lat = detail::threefold_lattice({"H1", "D2", "D1"}, 4 * h1 + 2 * d2 - d1);
    Decomposition dec{term(1, h1 - d1, 0, Tag::kFactorPullback, "H1 - D1 is effective and pulled back from a factor"),
                      term(1, h1, 0, Tag::kSemiample, "H1 is base point free"),
                      term(2, h2, -1, Tag::kBirationalSystem, "|H2| is birational")};
    return detail::conic_certificates(id, lat, "|H1|: X -> P^2", {0, 1, 0}, 3 * h1, std::move(dec),
                                      {{h2, {0, 1}}, {d2, {2, -1}}, {h1, {4, Rational(-5, 2)}}, {d1, {-1, 0}}},
                                      {at_least(3, Rational(-5, 2), 0), at_least(2, -1, 0)});
  }
  if (id == "conic-3-12") {
    // Basis H2, D1, D2; H1 = 2 H2 - D1 gives the bundle to P^2, H3 = H2 - D2.
    const DivisorClass h2{1, 0, 0}, d1{0, 1, 0}, d2{0, 0, 1}, h1 = 2 * h2 - d1, h3 = h2 - d2;
    auto lat = detail::threefold_lattice({"H2", "D1", "D2"}, 4 * h2 - d1 - d2);
    Decomposition dec{term(1, h2, -1, Tag::kBirationalSystem, "|H2| is the blow-down to P^3"),
                      term(1, h1 + h3, -1, Tag::kBirationalSystem, "|H1 + H3| is birational")};
    return detail::conic_certificates(id, lat, "|H1|: X -> P^2", {1, 2, 0}, 3 * h1, std::move(dec),
                                      {{h2, {3, -3}}, {h3, {1, 0}}, {d1, {-1, three_halves}}},
                                      {at_least(3, -3, 1), at_least(-2, 3, 0)});
  }
  if (id == "conic-4-6") {
    const DivisorClass h{1, 0, 0, 0}, h1{0, 1, 0, 0}, h2{0, 0, 1, 0}, h3{0, 0, 0, 1};
    auto lat = detail::threefold_lattice({"H", "H1", "H2", "H3"}, h + h1 + h2 + h3);
    Decomposition dec{term(1, h, -1, Tag::kBirationalSystem, "|H| is the blow-down to P^3"),
                      term(1, h1 + h2 + h3, -1, Tag::kBirationalSystem, "|H1 + H2 + H3| is birational")};
    return detail::conic_certificates(id, lat, "|H1 + H2|: X -> P^1 x P^1", {1, 0, 0, 1}, 2 * h1 + 2 * h2,
                                      std::move(dec), {{h, {1, 0}}, {h3, {1, 0}}, {h1, {1, -1}}, {h2, {1, -1}}},
                                      {at_least(1, -1, 0)});
  }
  throw DomainError("unknown certificate id '" + id + "'");
}

struct EntryReport {
  std::vector<std::string> matches;
  std::vector<std::string> mismatches;
  std::vector<Assumption> assumptions;
  std::vector<std::string> notes;  // reported, never asserted
  bool ok() const { return mismatches.empty() && !matches.empty(); }
};

/// Runs the attached certificates and compares them with the stored cells.
inline EntryReport verify_entry(const FanoEntry& entry, const std::optional<FanoCertificates>& override_certs = {}) {
  EntryReport report;
  const std::string name = "(" + std::to_string(entry.picard_rank) + "," + std::to_string(entry.mm_number) + ")";
  if (!entry.certificates && !override_certs) {
    report.mismatches.push_back(name + " carries no certificates");
    return report;
  }
  FanoCertificates certs;
  try {
    certs = override_certs ? *override_certs : fano_certificates(*entry.certificates);
  } catch (const std::exception& ex) {
    report.mismatches.push_back(name + ": " + ex.what());
    return report;
  }
  const auto compare = [&](const std::string& what, const Rational& got, const std::optional<TableValue>& cell) {
    if (!cell) {
      report.mismatches.push_back(what + " = " + to_string(got) + " but the table has no cell");
    } else if (cell->is_exact() && cell->hi == got) {
      report.matches.push_back(what + " = " + to_string(got) + " matches the table");
    } else if (!cell->is_exact() && got <= cell->hi && (cell->kind != TableValue::Kind::kInterval || got >= cell->lo)) {
      report.matches.push_back(what + " = " + to_string(got) + " is consistent with the table cell " + cell->str());
    } else {
      report.mismatches.push_back(what + " = " + to_string(got) + " but the table has " + cell->str());
    }
  };

  try {
    const auto lower = check_lower_cert(certs.lower);
    compare("6 * lower bound", 6 * lower.value, entry.six_delta);
  } catch (const std::exception& ex) {
    report.mismatches.push_back("lower certificate: " + std::string(ex.what()));
  }
  const auto upper = check_upper_cert(certs.upper);
  for (const auto& a : upper.assumptions) report.assumptions.push_back(a);
  if (!upper.accepted || !upper.bound) {
    for (const auto& f : upper.failures) report.mismatches.push_back("upper certificate: " + f);
  } else {
    compare("6 * upper bound", 6 * *upper.bound, entry.six_delta);
  }
  try {
    const auto sol = solve_alpha(certs.alpha);
    compare("2 alpha", sol.two_alpha, entry.two_alpha);
  } catch (const std::exception& ex) {
    report.mismatches.push_back("alpha template: " + std::string(ex.what()));
  }
  if (entry.two_alpha && entry.two_alpha->is_exact() && entry.six_delta.is_exact()) {
    report.notes.push_back("2 alpha = " + to_string(entry.two_alpha->hi) +
                           (entry.two_alpha->hi <= entry.six_delta.hi ? " <= " : " > ") + "6 delta = " +
                           to_string(entry.six_delta.hi) + " (comparison reported only)");
  }
  return report;
}

enum class BoundSource { kGeneral2nDelta, kConicAlpha, kTwisted };

inline std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::kGeneral2nDelta: return "GENERAL_2N_DELTA";
    case BoundSource::kConicAlpha: return "CONIC_ALPHA";
    case BoundSource::kTwisted: return "TWISTED";
  }
  return "?";
}

/// N(U, L, T) = O(T^(exponent + eps)) on a dense open U.
struct BoundStatement {
  Rational exponent;
  bool epsilon_required = true;
  bool open_subset_caveat = true;
  BoundSource source = BoundSource::kGeneral2nDelta;
  bool from_upper_bound = false;  // the cell was "≤ q" or an interval; its upper end is used
  bool best = false;
};

/// Both anticanonical statements, with the smallest exponent flagged best.
inline std::vector<BoundStatement> bound_anticanonical(const FanoEntry& e) {
  std::vector<BoundStatement> out;
  out.push_back({e.six_delta.proven_upper(), true, true, BoundSource::kGeneral2nDelta, !e.six_delta.is_exact(), false});
  if (e.two_alpha) out.push_back({e.two_alpha->proven_upper(), true, true, BoundSource::kConicAlpha, !e.two_alpha->is_exact(), false});
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].exponent < out[best].exponent) best = i;
  out[best].best = true;
  return out;
}

/// L = -K_X - t f^*K_S for t >= 1/(2 delta(X, -K_X)): exponent 2 delta.
inline BoundStatement bound_twisted(const Rational& delta, const Rational& t) {
  if (delta <= 0) throw DomainError("bound_twisted requires delta(X, -K_X) > 0");
  const Rational threshold = 1 / (2 * delta);
  if (t < threshold)
    throw DomainError("hypothesis t >= 1/(2 delta(X, -K_X)) fails: t = " + to_string(t) + " < " + to_string(threshold));
  return {2 * delta, true, true, BoundSource::kTwisted, false, true};
}

inline BoundStatement bound_twisted(const FanoEntry& e, const Rational& t) {
  if (!e.six_delta.is_exact())
    throw DomainError("bound_twisted requires an exact delta(X, -K_X); the table has 6 delta " + e.six_delta.str());
  return bound_twisted(e.six_delta.hi / 6, t);
}

}  // namespace deltabound
