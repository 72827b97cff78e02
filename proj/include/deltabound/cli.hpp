#pragma once

// Command-line front end. run() is the whole program minus process I/O, so
// tests can drive it directly.

#include "deltabound/cert_io.hpp"
#include "deltabound/cones.hpp"
#include "deltabound/delpezzo.hpp"
#include "deltabound/fano_db.hpp"
#include "deltabound/heights.hpp"
#include "deltabound/pell.hpp"

#include <CLI11.hpp>
#include <json.hpp>  // vendored nlohmann::json

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace deltabound::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceLimit = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string payload;     // standard output
  std::string diagnostic;  // standard error
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string join_coords(const std::vector<std::int64_t>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ":" : "") + std::to_string(c[i]);
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// T values 1..tmax, or `steps` log-spaced distinct integers ending at tmax.
inline std::vector<std::int64_t> t_values(std::int64_t tmax, int steps) {
  if (tmax < 1) throw DomainError("--tmax must be at least 1");
  std::vector<std::int64_t> ts;
  if (steps <= 0) {
    for (std::int64_t t = 1; t <= tmax; ++t) ts.push_back(t);
    return ts;
  }
  if (steps == 1) return {tmax};
  for (int i = 0; i < steps; ++i) {
    const double e = static_cast<double>(i) / (steps - 1);
    auto t = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(tmax), e)));
    t = std::clamp<std::int64_t>(t, 1, tmax);
    if (ts.empty() || t > ts.back()) ts.push_back(t);
  }
  if (ts.back() != tmax) ts.push_back(tmax);
  return ts;
}

inline Json fano_entry_json(const FanoEntry& e) {
  Json j = to_json(e);
  j["bounds"] = Json::array();
  for (const auto& b : bound_anticanonical(e))
    j["bounds"].push_back(Json{{"source", to_string(b.source)},
                               {"exponent", to_string(b.exponent)},
                               {"epsilon_required", b.epsilon_required},
                               {"open_subset_caveat", b.open_subset_caveat},
                               {"from_upper_bound", b.from_upper_bound},
                               {"best", b.best}});
  return j;
}

inline Json entry_report_json(const FanoEntry& e, const EntryReport& r) {
  Json a = Json::array();
  for (const auto& x : r.assumptions) a.push_back(assumption_json(x));
  return Json{{"picard_rank", e.picard_rank}, {"mm_number", e.mm_number}, {"ok", r.ok()},
              {"matches", r.matches},         {"mismatches", r.mismatches}, {"assumptions", a},
              {"notes", r.notes}};
}

inline CountTable read_series_csv(const std::string& text) {
  CountTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("T,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'T,count'", lineno, 1);
    try {
      const Integer t = parse_integer(line.substr(0, comma));
      const Integer n = parse_integer(line.substr(comma + 1));
      if (t < 1 || n < 0 || t > Integer(std::numeric_limits<std::int64_t>::max()) ||
          n > Integer(std::numeric_limits<std::int64_t>::max()))
        throw DomainError("out of range");
      table.rows.emplace_back(static_cast<std::int64_t>(t), static_cast<std::uint64_t>(n));
    } catch (const DomainError&) {
      throw ParseError("malformed row '" + line + "'", lineno, 1);
    }
  }
  return table;
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact delta-invariant certificates, Pell-derived K3 exponents, Fano conic bundle tables and "
               "bounded-height point counts"};
  app.require_subcommand(1);
  std::string format;
  int threads = 1;
  std::int64_t seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "Worker threads for point enumeration")->check(CLI::Range(1, 256));
  app.add_option("--seed", seed, "Reserved; no randomized code paths");

  std::int64_t d = 0, k = 0, tmax = 0;
  int degree = 0, rank = 0, number = 0, steps = -1;
  bool certify = false;
  std::string lattice_spec, divisor_text, model_path, series_path, delta_text, eps_text, t_text, cert_path;

  auto* k3 = app.add_subcommand("k3-bound", "s-invariant and counting exponent of a degree 2d K3 surface");
  k3->add_option("--d", d, "Half the degree, H^2 = 2d")->required();
  auto* enr = app.add_subcommand("enriques-bound", "s-invariant bound for a k-very ample class on an Enriques surface");
  enr->add_option("--k", k, "Very ampleness order")->required();
  auto* dp = app.add_subcommand("delpezzo", "delta(S, -K_S) for a del Pezzo surface");
  dp->add_option("--degree", degree, "Degree 1..9")->required();
  dp->add_flag("--certify", certify, "Run the encoded certificates");
  auto* ainv = app.add_subcommand("a-invariant", "Fujita invariant a(X, L) of a nef class by exact LP");
  ainv->add_option("--lattice", lattice_spec, "dp0..dp8, p2, f1, or a lattice JSON file")->required();
  ainv->add_option("--divisor", divisor_text, "Comma-separated coordinates, e.g. 3,-1")->required();
  auto* fano = app.add_subcommand("fano", "Fano conic bundle table");
  fano->require_subcommand(1);
  auto* fl = fano->add_subcommand("lookup", "One table row with its bound statements");
  fl->add_option("--rank", rank)->required();
  fl->add_option("--no", number)->required();
  fl->add_option("--t", t_text, "Also state the twisted bound for L = -K_X - t f^*K_S");
  auto* fv = fano->add_subcommand("verify", "Run attached certificates against the table (all rows if no --rank)");
  fv->add_option("--rank", rank);
  fv->add_option("--no", number);
  auto* fe = fano->add_subcommand("export", "The whole table as JSON or CSV");
  auto* cnt = app.add_subcommand("count", "N(U, L, T) for a variety model");
  cnt->add_option("--model", model_path)->required();
  cnt->add_option("--tmax", tmax)->required();
  cnt->add_option("--steps", steps, "Number of log-spaced T values (default: every T in 1..tmax)");
  auto* fit = app.add_subcommand("fit", "Diagnostic exponent fit of a T,count series");
  fit->add_option("--series", series_path)->required();
  auto* rep = app.add_subcommand("repulsion", "Minimum repulsion product over pairs of points");
  rep->add_option("--model", model_path)->required();
  rep->add_option("--delta", delta_text)->required();
  rep->add_option("--eps", eps_text)->required();
  rep->add_option("--tmax", tmax)->required();
  rep->add_option("--steps", steps, "Number of log-spaced T values (default: only tmax)");
  auto* certs = app.add_subcommand("certs", "Certificate files (JSON Lines)");
  certs->require_subcommand(1);
  auto* cexp = certs->add_subcommand("export", "Write every built-in certificate");
  auto* cver = certs->add_subcommand("verify", "Check every certificate in a file");
  cver->add_option("--file", cert_path)->required();
  for (auto* sub : {k3, enr, dp, ainv, fano, cnt, fit, rep, certs}) sub->fallthrough();
  for (auto* sub : {fl, fv, fe, cexp, cver}) sub->fallthrough();

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.payload = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.payload = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsageError;
    result.diagnostic = std::string(e.what()) + "\n";
    return result;
  }

  const auto want_csv = [&](bool csv_by_default) { return format.empty() ? csv_by_default : format == "csv"; };
  EnumerationOptions eopts;
  eopts.threads = threads;
  std::ostringstream out;

  try {
    if (k3->parsed()) {
      const auto r = k3_exponent(d);
      if (want_csv(false)) {
        out << "d,branch,s,exponent,bound_ok\n"
            << d << "," << to_string(r.s.branch) << "," << r.s.value.str() << "," << r.exponent.str() << ","
            << (r.s.bound_ok ? "true" : "false") << "\n";
      } else {
        Json j{{"d", d},
               {"branch", to_string(r.s.branch)},
               {"s", r.s.value.str()},
               {"s_symbolic", r.s.value.symbolic()},
               {"exponent", r.exponent.str()},
               {"bound_ok", r.s.bound_ok},
               {"sub_bound_ok", r.s.sub_bound_ok},
               {"exponent_bound_check", r.exponent_bound_check}};
        if (r.s.witness) j["witness"] = Json{{"x", r.s.witness->x.str()}, {"y", r.s.witness->y.str()}};
        out << detail::dump(j);
      }
    } else if (enr->parsed()) {
      const Rational s = enriques_bound(k), e = enriques_exponent(k);
      if (want_csv(false))
        out << "k,s_bound,exponent\n" << k << "," << to_string(s) << "," << to_string(e) << "\n";
      else
        out << detail::dump(Json{{"k", k}, {"s_bound", to_string(s)}, {"exponent", to_string(e)}});
    } else if (dp->parsed()) {
      const auto r = delpezzo_delta(degree, certify);
      if (want_csv(false)) {
        out << "degree,delta,delta_lo,delta_hi,certified\n"
            << degree << "," << detail::csv_field(r.delta.str()) << "," << to_string(r.delta.lo) << ","
            << to_string(r.delta.hi) << "," << (r.certified ? "true" : "false") << "\n";
      } else {
        Json j{{"degree", degree},
               {"delta", r.delta.str()},
               {"delta_lo", to_string(r.delta.lo)},
               {"delta_hi", to_string(r.delta.hi)},
               {"certified", r.certified}};
        if (r.certified) {
          Json assumptions = Json::array();
          for (const auto& a : r.upper.assumptions) assumptions.push_back(assumption_json(a));
          j["lower"] = Json{{"value", to_string(r.lower.value)}, {"dominance_note", r.lower.dominance_note}};
          j["upper"] = Json{{"accepted", r.upper.accepted},
                            {"bound", to_string(*r.upper.bound)},
                            {"identities", r.upper.identities},
                            {"assumptions", assumptions},
                            {"conclusion", r.upper.conclusion}};
        }
        out << detail::dump(j);
      }
    } else if (ainv->parsed()) {
      LatticePtr lat;
      if (lattice_spec.size() > 5 && lattice_spec.substr(lattice_spec.size() - 5) == ".json") {
        const std::string text = detail::read_file(lattice_spec);
        Json lj;
        try {
          lj = Json::parse(text);
        } catch (const Json::parse_error& e) {
          const auto [line, col] = deltabound::detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
          throw ParseError("invalid JSON in lattice file", line, col);
        }
        lat = lattice_from_json(lj);
      } else {
        lat = lattice_from_spec(lattice_spec);
      }
      const auto divisor = parse_divisor(*lat, divisor_text);
      const auto a = fujita_a(*lat, divisor);
      if (want_csv(false))
        out << "divisor,a\n" << detail::csv_field(lat->format(divisor)) << "," << a.str() << "\n";
      else
        out << detail::dump(Json{{"lattice", lattice_spec}, {"divisor", lat->format(divisor)}, {"a", a.str()}});
    } else if (fl->parsed()) {
      const auto& e = lookup(rank, number);
      Json j = detail::fano_entry_json(e);
      if (!t_text.empty()) {
        const auto b = bound_twisted(e, parse_rational(t_text));
        j["twisted"] = Json{{"t", t_text}, {"exponent", to_string(b.exponent)}, {"source", to_string(b.source)}};
      }
      if (want_csv(false)) {
        out << "picard_rank,mm_number,six_delta,two_alpha,best_exponent\n";
        std::string best;
        for (const auto& b : bound_anticanonical(e))
          if (b.best) best = to_string(b.exponent);
        out << e.picard_rank << "," << e.mm_number << "," << detail::csv_field(e.six_delta.str()) << ","
            << detail::csv_field(e.two_alpha ? e.two_alpha->str() : "") << "," << best << "\n";
      } else {
        out << detail::dump(j);
      }
    } else if (fv->parsed()) {
      if ((fv->count("--rank") > 0) != (fv->count("--no") > 0)) throw UsageError("fano verify needs both --rank and --no, or neither");
      std::vector<const FanoEntry*> rows;
      if (fv->count("--rank")) {
        rows.push_back(&lookup(rank, number));
      } else {
        for (const auto& e : fano_table())
          if (e.certificates) rows.push_back(&e);
      }
      Json arr = Json::array();
      bool ok = true;
      for (const auto* e : rows) {
        const auto r = verify_entry(*e);
        ok = ok && r.ok();
        arr.push_back(detail::entry_report_json(*e, r));
      }
      if (want_csv(false)) {
        out << "picard_rank,mm_number,ok,matches,mismatches\n";
        for (const auto& j : arr)
          out << j["picard_rank"].get<int>() << "," << j["mm_number"].get<int>() << ","
              << (j["ok"].get<bool>() ? "true" : "false") << "," << j["matches"].size() << ","
              << j["mismatches"].size() << "\n";
      } else {
        out << detail::dump(Json{{"all_ok", ok}, {"entries", arr}});
      }
      if (!ok) result.exit_code = kDomainError;
    } else if (fe->parsed()) {
      if (want_csv(false)) {
        out << "picard_rank,mm_number,anticanonical_degree,six_delta,two_alpha,flags,description\n";
        for (const auto& e : fano_table()) {
          std::string flags;
          for (auto f : e.flags) flags += (flags.empty() ? "" : ";") + to_string(f);
          out << e.picard_rank << "," << e.mm_number << ","
              << (e.anticanonical_degree ? std::to_string(*e.anticanonical_degree) : "") << ","
              << detail::csv_field(e.six_delta.str()) << "," << detail::csv_field(e.two_alpha ? e.two_alpha->str() : "")
              << "," << flags << "," << detail::csv_field(e.description) << "\n";
        }
      } else {
        out << serialize_fano_table(fano_table()) << "\n";
      }
    } else if (cnt->parsed()) {
      const auto model = parse_variety(detail::read_file(model_path));
      const auto table = counting_series(model, detail::t_values(tmax, steps), eopts);
      if (want_csv(true)) {
        out << "T,count\n";
        for (const auto& [t, n] : table.rows) out << t << "," << n << "\n";
      } else {
        Json rows = Json::array();
        for (const auto& [t, n] : table.rows) rows.push_back(Json{{"T", t}, {"count", n}});
        out << detail::dump(Json{{"model", model_path}, {"rows", rows}});
      }
    } else if (fit->parsed()) {
      const auto f = fit_exponent(detail::read_series_csv(detail::read_file(series_path)));
      std::ostringstream slope, r2;
      slope << std::setprecision(6) << std::fixed << f.slope;
      r2 << std::setprecision(6) << std::fixed << f.r_squared;
      if (want_csv(false))
        out << "slope,r_squared,rows_used\n" << slope.str() << "," << r2.str() << "," << f.rows_used << "\n";
      else
        out << detail::dump(Json{{"slope", std::stod(slope.str())},
                                 {"r_squared", std::stod(r2.str())},
                                 {"rows_used", f.rows_used},
                                 {"diagnostic", true}});
    } else if (rep->parsed()) {
      const auto model = parse_variety(detail::read_file(model_path));
      const Rational delta = parse_rational(delta_text), eps = parse_rational(eps_text);
      const auto ts = detail::t_values(tmax, steps < 0 ? 1 : steps);
      Json rows = Json::array();
      std::string csv = "T,min_product_num,min_product_den,p_coords,q_coords\n";
      for (const auto t : ts) {
        const auto r = repulsion_scan(model, delta, eps, t, eopts);
        csv += std::to_string(t) + "," + numerator_of(r.min_value).str() + "," + denominator_of(r.min_value).str() +
               "," + detail::join_coords(r.p.coords) + "," + detail::join_coords(r.q.coords) + "\n";
        rows.push_back(Json{{"T", t},
                            {"min_value", to_string(r.min_value)},
                            {"power", r.power},
                            {"exponent", to_string(r.exponent)},
                            {"p", r.p.coords},
                            {"q", r.q.coords},
                            {"points", r.point_count}});
      }
      if (want_csv(true))
        out << csv;
      else
        out << detail::dump(Json{{"model", model_path}, {"delta", to_string(delta)}, {"eps", to_string(eps)}, {"rows", rows}});
    } else if (cexp->parsed()) {
      for (const auto& j : builtin_certificates()) out << j.dump() << "\n";
    } else if (cver->parsed()) {
      const std::string text = detail::read_file(cert_path);
      std::istringstream in(text);
      std::string line;
      std::size_t lineno = 0;
      Json results = Json::array();
      bool all = true;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j;
        try {
          j = Json::parse(line);
        } catch (const Json::parse_error& e) {
          throw ParseError("invalid JSON certificate", lineno, e.byte == 0 ? 1 : e.byte);
        }
        Json r = verify_certificate_json(j);
        r["line"] = lineno;
        all = all && r["accepted"].get<bool>();
        results.push_back(std::move(r));
      }
      if (want_csv(false)) {
        out << "line,kind,accepted\n";
        for (const auto& r : results)
          out << r["line"].get<std::size_t>() << "," << r["kind"].get<std::string>() << ","
              << (r["accepted"].get<bool>() ? "true" : "false") << "\n";
      } else {
        out << detail::dump(Json{{"all_accepted", all}, {"results", results}});
      }
      if (!all) result.exit_code = kDomainError;
    }
  } catch (const ResourceLimitError& e) {
    return {kResourceLimit, "", std::string("resource limit: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return {kUsageError, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kDomainError, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kDomainError, "", std::string("domain error: ") + e.what() + "\n"};
  } catch (const Json::exception& e) {
    return {kDomainError, "", std::string("malformed input: ") + e.what() + "\n"};
  }
  result.payload = out.str();
  return result;
}

}  // namespace deltabound::cli
