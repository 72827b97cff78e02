#pragma once

// Rational points of bounded max-norm height on projective varieties over Q:
// sharded enumeration, counting series, a diagnostic exponent fit, exact squared
// chordal distances and the empirical repulsion scan.

#include "deltabound/polynomial.hpp"
#include "deltabound/rational.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace deltabound {

struct VarietyModel {
  int ambient_dim = 0;  // points live in P^ambient_dim
  std::vector<Polynomial> equations;
  std::vector<Polynomial> exclusions;  // common zero locus is removed
  int height_power = 1;
  std::vector<std::string> equation_text;
  std::vector<std::string> exclusion_text;

  std::size_t coordinate_count() const { return static_cast<std::size_t>(ambient_dim) + 1; }
};

struct PointRecord {
  std::vector<std::int64_t> coords;
  std::int64_t max_norm = 0;
  Integer height;  // max_norm ^ height_power

  friend bool operator==(const PointRecord& a, const PointRecord& b) { return a.coords == b.coords; }
  friend bool operator<(const PointRecord& a, const PointRecord& b) {
    if (a.max_norm != b.max_norm) return a.max_norm < b.max_norm;
    return a.coords < b.coords;
  }
};

struct CountTable {
  std::vector<std::pair<std::int64_t, std::uint64_t>> rows;  // (T, N(U, L, T))
};

struct EnumerationOptions {
  int threads = 1;
  std::uint64_t max_points = 100'000'000;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Polynomial parse_model_polynomial(const std::string& text, std::size_t nvars, const std::string& where,
                                         bool require_homogeneous) {
  Polynomial p;
  try {
    p = parse_polynomial(text, nvars);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.line(), e.column());
  }
  if (require_homogeneous && !p.is_homogeneous())
    throw DomainError(where + " '" + text + "' is not homogeneous");
  return p;
}

}  // namespace detail

/// Parses a model file: {"ambient_dim": n, "equations": [...], "exclusions": [...], "height_power": m}.
inline VarietyModel parse_variety(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON in variety model", line, col);
  }
  if (!j.is_object()) throw ParseError("variety model must be a JSON object", 1, 1);
  for (const auto& [key, value] : j.items())
    if (key != "ambient_dim" && key != "equations" && key != "exclusions" && key != "height_power")
      throw DomainError("variety model: unknown key '" + key + "'");

  VarietyModel m;
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
    throw DomainError("variety model: ambient_dim must be an integer");
  m.ambient_dim = j["ambient_dim"].get<int>();
  if (m.ambient_dim < 0 || m.ambient_dim > 12) throw DomainError("variety model: ambient_dim must be in 0..12");
  if (j.contains("height_power")) {
    if (!j["height_power"].is_number_integer()) throw DomainError("variety model: height_power must be an integer");
    m.height_power = j["height_power"].get<int>();
  }
  if (m.height_power < 1 || m.height_power > 16) throw DomainError("variety model: height_power must be in 1..16");

  const auto read_list = [&](const char* key, std::vector<Polynomial>& polys, std::vector<std::string>& texts,
                             bool homogeneous) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw DomainError(std::string("variety model: ") + key + " must be an array");
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      const auto& item = j[key][i];
      if (!item.is_string()) throw DomainError(std::string("variety model: ") + key + " entries must be strings");
      const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
      texts.push_back(item.get<std::string>());
      polys.push_back(detail::parse_model_polynomial(texts.back(), m.coordinate_count(), where, homogeneous));
    }
  };
  read_list("equations", m.equations, m.equation_text, true);
  // Exclusions cut out a closed set, so they must be homogeneous too.
  read_list("exclusions", m.exclusions, m.exclusion_text, true);
  return m;
}

namespace detail {

using i128 = __int128;

// A polynomial compiled for evaluation at small integer points.
struct CompiledPoly {
  struct Monomial {
    i128 coef;
    std::vector<int> exps;
  };
  std::vector<Monomial> monomials;
  Polynomial source;
  bool fast = true;  // __int128 evaluation cannot overflow at the configured box

  CompiledPoly() = default;
  CompiledPoly(const Polynomial& p, std::int64_t box) : source(p) {
    Integer bound = 0;
    for (const auto& [e, c] : p.terms()) {
      const Integer mag = c < 0 ? Integer(-c) : c;
      int deg = 0;
      for (int k : e) deg += k;
      bound += mag * boost::multiprecision::pow(Integer(box), static_cast<unsigned>(deg));
      if (mag > Integer(std::numeric_limits<std::int64_t>::max())) fast = false;
      monomials.push_back({fast ? static_cast<i128>(static_cast<std::int64_t>(c)) : 0, e});
    }
    if (bound >= (Integer(1) << 120)) fast = false;
  }

  i128 eval_fast(const std::int64_t* x) const {
    i128 total = 0;
    for (const auto& m : monomials) {
      i128 v = m.coef;
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        for (int k = 0; k < m.exps[i]; ++k) v *= x[i];
      total += v;
    }
    return total;
  }
  Integer eval_exact(const std::int64_t* x) const {
    std::vector<Integer> pt(source.nvars());
    for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = x[i];
    return source.evaluate(pt);
  }
  bool vanishes(const std::int64_t* x) const { return fast ? eval_fast(x) == 0 : eval_exact(x) == 0; }
};

inline Integer integer_of(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer out = static_cast<std::uint64_t>(u >> 64);
  out = (out << 64) + static_cast<std::uint64_t>(u);
  return neg ? Integer(-out) : out;
}

inline std::int64_t integer_root(std::int64_t t, int m) {
  if (t < 1) return 0;
  if (m == 1) return t;
  auto r = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(t), 1.0 / m)));
  const auto power_le = [&](std::int64_t b) {
    Integer p = boost::multiprecision::pow(Integer(b), static_cast<unsigned>(m));
    return p <= t;
  };
  while (r > 0 && !power_le(r)) --r;
  while (power_le(r + 1)) ++r;
  return r;
}

// Enumeration state for one model at max-norm bound `box`.
class ShardEnumerator {
 public:
  ShardEnumerator(const VarietyModel& model, std::int64_t box) : model_(model), box_(box) {
    n_ = model.coordinate_count();
    for (const auto& p : model.equations) equations_.emplace_back(p, box);
    for (const auto& p : model.exclusions) exclusions_.emplace_back(p, box);
    // Solve for the last coordinate from the first equation of degree 1 or 2 in it.
    const std::size_t last = n_ - 1;
    for (const auto& p : model.equations) {
      const int k = p.degree_in(last);
      if (n_ >= 2 && (k == 1 || k == 2)) {
        solver_.emplace();
        solver_->a = CompiledPoly(p.coefficient_of(last, 2), box);
        solver_->b = CompiledPoly(p.coefficient_of(last, 1), box);
        solver_->c = CompiledPoly(p.coefficient_of(last, 0), box);
        break;
      }
    }
  }

  std::size_t shard_count() const { return static_cast<std::size_t>(box_) + 1; }

  /// Calls visit(coords, max_norm) for every point with x0 = shard, in lexicographic order.
  template <typename Visit>
  void run_shard(std::int64_t x0, Visit&& visit) const {
    std::vector<std::int64_t> x(n_, 0);
    x[0] = x0;
    if (n_ == 1) {
      if (x0 == 1) emit(x, visit);
      return;
    }
    recurse(x, 1, x0 > 0, visit);
  }

 private:
  struct Solver {
    CompiledPoly a, b, c;
  };

  template <typename Visit>
  void recurse(std::vector<std::int64_t>& x, std::size_t i, bool leading_done, Visit& visit) const {
    const std::size_t last = n_ - 1;
    if (i == last) {
      if (solver_) {
        solve_last(x, leading_done, visit);
      } else {
        for (std::int64_t v = leading_done ? -box_ : 1; v <= box_; ++v) {
          x[last] = v;
          emit(x, visit);
        }
      }
      return;
    }
    for (std::int64_t v = leading_done ? -box_ : 0; v <= box_; ++v) {
      x[i] = v;
      recurse(x, i + 1, leading_done || v > 0, visit);
    }
    x[i] = 0;
  }

  template <typename Visit>
  void solve_last(std::vector<std::int64_t>& x, bool leading_done, Visit& visit) const {
    const std::size_t last = n_ - 1;
    const std::int64_t lo = leading_done ? -box_ : 1;
    x[last] = 0;
    std::vector<std::int64_t> roots;
    const auto in_range = [&](const Integer& r) { return r >= lo && r <= box_; };
    const Integer a = solver_->a.fast ? integer_of(solver_->a.eval_fast(x.data())) : solver_->a.eval_exact(x.data());
    const Integer b = solver_->b.fast ? integer_of(solver_->b.eval_fast(x.data())) : solver_->b.eval_exact(x.data());
    const Integer c = solver_->c.fast ? integer_of(solver_->c.eval_fast(x.data())) : solver_->c.eval_exact(x.data());
    if (a == 0) {
      if (b == 0) {
        if (c != 0) return;
        for (std::int64_t v = lo; v <= box_; ++v) {
          x[last] = v;
          emit(x, visit);
        }
        return;
      }
      if (c % b == 0 && in_range(-c / b)) roots.push_back(static_cast<std::int64_t>(-c / b));
    } else {
      const Integer disc = b * b - 4 * a * c;
      if (disc < 0 || !is_perfect_square(disc)) return;
      const Integer s = isqrt(disc);
      for (const Integer& num : {Integer(-b - s), Integer(-b + s)}) {
        if (num % (2 * a) != 0) continue;
        const Integer r = num / (2 * a);
        if (in_range(r)) roots.push_back(static_cast<std::int64_t>(r));
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    }
    for (std::int64_t r : roots) {
      x[last] = r;
      emit(x, visit);
    }
  }

  template <typename Visit>
  void emit(const std::vector<std::int64_t>& x, Visit& visit) const {
    std::int64_t h = 0, g = 0;
    for (std::int64_t v : x) {
      const std::int64_t a = v < 0 ? -v : v;
      h = std::max(h, a);
      g = std::gcd(g, a);
    }
    if (g != 1) return;
    for (const auto& e : equations_)
      if (!e.vanishes(x.data())) return;
    if (!exclusions_.empty() &&
        std::all_of(exclusions_.begin(), exclusions_.end(), [&](const CompiledPoly& p) { return p.vanishes(x.data()); }))
      return;
#ifndef NDEBUG
    const auto lead = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    assert(lead != x.end() && *lead > 0);
#endif
    visit(x, h);
  }

  const VarietyModel& model_;
  std::int64_t box_;
  std::size_t n_ = 0;
  std::vector<CompiledPoly> equations_;
  std::vector<CompiledPoly> exclusions_;
  std::optional<Solver> solver_;
};

// Runs fn(shard) for shard in [0, count) on `threads` workers; rethrows the
// first failure in shard order, so the reported error does not depend on scheduling.
template <typename Fn>
void run_shards(std::size_t count, int threads, Fn fn) {
  if (threads < 1) throw DomainError("thread count must be at least 1");
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t s = next.fetch_add(1);
      if (s >= count) return;
      try {
        fn(s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

class PointBudget {
 public:
  explicit PointBudget(std::uint64_t cap) : cap_(cap) {}
  void take() {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_)
      throw ResourceLimitError("enumeration exceeded the cap of " + std::to_string(cap_) + " points");
  }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace detail

/// Largest max-norm b with b^height_power <= T.
inline std::int64_t max_norm_bound(const VarietyModel& model, std::int64_t t) {
  return detail::integer_root(t, model.height_power);
}

/// Points of the open set with H(P) = max|xi|^height_power <= T, ordered by
/// (max-norm, coordinates). The order does not depend on the thread count.
inline std::vector<PointRecord> enumerate_points(const VarietyModel& model, std::int64_t t,
                                                 const EnumerationOptions& opts = {}) {
  if (t < 1) throw DomainError("enumerate_points requires T >= 1");
  const std::int64_t box = max_norm_bound(model, t);
  std::vector<PointRecord> out;
  if (box < 1) return out;
  detail::ShardEnumerator en(model, box);
  std::vector<std::vector<PointRecord>> shards(en.shard_count());
  detail::PointBudget budget(opts.max_points);
  detail::run_shards(en.shard_count(), opts.threads, [&](std::size_t s) {
    en.run_shard(static_cast<std::int64_t>(s), [&](const std::vector<std::int64_t>& x, std::int64_t h) {
      budget.take();
      shards[s].push_back({x, h, boost::multiprecision::pow(Integer(h), static_cast<unsigned>(model.height_power))});
    });
  });
  for (auto& s : shards) out.insert(out.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of points with max-norm exactly b, for b = 0..box.
inline std::vector<std::uint64_t> shell_counts(const VarietyModel& model, std::int64_t box,
                                               const EnumerationOptions& opts = {}) {
  std::vector<std::uint64_t> total(static_cast<std::size_t>(std::max<std::int64_t>(box, 0)) + 1, 0);
  if (box < 1) return total;
  detail::ShardEnumerator en(model, box);
  std::vector<std::vector<std::uint64_t>> shards(en.shard_count());
  detail::PointBudget budget(opts.max_points);
  detail::run_shards(en.shard_count(), opts.threads, [&](std::size_t s) {
    auto& local = shards[s];
    local.assign(total.size(), 0);
    en.run_shard(static_cast<std::int64_t>(s), [&](const std::vector<std::int64_t>&, std::int64_t h) {
      budget.take();
      ++local[static_cast<std::size_t>(h)];
    });
  });
  for (const auto& local : shards)
    for (std::size_t b = 0; b < total.size(); ++b) total[b] += local[b];
  return total;
}

/// N(U, L, T) for each T in an ascending list, from one enumeration at the largest T.
inline CountTable counting_series(const VarietyModel& model, const std::vector<std::int64_t>& ts,
                                  const EnumerationOptions& opts = {}) {
  if (!std::is_sorted(ts.begin(), ts.end())) throw DomainError("counting_series requires ascending T values");
  CountTable table;
  if (ts.empty()) return table;
  if (ts.front() < 1) throw DomainError("counting_series requires T >= 1");
  const auto shells = shell_counts(model, max_norm_bound(model, ts.back()), opts);
  std::int64_t b = 0;
  std::uint64_t running = 0;
  for (const std::int64_t t : ts) {
    const std::int64_t bound = max_norm_bound(model, t);
    while (b < bound) running += shells[static_cast<std::size_t>(++b)];
    table.rows.emplace_back(t, running);
  }
  return table;
}

struct ExponentFit {
  double slope = 0;
  double r_squared = 0;
  std::size_t rows_used = 0;
};

/// Diagnostic least-squares slope of log N against log T, over the rows whose
/// log T lies in the upper half of the log-range of the positive rows.
inline ExponentFit fit_exponent(const CountTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [t, n] : table.rows)
    if (n > 0 && t > 0) pts.emplace_back(std::log(static_cast<double>(t)), std::log(static_cast<double>(n)));
  if (pts.size() < 3) throw DomainError("fit_exponent needs at least 3 rows with positive counts");
  double lo = pts.front().first, hi = pts.front().first;
  for (const auto& p : pts) {
    lo = std::min(lo, p.first);
    hi = std::max(hi, p.first);
  }
  const double mid = (lo + hi) / 2;
  std::vector<std::pair<double, double>> used;
  for (const auto& p : pts)
    if (p.first >= mid) used.push_back(p);
  if (used.size() < 2) throw DomainError("fit_exponent: fewer than 2 rows in the upper half of the T-range");
  double mx = 0, my = 0;
  for (const auto& [x, y] : used) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(used.size());
  my /= static_cast<double>(used.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : used) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0) throw DomainError("fit_exponent: all T values in the fitted range are equal");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.rows_used = used.size();
  return fit;
}

/// Squared chordal distance |x ^ y|^2 / (|x|^2 |y|^2) = 1 - (x.y)^2 / (|x|^2 |y|^2).
inline Rational proj_distance(const PointRecord& p, const PointRecord& q) {
  if (p.coords.size() != q.coords.size()) throw DomainError("proj_distance: ambient dimensions differ");
  Integer xx = 0, yy = 0, xy = 0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    xx += Integer(p.coords[i]) * p.coords[i];
    yy += Integer(q.coords[i]) * q.coords[i];
    xy += Integer(p.coords[i]) * q.coords[i];
  }
  if (xx == 0 || yy == 0) throw DomainError("proj_distance: zero coordinate vector");
  return Rational(xx * yy - xy * xy, xx * yy);
}

/// sqrt(a) <= sqrt(b) + sqrt(c) for nonnegative rationals, without square roots.
inline bool sqrt_triangle_holds(const Rational& a, const Rational& b, const Rational& c) {
  const Rational t = a - b - c;
  return t <= 0 || t * t <= 4 * b * c;
}

struct RepulsionResult {
  /// min over distinct pairs of (dist^2 (H(P) H(Q))^(2(delta+eps)))^power, where
  /// power is the denominator of 2(delta+eps); power = 1 gives the squared product itself.
  Rational min_value;
  std::int64_t power = 1;
  Rational exponent;  // 2 (delta + eps)
  PointRecord p;
  PointRecord q;
  std::size_t point_count = 0;
};

namespace detail {

struct PairValue {
  Integer num;
  Integer den;
};

inline bool less_value(const PairValue& a, const PairValue& b) { return a.num * b.den < b.num * a.den; }

}  // namespace detail

/// Exhaustive scan of distinct pairs of points with height <= T. Ties keep the
/// first pair in (point order, point order) order, independent of threads.
inline RepulsionResult repulsion_scan(const VarietyModel& model, const Rational& delta, const Rational& eps,
                                      std::int64_t t, const EnumerationOptions& opts = {}) {
  if (delta < 0 || eps < 0) throw DomainError("repulsion_scan requires delta >= 0 and eps >= 0");
  const auto points = enumerate_points(model, t, opts);
  if (points.size() < 2) throw DomainError("repulsion_scan needs at least 2 points of height <= T");

  RepulsionResult res;
  res.exponent = 2 * (delta + eps);
  const Integer a_big = numerator_of(res.exponent), b_big = denominator_of(res.exponent);
  if (a_big > 64 || b_big > 64) throw DomainError("repulsion_scan: 2(delta+eps) must have numerator and denominator <= 64");
  const unsigned a = static_cast<unsigned>(a_big), b = static_cast<unsigned>(b_big);
  res.power = b;
  res.point_count = points.size();
  const std::size_t n = points.size();
  const std::size_t dim = points.front().coords.size();

  // Fast path when every num * den cross product fits in 126 bits.
  std::int64_t hmax = points.back().max_norm;
  const double norm_bits = std::log2(static_cast<double>(dim) * static_cast<double>(hmax) * static_cast<double>(hmax) + 1);
  const double hh_bits = 2.0 * model.height_power * std::log2(static_cast<double>(hmax) + 1);
  const double den_bits = b * 2 * norm_bits;
  const double num_bits = den_bits + a * hh_bits;
  const bool fast = num_bits + den_bits < 124 && norm_bits < 60;

  struct Best {
    bool found = false;
    std::size_t j = 0;
    detail::PairValue v;
  };
  std::vector<Best> per_i(n);
  std::vector<unsigned __int128> sq(n);
  std::vector<Integer> height_pow(fast ? 0 : n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 s = 0;
    for (auto c : points[i].coords) s += static_cast<unsigned __int128>(static_cast<__int128>(c) * c);
    sq[i] = s;
  }
  if (!fast)
    for (std::size_t i = 0; i < n; ++i) height_pow[i] = points[i].height;

  const auto upow = [](unsigned __int128 base, unsigned k) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
  };
  std::vector<unsigned __int128> hpow_fast(fast ? n : 0);
  if (fast)
    for (std::size_t i = 0; i < n; ++i) hpow_fast[i] = upow(static_cast<unsigned __int128>(static_cast<std::uint64_t>(points[i].height)), a);

  const std::size_t chunk = 64;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  detail::run_shards(chunks, opts.threads, [&](std::size_t c) {
    for (std::size_t i = c * chunk; i < std::min(n, (c + 1) * chunk); ++i) {
      Best& best = per_i[i];
      const auto& x = points[i].coords;
      if (fast) {
        unsigned __int128 best_num = 0, best_den = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
          const auto& y = points[j].coords;
          __int128 dot = 0;
          for (std::size_t k = 0; k < dim; ++k) dot += static_cast<__int128>(x[k]) * y[k];
          const unsigned __int128 dd = sq[i] * sq[j];
          const unsigned __int128 w = dd - static_cast<unsigned __int128>(dot * dot);
          const unsigned __int128 num = upow(w, b) * hpow_fast[i] * hpow_fast[j];
          const unsigned __int128 den = upow(dd, b);
          if (!best.found || num * best_den < best_num * den) {
            best.found = true;
            best.j = j;
            best_num = num;
            best_den = den;
          }
        }
        if (best.found) best.v = {detail::integer_of(static_cast<__int128>(best_num)), detail::integer_of(static_cast<__int128>(best_den))};
      } else {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rational d2 = proj_distance(points[i], points[j]);
          const Integer hh = boost::multiprecision::pow(height_pow[i] * height_pow[j], a);
          detail::PairValue v{boost::multiprecision::pow(numerator_of(d2), b) * hh,
                              boost::multiprecision::pow(denominator_of(d2), b)};
          if (!best.found || detail::less_value(v, best.v)) {
            best.found = true;
            best.j = j;
            best.v = std::move(v);
          }
        }
      }
    }
  });

  std::optional<std::size_t> bi;
  for (std::size_t i = 0; i < n; ++i)
    if (per_i[i].found && (!bi || detail::less_value(per_i[i].v, per_i[*bi].v))) bi = i;
  res.min_value = Rational(per_i[*bi].v.num, per_i[*bi].v.den);
  res.p = points[*bi];
  res.q = points[per_i[*bi].j];
  return res;
}

inline std::string format_point(const std::vector<std::int64_t>& coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

}  // namespace deltabound
