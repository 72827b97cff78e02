#pragma once

// Exact two-phase simplex over the rationals with Bland's pivoting rule.
// Standard form: minimize c.x subject to A x = b, x >= 0.

#include "deltabound/rational.hpp"

#include <vector>

namespace deltabound::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Result {
  Status status = Status::kInfeasible;
  std::vector<Rational> x;  // size n when optimal
  Rational objective = 0;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rhs_[i]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / rows_[pr][pc];
    for (auto& v : rows_[pr]) v *= inv;
    rhs_[pr] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == pr || rows_[i][pc] == 0) continue;
      const Rational f = rows_[i][pc];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (rows_[pr][j] != 0) rows_[i][j] -= f * rows_[pr][j];
      rhs_[i] -= f * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  void erase_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  // Minimizes cost over columns [0, allowed). Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
    while (true) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed && entering == allowed; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
          if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        if (reduced < 0) entering = j;
      }
      if (entering == allowed) return true;
      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        const Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) total += cost[basis_[i]] * rhs_[i];
    return total;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves min c.x, A x = b, x >= 0 exactly. A is m x n (row-major).
inline Result solve(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw DomainError("lp: rhs size does not match row count");
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("lp: row length does not match cost size");

  // Phase I with one artificial column per row.
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n + m));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    rows[i][n + i] = 1;
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  detail::Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.optimize(phase1, n + m);
  if (tab.objective(phase1) != 0) return Result{Status::kInfeasible, {}, 0};

  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < tab.row_count();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col == n) {
      tab.erase_row(i);
    } else {
      tab.pivot(i, col);
      ++i;
    }
  }

  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimize(phase2, n)) return Result{Status::kUnbounded, {}, 0};

  Result result{Status::kOptimal, std::vector<Rational>(n, Rational(0)), 0};
  for (std::size_t i = 0; i < tab.row_count(); ++i) result.x[tab.basis()[i]] = tab.rhs(i);
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

}  // namespace deltabound::lp
