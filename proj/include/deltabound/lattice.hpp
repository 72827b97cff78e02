#pragma once

// Neron-Severi lattices with an integer intersection matrix, divisor and curve
// classes with exact rational coordinates, and the del Pezzo lattice model
// (blow-up of P^2 in r general points).

#include "deltabound/rational.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace deltabound {

struct DivisorTag {};
struct CurveTag {};

/// Coordinates of a numerical class in a lattice basis. The tag keeps divisor
/// and curve classes from being mixed up.
template <typename Tag>
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  ClassVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static ClassVector zero(std::size_t rank) { return ClassVector(std::vector<Rational>(rank)); }
  static ClassVector basis(std::size_t rank, std::size_t i) {
    auto v = zero(rank);
    v.coords_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
  }

  ClassVector& operator+=(const ClassVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  ClassVector& operator-=(const ClassVector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  ClassVector& operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator-(ClassVector a) { return a *= Rational(-1); }
  friend ClassVector operator*(const Rational& c, ClassVector a) { return a *= c; }
  friend ClassVector operator*(ClassVector a, const Rational& c) { return a *= c; }

  friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ClassVector& a, const ClassVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

 private:
  void check_same_size(const ClassVector& o) const {
    if (o.size() != size()) throw DomainError("class dimension mismatch");
  }
  std::vector<Rational> coords_;
};

using DivisorClass = ClassVector<DivisorTag>;
using CurveClass = ClassVector<CurveTag>;

/// On a surface a divisor class is also a curve class.
inline CurveClass as_curve(const DivisorClass& d) { return CurveClass(d.coords()); }
inline DivisorClass as_divisor(const CurveClass& c) { return DivisorClass(c.coords()); }

namespace detail {
struct GeneratorCache {
  std::once_flag once;
  std::vector<DivisorClass> generators;
};
}  // namespace detail

class IntersectionLattice;
inline IntersectionLattice make_del_pezzo_lattice(int r);
inline const std::vector<DivisorClass>& effective_generators(const IntersectionLattice& lat);

/// An integer intersection (or divisor-curve pairing) matrix on a labelled basis,
/// the canonical class, and generators of the effective cone.
///
/// For surfaces the matrix is the intersection form and curve classes share the
/// divisor basis. For the threefold models used by the conic-bundle certificates
/// the matrix pairs the divisor basis with a chosen curve basis.
class IntersectionLattice {
 public:
  IntersectionLattice(std::vector<std::string> labels, std::vector<std::vector<std::int64_t>> gram,
                      DivisorClass canonical, std::vector<DivisorClass> effective_generators = {})
      : labels_(std::move(labels)),
        gram_(std::move(gram)),
        canonical_(std::move(canonical)),
        stored_generators_(std::move(effective_generators)),
        cache_(std::make_shared<detail::GeneratorCache>()) {
    const std::size_t n = labels_.size();
    if (n == 0) throw DomainError("lattice rank must be positive");
    if (gram_.size() != n) throw DomainError("gram matrix has wrong number of rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (gram_[i].size() != n) throw DomainError("gram matrix is not square");
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i]) throw DomainError("gram matrix is not symmetric");
    }
    if (canonical_.size() != n) throw DomainError("canonical class has wrong rank");
    for (const auto& g : stored_generators_)
      if (g.size() != n) throw DomainError("effective generator has wrong rank");
  }

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::int64_t>>& gram() const noexcept { return gram_; }
  std::int64_t gram(std::size_t i, std::size_t j) const { return gram_.at(i).at(j); }
  const DivisorClass& canonical_class() const noexcept { return canonical_; }
  DivisorClass anticanonical() const { return -canonical_; }
  const std::vector<DivisorClass>& stored_generators() const noexcept { return stored_generators_; }

  /// Number of blown-up points when built by make_del_pezzo_lattice.
  std::optional<int> del_pezzo_blowups() const noexcept { return del_pezzo_r_; }

  DivisorClass divisor(std::vector<Rational> coords) const {
    if (coords.size() != rank()) throw DomainError("divisor coordinates do not match lattice rank");
    return DivisorClass(std::move(coords));
  }
  CurveClass curve(std::vector<Rational> coords) const {
    if (coords.size() != rank()) throw DomainError("curve coordinates do not match lattice rank");
    return CurveClass(std::move(coords));
  }
  DivisorClass basis_divisor(std::size_t i) const { return DivisorClass::basis(rank(), i); }

  std::size_t label_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw DomainError("unknown basis label '" + label + "'");
  }

  /// Human-readable class, e.g. "3H - E1 - E2".
  template <typename Tag>
  std::string format(const ClassVector<Tag>& v) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational& c = v[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (first)
        out << (neg ? "-" : "");
      else
        out << (neg ? " - " : " + ");
      if (mag != 1) out << to_string(mag);
      out << labels_[i];
      first = false;
    }
    if (first) out << "0";
    return out.str();
  }

  friend IntersectionLattice make_del_pezzo_lattice(int r);
  friend const std::vector<DivisorClass>& effective_generators(const IntersectionLattice& lat);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::int64_t>> gram_;
  DivisorClass canonical_;
  std::vector<DivisorClass> stored_generators_;
  std::optional<int> del_pezzo_r_;
  std::shared_ptr<detail::GeneratorCache> cache_;
};

/// Lattice of P^2 blown up in r general points: basis H, E1..Er,
/// gram diag(1, -1, ..., -1), K = -3H + sum Ei.
inline IntersectionLattice make_del_pezzo_lattice(int r) {
  if (r < 0 || r > 8) throw DomainError("del Pezzo lattice needs 0 <= r <= 8, got " + std::to_string(r));
  const std::size_t n = static_cast<std::size_t>(r) + 1;
  std::vector<std::string> labels{"H"};
  for (int i = 1; i <= r; ++i) labels.push_back("E" + std::to_string(i));
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n, 0));
  gram[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) gram[i][i] = -1;
  std::vector<Rational> k(n, Rational(1));
  k[0] = -3;
  IntersectionLattice lat(std::move(labels), std::move(gram), DivisorClass(std::move(k)));
  lat.del_pezzo_r_ = r;
  return lat;
}

/// a^T * gram * b. Works for any pairing of divisor and curve classes.
template <typename TagA, typename TagB>
Rational intersect(const IntersectionLattice& lat, const ClassVector<TagA>& a, const ClassVector<TagB>& b) {
  const std::size_t n = lat.rank();
  if (a.size() != n || b.size() != n) throw DomainError("intersect: coordinate length does not match rank");
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t g = lat.gram(i, j);
      if (g != 0 && b[j] != 0) row += b[j] * g;
    }
    total += a[i] * row;
  }
  return total;
}

namespace detail {

// Enumerates b in Z^r with sum b = target_sum and sum b^2 = target_sq, in
// lexicographic order. Pruned by Cauchy-Schwarz on the remaining coordinates.
inline void enumerate_square_sum(int r, std::int64_t target_sum, std::int64_t target_sq,
                                 std::vector<std::int64_t>& prefix,
                                 std::vector<std::vector<std::int64_t>>& out) {
  const int placed = static_cast<int>(prefix.size());
  const int left = r - placed;
  if (left == 0) {
    if (target_sum == 0 && target_sq == 0) out.push_back(prefix);
    return;
  }
  if (target_sq < 0) return;
  // Remaining coordinates must satisfy sum^2 <= left * sumsq.
  if (target_sum * target_sum > static_cast<std::int64_t>(left) * target_sq) return;
  const std::int64_t bound = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(target_sq)));
  for (std::int64_t b = -bound; b <= bound; ++b) {
    prefix.push_back(b);
    enumerate_square_sum(r, target_sum - b, target_sq - b * b, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All (-1)-classes of a del Pezzo lattice: D.D = -1 and D.(-K) = 1.
///
/// Writing D = aH - sum bi Ei gives sum bi = 3a - 1 and sum bi^2 = a^2 + 1; the
/// search runs over |a| <= 3 + r, which Cauchy-Schwarz makes exhaustive.
inline std::vector<DivisorClass> negative_curves(const IntersectionLattice& lat) {
  const auto r_opt = lat.del_pezzo_blowups();
  if (!r_opt) throw DomainError("negative_curves requires a del Pezzo lattice");
  const int r = *r_opt;
  std::vector<DivisorClass> result;
  if (r == 0) return result;
  const std::int64_t bound = 3 + r;
  for (std::int64_t a = -bound; a <= bound; ++a) {
    std::vector<std::vector<std::int64_t>> bs;
    std::vector<std::int64_t> prefix;
    detail::enumerate_square_sum(r, 3 * a - 1, a * a + 1, prefix, bs);
    for (const auto& b : bs) {
      std::vector<Rational> coords{Rational(a)};
      for (auto bi : b) coords.emplace_back(-bi);
      result.emplace_back(std::move(coords));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Generators of the effective cone. For del Pezzo lattices: {H} when r = 0,
/// otherwise the (-1)-curves, plus H - E1 when r = 1 (and H - E1 - E2 when
/// r = 2, already a (-1)-curve). Other lattices return their stored list.
/// The del Pezzo result is computed once and shared by copies of the lattice.
inline const std::vector<DivisorClass>& effective_generators(const IntersectionLattice& lat) {
  if (!lat.del_pezzo_r_) return lat.stored_generators_;
  std::call_once(lat.cache_->once, [&lat] {
    const int r = *lat.del_pezzo_r_;
    const std::size_t n = lat.rank();
    std::vector<DivisorClass> gens;
    if (r == 0) {
      gens.push_back(DivisorClass::basis(n, 0));
    } else {
      gens = negative_curves(lat);
      auto add = [&gens](DivisorClass d) {
        if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(std::move(d));
      };
      if (r == 1) add(DivisorClass::basis(n, 0) - DivisorClass::basis(n, 1));
      if (r == 2) add(DivisorClass::basis(n, 0) - DivisorClass::basis(n, 1) - DivisorClass::basis(n, 2));
      std::sort(gens.begin(), gens.end());
    }
    lat.cache_->generators = std::move(gens);
  });
  return lat.cache_->generators;
}

/// D.C >= 0 for every effective generator C.
inline bool is_nef(const IntersectionLattice& lat, const DivisorClass& d) {
  const auto& gens = effective_generators(lat);
  return std::all_of(gens.begin(), gens.end(),
                     [&](const DivisorClass& c) { return intersect(lat, d, c) >= 0; });
}

/// Comma-separated coordinates, e.g. "3,-1" or "1/2,0".
inline DivisorClass parse_divisor(const IntersectionLattice& lat, const std::string& text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return lat.divisor(std::move(coords));
}

}  // namespace deltabound
