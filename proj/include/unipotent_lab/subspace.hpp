#pragma once

// Subspaces of Q^n kept in reduced row echelon form with leftmost pivots.
// When coordinates are ordered by increasing degree, the pivot of a row is
// its leading (lowest) degree, so pivot counts per degree are the dimensions
// of the associated graded of the subspace for the "degree >= d" filtration.

#include <algorithm>
#include <vector>

#include "unipotent_lab/numeric.hpp"

namespace unipotent_lab {

using Vector = std::vector<Rational>;

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline std::size_t leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return v.size();
}

// v -= f * w
inline void axpy(Vector& v, const Rational& f, const Vector& w) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(w[i]) != 0) v[i] -= f * w[i];
}

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : n_(ambient_dim) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Residual of v after subtracting its component along the rows; zero iff v
  // lies in the subspace, and zero at every pivot column regardless.
  Vector reduce(Vector v) const {
    check_size(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (sgn(v[pivots_[k]]) == 0) continue;
      Rational f = v[pivots_[k]];
      axpy(v, f, rows_[k]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (const auto& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  // Coefficients of v in the row basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const {
    Vector c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    if (!contains(v)) throw InvariantViolation("coordinates requested for a vector outside the subspace");
    return c;
  }

  // Returns true when v enlarged the span.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = leading_index(v);
    if (p == n_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v)
      if (sgn(x) != 0) x *= inv;
    for (auto& r : rows_)
      if (sgn(r[p]) != 0) {
        Rational f = r[p];
        axpy(r, f, v);
      }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  void insert_all(const std::vector<Vector>& vs) {
    for (const auto& v : vs) insert(v);
  }

  static Subspace span(std::size_t n, const std::vector<Vector>& vs) {
    Subspace s(n);
    s.insert_all(vs);
    return s;
  }

  static Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    s.insert_all(b.rows());
    return s;
  }

  // Per-degree pivot counts, degree_of(column) in [0, max_degree].
  template <class DegreeOf>
  std::vector<std::size_t> graded_dims(DegreeOf degree_of, std::size_t max_degree) const {
    std::vector<std::size_t> dims(max_degree + 1, 0);
    for (auto p : pivots_) ++dims[degree_of(p)];
    return dims;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_size(const Vector& v) const {
    if (v.size() != n_) throw InvariantViolation("vector dimension does not match the subspace");
  }

  std::size_t n_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

// V/W for W ⊆ V ⊆ Q^n. The complement rows are reduced against W and against
// each other, so coordinates of a vector of V are read off at pivots.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const Subspace& v, Subspace w) : denominator_(std::move(w)) {
    if (!v.contains(denominator_)) throw InvariantViolation("quotient of a space by a non-subspace");
    for (const auto& row : v.rows()) {
      Vector r = denominator_.reduce(row);
      for (std::size_t k = 0; k < complement_.size(); ++k) {
        if (sgn(r[pivots_[k]]) == 0) continue;
        Rational f = r[pivots_[k]];
        axpy(r, f, complement_[k]);
      }
      std::size_t p = leading_index(r);
      if (p == r.size()) continue;
      Rational inv = 1 / r[p];
      for (auto& x : r)
        if (sgn(x) != 0) x *= inv;
      for (auto& c : complement_)
        if (sgn(c[p]) != 0) {
          Rational f = c[p];
          axpy(c, f, r);
        }
      auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
      pivots_.insert(pivots_.begin() + pos, p);
      complement_.insert(complement_.begin() + pos, std::move(r));
    }
    ambient_dim_ = v.ambient_dim();
  }

  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const Subspace& denominator() const { return denominator_; }
  // Representatives of a basis of V/W, ordered by leading column.
  const std::vector<Vector>& representatives() const { return complement_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Coordinates of the class of v (v must lie in V).
  Vector coordinates(const Vector& v) const {
    Vector r = denominator_.reduce(v);
    Vector c(complement_.size());
    for (std::size_t k = 0; k < complement_.size(); ++k) c[k] = r[pivots_[k]];
    for (std::size_t k = 0; k < complement_.size(); ++k)
      if (sgn(c[k]) != 0) axpy(r, c[k], complement_[k]);
    if (!is_zero(r)) throw InvariantViolation("vector does not lie in the numerator of the quotient");
    return c;
  }

  template <class DegreeOf>
  std::vector<std::size_t> graded_dims(DegreeOf degree_of, std::size_t max_degree) const {
    std::vector<std::size_t> dims(max_degree + 1, 0);
    for (auto p : pivots_) ++dims[degree_of(p)];
    return dims;
  }

 private:
  Subspace denominator_;
  std::vector<Vector> complement_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_dim_ = 0;
};

}  // namespace unipotent_lab
