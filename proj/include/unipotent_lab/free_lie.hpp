#pragma once

// The free Lie algebra truncated above degree c, in Lyndon-basis coordinates,
// together with the truncated free unipotent group it models: elements are
// Lie vectors and the product is Baker-Campbell-Hausdorff, computed as
// log(exp a · exp b) in the truncated associative envelope.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "unipotent_lab/hall_basis.hpp"
#include "unipotent_lab/magnus.hpp"
#include "unipotent_lab/presentation.hpp"
#include "unipotent_lab/series.hpp"
#include "unipotent_lab/subspace.hpp"

namespace unipotent_lab {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class FreeLieAlgebra {
 public:
  FreeLieAlgebra(std::vector<unsigned> weights, unsigned cutoff, std::vector<std::string> names = {})
      : basis_(weights, cutoff),
        space_(make_monomial_space(weights, cutoff)),
        ring_(CoefficientRing::rationals()),
        names_(std::move(names)) {
    if (cutoff > 10) throw InputError("cutoff above the hard cap of 10");
    const std::size_t n = basis_.size();
    hall_series_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& h = basis_[i];
      if (!h.factors) {
        hall_series_.push_back(TruncatedSeries::letter(ring_, space_, h.letters[0]));
      } else {
        const auto& u = hall_series_[h.factors->first];
        const auto& v = hall_series_[h.factors->second];
        hall_series_.push_back(u * v - v * u);
      }
    }
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (basis_.degree(i) + basis_.degree(j) > cutoff) continue;
        const auto& a = hall_series_[i];
        const auto& b = hall_series_[j];
        Vector c = from_series(a * b - b * a);
        SparseVector s;
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(c[k]) != 0) s.emplace_back(k, c[k]);
        table_[i * n + j] = s;
        for (auto& [k, x] : s) x = -x;
        table_[j * n + i] = std::move(s);
      }
  }

  FreeLieAlgebra(std::size_t rank, unsigned cutoff, std::vector<std::string> names = {})
      : FreeLieAlgebra(std::vector<unsigned>(rank, 1), cutoff, std::move(names)) {}

  const HallBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t rank() const { return basis_.rank(); }
  unsigned cutoff() const { return basis_.cutoff(); }
  unsigned degree(std::size_t i) const { return basis_.degree(i); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialSpacePtr& space() const { return space_; }
  const TruncatedSeries& hall_series(std::size_t i) const { return hall_series_[i]; }
  auto degree_of() const {
    return [this](std::size_t i) { return static_cast<std::size_t>(basis_.degree(i)); };
  }

  Vector zero() const { return Vector(dim()); }
  Vector generator(std::size_t letter, const Rational& c = 1) const {
    Vector v = zero();
    v[basis_.generator_index(letter)] = c;
    return v;
  }

  // Structure constants [e_i, e_j]; empty when the degrees exceed the cutoff.
  const SparseVector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector bracket(const Vector& a, const Vector& b) const {
    check(a);
    check(b);
    Vector out = zero();
    const unsigned c = cutoff();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (sgn(b[j]) == 0 || degree(i) + degree(j) > c) continue;
        Rational f = a[i] * b[j];
        for (const auto& [k, x] : bracket_basis(i, j)) out[k] += f * x;
      }
    }
    return out;
  }

  TruncatedSeries to_series(const Vector& a) const {
    check(a);
    TruncatedSeries s(ring_, space_);
    for (std::size_t i = 0; i < dim(); ++i)
      if (sgn(a[i]) != 0) s += hall_series_[i].scaled(a[i]);
    return s;
  }

  // Inverse of to_series on Lie elements. A Lyndon word w is the smallest
  // monomial of its bracketing, so coordinates peel off in increasing order.
  Vector from_series(TruncatedSeries s) const {
    Vector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      Rational c = s.coefficient(basis_[i].letters);
      if (sgn(c) == 0) continue;
      out[i] = c;
      s -= hall_series_[i].scaled(c);
    }
    if (!s.is_zero()) throw InvariantViolation("series is not a Lie element");
    return out;
  }

  Vector bch(const Vector& a, const Vector& b) const {
    return from_series(log(exp(to_series(a)) * exp(to_series(b))));
  }

  // log of the exponential Magnus expansion of a word over this alphabet.
  Vector log_word(const Word& w) const {
    return from_series(log(magnus_expand(w, ring_, space_, MagnusMode::Exponential)));
  }

  // Lowest degree with a nonzero coordinate; cutoff + 1 for zero.
  unsigned lowest_degree(const Vector& a) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (sgn(a[i]) != 0) return degree(i);
    return cutoff() + 1;
  }

  Vector homogeneous_part(const Vector& a, unsigned d) const {
    Vector out = zero();
    for (std::size_t i = basis_.begin(d); i < basis_.end(d); ++i) out[i] = a[i];
    return out;
  }

  std::string format(const Vector& a) const {
    std::string out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (sgn(a[i]) == 0) continue;
      Rational c = a[i];
      bool neg = sgn(c) < 0;
      if (neg) c = -c;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (c != 1) out += to_string(c) + "*";
      out += basis_.format(i, names_);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check(const Vector& a) const {
    if (a.size() != dim()) throw InputError("Lie vector does not belong to this algebra");
  }

  HallBasis basis_;
  MonomialSpacePtr space_;
  CoefficientRing ring_;
  std::vector<std::string> names_;
  std::vector<TruncatedSeries> hall_series_;
  std::vector<SparseVector> table_;
};

using FreeLieAlgebraPtr = std::shared_ptr<const FreeLieAlgebra>;

inline FreeLieAlgebraPtr make_free_lie(std::vector<unsigned> weights, unsigned cutoff,
                                       std::vector<std::string> names = {}) {
  return std::make_shared<const FreeLieAlgebra>(std::move(weights), cutoff, std::move(names));
}

inline FreeLieAlgebraPtr make_free_lie(std::size_t rank, unsigned cutoff, std::vector<std::string> names = {}) {
  return make_free_lie(std::vector<unsigned>(rank, 1), cutoff, std::move(names));
}

// Element of a truncated free Lie algebra (equivalently, via exp, of the
// truncated free unipotent group).
struct GradedLieElement {
  FreeLieAlgebraPtr algebra;
  Vector coords;

  static GradedLieElement zero(const FreeLieAlgebraPtr& alg) { return {alg, alg->zero()}; }
  static GradedLieElement generator(const FreeLieAlgebraPtr& alg, std::size_t letter) {
    return {alg, alg->generator(letter)};
  }

  // Coordinates of the degree-d Hall words.
  Vector component(unsigned d) const {
    const auto& b = algebra->basis();
    return Vector(coords.begin() + static_cast<std::ptrdiff_t>(b.begin(d)),
                  coords.begin() + static_cast<std::ptrdiff_t>(b.end(d)));
  }
  bool is_zero() const { return unipotent_lab::is_zero(coords); }
  std::string format() const { return algebra->format(coords); }

  GradedLieElement operator-() const {
    GradedLieElement out = *this;
    for (auto& x : out.coords) x = -x;
    return out;
  }
  friend GradedLieElement operator+(const GradedLieElement& a, const GradedLieElement& b) {
    same(a, b);
    GradedLieElement out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
  }
  friend GradedLieElement operator-(const GradedLieElement& a, const GradedLieElement& b) { return a + (-b); }
  friend GradedLieElement operator*(const Rational& f, const GradedLieElement& a) {
    GradedLieElement out = a;
    for (auto& x : out.coords) x *= f;
    return out;
  }
  friend bool operator==(const GradedLieElement& a, const GradedLieElement& b) {
    return a.algebra == b.algebra && a.coords == b.coords;
  }

  static void same(const GradedLieElement& a, const GradedLieElement& b) {
    if (a.algebra != b.algebra) throw InputError("Lie elements from different algebras");
  }
};

inline GradedLieElement bracket(const GradedLieElement& a, const GradedLieElement& b) {
  GradedLieElement::same(a, b);
  return {a.algebra, a.algebra->bracket(a.coords, b.coords)};
}

inline GradedLieElement bch_multiply(const GradedLieElement& a, const GradedLieElement& b) {
  GradedLieElement::same(a, b);
  return {a.algebra, a.algebra->bch(a.coords, b.coords)};
}

inline GradedLieElement log_word(const Word& w, const FreeLieAlgebraPtr& alg) { return {alg, alg->log_word(w)}; }

}  // namespace unipotent_lab
