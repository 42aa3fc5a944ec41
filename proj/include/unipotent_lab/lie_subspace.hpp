#pragma once

// Maps, subalgebras, ideals and quotients inside truncated free Lie algebras.
//
// All subspaces are stored in reduced echelon form with leftmost pivots over
// coordinates sorted by degree, so the per-degree counts reported by
// graded_dims() are the dimensions of the associated graded for the filtration
// by degree >= d. For homogeneous data that is just the grading.

#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "unipotent_lab/free_lie.hpp"
#include "unipotent_lab/linalg.hpp"
#include "unipotent_lab/subspace.hpp"

namespace unipotent_lab {

struct GradedLieSubspace {
  FreeLieAlgebraPtr algebra;
  Subspace space;
  bool subalgebra = false;
  bool ideal = false;

  GradedLieSubspace() = default;
  explicit GradedLieSubspace(FreeLieAlgebraPtr alg) : algebra(std::move(alg)), space(algebra->dim()) {}
  GradedLieSubspace(FreeLieAlgebraPtr alg, Subspace s) : algebra(std::move(alg)), space(std::move(s)) {}

  std::size_t dim() const { return space.dim(); }
  const std::vector<Vector>& basis() const { return space.rows(); }
  bool contains(const Vector& v) const { return space.contains(v); }
  // Entry d is the dimension in degree d, entry 0 is unused.
  std::vector<std::size_t> graded_dims() const { return space.graded_dims(algebra->degree_of(), algebra->cutoff()); }

  bool closed_under_bracket() const {
    const auto& rows = basis();
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (!contains(algebra->bracket(rows[i], rows[j]))) return false;
    return true;
  }

  bool closed_under_ambient_bracket() const {
    for (std::size_t l = 0; l < algebra->rank(); ++l) {
      if (algebra->basis().weights()[l] > algebra->cutoff()) continue;
      Vector g = algebra->generator(l);
      for (const auto& r : basis())
        if (!contains(algebra->bracket(g, r))) return false;
    }
    return true;
  }

  friend bool operator==(const GradedLieSubspace& a, const GradedLieSubspace& b) {
    return a.algebra == b.algebra && a.space == b.space;
  }
};

// Linear map between truncated free Lie algebras, as a matrix on Hall
// coordinates (target dim x source dim). Maps built from generator images
// raise degrees or keep them; block(dt, ds) is the degree-ds to degree-dt part.
struct GradedLieMap {
  FreeLieAlgebraPtr source;
  FreeLieAlgebraPtr target;
  RationalMatrix matrix;

  Vector apply(const Vector& v) const { return matrix.apply(v); }
  GradedLieElement operator()(const GradedLieElement& a) const {
    if (a.algebra != source) throw InputError("element is not in the source of the map");
    return {target, apply(a.coords)};
  }

  RationalMatrix block(unsigned target_degree, unsigned source_degree) const {
    const auto& tb = target->basis();
    const auto& sb = source->basis();
    RationalMatrix m(tb.degree_size(target_degree), sb.degree_size(source_degree));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = matrix(tb.begin(target_degree) + r, sb.begin(source_degree) + c);
    return m;
  }

  bool is_graded() const {
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (std::size_t c = 0; c < matrix.cols(); ++c)
        if (sgn(matrix(r, c)) != 0 && target->degree(r) != source->degree(c)) return false;
    return true;
  }

  // f([e_i, e_j]) = [f e_i, f e_j] on every basis pair within the cutoff.
  bool is_homomorphism() const {
    const std::size_t n = source->dim();
    std::vector<Vector> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = matrix.column(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (source->degree(i) + source->degree(j) > source->cutoff()) continue;
        Vector lhs = target->zero();
        for (const auto& [k, x] : source->bracket_basis(i, j)) axpy(lhs, -x, images[k]);
        if (lhs != target->bracket(images[i], images[j])) return false;
      }
    return true;
  }
};

// The unique bracket-compatible map extending generator images, evaluated
// along the standard bracketing of each Lyndon word.
inline GradedLieMap induced_hom(const FreeLieAlgebraPtr& source, const FreeLieAlgebraPtr& target,
                                const std::vector<Vector>& images) {
  if (images.size() != source->rank()) throw InputError("induced_hom needs one image per generator");
  const auto& b = source->basis();
  for (std::size_t l = 0; l < images.size(); ++l) {
    if (images[l].size() != target->dim()) throw InputError("generator image is not in the target algebra");
    if (target->lowest_degree(images[l]) < b.weights()[l])
      throw InputError("generator image has lower degree than the generator");
  }
  GradedLieMap f{source, target, RationalMatrix(target->dim(), source->dim())};
  std::vector<Vector> col(source->dim());
  for (std::size_t i = 0; i < source->dim(); ++i) {
    const auto& h = b[i];
    col[i] = h.factors ? target->bracket(col[h.factors->first], col[h.factors->second]) : images[h.letters[0]];
    f.matrix.set_column(i, col[i]);
  }
  return f;
}

inline GradedLieMap identity_map(const FreeLieAlgebraPtr& alg) {
  std::vector<Vector> images;
  for (std::size_t l = 0; l < alg->rank(); ++l) images.push_back(alg->generator(l));
  return induced_hom(alg, alg, images);
}

inline GradedLieSubspace kernel_graded(const GradedLieMap& f) {
  if (!f.is_homomorphism()) throw InvariantViolation("kernel_graded: map is not a Lie homomorphism");
  auto rki = rank_kernel_image(f.matrix);
  GradedLieSubspace k(f.source, Subspace::span(f.source->dim(), rki.kernel));
  if (!k.closed_under_bracket()) throw InvariantViolation("kernel is not closed under the bracket");
  k.subalgebra = true;
  k.ideal = k.closed_under_ambient_bracket();
  return k;
}

inline GradedLieSubspace image(const GradedLieMap& f, const GradedLieSubspace& s) {
  GradedLieSubspace out(f.target);
  for (const auto& r : s.basis()) out.space.insert(f.apply(r));
  return out;
}

inline GradedLieSubspace image(const GradedLieMap& f) {
  GradedLieSubspace out(f.target);
  for (std::size_t c = 0; c < f.matrix.cols(); ++c) out.space.insert(f.matrix.column(c));
  return out;
}

namespace detail {

// Grows s to the smallest subspace containing it that is stable under
// ad(a) for every a in `actors`. Vectors are processed first-in first-out.
inline void close_under(const FreeLieAlgebra& alg, Subspace& s, std::deque<Vector> work,
                        const std::vector<Vector>& actors) {
  while (!work.empty()) {
    Vector v = std::move(work.front());
    work.pop_front();
    if (!s.insert(v)) continue;
    for (const auto& a : actors) {
      Vector w = alg.bracket(a, v);
      if (!is_zero(w)) work.push_back(std::move(w));
    }
  }
}

}  // namespace detail

inline GradedLieSubspace ideal_closure(const std::vector<Vector>& gens, const FreeLieAlgebraPtr& alg) {
  GradedLieSubspace out(alg);
  std::vector<Vector> actors;
  for (std::size_t l = 0; l < alg->rank(); ++l)
    if (alg->basis().weights()[l] <= alg->cutoff()) actors.push_back(alg->generator(l));
  detail::close_under(*alg, out.space, std::deque<Vector>(gens.begin(), gens.end()), actors);
  out.subalgebra = true;
  out.ideal = true;
  return out;
}

inline GradedLieSubspace ideal_closure(const std::vector<GradedLieElement>& gens, const FreeLieAlgebraPtr& alg) {
  std::vector<Vector> v;
  for (const auto& g : gens) {
    if (g.algebra != alg) throw InputError("generator is not in the ambient algebra");
    v.push_back(g.coords);
  }
  return ideal_closure(v, alg);
}

// Lie model of the commutator subgroup [A, B]: the span of all [a, b],
// closed under brackets with A + B.
inline GradedLieSubspace commutator_subalgebra(const GradedLieSubspace& a, const GradedLieSubspace& b) {
  if (a.algebra != b.algebra) throw InputError("commutator_subalgebra: different ambient algebras");
  const auto& alg = *a.algebra;
  std::deque<Vector> work;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      Vector w = alg.bracket(u, v);
      if (!is_zero(w)) work.push_back(std::move(w));
    }
  std::vector<Vector> actors = a.basis();
  actors.insert(actors.end(), b.basis().begin(), b.basis().end());
  GradedLieSubspace out(a.algebra);
  detail::close_under(alg, out.space, std::move(work), actors);
  out.subalgebra = true;
  out.ideal = out.closed_under_ambient_bracket();
  return out;
}

// Sum of subspaces of the same algebra.
inline GradedLieSubspace operator+(const GradedLieSubspace& a, const GradedLieSubspace& b) {
  if (a.algebra != b.algebra) throw InputError("sum of subspaces of different algebras");
  GradedLieSubspace out(a.algebra, Subspace::sum(a.space, b.space));
  return out;
}

// L / I for an ideal I. The quotient basis is given by representatives in L
// (the echelon complement), and its bracket is computed through them.
struct QuotientLieAlgebra {
  FreeLieAlgebraPtr ambient;
  GradedLieSubspace ideal;
  QuotientSpace space;
  RationalMatrix projection;  // quotient dim x ambient dim

  std::size_t dim() const { return space.dim(); }
  std::vector<std::size_t> graded_dims() const { return space.graded_dims(ambient->degree_of(), ambient->cutoff()); }
  unsigned degree(std::size_t k) const { return ambient->degree(space.pivots()[k]); }
  Vector project(const Vector& v) const { return space.coordinates(v); }
  Vector lift(const Vector& q) const {
    Vector v = ambient->zero();
    for (std::size_t k = 0; k < q.size(); ++k)
      if (sgn(q[k]) != 0) axpy(v, -q[k], space.representatives()[k]);
    return v;
  }
  Vector bracket(const Vector& p, const Vector& q) const { return project(ambient->bracket(lift(p), lift(q))); }
};

inline QuotientLieAlgebra quotient_algebra(const FreeLieAlgebraPtr& ambient, const GradedLieSubspace& ideal) {
  if (ideal.algebra != ambient) throw InputError("quotient_algebra: ideal of a different algebra");
  if (!ideal.closed_under_ambient_bracket()) throw InputError("quotient_algebra: subspace is not an ideal");
  Subspace whole(ambient->dim());
  for (std::size_t i = 0; i < ambient->dim(); ++i) {
    Vector e = ambient->zero();
    e[i] = 1;
    whole.insert(e);
  }
  QuotientLieAlgebra q{ambient, ideal, QuotientSpace(whole, ideal.space), RationalMatrix()};
  q.projection = RationalMatrix(q.dim(), ambient->dim());
  for (std::size_t i = 0; i < ambient->dim(); ++i) {
    Vector e = ambient->zero();
    e[i] = 1;
    Vector c = q.project(e);
    for (std::size_t k = 0; k < c.size(); ++k) q.projection(k, i) = c[k];
  }
  return q;
}

// Coefficients of prod_d (1 - t^d)^(-g_d) up to t^c, where lie_dims[d] = g_d
// (entry 0 ignored). Entry d of the result is the degree-d envelope dimension.
inline std::vector<Integer> pbw_dims(const std::vector<std::size_t>& lie_dims, unsigned c) {
  std::vector<Integer> out(c + 1, 0);
  out[0] = 1;
  for (unsigned d = 1; d < lie_dims.size() && d <= c; ++d)
    for (std::size_t rep = 0; rep < lie_dims[d]; ++rep)
      for (unsigned n = d; n <= c; ++n) out[n] += out[n - d];
  return out;
}

}  // namespace unipotent_lab
