#pragma once

// The free pre-crossed module ker d0 -> F_u(X) attached to a presentation,
// its Peiffer quotient, the abelianized modules C̄ and R̄, and the comparison
// diagram
//
//        R̄^ <--γ-- C̄^        (top row: truncation model, word route)
//        |τ         |κ
//        v          v
//   0 -> u2 -> C̄ --μ--> R̄ -> 0
//
// all at a fixed class cutoff c. Groups are modeled by Lie algebras with the
// BCH product; group elements are their logs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unipotent_lab/lie_subspace.hpp"
#include "unipotent_lab/linalg.hpp"
#include "unipotent_lab/presentation.hpp"

namespace unipotent_lab {

// Degree given to the relator generator y in F(X ∪ Y).
//   InitialDegree: the lowest degree of log(r_y). Then d1 respects degrees
//                  and the truncations on both sides match.
//   Unit:          every generator has degree 1.
enum class RelatorWeighting { InitialDegree, Unit };

inline std::string to_string(RelatorWeighting w) { return w == RelatorWeighting::Unit ? "unit" : "initial-degree"; }

struct CrossedOptions {
  RelatorWeighting weighting = RelatorWeighting::InitialDegree;
  std::size_t samples = 100;
  std::uint64_t seed = 20240601;
  std::uint64_t budget = std::uint64_t{1} << 20;  // cap on the total Lie algebra dimension
};

struct SampleCheck {
  std::size_t samples = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

// Deterministic sample points: coordinates v / 2^k, v in {-2..2}, k in {0,1,2},
// drawn from raw mt19937_64 output only.
class SamplePoints {
 public:
  explicit SamplePoints(std::uint64_t seed) : gen_(seed) {}

  Rational coefficient() {
    long v = static_cast<long>(gen_() % 5) - 2;
    long k = static_cast<long>(gen_() % 3);
    return frac(v, 1L << k);
  }

  Vector in_span(const std::vector<Vector>& rows, std::size_t n) {
    Vector v(n);
    for (const auto& r : rows) {
      Rational c = coefficient();
      if (sgn(c) != 0) axpy(v, -c, r);
    }
    return v;
  }

  Vector anywhere(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = coefficient();
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

inline std::vector<unsigned> relator_weights(const Presentation& pres, unsigned cutoff, RelatorWeighting weighting) {
  std::vector<unsigned> out;
  if (weighting == RelatorWeighting::Unit) return std::vector<unsigned>(pres.relator_count(), 1);
  auto base = make_free_lie(pres.rank(), cutoff);
  for (const auto& r : pres.relators) out.push_back(base->lowest_degree(base->log_word(r)));
  return out;
}

struct PreCrossedModule {
  SimplicialPresentation spres;
  unsigned cutoff = 0;
  RelatorWeighting weighting = RelatorWeighting::InitialDegree;
  std::vector<unsigned> relator_weights;  // c + 1 marks a relator invisible at this cutoff
  FreeLieAlgebraPtr base;                 // F_u(X)
  FreeLieAlgebraPtr total;                // F_u(X ∪ Y)
  GradedLieMap d0, d1, s0;
  GradedLieSubspace top;     // ker d0
  GradedLieSubspace ker_d1;  // ker d1
  // action[i]: ad(s0 x_i) on the top, in top-basis coordinates.
  std::vector<RationalMatrix> action;
  SampleCheck cm1;

  Vector boundary(const Vector& a) const { return d1.apply(a); }
  Vector lift(const Vector& f) const { return s0.apply(f); }
  // ^f a = s0(f) a s0(f)^-1
  Vector act(const Vector& f, const Vector& a) const {
    Vector s = lift(f);
    Vector minus = s;
    for (auto& x : minus) x = -x;
    return total->bch(total->bch(s, a), minus);
  }
};

inline Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

inline Vector conjugate(const FreeLieAlgebra& alg, const Vector& g, const Vector& a) {
  return alg.bch(alg.bch(g, a), negated(g));
}

inline PreCrossedModule build_precrossed(const SimplicialPresentation& spres, unsigned cutoff,
                                         const CrossedOptions& opt = {}) {
  if (cutoff == 0 || cutoff > 10) throw InputError("cutoff must be in 1..10");
  PreCrossedModule m;
  m.spres = spres;
  m.cutoff = cutoff;
  m.weighting = opt.weighting;
  const auto& pres = spres.base;
  const std::size_t nx = spres.x_count(), ny = spres.y_count();
  m.relator_weights = relator_weights(pres, cutoff, opt.weighting);
  m.base = make_free_lie(nx, cutoff, pres.generators);
  std::vector<unsigned> weights(nx, 1);
  weights.insert(weights.end(), m.relator_weights.begin(), m.relator_weights.end());
  if (HallBasis(weights, cutoff).size() > opt.budget) throw BudgetExceeded("Lie model of F(X ∪ Y) exceeds the budget");
  m.total = make_free_lie(weights, cutoff, spres.total_names());

  std::vector<Vector> d0_images, d1_images, s0_images;
  for (std::size_t i = 0; i < nx; ++i) {
    d0_images.push_back(m.base->generator(i));
    d1_images.push_back(m.base->generator(i));
    s0_images.push_back(m.total->generator(i));
  }
  for (std::size_t j = 0; j < ny; ++j) {
    d0_images.push_back(m.base->zero());
    d1_images.push_back(m.base->log_word(pres.relators[j]));
  }
  m.d0 = induced_hom(m.total, m.base, d0_images);
  m.d1 = induced_hom(m.total, m.base, d1_images);
  m.s0 = induced_hom(m.base, m.total, s0_images);
  m.top = kernel_graded(m.d0);
  m.ker_d1 = kernel_graded(m.d1);

  for (std::size_t i = 0; i < nx; ++i) {
    Vector g = m.total->generator(i);
    RationalMatrix a(m.top.dim(), m.top.dim());
    for (std::size_t k = 0; k < m.top.dim(); ++k) a.set_column(k, m.top.space.coordinates(m.total->bracket(g, m.top.basis()[k])));
    m.action.push_back(std::move(a));
  }

  // CM1: d1(^f a) = f d1(a) f^-1.
  SamplePoints pts(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Vector f = pts.anywhere(m.base->dim());
    Vector a = pts.in_span(m.top.basis(), m.total->dim());
    ++m.cm1.samples;
    if (m.boundary(m.act(f, a)) != conjugate(*m.base, f, m.boundary(a))) ++m.cm1.failures;
  }
  return m;
}

struct CrossedModule {
  PreCrossedModule pre;
  GradedLieSubspace peiffer;           // commutator_subalgebra(ker d0, ker d1)
  GradedLieSubspace peiffer_elements;  // ideal spanned by logs of Peiffer elements
  QuotientSpace quotient;              // C_u = top / peiffer
  SampleCheck cm2;

  bool routes_agree() const { return peiffer == peiffer_elements; }
};

// Log of the Peiffer element ^{∂g}g' (g g' g^-1)^-1 for g = exp(b), g' = exp(a).
inline Vector peiffer_element(const PreCrossedModule& m, const Vector& b, const Vector& a) {
  const auto& alg = *m.total;
  Vector acted = conjugate(alg, m.lift(m.boundary(b)), a);
  Vector conj = conjugate(alg, b, a);
  return alg.bch(acted, negated(conj));
}

inline CrossedModule peiffer_quotient(const PreCrossedModule& pcm, const CrossedOptions& opt = {}) {
  CrossedModule cm;
  cm.pre = pcm;
  const auto& alg = *pcm.total;
  const unsigned c = pcm.cutoff;
  cm.peiffer = commutator_subalgebra(pcm.top, pcm.ker_d1);

  // Peiffer elements at t*b, s*a for enough scalings to separate every
  // bihomogeneous component (the log vanishes at t = 0 and at s = 0).
  std::vector<Vector> elements;
  const auto& rows = pcm.top.basis();
  for (const auto& b : rows)
    for (const auto& a : rows) {
      unsigned db = alg.lowest_degree(b), da = alg.lowest_degree(a);
      if (da + db > c) continue;
      unsigned t_max = (c - da) / db, s_max = (c - db) / da;
      for (unsigned t = 1; t <= t_max; ++t)
        for (unsigned s = 1; s <= s_max; ++s) {
          Vector tb = b, sa = a;
          for (auto& x : tb) x *= t;
          for (auto& x : sa) x *= s;
          Vector p = peiffer_element(pcm, tb, sa);
          if (!is_zero(p)) elements.push_back(std::move(p));
        }
    }
  cm.peiffer_elements = ideal_closure(elements, pcm.total);
  if (!cm.routes_agree())
    throw InvariantViolation("Peiffer closure and [ker d0, ker d1] disagree");
  cm.quotient = QuotientSpace(pcm.top.space, cm.peiffer.space);

  // CM2 in the quotient: ^{∂g}g' = g g' g^-1 modulo the Peiffer subgroup.
  SamplePoints pts(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Vector b = pts.in_span(rows, alg.dim());
    Vector a = pts.in_span(rows, alg.dim());
    ++cm.cm2.samples;
    if (!cm.peiffer.contains(peiffer_element(pcm, b, a))) ++cm.cm2.failures;
  }
  return cm;
}

// A graded vector space V/W (representatives in a free Lie algebra) with the
// adjoint action of the base generators.
struct GradedModule {
  std::string name;
  FreeLieAlgebraPtr ambient;
  QuotientSpace space;
  std::vector<RationalMatrix> action;  // one per base generator, dim x dim

  std::size_t dim() const { return space.dim(); }
  std::vector<std::size_t> graded_dims() const { return space.graded_dims(ambient->degree_of(), ambient->cutoff()); }
  unsigned degree(std::size_t k) const { return ambient->degree(space.pivots()[k]); }
  Vector coordinates(const Vector& v) const { return space.coordinates(v); }
  Vector lift(const Vector& q) const {
    Vector v = ambient->zero();
    for (std::size_t k = 0; k < q.size(); ++k)
      if (sgn(q[k]) != 0) axpy(v, -q[k], space.representatives()[k]);
    return v;
  }

  // Each generator action sends degree d into degrees > d.
  bool action_raises_degree() const {
    for (const auto& a : action)
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (sgn(a(r, c)) != 0 && degree(r) <= degree(c)) return false;
    return true;
  }
};

inline GradedModule make_module(std::string name, const FreeLieAlgebraPtr& ambient, const Subspace& numerator,
                                const Subspace& denominator, const std::vector<Vector>& actors) {
  GradedModule mod{std::move(name), ambient, QuotientSpace(numerator, denominator), {}};
  for (const auto& g : actors) {
    RationalMatrix a(mod.dim(), mod.dim());
    for (std::size_t k = 0; k < mod.dim(); ++k)
      a.set_column(k, mod.coordinates(ambient->bracket(g, mod.space.representatives()[k])));
    mod.action.push_back(std::move(a));
  }
  return mod;
}

// C̄_u = C_u / [C_u, C_u] = ker d0 / ([ker d0, ker d0] + Peiffer).
inline GradedModule abelianize(const CrossedModule& cm) {
  const auto& pcm = cm.pre;
  GradedLieSubspace denominator = commutator_subalgebra(pcm.top, pcm.top) + cm.peiffer;
  std::vector<Vector> actors;
  for (std::size_t i = 0; i < pcm.spres.x_count(); ++i) actors.push_back(pcm.total->generator(i));
  return make_module("C_bar", pcm.total, pcm.top.space, denominator.space, actors);
}

// R_u = d1(ker d0), an ideal of F_u(X).
inline GradedLieSubspace relation_ideal(const PreCrossedModule& pcm) {
  GradedLieSubspace r = image(pcm.d1, pcm.top);
  r.subalgebra = true;
  r.ideal = r.closed_under_ambient_bracket();
  return r;
}

// R̄_u = R_u / [R_u, R_u].
inline GradedModule abelianize(const PreCrossedModule& pcm, const GradedLieSubspace& relations) {
  GradedLieSubspace rr = commutator_subalgebra(relations, relations);
  std::vector<Vector> actors;
  for (std::size_t i = 0; i < pcm.spres.x_count(); ++i) actors.push_back(pcm.base->generator(i));
  return make_module("R_bar", pcm.base, relations.space, rr.space, actors);
}

// Symbols with no carrier type here: the Hopf-algebra side enters
// only through envelope dimension counts (pbw_dims).
struct UnhousedSymbolLedger {
  std::vector<std::pair<std::string, std::string>> entries{
      {"O(G)", "coordinate Hopf algebra; only its graded dual dimensions appear, via pbw_dims"},
      {"coproduct", "not represented"},
      {"counit", "not represented"},
      {"F_r A", "conilpotent filtration; replaced by the degree filtration"},
      {"I-perp", "annihilator of the augmentation ideal; not represented"},
      {"completed tensor product", "not represented"},
  };
};

struct DiagramReport {
  std::string presentation_id;
  unsigned cutoff = 0;
  RelatorWeighting weighting = RelatorWeighting::InitialDegree;
  std::vector<unsigned> relator_weights;
  std::vector<std::string> total_names;

  // Entry d is the dimension in degree d (entry 0 unused).
  std::vector<std::size_t> base_dims, total_dims, top_dims, ker_d1_dims, peiffer_dims;
  std::vector<std::size_t> relation_dims, quotient_lie_dims;  // R_u and G_u
  std::vector<Integer> envelope_dims;                         // U(Lie G_u)
  std::vector<std::size_t> c_bar_dims, r_bar_dims, c_hat_dims, r_hat_dims;
  std::vector<Integer> free_c_bar_dims;  // sum over relators of envelope dims shifted by the relator weight
  std::vector<std::size_t> u2_dims, pi2_dims;

  // Column k of each matrix is the image of basis element k. Basis degrees:
  RationalMatrix gamma, kappa, tau, mu;
  std::vector<unsigned> c_bar_degrees, r_bar_degrees, c_hat_degrees, r_hat_degrees;
  std::vector<std::string> c_hat_words, r_hat_words;
  std::vector<Vector> u2_basis;  // representatives in the total Lie algebra
  std::vector<std::string> u2_basis_text;
  std::vector<RationalMatrix> c_bar_action, r_bar_action;

  SampleCheck cm1, cm2;
  bool peiffer_routes_agree = false;
  bool commutative = false;
  bool exact = false;
  bool free = false;
  bool kappa_invertible = false;
  bool tau_invertible = false;
  bool relations_act_trivially = false;
  bool action_graded = false;
  std::vector<std::string> notes;

  bool all_verdicts() const {
    return cm1.passed() && cm2.passed() && peiffer_routes_agree && commutative && exact && free &&
           kappa_invertible && tau_invertible && relations_act_trivially && action_graded;
  }
};

namespace detail {

// Fox-style words [x_i1,[x_i2,...,[x_il, z]...]] for every sequence of base
// generators with weight(z) + l = d.
inline std::vector<std::pair<std::string, Word>> iterated_commutators(const Word& z, std::size_t nx, unsigned length,
                                                                     const std::vector<std::string>& x_names,
                                                                     const std::string& z_name) {
  std::vector<std::pair<std::string, Word>> out{{z_name, z}};
  for (unsigned l = 0; l < length; ++l) {
    std::vector<std::pair<std::string, Word>> next;
    for (const auto& [text, w] : out)
      for (std::size_t i = 0; i < nx; ++i) next.push_back({"[" + x_names[i] + "," + text + "]", commutator(Word::generator(i), w)});
    out = std::move(next);
  }
  return out;
}

struct WordBasis {
  std::vector<std::string> words;
  std::vector<Word> selected;
  std::vector<unsigned> degrees;
  std::vector<Vector> classes;  // coordinates in the module
};

// Greedy choice, degree by degree, of words whose classes are independent
// in the associated graded of the module.
template <class ClassOf>
WordBasis choose_word_basis(const GradedModule& mod, const std::vector<std::pair<unsigned, std::vector<std::pair<std::string, Word>>>>& candidates_by_degree,
                            ClassOf class_of) {
  WordBasis out;
  const auto dims = mod.graded_dims();
  for (const auto& [d, candidates] : candidates_by_degree) {
    if (d >= dims.size()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < mod.dim(); ++k)
      if (mod.degree(k) == d) cols.push_back(k);
    Subspace leading(cols.size());
    for (const auto& [text, w] : candidates) {
      if (leading.dim() == cols.size()) break;
      Vector cls = class_of(w);
      Vector lead(cols.size());
      for (std::size_t i = 0; i < cols.size(); ++i) lead[i] = cls[cols[i]];
      if (!leading.insert(lead)) continue;
      out.words.push_back(text);
      out.selected.push_back(w);
      out.degrees.push_back(d);
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

inline RationalMatrix columns(const std::vector<Vector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) m.set_column(k, cols[k]);
  return m;
}

}  // namespace detail

inline DiagramReport build_diagram(const Presentation& pres, unsigned cutoff, const CrossedOptions& opt = {}) {
  DiagramReport rep;
  rep.presentation_id = pres.id;
  rep.cutoff = cutoff;
  rep.weighting = opt.weighting;

  const auto spres = simplicialize(pres);
  const auto pcm = build_precrossed(spres, cutoff, opt);
  const auto cm = peiffer_quotient(pcm, opt);
  const auto& base = *pcm.base;
  const auto& total = *pcm.total;
  const std::size_t nx = spres.x_count();

  rep.relator_weights = pcm.relator_weights;
  rep.total_names = spres.total_names();
  rep.base_dims = pcm.base->basis().degree_sizes();
  rep.total_dims = pcm.total->basis().degree_sizes();
  rep.top_dims = pcm.top.graded_dims();
  rep.ker_d1_dims = pcm.ker_d1.graded_dims();
  rep.peiffer_dims = cm.peiffer.graded_dims();
  rep.cm1 = pcm.cm1;
  rep.cm2 = cm.cm2;
  rep.peiffer_routes_agree = cm.routes_agree();

  GradedLieSubspace relations = relation_ideal(pcm);
  rep.relation_dims = relations.graded_dims();
  auto g = quotient_algebra(pcm.base, relations);
  rep.quotient_lie_dims = g.graded_dims();
  rep.envelope_dims = pbw_dims(rep.quotient_lie_dims, cutoff);

  GradedModule c_bar = abelianize(cm);
  GradedModule r_bar = abelianize(pcm, relations);
  rep.c_bar_dims = c_bar.graded_dims();
  rep.r_bar_dims = r_bar.graded_dims();
  rep.c_bar_action = c_bar.action;
  rep.r_bar_action = r_bar.action;
  for (std::size_t k = 0; k < c_bar.dim(); ++k) rep.c_bar_degrees.push_back(c_bar.degree(k));
  for (std::size_t k = 0; k < r_bar.dim(); ++k) rep.r_bar_degrees.push_back(r_bar.degree(k));
  rep.action_graded = c_bar.action_raises_degree() && r_bar.action_raises_degree();

  // μ: C̄ -> R̄ induced by d1.
  rep.mu = RationalMatrix(r_bar.dim(), c_bar.dim());
  for (std::size_t k = 0; k < c_bar.dim(); ++k)
    rep.mu.set_column(k, r_bar.coordinates(pcm.boundary(c_bar.space.representatives()[k])));

  // u2 = ker μ, with its filtration read off from lifted representatives.
  auto rki = rank_kernel_image(rep.mu);
  Subspace lifted = c_bar.space.denominator();
  std::vector<Vector> u2_lifts;
  for (const auto& v : rki.kernel) u2_lifts.push_back(c_bar.lift(v));
  Subspace u2_num = lifted;
  u2_num.insert_all(u2_lifts);
  QuotientSpace u2(u2_num, lifted);
  rep.u2_dims = u2.graded_dims(total.degree_of(), cutoff);
  rep.pi2_dims = rep.u2_dims;
  rep.u2_basis = u2.representatives();
  for (const auto& v : rep.u2_basis) rep.u2_basis_text.push_back(total.format(v));

  // Exactness of 0 -> u2 -> C̄ -> R̄ -> 0.
  bool exact = rki.rank == r_bar.dim();
  for (const auto& v : rki.kernel) exact = exact && is_zero(rep.mu.apply(v));
  for (unsigned d = 1; d <= cutoff; ++d) exact = exact && rep.u2_dims[d] + rep.r_bar_dims[d] == rep.c_bar_dims[d];
  rep.exact = exact;

  // Freeness shadow: C̄ looks like one envelope copy per relator, shifted by
  // the relator weight.
  rep.free_c_bar_dims.assign(cutoff + 1, 0);
  for (unsigned w : pcm.relator_weights)
    for (unsigned d = w; d <= cutoff; ++d) rep.free_c_bar_dims[d] += rep.envelope_dims[d - w];
  rep.free = true;
  for (unsigned d = 1; d <= cutoff; ++d) rep.free = rep.free && Integer(static_cast<unsigned long>(rep.c_bar_dims[d])) == rep.free_c_bar_dims[d];

  // R_u acts trivially on C̄: [s0 r, k] lies in the denominator.
  bool trivial = true;
  for (const auto& r : relations.basis())
    for (const auto& k : pcm.top.basis())
      trivial = trivial && c_bar.space.denominator().contains(total.bracket(pcm.lift(r), k));
  rep.relations_act_trivially = trivial;

  // Top row from words: C̄^ on iterated commutators [x,...,[x,y]] in
  // F(X ∪ Y), R̄^ on the same shapes with y replaced by its relator.
  std::vector<std::pair<unsigned, std::vector<std::pair<std::string, Word>>>> c_candidates, r_candidates;
  for (unsigned d = 1; d <= cutoff; ++d) {
    std::vector<std::pair<std::string, Word>> cc, rc;
    for (std::size_t j = 0; j < spres.y_count(); ++j) {
      unsigned w = pcm.relator_weights[j];
      if (w > d) continue;
      for (auto& e : detail::iterated_commutators(Word::generator(spres.y_generator(j)), nx, d - w, pres.generators,
                                                   pres.relator_name(j)))
        cc.push_back(std::move(e));
      for (auto& e : detail::iterated_commutators(pres.relators[j], nx, d - w, pres.generators,
                                                   "(" + format_word(pres.relators[j], pres.generators) + ")"))
        rc.push_back(std::move(e));
    }
    c_candidates.push_back({d, std::move(cc)});
    r_candidates.push_back({d, std::move(rc)});
  }
  auto c_hat = detail::choose_word_basis(c_bar, c_candidates,
                                         [&](const Word& w) { return c_bar.coordinates(total.log_word(w)); });
  auto r_hat = detail::choose_word_basis(r_bar, r_candidates,
                                         [&](const Word& w) { return r_bar.coordinates(base.log_word(w)); });
  rep.c_hat_words = c_hat.words;
  rep.r_hat_words = r_hat.words;
  rep.c_hat_degrees = c_hat.degrees;
  rep.r_hat_degrees = r_hat.degrees;
  rep.c_hat_dims.assign(cutoff + 1, 0);
  rep.r_hat_dims.assign(cutoff + 1, 0);
  for (auto d : c_hat.degrees) ++rep.c_hat_dims[d];
  for (auto d : r_hat.degrees) ++rep.r_hat_dims[d];
  rep.kappa = detail::columns(c_hat.classes, c_bar.dim());
  rep.tau = detail::columns(r_hat.classes, r_bar.dim());
  rep.kappa_invertible = rep.kappa.rows() == rep.kappa.cols() && rank(rep.kappa) == rep.kappa.cols();
  rep.tau_invertible = rep.tau.rows() == rep.tau.cols() && rank(rep.tau) == rep.tau.cols();

  // γ(w) = τ^-1 [log d1(w)], with d1 applied to the word itself.
  rep.commutative = false;
  if (rep.tau_invertible) {
    auto tau_inv = *inverse(rep.tau);
    std::vector<Vector> gamma_cols;
    for (const auto& w : c_hat.selected)
      gamma_cols.push_back(tau_inv.apply(r_bar.coordinates(base.log_word(apply_generator_map(spres.d1, w)))));
    rep.gamma = detail::columns(gamma_cols, r_bar.dim());
    rep.commutative = rep.tau * rep.gamma == rep.mu * rep.kappa;
  }

  rep.notes.push_back("top row is a truncation model built from words; kappa and tau are word-to-class comparisons");
  rep.notes.push_back("pi2 dims are reported equal to u2 dims; this identification assumes a quasirational presentation");
  rep.notes.push_back("filtrations are by Lie degree; dims are those of the associated graded");
  return rep;
}

}  // namespace unipotent_lab
