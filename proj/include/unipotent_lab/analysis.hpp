#pragma once

// Graded torsion scans and the one-relator cd = 2 evidence pipeline.
//
// The scans work with the free Lie ring L over Z (Lyndon basis, integer
// structure constants) and the graded ideal r generated by the initial forms
// of the relators. They see presentation-level graded objects, which agree
// with the group's associated graded only under Labute-type conditions, so a
// torsion finding is a graded certificate and its absence up to c is evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unipotent_lab/crossed_module.hpp"
#include "unipotent_lab/free_lie.hpp"
#include "unipotent_lab/linalg.hpp"
#include "unipotent_lab/presentation.hpp"

namespace unipotent_lab {

struct RunConfig {
  unsigned cutoff = 5;
  std::optional<unsigned> prime;
  unsigned precision = 3;
  std::size_t samples = 100;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 20240601;
  std::string output;

  static constexpr unsigned max_cutoff = 10;

  void validate() const {
    if (cutoff < 1 || cutoff > max_cutoff) throw InputError("cutoff must be in 1..10");
    if (prime && !is_prime(*prime)) throw InputError("p must be prime, got " + std::to_string(*prime));
    if (precision < 1) throw InputError("precision must be >= 1");
    if (budget < 1) throw InputError("budget must be >= 1");
  }

  CrossedOptions crossed() const { return {RelatorWeighting::InitialDegree, samples, seed, budget}; }

  // p from the command line, else from the presentation file.
  unsigned resolve_prime(const Presentation& pres) const {
    if (prime) return *prime;
    if (pres.prime) return *pres.prime;
    throw InputError("no prime given: add 'p <prime>' to the presentation or pass --p");
  }
};

inline const char* graded_disclaimer() {
  return "graded certificate: computed on the free Lie ring modulo the ideal of initial forms; "
         "torsion is a certificate at graded level, its absence up to the cutoff is evidence only";
}

struct DegreeTorsion {
  unsigned degree = 0;
  std::size_t ambient_rank = 0;       // rank of the lattice being quotiented
  std::vector<Integer> torsion;       // invariant factors > 1
  std::size_t free_rank = 0;
  bool p_torsion = false;
};

struct TorsionReport {
  std::string kind;  // "qr-scan" or "p-regular"
  std::string presentation_id;
  unsigned cutoff = 0;
  unsigned prime = 0;
  std::vector<std::vector<Integer>> initial_forms;  // per relator, Hall coordinates of its lowest degree
  std::vector<unsigned> initial_degrees;
  std::vector<DegreeTorsion> degrees;  // degrees 1..c
  std::optional<unsigned> obstruction_degree;
  std::string verdict;

  bool clean() const { return !obstruction_degree.has_value(); }
};

namespace detail {

struct GradedIdeal {
  FreeLieAlgebraPtr lie;
  std::vector<std::vector<Integer>> initial_forms;  // full-length integer vectors
  std::vector<unsigned> initial_degrees;
  // Per degree: a Z-basis of r_d and generators of [L, r]_d, as columns in
  // degree-d coordinates.
  std::vector<IntegerMatrix> ideal_basis;
  std::vector<IntegerMatrix> bracket_gens;
  std::vector<SmithForm> ideal_snf;
};

inline IntegerMatrix columns_of(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
  IntegerMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

inline GradedIdeal initial_form_ideal(const Presentation& pres, unsigned cutoff, std::uint64_t budget) {
  if (cutoff < 1 || cutoff > RunConfig::max_cutoff) throw InputError("cutoff must be in 1..10");
  HallBasis sizes(pres.rank(), cutoff);
  if (sizes.size() > budget) throw BudgetExceeded("Lie ring basis exceeds the budget");
  GradedIdeal gi;
  gi.lie = make_free_lie(pres.rank(), cutoff, pres.generators);
  const auto& lie = *gi.lie;
  const auto& b = lie.basis();
  for (const auto& r : pres.relators) {
    Vector v = lie.log_word(r);
    unsigned d = lie.lowest_degree(v);
    gi.initial_degrees.push_back(d);
    // Denominators are cleared but the content is kept, so x^p gives p*x.
    gi.initial_forms.push_back(clear_denominators(lie.homogeneous_part(v, d)));
  }

  gi.ideal_basis.resize(cutoff + 1);
  gi.bracket_gens.resize(cutoff + 1);
  gi.ideal_snf.resize(cutoff + 1);
  for (unsigned d = 1; d <= cutoff; ++d) {
    const std::size_t n = b.degree_size(d), off = b.begin(d);
    std::vector<std::vector<Integer>> brackets, gens;
    if (d > 1) {
      const auto& prev = gi.ideal_basis[d - 1];
      const std::size_t poff = b.begin(d - 1);
      for (std::size_t c = 0; c < prev.cols(); ++c) {
        Vector u = lie.zero();
        for (std::size_t r = 0; r < prev.rows(); ++r) u[poff + r] = Rational(prev(r, c));
        for (std::size_t i = 0; i < lie.rank(); ++i) {
          Vector w = lie.bracket(lie.generator(i), u);
          std::vector<Integer> col(n);
          for (std::size_t r = 0; r < n; ++r) {
            if (w[off + r].get_den() != 1) throw InvariantViolation("non-integral Lie ring structure constant");
            col[r] = w[off + r].get_num();
          }
          brackets.push_back(std::move(col));
        }
      }
    }
    gens = brackets;
    for (std::size_t j = 0; j < gi.initial_forms.size(); ++j) {
      if (gi.initial_degrees[j] != d) continue;
      gens.emplace_back(gi.initial_forms[j].begin() + static_cast<std::ptrdiff_t>(off),
                        gi.initial_forms[j].begin() + static_cast<std::ptrdiff_t>(off + n));
    }
    IntegerMatrix g = columns_of(gens, n);
    SmithForm snf = smith_normal_form(g, true);
    const std::size_t rk = snf.invariants.rank();
    // Columns of G V are U^-1 D; the first rk of them are a Z-basis of r_d.
    IntegerMatrix gv = g * *snf.right;
    IntegerMatrix basis(n, rk);
    for (std::size_t c = 0; c < rk; ++c)
      for (std::size_t r = 0; r < n; ++r) basis(r, c) = gv(r, c);
    gi.ideal_basis[d] = std::move(basis);
    gi.bracket_gens[d] = columns_of(brackets, n);
    gi.ideal_snf[d] = std::move(snf);
  }
  return gi;
}

}  // namespace detail

// Per-degree coinvariants (r / [L, r])_d.
inline TorsionReport qr_graded_scan(const Presentation& pres, unsigned cutoff, unsigned p,
                                    std::uint64_t budget = std::uint64_t{1} << 20) {
  if (!is_prime(p)) throw InputError("p must be prime");
  auto gi = detail::initial_form_ideal(pres, cutoff, budget);
  TorsionReport rep;
  rep.kind = "qr-scan";
  rep.presentation_id = pres.id;
  rep.cutoff = cutoff;
  rep.prime = p;
  rep.initial_forms = gi.initial_forms;
  rep.initial_degrees = gi.initial_degrees;
  for (unsigned d = 1; d <= cutoff; ++d) {
    const auto& snf = gi.ideal_snf[d];
    const auto& u = *snf.left;
    const auto& factors = snf.invariants.factors;
    const std::size_t rk = gi.ideal_basis[d].cols();
    const auto& br = gi.bracket_gens[d];
    // Coordinates of each [L, r] generator v in the lattice basis:
    // (U v)_i / d_i.
    IntegerMatrix coords(rk, br.cols());
    for (std::size_t c = 0; c < br.cols(); ++c) {
      std::vector<Integer> uv = u.apply(br.column(c));
      for (std::size_t i = 0; i < uv.size(); ++i) {
        if (i >= rk) {
          if (sgn(uv[i]) != 0) throw InvariantViolation("[L, r] is not contained in r");
          continue;
        }
        if (!mpz_divisible_p(uv[i].get_mpz_t(), factors[i].get_mpz_t()))
          throw InvariantViolation("[L, r] is not contained in r");
        coords(i, c) = uv[i] / factors[i];
      }
    }
    auto inv = smith_normal_form(coords).invariants;
    DegreeTorsion dt;
    dt.degree = d;
    dt.ambient_rank = rk;
    dt.torsion = inv.torsion();
    dt.free_rank = rk - inv.rank();
    dt.p_torsion = inv.has_p_torsion(p);
    if (!dt.torsion.empty() && !rep.obstruction_degree) rep.obstruction_degree = d;
    rep.degrees.push_back(std::move(dt));
  }
  rep.verdict = rep.obstruction_degree ? "torsion found at degree " + std::to_string(*rep.obstruction_degree)
                                       : "torsion-free up to " + std::to_string(cutoff);
  return rep;
}

// Per-degree quotients (L / r)_d; p-regular when none has p-torsion.
inline TorsionReport p_regularity_scan(const Presentation& pres, unsigned cutoff, unsigned p,
                                       std::uint64_t budget = std::uint64_t{1} << 20) {
  if (!is_prime(p)) throw InputError("p must be prime");
  auto gi = detail::initial_form_ideal(pres, cutoff, budget);
  TorsionReport rep;
  rep.kind = "p-regular";
  rep.presentation_id = pres.id;
  rep.cutoff = cutoff;
  rep.prime = p;
  rep.initial_forms = gi.initial_forms;
  rep.initial_degrees = gi.initial_degrees;
  const auto& b = gi.lie->basis();
  for (unsigned d = 1; d <= cutoff; ++d) {
    const auto& inv = gi.ideal_snf[d].invariants;
    DegreeTorsion dt;
    dt.degree = d;
    dt.ambient_rank = b.degree_size(d);
    dt.torsion = inv.torsion();
    dt.free_rank = dt.ambient_rank - inv.rank();
    dt.p_torsion = inv.has_p_torsion(p);
    if (dt.p_torsion && !rep.obstruction_degree) rep.obstruction_degree = d;
    rep.degrees.push_back(std::move(dt));
  }
  rep.verdict = rep.obstruction_degree ? "p-torsion at degree " + std::to_string(*rep.obstruction_degree)
                                       : "p-regular up to class " + std::to_string(cutoff);
  return rep;
}

struct CDEvidenceReport {
  std::string presentation_id;
  unsigned cutoff = 0;
  unsigned prime = 0;
  unsigned relator_weight = 0;
  bool single_relator = false;
  bool relation_module_free = false;  // (a) dim R̄_d = dim U(g)_{d-w}
  bool kappa_bijective = false;       // (b)
  bool u2_vanishes = false;           // (c) permutational-basis dimension test
  bool p_regular = false;             // (d)
  std::vector<std::size_t> r_bar_dims;
  std::vector<Integer> expected_r_bar_dims;
  std::vector<std::size_t> u2_dims;
  std::optional<unsigned> obstruction_degree;
  std::string verdict;
  DiagramReport diagram;
  TorsionReport regularity;

  bool passed() const { return single_relator && relation_module_free && kappa_bijective && u2_vanishes && p_regular; }
};

inline CDEvidenceReport one_relator_cd2_evidence(const Presentation& pres, unsigned cutoff, unsigned p,
                                                 const CrossedOptions& opt = {},
                                                 std::uint64_t budget = std::uint64_t{1} << 20) {
  if (pres.relator_count() != 1) throw InputError("cd2 evidence needs exactly one relator");
  if (pres.relators[0].is_identity()) throw InputError("cd2 evidence needs a nontrivial relator");
  CDEvidenceReport rep;
  rep.presentation_id = pres.id;
  rep.cutoff = cutoff;
  rep.prime = p;
  rep.single_relator = true;
  CrossedOptions o = opt;
  o.weighting = RelatorWeighting::InitialDegree;
  rep.diagram = build_diagram(pres, cutoff, o);
  const auto& dg = rep.diagram;
  const unsigned w = dg.relator_weights[0];
  rep.relator_weight = w;

  std::optional<unsigned> first_bad;
  auto note = [&](unsigned d) {
    if (!first_bad || d < *first_bad) first_bad = d;
  };

  rep.r_bar_dims = dg.r_bar_dims;
  rep.expected_r_bar_dims.assign(cutoff + 1, 0);
  rep.relation_module_free = true;
  for (unsigned d = 1; d <= cutoff; ++d) {
    if (d >= w) rep.expected_r_bar_dims[d] = dg.envelope_dims[d - w];
    if (Integer(static_cast<unsigned long>(rep.r_bar_dims[d])) != rep.expected_r_bar_dims[d]) {
      rep.relation_module_free = false;
      note(d);
    }
  }

  rep.kappa_bijective = dg.kappa_invertible;
  for (unsigned d = 1; d <= cutoff; ++d)
    if (dg.c_hat_dims[d] != dg.c_bar_dims[d]) {
      rep.kappa_bijective = false;
      note(d);
    }

  rep.u2_dims = dg.u2_dims;
  rep.u2_vanishes = true;
  for (unsigned d = 1; d <= cutoff; ++d)
    if (rep.u2_dims[d] != 0) {
      rep.u2_vanishes = false;
      note(d);
    }

  rep.regularity = p_regularity_scan(pres, cutoff, p, budget);
  rep.p_regular = rep.regularity.clean();
  if (!rep.p_regular) note(*rep.regularity.obstruction_degree);

  rep.obstruction_degree = first_bad;
  if (rep.passed() && !first_bad)
    rep.verdict = "cd=2 evidence up to class " + std::to_string(cutoff);
  else
    rep.verdict = "obstruction at degree " + std::to_string(first_bad.value_or(cutoff + 1));
  return rep;
}

}  // namespace unipotent_lab
