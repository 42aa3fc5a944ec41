#pragma once

// Exact rank/kernel/image, Smith normal form and quotient dimensions.

#include <algorithm>
#include <optional>
#include <vector>

#include "unipotent_lab/matrix.hpp"
#include "unipotent_lab/numeric.hpp"

namespace unipotent_lab {

struct RankKernelImage {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;  // basis of {v : M v = 0}
  std::vector<std::vector<Rational>> image;   // basis of the column space
  std::vector<std::size_t> pivot_columns;
};

namespace detail {

// Fraction-free (Bareiss) forward elimination in place. Returns the pivot
// columns; rows [0, rank) hold the echelon form.
inline std::vector<std::size_t> bareiss_echelon(IntegerMatrix& a) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && sgn(a(sel, c)) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(r, sel);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline IntegerMatrix integer_rows(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = clear_denominators(m.row(r));
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = row[c];
  }
  return out;
}

}  // namespace detail

inline RankKernelImage rank_kernel_image(const RationalMatrix& m) {
  IntegerMatrix a = detail::integer_rows(m);
  RankKernelImage out;
  out.pivot_columns = detail::bareiss_echelon(a);
  out.rank = out.pivot_columns.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t k = out.rank; k-- > 0;) {
      std::size_t pc = out.pivot_columns[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (sgn(a(k, j)) != 0 && sgn(v[j]) != 0) s += Rational(a(k, j)) * v[j];
      v[pc] = -s / Rational(a(k, pc));
    }
    out.kernel.push_back(std::move(v));
  }
  for (auto c : out.pivot_columns) out.image.push_back(m.column(c));
  return out;
}

inline std::size_t rank(const RationalMatrix& m) {
  IntegerMatrix a = detail::integer_rows(m);
  return detail::bareiss_echelon(a).size();
}

inline std::size_t rank(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  return detail::bareiss_echelon(a).size();
}

// Inverse of a square matrix, or nullopt when singular (Gauss-Jordan).
inline std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && sgn(a(sel, c)) == 0) ++sel;
    if (sel == n) return std::nullopt;
    a.swap_rows(c, sel);
    inv.swap_rows(c, sel);
    Rational f = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      Rational g = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(c, j)) != 0) a(r, j) -= g * a(c, j);
        if (sgn(inv(c, j)) != 0) inv(r, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

// Diagonal of a Smith normal form: d1 | d2 | ... with trailing zeros.
struct InvariantFactors {
  std::vector<Integer> factors;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(factors.begin(), factors.end(), [](const Integer& d) { return sgn(d) != 0; }));
  }
  std::vector<Integer> torsion() const {
    std::vector<Integer> out;
    for (const auto& d : factors)
      if (d > 1) out.push_back(d);
    return out;
  }
  bool has_torsion() const { return !torsion().empty(); }
  bool has_p_torsion(unsigned p) const {
    for (const auto& d : torsion())
      if (mpz_divisible_ui_p(d.get_mpz_t(), p)) return true;
    return false;
  }
  bool divisibility_chain() const {
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (sgn(factors[i]) == 0) {
        if (sgn(factors[i + 1]) != 0) return false;
      } else if (!mpz_divisible_p(factors[i + 1].get_mpz_t(), factors[i].get_mpz_t())) {
        return false;
      }
    }
    return true;
  }
};

struct SmithForm {
  InvariantFactors invariants;
  // U * M * V = diag(factors); present when transforms were requested.
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
};

// Smith normal form by repeated smallest-|entry| pivoting; ties go to the
// smallest (row, col). M is read as a map Z^cols -> Z^rows, so
// coker M = Z^rows / M Z^cols ≅ ⊕ Z/d_i ⊕ Z^(rows - rank).
inline SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false) {
  IntegerMatrix d = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  IntegerMatrix u = with_transforms ? IntegerMatrix::identity(rows) : IntegerMatrix();
  IntegerMatrix v = with_transforms ? IntegerMatrix::identity(cols) : IntegerMatrix();

  auto row_op = [&](std::size_t target, std::size_t source, const Integer& q) {  // row_t -= q row_s
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(d(source, c)) != 0) d(target, c) -= q * d(source, c);
    if (with_transforms)
      for (std::size_t c = 0; c < rows; ++c)
        if (sgn(u(source, c)) != 0) u(target, c) -= q * u(source, c);
  };
  auto col_op = [&](std::size_t target, std::size_t source, const Integer& q) {  // col_t -= q col_s
    for (std::size_t r = 0; r < rows; ++r)
      if (sgn(d(r, source)) != 0) d(r, target) -= q * d(r, source);
    if (with_transforms)
      for (std::size_t r = 0; r < cols; ++r)
        if (sgn(v(r, source)) != 0) v(r, target) -= q * v(r, source);
  };

  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          if (sgn(d(r, c)) == 0) continue;
          if (pr == rows || mpz_cmpabs(d(r, c).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr == rows) break;
      d.swap_rows(t, pr);
      if (with_transforms) u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      if (with_transforms) v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(d(r, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(r, t, q);
        if (sgn(d(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(d(t, c)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(c, t, q);
        if (sgn(d(t, c)) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      std::size_t bad_row = rows;
      for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == rows) break;
      row_op(t, bad_row, Integer(-1));
    }
    if (sgn(d(t, t)) == 0) break;
    if (sgn(d(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      if (with_transforms)
        for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithForm out;
  out.invariants.factors.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.invariants.factors[i] = d(i, i);
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

// Module structure of coker(M ⊗ Z/p^e): each factor becomes gcd(d, p^e), the
// free part becomes (Z/p^e)^(rows - rank).
inline std::vector<Integer> invariant_factors_mod_prime_power(const IntegerMatrix& m, unsigned p, unsigned e) {
  const Integer modulus = pow(Integer(p), e);
  auto snf = smith_normal_form(m);
  std::vector<Integer> out;
  for (const auto& d : snf.invariants.factors) out.push_back(sgn(d) == 0 ? modulus : gcd(d, modulus));
  for (std::size_t i = snf.invariants.factors.size(); i < m.rows(); ++i) out.push_back(modulus);
  return out;
}

// dim span(ambient) - dim span(sub), after checking sub ⊆ span(ambient).
inline std::size_t quotient_dims(const std::vector<std::vector<Rational>>& ambient,
                                 const std::vector<std::vector<Rational>>& sub) {
  if (ambient.empty()) {
    for (const auto& s : sub)
      for (const auto& x : s)
        if (sgn(x) != 0) throw InputError("quotient_dims: subspace is not contained in the ambient span");
    return 0;
  }
  const std::size_t n = ambient.front().size();
  RationalMatrix a(n, ambient.size());
  for (std::size_t j = 0; j < ambient.size(); ++j) a.set_column(j, ambient[j]);
  const std::size_t ra = rank(a);
  RationalMatrix both(n, ambient.size() + sub.size());
  for (std::size_t j = 0; j < ambient.size(); ++j) both.set_column(j, ambient[j]);
  for (std::size_t j = 0; j < sub.size(); ++j) both.set_column(ambient.size() + j, sub[j]);
  if (rank(both) != ra) throw InputError("quotient_dims: subspace is not contained in the ambient span");
  RationalMatrix s(n, sub.size());
  for (std::size_t j = 0; j < sub.size(); ++j) s.set_column(j, sub[j]);
  return ra - rank(s);
}

}  // namespace unipotent_lab
