#pragma once

// Magnus expansions of free-group words, Zassenhaus indices and the finite
// dimension quotients F/M_n realized inside the unit group of F_p<X>/Δ^n.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "unipotent_lab/presentation.hpp"
#include "unipotent_lab/series.hpp"

namespace unipotent_lab {

// OnePlusX: x -> 1 + x, the Zassenhaus (mod-p group ring) picture.
// Exponential: x -> exp(x), the completion picture; rationals only.
// The two are never mixed.
enum class MagnusMode { OnePlusX, Exponential };

inline TruncatedSeries magnus_letter(std::size_t generator, std::int64_t exponent, const CoefficientRing& ring,
                                     const MonomialSpacePtr& space, MagnusMode mode) {
  if (mode == MagnusMode::Exponential) {
    Rational e(static_cast<long>(exponent));
    return exp(TruncatedSeries::letter(ring, space, generator, e));
  }
  TruncatedSeries one = TruncatedSeries::one(ring, space);
  TruncatedSeries base = one + TruncatedSeries::letter(ring, space, generator);
  if (exponent < 0) base = inverse(base);
  return power(base, static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
}

inline TruncatedSeries magnus_expand(const Word& w, const CoefficientRing& ring, const MonomialSpacePtr& space,
                                     MagnusMode mode) {
  if (mode == MagnusMode::Exponential && !ring.is_rationals())
    throw InputError("exponential Magnus expansion needs rational coefficients");
  TruncatedSeries out = TruncatedSeries::one(ring, space);
  for (const auto& l : w.letters) {
    if (l.generator >= space->letters()) throw InputError("word letter outside the expansion alphabet");
    out *= magnus_letter(l.generator, l.exponent, ring, space, mode);
  }
  return out;
}

inline TruncatedSeries magnus_expand(const Word& w, const CoefficientRing& ring, std::size_t rank, unsigned cutoff,
                                     MagnusMode mode) {
  return magnus_expand(w, ring, make_monomial_space(rank, cutoff), mode);
}

// Largest n <= cutoff with w in M_n, or "beyond" when the expansion is 1 up
// to the cutoff.
struct ZassenhausIndex {
  std::optional<unsigned> value;
  unsigned cutoff = 0;

  bool beyond_cutoff() const { return !value.has_value(); }
  std::string to_string() const { return value ? std::to_string(*value) : ">=" + std::to_string(cutoff + 1); }
  friend bool operator==(const ZassenhausIndex&, const ZassenhausIndex&) = default;
};

inline std::size_t word_rank(const Word& w) {
  std::size_t r = 0;
  for (const auto& l : w.letters) r = std::max(r, l.generator + 1);
  return r;
}

inline ZassenhausIndex zassenhaus_index(const Word& w, unsigned p, unsigned cutoff, std::size_t rank = 0) {
  rank = std::max({rank, word_rank(w), std::size_t{1}});
  auto s = magnus_expand(w, CoefficientRing::integers_mod(p, 1), rank, cutoff, MagnusMode::OnePlusX);
  unsigned low = s.lowest_positive_degree();
  ZassenhausIndex idx;
  idx.cutoff = cutoff;
  if (low <= cutoff) idx.value = low;
  return idx;
}

struct DimensionQuotient {
  std::size_t rank = 0;
  unsigned prime = 0;
  unsigned n = 0;
  unsigned log_order = 0;                      // |F/M_n| = p^log_order
  std::uint64_t order = 0;
  std::vector<TruncatedSeries> generator_images;  // 1 + x_i mod Δ^n over F_p
};

// F/M_n as the subgroup of (F_p<X>/Δ^n)^× generated by the 1 + x_i, found by
// breadth-first closure under right multiplication by the generators.
inline DimensionQuotient dimension_quotient(std::size_t rank, unsigned p, unsigned n,
                                            std::uint64_t budget = std::uint64_t{1} << 20) {
  if (rank == 0) throw InputError("dimension_quotient needs rank >= 1");
  if (!is_prime(p) || p > 251) throw InputError("dimension_quotient needs a prime below 256");
  if (n == 0) throw InputError("dimension_quotient needs n >= 1");
  DimensionQuotient out;
  out.rank = rank;
  out.prime = p;
  out.n = n;
  const unsigned cutoff = n - 1;
  if (cutoff == 0) {
    out.order = 1;
    return out;
  }
  auto space = make_monomial_space(rank, cutoff);
  const auto ring = CoefficientRing::integers_mod(p, 1);
  for (std::size_t i = 0; i < rank; ++i)
    out.generator_images.push_back(TruncatedSeries::one(ring, space) + TruncatedSeries::letter(ring, space, i));

  // Dense coefficient vectors indexed by packed monomial keys.
  const std::uint64_t size = space->key(cutoff + 1, 0);
  if (size > (std::uint64_t{1} << 24)) throw BudgetExceeded("dimension quotient coefficient space too large");
  using Element = std::string;  // one byte per coefficient
  std::vector<std::uint64_t> shifted(size * rank, size);  // key of u*x_i, or size if truncated
  for (std::uint64_t key = 0; key < size; ++key) {
    unsigned len = space->length(key);
    if (len + 1 > cutoff) continue;
    std::uint64_t rank_part = key - space->key(len, 0);
    for (std::size_t i = 0; i < rank; ++i) shifted[key * rank + i] = space->key(len + 1, rank_part * rank + i);
  }

  Element identity(size, 0);
  identity[0] = 1;
  std::unordered_set<Element> seen{identity};
  std::vector<Element> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& g : frontier) {
      for (std::size_t i = 0; i < rank; ++i) {
        Element h = g;  // g * (1 + x_i)
        for (std::uint64_t key = 0; key < size; ++key) {
          if (g[key] == 0) continue;
          std::uint64_t t = shifted[key * rank + i];
          if (t < size) h[t] = static_cast<char>((static_cast<unsigned char>(h[t]) + static_cast<unsigned char>(g[key])) % p);
        }
        if (seen.insert(h).second) {
          if (seen.size() > budget) throw BudgetExceeded("F/M_n enumeration exceeded the element budget");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  out.order = seen.size();
  std::uint64_t o = out.order;
  while (o % p == 0) {
    o /= p;
    ++out.log_order;
  }
  if (o != 1) throw InvariantViolation("dimension quotient order is not a power of p");
  return out;
}

}  // namespace unipotent_lab
