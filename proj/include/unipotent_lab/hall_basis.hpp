#pragma once

// Lyndon-word (Hall) basis of the free Lie algebra on a weighted alphabet,
// truncated above weighted degree c.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unipotent_lab/numeric.hpp"

namespace unipotent_lab {

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Dimension of the degree-n part of the free Lie algebra on k generators.
inline Integer witt_number(std::size_t k, unsigned n) {
  if (n == 0) return 0;
  Integer sum = 0;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) sum += moebius(d) * pow(Integer(static_cast<unsigned long>(k)), n / d);
  return sum / n;
}

inline bool is_lyndon(const std::vector<std::size_t>& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

struct HallWord {
  std::vector<std::size_t> letters;
  unsigned degree = 0;
  // Standard factorization w = uv (v the longest proper Lyndon suffix) as
  // basis indices; empty for single letters.
  std::optional<std::pair<std::size_t, std::size_t>> factors;
};

class HallBasis {
 public:
  HallBasis(std::size_t rank, unsigned cutoff) : HallBasis(std::vector<unsigned>(rank, 1), cutoff) {}

  HallBasis(std::vector<unsigned> weights, unsigned cutoff) : weights_(std::move(weights)), cutoff_(cutoff) {
    if (weights_.empty()) throw InputError("Hall basis needs at least one generator");
    if (cutoff_ == 0) throw InputError("Hall basis needs cutoff >= 1");
    for (auto w : weights_)
      if (w == 0) throw InputError("generator weights must be positive");
    const std::size_t k = weights_.size();
    const unsigned min_w = *std::min_element(weights_.begin(), weights_.end());
    const std::size_t max_len = cutoff_ / min_w;

    // Lyndon words of length <= max_len in lexicographic order (Duval).
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::size_t> w{0};
    while (!w.empty()) {
      if (weighted(w) <= cutoff_) words.push_back(w);
      const std::size_t m = w.size();
      while (w.size() < max_len) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == k - 1) w.pop_back();
      if (!w.empty()) ++w.back();
    }
    std::stable_sort(words.begin(), words.end(), [&](const auto& a, const auto& b) {
      unsigned da = weighted(a), db = weighted(b);
      if (da != db) return da < db;
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& letters : words) {
      HallWord h;
      h.degree = weighted(letters);
      h.letters = std::move(letters);
      index_.emplace(h.letters, words_.size());
      words_.push_back(std::move(h));
    }
    for (auto& h : words_) {
      if (h.letters.size() < 2) continue;
      for (std::size_t split = 1; split < h.letters.size(); ++split) {
        std::vector<std::size_t> v(h.letters.begin() + split, h.letters.end());
        if (!is_lyndon(v)) continue;
        std::vector<std::size_t> u(h.letters.begin(), h.letters.begin() + split);
        h.factors = std::make_pair(index_.at(u), index_.at(v));
        break;
      }
    }
    degree_begin_.assign(cutoff_ + 2, words_.size());
    for (std::size_t i = words_.size(); i-- > 0;) degree_begin_[words_[i].degree] = i;
    for (unsigned d = cutoff_ + 1; d-- > 0;) degree_begin_[d] = std::min(degree_begin_[d], degree_begin_[d + 1]);
  }

  std::size_t size() const { return words_.size(); }
  std::size_t rank() const { return weights_.size(); }
  unsigned cutoff() const { return cutoff_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  const HallWord& operator[](std::size_t i) const { return words_[i]; }
  unsigned degree(std::size_t i) const { return words_[i].degree; }

  // Basis indices of degree d form [begin(d), end(d)).
  std::size_t begin(unsigned d) const { return d > cutoff_ ? size() : degree_begin_[d]; }
  std::size_t end(unsigned d) const { return d >= cutoff_ ? size() : degree_begin_[d + 1]; }
  std::size_t degree_size(unsigned d) const { return end(d) - begin(d); }

  // Entry d holds the size of degree d; entry 0 is 0.
  std::vector<std::size_t> degree_sizes() const {
    std::vector<std::size_t> out(cutoff_ + 1, 0);
    for (unsigned d = 1; d <= cutoff_; ++d) out[d] = degree_size(d);
    return out;
  }

  std::optional<std::size_t> index_of(const std::vector<std::size_t>& letters) const {
    auto it = index_.find(letters);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t generator_index(std::size_t letter) const {
    auto i = index_of({letter});
    if (!i) throw InputError("generator has weight above the cutoff");
    return *i;
  }

  // Bracketed form such as "[x,[x,y]]".
  std::string format(std::size_t i, const std::vector<std::string>& names) const {
    const auto& h = words_[i];
    if (!h.factors) {
      std::size_t l = h.letters[0];
      return l < names.size() ? names[l] : "a" + std::to_string(l);
    }
    return "[" + format(h.factors->first, names) + "," + format(h.factors->second, names) + "]";
  }

 private:
  unsigned weighted(const std::vector<std::size_t>& w) const {
    unsigned d = 0;
    for (auto l : w) d += weights_[l];
    return d;
  }

  std::vector<unsigned> weights_;
  unsigned cutoff_;
  std::vector<HallWord> words_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<std::size_t> degree_begin_;
};

}  // namespace unipotent_lab
