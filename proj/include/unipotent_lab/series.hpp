#pragma once

// Truncated free associative algebra k<X>/(degree > c), with optional letter
// weights, over Q or Z/p^e.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "unipotent_lab/numeric.hpp"

namespace unipotent_lab {

class CoefficientRing {
 public:
  enum class Kind { Rationals, IntegersModPE };

  static CoefficientRing rationals() { return CoefficientRing(); }
  static CoefficientRing integers_mod(unsigned p, unsigned e) {
    if (!is_prime(p)) throw InputError("coefficient ring needs a prime, got " + std::to_string(p));
    if (e == 0) throw InputError("coefficient ring needs precision e >= 1");
    CoefficientRing r;
    r.kind_ = Kind::IntegersModPE;
    r.p_ = p;
    r.e_ = e;
    r.modulus_ = pow(Integer(p), e);
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  unsigned prime() const { return p_; }
  unsigned precision() const { return e_; }
  const Integer& modulus() const { return modulus_; }

  // Canonical representative; over Z/p^e denominators must be units.
  Rational normalize(Rational q) const {
    q.canonicalize();
    if (is_rationals()) return q;
    Integer num = q.get_num() % modulus_;
    if (q.get_den() != 1) {
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw InputError("denominator " + q.get_den().get_str() + " is not a unit mod " + modulus_.get_str());
      num = (num * inv) % modulus_;
    }
    if (num < 0) num += modulus_;
    return Rational(num);
  }

  Rational inverse(const Rational& q) const {
    if (sgn(q) == 0) throw InputError("zero is not invertible");
    if (is_rationals()) return 1 / q;
    Integer inv;
    Integer num = normalize(q).get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t()) == 0)
      throw InputError(num.get_str() + " is not a unit mod " + modulus_.get_str());
    return Rational(inv);
  }

  std::string name() const {
    if (is_rationals()) return "Q";
    return e_ == 1 ? "F_" + std::to_string(p_) : "Z/" + std::to_string(p_) + "^" + std::to_string(e_);
  }

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  Kind kind_ = Kind::Rationals;
  unsigned p_ = 0;
  unsigned e_ = 0;
  Integer modulus_ = 0;
};

// Words over an alphabet of k letters with weighted degree <= cutoff.
// A word of length L and base-k rank r packs to offset(L) + r, so key order
// is length first, then lexicographic.
class MonomialSpace {
 public:
  MonomialSpace(std::size_t letters, unsigned cutoff) : MonomialSpace(std::vector<unsigned>(letters, 1), cutoff) {}

  MonomialSpace(std::vector<unsigned> weights, unsigned cutoff) : weights_(std::move(weights)), cutoff_(cutoff) {
    if (weights_.empty()) throw InputError("alphabet must be nonempty");
    unsigned min_w = *std::min_element(weights_.begin(), weights_.end());
    if (min_w == 0) throw InputError("letter weights must be positive");
    max_length_ = cutoff_ / min_w;
    const std::uint64_t k = weights_.size();
    power_.push_back(1);
    offset_.push_back(0);
    for (unsigned len = 1; len <= max_length_ + 1; ++len) {
      if (power_.back() > (std::uint64_t{1} << 58) / k) throw BudgetExceeded("monomial space too large to index");
      offset_.push_back(offset_.back() + power_.back());
      power_.push_back(power_.back() * k);
    }
  }

  std::size_t letters() const { return weights_.size(); }
  unsigned cutoff() const { return cutoff_; }
  unsigned max_length() const { return max_length_; }
  const std::vector<unsigned>& weights() const { return weights_; }

  std::uint64_t key(unsigned length, std::uint64_t rank) const { return offset_[length] + rank; }

  unsigned length(std::uint64_t key) const {
    unsigned len = static_cast<unsigned>(std::upper_bound(offset_.begin(), offset_.end(), key) - offset_.begin()) - 1;
    return len;
  }

  std::vector<std::size_t> spell(std::uint64_t key) const {
    unsigned len = length(key);
    std::uint64_t rank = key - offset_[len];
    std::vector<std::size_t> out(len);
    for (unsigned i = len; i-- > 0;) {
      out[i] = rank % letters();
      rank /= letters();
    }
    return out;
  }

  std::uint64_t key_of(const std::vector<std::size_t>& word) const {
    std::uint64_t rank = 0;
    for (auto l : word) rank = rank * letters() + l;
    return key(static_cast<unsigned>(word.size()), rank);
  }

  unsigned degree(std::uint64_t key) const {
    unsigned d = 0;
    for (auto l : spell(key)) d += weights_[l];
    return d;
  }

  std::uint64_t concat(std::uint64_t a, std::uint64_t b) const {
    unsigned la = length(a), lb = length(b);
    return offset_[la + lb] + (a - offset_[la]) * power_[lb] + (b - offset_[lb]);
  }

  friend bool operator==(const MonomialSpace& a, const MonomialSpace& b) {
    return a.weights_ == b.weights_ && a.cutoff_ == b.cutoff_;
  }

 private:
  std::vector<unsigned> weights_;
  unsigned cutoff_;
  unsigned max_length_ = 0;
  std::vector<std::uint64_t> power_;
  std::vector<std::uint64_t> offset_;
};

using MonomialSpacePtr = std::shared_ptr<const MonomialSpace>;

inline MonomialSpacePtr make_monomial_space(std::size_t letters, unsigned cutoff) {
  return std::make_shared<const MonomialSpace>(letters, cutoff);
}

inline MonomialSpacePtr make_monomial_space(std::vector<unsigned> weights, unsigned cutoff) {
  return std::make_shared<const MonomialSpace>(std::move(weights), cutoff);
}

struct SeriesTerm {
  std::uint64_t key = 0;
  unsigned degree = 0;
  Rational coefficient;

  friend bool operator==(const SeriesTerm& a, const SeriesTerm& b) {
    return a.key == b.key && a.coefficient == b.coefficient;
  }
};

class TruncatedSeries {
 public:
  TruncatedSeries(CoefficientRing ring, MonomialSpacePtr space) : ring_(std::move(ring)), space_(std::move(space)) {}

  static TruncatedSeries constant(const CoefficientRing& ring, const MonomialSpacePtr& space, const Rational& c) {
    TruncatedSeries s(ring, space);
    s.add_term(space->key(0, 0), c);
    return s;
  }
  static TruncatedSeries one(const CoefficientRing& ring, const MonomialSpacePtr& space) {
    return constant(ring, space, 1);
  }
  static TruncatedSeries letter(const CoefficientRing& ring, const MonomialSpacePtr& space, std::size_t l,
                                const Rational& c = 1) {
    if (l >= space->letters()) throw InputError("letter index out of range");
    TruncatedSeries s(ring, space);
    s.add_term(space->key(1, l), c);
    return s;
  }
  static TruncatedSeries monomial(const CoefficientRing& ring, const MonomialSpacePtr& space,
                                  const std::vector<std::size_t>& word, const Rational& c = 1) {
    TruncatedSeries s(ring, space);
    s.add_term(space->key_of(word), c);
    return s;
  }

  const CoefficientRing& ring() const { return ring_; }
  const MonomialSpacePtr& space() const { return space_; }
  unsigned cutoff() const { return space_->cutoff(); }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(std::uint64_t key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const SeriesTerm& t, std::uint64_t k) { return t.key < k; });
    return it != terms_.end() && it->key == key ? it->coefficient : Rational(0);
  }
  Rational coefficient(const std::vector<std::size_t>& word) const { return coefficient(space_->key_of(word)); }
  Rational constant_term() const { return coefficient(space_->key(0, 0)); }

  // Lowest degree >= 1 carrying a nonzero coefficient; cutoff + 1 if none.
  unsigned lowest_positive_degree() const {
    unsigned best = cutoff() + 1;
    for (const auto& t : terms_)
      if (t.degree >= 1) best = std::min(best, t.degree);
    return best;
  }

  TruncatedSeries homogeneous_part(unsigned d) const {
    TruncatedSeries s(ring_, space_);
    for (const auto& t : terms_)
      if (t.degree == d) s.terms_.push_back(t);
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return combine(o, 1); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return combine(o, -1); }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  TruncatedSeries operator-() const { return scaled(-1); }

  TruncatedSeries scaled(const Rational& f) const {
    TruncatedSeries s(ring_, space_);
    if (sgn(f) == 0) return s;
    for (const auto& t : terms_) {
      Rational c = ring_.normalize(t.coefficient * f);
      if (sgn(c) != 0) s.terms_.push_back({t.key, t.degree, c});
    }
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    const unsigned cut = a.cutoff();
    std::vector<const SeriesTerm*> by_degree;
    by_degree.reserve(b.terms_.size());
    for (const auto& t : b.terms_) by_degree.push_back(&t);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const SeriesTerm* x, const SeriesTerm* y) { return x->degree < y->degree; });
    std::map<std::uint64_t, std::pair<unsigned, Rational>> acc;
    for (const auto& ta : a.terms_) {
      for (const SeriesTerm* tb : by_degree) {
        if (ta.degree + tb->degree > cut) break;
        auto& slot = acc[a.space_->concat(ta.key, tb->key)];
        slot.first = ta.degree + tb->degree;
        slot.second += ta.coefficient * tb->coefficient;
      }
    }
    TruncatedSeries s(a.ring_, a.space_);
    s.terms_.reserve(acc.size());
    for (auto& [key, v] : acc) {
      Rational c = a.ring_.normalize(v.second);
      if (sgn(c) != 0) s.terms_.push_back({key, v.first, std::move(c)});
    }
    return s;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.ring_ == b.ring_ && *a.space_ == *b.space_ && a.terms_ == b.terms_;
  }

  // Deglex listing, e.g. "1 + x + 2*x*y - 1/2*y^2".
  std::string format(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coefficient;
      bool negative = sgn(c) < 0 && ring_.is_rationals();
      if (negative) c = -c;
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      auto word = space_->spell(t.key);
      if (word.empty()) {
        os << to_string(c);
        continue;
      }
      if (c != 1) os << to_string(c) << '*';
      for (std::size_t i = 0; i < word.size();) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (i) os << '*';
        os << (word[i] < names.size() ? names[word[i]] : "a" + std::to_string(word[i]));
        if (j - i > 1) os << '^' << (j - i);
        i = j;
      }
    }
    return os.str();
  }

  void add_term(std::uint64_t key, const Rational& c) {
    unsigned d = space_->degree(key);
    if (d > cutoff()) return;
    TruncatedSeries t(ring_, space_);
    t.terms_.push_back({key, d, c});
    *this += t;
  }

 private:
  void check_compatible(const TruncatedSeries& o) const {
    if (!(ring_ == o.ring_)) throw InputError("series over different coefficient rings");
    if (!(*space_ == *o.space_)) throw InputError("series with different alphabets or cutoffs");
  }

  TruncatedSeries& combine(const TruncatedSeries& o, int sign) {
    check_compatible(o);
    std::vector<SeriesTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
        const auto& t = o.terms_[j++];
        Rational c = ring_.normalize(sign > 0 ? t.coefficient : Rational(-t.coefficient));
        if (sgn(c) != 0) out.push_back({t.key, t.degree, c});
      } else {
        Rational c = sign > 0 ? Rational(terms_[i].coefficient + o.terms_[j].coefficient)
                              : Rational(terms_[i].coefficient - o.terms_[j].coefficient);
        c = ring_.normalize(c);
        if (sgn(c) != 0) out.push_back({terms_[i].key, terms_[i].degree, c});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  CoefficientRing ring_;
  MonomialSpacePtr space_;
  std::vector<SeriesTerm> terms_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

inline TruncatedSeries power(const TruncatedSeries& a, unsigned e) {
  TruncatedSeries r = TruncatedSeries::one(a.ring(), a.space());
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

// Inverse of a series with unit constant term: a0^-1 * sum_k (1 - a/a0)^k.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
  Rational a0 = a.constant_term();
  if (sgn(a0) == 0) throw InputError("series with zero constant term is not invertible");
  Rational inv0 = a.ring().inverse(a0);
  TruncatedSeries one = TruncatedSeries::one(a.ring(), a.space());
  TruncatedSeries q = one - a.scaled(inv0);  // no constant term
  TruncatedSeries sum = one;
  TruncatedSeries term = one;
  while (true) {
    term *= q;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.scaled(inv0);
}

inline TruncatedSeries exp(const TruncatedSeries& a) {
  if (!a.ring().is_rationals()) throw InputError("exp needs rational coefficients");
  if (sgn(a.constant_term()) != 0) throw InputError("exp needs a series with zero constant term");
  TruncatedSeries sum = TruncatedSeries::one(a.ring(), a.space());
  TruncatedSeries term = sum;
  for (unsigned k = 1;; ++k) {
    term = (term * a).scaled(frac(1, k));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

inline TruncatedSeries log(const TruncatedSeries& a) {
  if (!a.ring().is_rationals()) throw InputError("log needs rational coefficients");
  if (a.constant_term() != 1) throw InputError("log needs a series with constant term 1");
  TruncatedSeries u = a - TruncatedSeries::one(a.ring(), a.space());
  TruncatedSeries sum(a.ring(), a.space());
  TruncatedSeries term = TruncatedSeries::one(a.ring(), a.space());
  for (unsigned k = 1;; ++k) {
    term *= u;
    if (term.is_zero()) break;
    sum += term.scaled(frac(k % 2 ? 1 : -1, k));
  }
  return sum;
}

}  // namespace unipotent_lab
