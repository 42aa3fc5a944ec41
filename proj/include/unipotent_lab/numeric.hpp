#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unipotent_lab {

using Integer = mpz_class;
using Rational = mpq_class;

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be understood (bad syntax, unknown names, bad parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A computation would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; always a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

inline Rational frac(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

// "num/den" for non-integers, "num" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InputError("not a rational number: " + text);
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Scales a rational vector by the lcm of its denominators.
inline std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Integer z = q.get_num() * (l / q.get_den());
    out.push_back(z);
  }
  return out;
}

}  // namespace unipotent_lab
