#pragma once

// Free-group words, the presentation text format and the two-term simplicial
// presentation F(X ∪ Y) ⇉ F(X) with faces d0, d1 and degeneracy s0.
//
// Presentation file grammar (UTF-8, line oriented, ';' also ends a statement,
// '#' starts a comment):
//
//   statement := "p" INT
//              | "generators" NAME+
//              | "relator" word
//   word      := factor*                    juxtaposition, '*' optional
//   factor    := atom [ "^" ["-"|"+"] INT ]
//   atom      := NAME | "1" | "(" word ")" | "[" word "," word "]"
//
// NAME is [A-Za-z_][A-Za-z0-9_]*, so products of named generators need a
// separator: "x y", "x*y" or "x(y)". [u,v] expands to u v u^-1 v^-1.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "unipotent_lab/numeric.hpp"

namespace unipotent_lab {

struct Letter {
  std::size_t generator = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Element of a free group as a syllable sequence. Operations below return
// freely reduced words: no zero exponents, no two adjacent equal generators.
struct Word {
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  std::size_t syllables() const { return letters.size(); }
  std::int64_t length() const {
    std::int64_t n = 0;
    for (const auto& l : letters) n += l.exponent < 0 ? -l.exponent : l.exponent;
    return n;
  }

  static Word generator(std::size_t g, std::int64_t e = 1) {
    Word w;
    if (e != 0) w.letters.push_back({g, e});
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

inline Word reduce(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.exponent == 0) continue;
    if (!out.letters.empty() && out.letters.back().generator == l.generator) {
      out.letters.back().exponent += l.exponent;
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(w);
}

inline Word inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->generator, -it->exponent});
  return reduce(out);
}

inline Word power(const Word& w, std::int64_t e) {
  Word base = e < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

// [u,v] = u v u^-1 v^-1
inline Word commutator(const Word& u, const Word& v) { return u * v * inverse(u) * inverse(v); }

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << (l.generator < names.size() ? names[l.generator] : "g" + std::to_string(l.generator));
    if (l.exponent != 1) os << '^' << l.exponent;
  }
  return os.str();
}

// Exponent sum of every generator in [0, rank).
inline std::vector<std::int64_t> exponent_sums(const Word& w, std::size_t rank) {
  std::vector<std::int64_t> sums(rank, 0);
  for (const auto& l : w.letters)
    if (l.generator < rank) sums[l.generator] += l.exponent;
  return sums;
}

struct Presentation {
  std::string id = "inline";
  std::optional<unsigned> prime;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // Non-fatal findings, e.g. relators outside the Frattini subgroup.
  std::vector<std::string> warnings;

  std::size_t rank() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }
  std::string relator_name(std::size_t j) const { return "r" + std::to_string(j + 1); }
};

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t column_offset, std::vector<std::string>& names,
             bool allow_new_names)
      : text_(text), line_(line), col0_(column_offset), names_(names), allow_new_(allow_new_names) {}

  Word parse_all() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col0_ + pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(' || ch == '[' || ch == '1';
  }

  Word parse_word() {
    Word w;
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after '*'");
      }
      if (!at_factor_start()) break;
      w = w * parse_factor();
    }
    return w;
  }

  std::int64_t parse_int() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40)) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer exponent");
    return negative ? -value : value;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      atom = power(atom, parse_int());
    }
    return atom;
  }

  Word parse_atom() {
    skip_space();
    char ch = text_[pos_];
    if (ch == '1') {
      ++pos_;
      return Word{};
    }
    if (ch == '(') {
      ++pos_;
      Word inner = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      Word u = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      Word v = parse_word();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return commutator(u, v);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    for (std::size_t g = 0; g < names_.size(); ++g)
      if (names_[g] == name) return Word::generator(g);
    if (!allow_new_) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    names_.push_back(name);
    return Word::generator(names_.size() - 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  std::vector<std::string>& names_;
  bool allow_new_;
};

inline bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

}  // namespace detail

// Parses a word over `generators`. With allow_new_names, unseen names are
// appended to `generators` in order of first appearance.
inline Word parse_word(std::string_view text, std::vector<std::string>& generators, bool allow_new_names = false) {
  return detail::WordParser(text, 1, 0, generators, allow_new_names).parse_all();
}

inline Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  std::vector<std::string> names = generators;
  return parse_word(text, names, false);
}

// Exponent sums divisible by p put a relator in F^p[F,F].
inline std::vector<std::string> frattini_warnings(const Presentation& pres) {
  std::vector<std::string> out;
  if (!pres.prime) return out;
  for (std::size_t j = 0; j < pres.relators.size(); ++j) {
    auto sums = exponent_sums(pres.relators[j], pres.rank());
    for (std::size_t g = 0; g < sums.size(); ++g) {
      if (sums[g] % static_cast<std::int64_t>(*pres.prime) != 0) {
        out.push_back("relator " + pres.relator_name(j) + " is not in the Frattini subgroup: exponent sum of " +
                      pres.generators[g] + " is " + std::to_string(sums[g]) + ", not divisible by " +
                      std::to_string(*pres.prime));
        break;
      }
    }
  }
  return out;
}

inline Presentation parse_presentation(std::string_view text, std::string id = "inline") {
  Presentation pres;
  pres.id = std::move(id);
  bool have_generators = false;
  bool have_prime = false;
  std::size_t line_no = 1;
  std::size_t line_start = 0;

  auto handle = [&](std::string_view stmt, std::size_t col_offset) {
    std::size_t i = 0;
    while (i < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
    if (i == stmt.size()) return;
    std::size_t kw_start = i;
    while (i < stmt.size() && !std::isspace(static_cast<unsigned char>(stmt[i]))) ++i;
    std::string keyword(stmt.substr(kw_start, i - kw_start));
    std::string_view rest = stmt.substr(i);
    std::size_t rest_col = col_offset + i;

    if (keyword == "p") {
      if (have_prime) throw ParseError("prime given twice", line_no, col_offset + kw_start + 1);
      std::istringstream is{std::string(rest)};
      long long p = 0;
      std::string extra;
      if (!(is >> p) || (is >> extra)) throw ParseError("expected a single integer after 'p'", line_no, rest_col + 1);
      if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError("invalid prime " + std::to_string(p), line_no, rest_col + 1);
      pres.prime = static_cast<unsigned>(p);
      have_prime = true;
    } else if (keyword == "generators") {
      if (have_generators) throw ParseError("generators given twice", line_no, col_offset + kw_start + 1);
      std::istringstream is{std::string(rest)};
      std::string name;
      while (is >> name) {
        if (!detail::is_name(name)) throw ParseError("invalid generator name '" + name + "'", line_no, rest_col + 1);
        for (const auto& g : pres.generators)
          if (g == name) throw ParseError("duplicate generator '" + name + "'", line_no, rest_col + 1);
        pres.generators.push_back(name);
      }
      if (pres.generators.empty()) throw ParseError("expected at least one generator", line_no, rest_col + 1);
      have_generators = true;
    } else if (keyword == "relator") {
      if (!have_generators) throw ParseError("relator before generators", line_no, col_offset + kw_start + 1);
      std::vector<std::string> names = pres.generators;
      Word w = detail::WordParser(rest, line_no, rest_col, names, false).parse_all();
      if (w.is_identity()) throw ParseError("relator reduces to the identity", line_no, rest_col + 1);
      pres.relators.push_back(std::move(w));
    } else {
      throw ParseError("unknown statement '" + keyword + "'", line_no, col_offset + kw_start + 1);
    }
  };

  std::size_t stmt_start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool end = i == text.size();
    char ch = end ? '\n' : text[i];
    if (ch == '#') {
      handle(text.substr(stmt_start, i - stmt_start), stmt_start - line_start);
      while (i < text.size() && text[i] != '\n') ++i;
      end = i == text.size();
      ch = '\n';
      stmt_start = i;
    }
    if (ch == ';' || ch == '\n') {
      if (stmt_start <= i) handle(text.substr(stmt_start, i - stmt_start), stmt_start - line_start);
      stmt_start = i + 1;
      if (ch == '\n') {
        ++line_no;
        line_start = i + 1;
      }
    }
    if (end) break;
  }
  if (!have_generators) throw ParseError("missing 'generators' statement", line_no, 1);
  pres.warnings = frattini_warnings(pres);
  return pres;
}

// Homomorphism of free groups given on generators. images[g] is the image of
// generator g as a word over the target alphabet; nullopt means unmapped.
struct GeneratorMap {
  std::size_t target_rank = 0;
  std::vector<std::optional<Word>> images;
};

inline Word apply_generator_map(const GeneratorMap& map, const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.generator >= map.images.size() || !map.images[l.generator])
      throw InputError("generator " + std::to_string(l.generator) + " is not in the domain of the map");
    out = out * power(*map.images[l.generator], l.exponent);
  }
  return out;
}

// F(X ∪ Y) ⇉ F(X) with Y-generators numbered after X:
// d0(x)=x, d0(y)=1, d1(x)=x, d1(y)=r_y, s0(x)=x.
struct SimplicialPresentation {
  Presentation base;
  GeneratorMap d0;
  GeneratorMap d1;
  GeneratorMap s0;

  std::size_t x_count() const { return base.rank(); }
  std::size_t y_count() const { return base.relator_count(); }
  std::size_t y_generator(std::size_t j) const { return base.rank() + j; }

  // Generator names of F(X ∪ Y): X names followed by the relator names.
  std::vector<std::string> total_names() const {
    std::vector<std::string> names = base.generators;
    for (std::size_t j = 0; j < y_count(); ++j) names.push_back(base.relator_name(j));
    return names;
  }
};

inline SimplicialPresentation simplicialize(const Presentation& pres) {
  SimplicialPresentation sp;
  sp.base = pres;
  const std::size_t n = pres.rank();
  const std::size_t m = pres.relator_count();
  sp.d0.target_rank = n;
  sp.d1.target_rank = n;
  sp.s0.target_rank = n + m;
  for (std::size_t x = 0; x < n; ++x) {
    sp.d0.images.push_back(Word::generator(x));
    sp.d1.images.push_back(Word::generator(x));
    sp.s0.images.push_back(Word::generator(x));
  }
  for (std::size_t j = 0; j < m; ++j) {
    sp.d0.images.push_back(Word{});
    sp.d1.images.push_back(pres.relators[j]);
  }
  return sp;
}

}  // namespace unipotent_lab
