#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "unipotent_lab/unipotent_lab.hpp"

namespace test_support {

using namespace unipotent_lab;

inline Presentation fixture(const std::string& name) {
  std::ifstream in(std::string(DATA_DIR) + "/" + name);
  if (!in) throw InputError("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), name);
}

// Reduced word of the given letter length over `rank` generators.
inline Word random_word(std::mt19937_64& gen, std::size_t rank, std::size_t length) {
  Word w;
  while (static_cast<std::size_t>(w.length()) < length) {
    auto g = static_cast<std::size_t>(gen() % rank);
    std::int64_t e = (gen() % 2) ? 1 : -1;
    Word next = w * Word::generator(g, e);
    if (static_cast<std::size_t>(next.length()) > static_cast<std::size_t>(w.length())) w = next;
  }
  return w;
}

inline IntegerMatrix random_integer_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, long bound) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(gen() % (2 * bound + 1)) - bound;
  return m;
}

}  // namespace test_support

namespace unipotent_lab {
inline void PrintTo(const TruncatedSeries& s, std::ostream* os) { *os << s.format({"x", "y", "z"}); }
}  // namespace unipotent_lab
