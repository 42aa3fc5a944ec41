// Brute-force search for two-relator presentations over {x, y} whose graded
// relation coinvariants carry torsion. Writes the first hit as a .pres file.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unipotent_lab/unipotent_lab.hpp"

using namespace unipotent_lab;

namespace {

std::vector<Word> candidate_relators() {
  const Word x = Word::generator(0), y = Word::generator(1);
  const Word xy = commutator(x, y);
  std::vector<Word> pool;
  for (std::int64_t e = 2; e <= 4; ++e) {
    pool.push_back(Word::generator(0, e));
    pool.push_back(Word::generator(1, e));
  }
  pool.push_back(xy);
  pool.push_back(power(xy, 2));
  pool.push_back(power(xy, 3));
  pool.push_back(commutator(xy, x));
  pool.push_back(commutator(xy, y));
  pool.push_back(commutator(Word::generator(0, 2), y));
  pool.push_back(Word::generator(0, 2) * xy);
  pool.push_back(Word::generator(1, 2) * xy);
  return pool;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search for small presentations with graded torsion"};
  unsigned cutoff = 3;
  unsigned p = 2;
  std::string out = "adversarial_torsion.pres";
  app.add_option("--cutoff", cutoff, "scan cutoff");
  app.add_option("--p", p, "prime written into the fixture");
  app.add_option("--out", out, "output .pres path");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::string> names{"x", "y"};
  auto pool = candidate_relators();
  std::size_t tried = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      Presentation pres;
      pres.id = "search";
      pres.prime = p;
      pres.generators = names;
      pres.relators = {pool[i], pool[j]};
      ++tried;
      auto rep = qr_graded_scan(pres, cutoff, p);
      if (rep.clean()) continue;
      std::ofstream f(out);
      f << "p " << p << "\n" << "generators x y\n";
      for (const auto& r : pres.relators) f << "relator " << format_word(r, names) << "\n";
      std::cout << "candidate " << tried << ": " << format_word(pool[i], names) << " ; "
                << format_word(pool[j], names) << " -> " << rep.verdict << "\nwrote " << out << "\n";
      return 0;
    }
  }
  std::cout << "no torsion found in " << tried << " candidates\n";
  return 1;
}
