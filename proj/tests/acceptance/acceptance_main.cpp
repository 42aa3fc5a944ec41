// Acceptance run: one PASS/FAIL line per criterion, exact comparisons, wall
// clock limits pinned below. Usage: acceptance <path to unipotent-lab>.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unipotent_lab/unipotent_lab.hpp"

using namespace unipotent_lab;

namespace {

constexpr double witt_limit_s = 5;
constexpr double zassenhaus_limit_s = 30;
constexpr double dimsub_limit_s = 10;
constexpr double peiffer_limit_s = 60;  // per presentation
constexpr double diagram_limit_s = 120;
constexpr double axiom_limit_s = 30;
constexpr double torsion_limit_s = 60;
constexpr double cd2_limit_s = 120;
constexpr double determinism_limit_s = 300;
constexpr unsigned sample_cutoff = 5;
constexpr std::size_t axiom_samples = 100;

std::string cli_path;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

Presentation load(const std::string& name) {
  std::ifstream in(std::string(DATA_DIR) + "/" + name);
  if (!in) throw InputError("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str(), name);
}

const std::vector<std::string> samples{"commutator.pres", "commutator_cubic.pres", "two_relators.pres"};

// Criterion 1: Witt necklace identity and PBW count of the free envelope.
Outcome witt_pbw() {
  Outcome o;
  const unsigned c = 8;
  for (std::size_t k = 1; k <= 3; ++k) {
    HallBasis basis(k, c);
    auto sizes = basis.degree_sizes();
    for (unsigned n = 1; n <= c; ++n) {
      Integer sum = 0;
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) sum += Integer(d) * Integer(static_cast<unsigned long>(sizes[d]));
      o.require(sum == pow(Integer(static_cast<unsigned long>(k)), n),
                "necklace identity fails at rank " + std::to_string(k) + " degree " + std::to_string(n));
    }
    auto env = pbw_dims(sizes, c);
    for (unsigned d = 0; d <= c; ++d)
      o.require(env[d] == pow(Integer(static_cast<unsigned long>(k)), d),
                "PBW count fails at rank " + std::to_string(k) + " degree " + std::to_string(d));
  }
  return o;
}

// Independent expansion: dense coefficient map over Z/p, truncated at degree c.
using Poly = std::map<std::vector<int>, long>;

Poly poly_mul(const Poly& a, const Poly& b, unsigned p, unsigned c) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > c) continue;
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      long& v = out[m];
      v = (v + ca * cb) % static_cast<long>(p);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// (1 + X)^{±1} truncated: the inverse is Σ (-X)^k.
Poly letter_poly(int g, int sign, unsigned p, unsigned c) {
  Poly out;
  for (unsigned k = 0; k <= c; ++k) {
    long coef = (sign > 0) ? (k <= 1 ? 1 : 0) : (k % 2 == 0 ? 1 : static_cast<long>(p) - 1);
    if (coef % static_cast<long>(p)) out[std::vector<int>(k, g)] = coef % static_cast<long>(p);
  }
  return out;
}

unsigned oracle_index(const std::vector<std::pair<int, int>>& letters, unsigned p, unsigned c) {
  Poly acc{{{}, 1}};
  for (auto [g, s] : letters) acc = poly_mul(acc, letter_poly(g, s, p, c), p, c);
  unsigned low = c + 1;
  for (const auto& [m, v] : acc)
    if (!m.empty() && v != 0) low = std::min<unsigned>(low, m.size());
  return low;
}

// Criterion 2: Zassenhaus index against direct expansion, all reduced words of length <= 5.
Outcome zassenhaus_suite() {
  Outcome o;
  const unsigned c = 6;
  std::vector<std::vector<std::pair<int, int>>> words{{}};
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& w : words) {
      if (w.size() + 1 != len) continue;
      for (int g = 0; g < 2; ++g)
        for (int s : {1, -1}) {
          if (!w.empty() && w.back().first == g && w.back().second == -s) continue;
          auto v = w;
          v.push_back({g, s});
          next.push_back(v);
        }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::size_t checked = 0;
  for (unsigned p : {2u, 3u}) {
    for (const auto& letters : words) {
      Word w;
      for (auto [g, s] : letters) w = w * Word::generator(g, s);
      auto idx = zassenhaus_index(w, p, c, 2);
      unsigned got = idx.value ? *idx.value : c + 1;
      unsigned want = oracle_index(letters, p, c);
      o.require(got == want, "index mismatch p=" + std::to_string(p) + " word of length " +
                                 std::to_string(letters.size()));
      ++checked;
    }
    const Word x = Word::generator(0), y = Word::generator(1);
    auto cidx = zassenhaus_index(commutator(x, y), p, c, 2);
    o.require(cidx.value == 2u, "index([x,y]) != 2");
    auto pidx = zassenhaus_index(Word::generator(0, p), p, c, 2);
    o.require(pidx.value == p, "index(x^p) != p");
  }
  o.require(checked == 2 * 485, "unexpected word count " + std::to_string(checked));
  return o;
}

// Exhaustive closure of <1 + x_i> inside (F_p<X>/Δ^n)^×, dense vectors.
std::uint64_t enumerate_unit_group(std::size_t rank, unsigned p, unsigned n) {
  std::vector<std::vector<int>> monomials{{}};
  for (unsigned d = 1; d < n; ++d) {
    std::vector<std::vector<int>> next;
    for (const auto& m : monomials)
      if (m.size() + 1 == d)
        for (std::size_t g = 0; g < rank; ++g) {
          auto v = m;
          v.push_back(static_cast<int>(g));
          next.push_back(v);
        }
    monomials.insert(monomials.end(), next.begin(), next.end());
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
  using Elem = std::vector<int>;
  auto mul = [&](const Elem& a, const Elem& b) {
    Elem out(monomials.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (!b[j] || monomials[i].size() + monomials[j].size() >= n) continue;
        auto m = monomials[i];
        m.insert(m.end(), monomials[j].begin(), monomials[j].end());
        auto& slot = out[index[m]];
        slot = (slot + a[i] * b[j]) % static_cast<int>(p);
      }
    }
    return out;
  };
  std::vector<Elem> gens;
  for (std::size_t g = 0; g < rank; ++g) {
    Elem e(monomials.size(), 0);
    e[0] = 1;
    if (n > 1) e[index[{static_cast<int>(g)}]] = 1;
    gens.push_back(e);
  }
  Elem one(monomials.size(), 0);
  one[0] = 1;
  std::set<Elem> seen{one};
  std::vector<Elem> frontier{one};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        auto h = mul(e, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Criterion 3: dimension quotient orders.
Outcome dimsub_suite() {
  Outcome o;
  struct Case {
    std::size_t rank;
    unsigned p, n;
    std::uint64_t order;
  };
  std::vector<Case> cases{{2, 2, 2, 4}, {1, 2, 2, 2}, {1, 3, 2, 3}, {1, 5, 2, 5}, {1, 2, 3, 4}};
  for (const auto& k : cases) {
    auto q = dimension_quotient(k.rank, k.p, k.n);
    std::string tag = "rank " + std::to_string(k.rank) + " p=" + std::to_string(k.p) + " n=" + std::to_string(k.n);
    o.require(q.order == k.order, tag + ": order " + std::to_string(q.order));
    o.require(enumerate_unit_group(k.rank, k.p, k.n) == q.order, tag + ": enumeration disagrees");
  }
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criterion 4: Peiffer-element closure against [ker d0, ker d1].
Outcome peiffer_suite() {
  Outcome o;
  for (const auto& name : samples) {
    auto t0 = std::chrono::steady_clock::now();
    auto pres = load(name);
    auto pre = build_precrossed(simplicialize(pres), sample_cutoff, CrossedOptions{});
    auto cm = peiffer_quotient(pre);
    auto route = commutator_subalgebra(pre.top, pre.ker_d1);
    o.require(cm.peiffer_elements == route, name + ": closures differ");
    o.require(cm.peiffer_elements.graded_dims() == route.graded_dims(), name + ": degree dims differ");
    double s = seconds_since(t0);
    o.require(s < peiffer_limit_s, name + ": over time");
  }
  return o;
}

std::map<std::string, DiagramReport> diagrams;

// Criterion 5: commutativity, exactness, freeness.
Outcome diagram_suite() {
  Outcome o;
  for (const auto& name : samples) {
    auto pres = load(name);
    auto rep = build_diagram(pres, sample_cutoff);
    o.require(rep.commutative, name + ": square does not commute");
    o.require(rep.exact, name + ": row not exact");
    for (unsigned d = 1; d <= sample_cutoff; ++d)
      o.require(rep.u2_dims[d] + rep.r_bar_dims[d] == rep.c_bar_dims[d], name + ": exact count fails");
    auto env = pbw_dims(rep.quotient_lie_dims, sample_cutoff);
    for (unsigned d = 1; d <= sample_cutoff; ++d) {
      Integer expected = 0;
      for (unsigned w : rep.relator_weights)
        if (w <= d) expected += env[d - w];
      o.require(Integer(static_cast<unsigned long>(rep.c_bar_dims[d])) == expected,
                name + ": C_bar not free in degree " + std::to_string(d));
    }
    o.require(rep.free, name + ": freeness verdict false");
    diagrams[name] = rep;
  }
  const auto& comm = diagrams["commutator.pres"];
  for (unsigned d = 1; d <= sample_cutoff; ++d) o.require(comm.u2_dims[d] == 0, "u2 nonzero for [x,y]");
  std::vector<std::size_t> shadow{0, 0, 1, 2, 3, 4};
  o.require(comm.r_bar_dims == shadow, "R_bar dims for [x,y] differ from 1,2,3,4");
  return o;
}

// Criterion 6: CM1 and CM2 at deterministic rational points.
Outcome axiom_suite() {
  Outcome o;
  for (const auto& name : samples) {
    auto pres = load(name);
    CrossedOptions opt;
    opt.samples = axiom_samples;
    auto pre = build_precrossed(simplicialize(pres), sample_cutoff, opt);
    auto cm = peiffer_quotient(pre, opt);
    o.require(pre.cm1.samples == axiom_samples && pre.cm1.passed(), name + ": CM1 fails");
    o.require(cm.cm2.samples == axiom_samples && cm.cm2.passed(), name + ": CM2 fails");
  }
  return o;
}

// Criterion 7: graded torsion scans.
Outcome torsion_suite() {
  Outcome o;
  for (const auto& name : {"commutator.pres", "commutator_cubic.pres"}) {
    auto pres = load(name);
    auto qr = qr_graded_scan(pres, sample_cutoff, *pres.prime);
    auto reg = p_regularity_scan(pres, sample_cutoff, *pres.prime);
    o.require(qr.clean() && qr.verdict == "torsion-free up to 5", std::string(name) + ": " + qr.verdict);
    o.require(reg.clean(), std::string(name) + ": " + reg.verdict);
  }
  auto adv = load("adversarial_torsion.pres");
  auto qr = qr_graded_scan(adv, sample_cutoff, *adv.prime);
  o.require(!qr.clean(), "adversarial fixture is torsion-free");
  bool certificate = false;
  for (const auto& d : qr.degrees)
    if (!d.torsion.empty()) certificate = true;
  o.require(certificate, "adversarial fixture has no torsion certificate");
  auto pp = load("p_power.pres");
  auto reg = p_regularity_scan(pp, sample_cutoff, *pp.prime);
  o.require(reg.obstruction_degree == 1u, "p-th power relator: no degree-1 p-torsion");
  o.require(!reg.degrees.empty() && reg.degrees[0].degree == 1 && reg.degrees[0].p_torsion,
            "p-th power relator: degree-1 entry not flagged");
  return o;
}

// Criterion 8: cd2 pipeline.
Outcome cd2_suite() {
  Outcome o;
  auto pres = load("commutator.pres");
  auto rep = one_relator_cd2_evidence(pres, sample_cutoff, *pres.prime);
  o.require(rep.verdict == "cd=2 evidence up to class 5", "verdict: " + rep.verdict);
  o.require(rep.relation_module_free && rep.kappa_bijective && rep.u2_vanishes && rep.p_regular,
            "a check is red");
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Criterion 9: byte-identical JSON across repeated CLI runs.
Outcome determinism_suite() {
  Outcome o;
  if (cli_path.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  namespace fs = std::filesystem;
  fs::path work = fs::temp_directory_path() / "unipotent_lab_acceptance";
  fs::create_directories(work);
  const std::string data = DATA_DIR;
  const std::string fixed = " --seed 7 --cutoff 4";
  std::vector<std::pair<std::string, std::string>> commands{
      {"expand", "expand --word '[x,y] x^-2'" + fixed},
      {"expand_exp", "expand --word '[x,y] x^-2' --mode exponential" + fixed},
      {"zindex", "zindex --word '[x,y]^2' --p 3 --seed 7 --cutoff 6"},
      {"dimsub", "dimsub --rank 2 --p 2 --n 4 --seed 7"},
      {"diagram", "diagram --file " + data + "/two_relators.pres" + fixed},
      {"pi2", "pi2 --file " + data + "/two_relators.pres" + fixed},
      {"qr", "qr-scan --file " + data + "/adversarial_torsion.pres" + fixed},
      {"preg", "p-regular --file " + data + "/p_power.pres" + fixed},
      {"cd2", "cd2 --file " + data + "/commutator.pres" + fixed},
  };
  for (const auto& [tag, args] : commands) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      fs::path out = work / (tag + "_" + std::to_string(run) + ".json");
      fs::remove(out);
      std::string cmd = "'" + cli_path + "' " + args + " --out '" + out.string() + "' > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      o.require(fs::exists(out), tag + ": no report written (status " + std::to_string(rc) + ")");
      std::string text = slurp(out);
      if (run == 0)
        first = text;
      else
        o.require(!text.empty() && text == first, tag + ": reports differ");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  struct Criterion {
    int number;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "Witt/PBW counts, ranks 1-3, cutoff 8", witt_limit_s, witt_pbw},
      {2, "Zassenhaus index vs direct expansion, p in {2,3}", zassenhaus_limit_s, zassenhaus_suite},
      {3, "dimension quotient orders vs unit-group enumeration", dimsub_limit_s, dimsub_suite},
      {4, "Peiffer closure equals [ker d0, ker d1], cutoff 5", peiffer_limit_s * samples.size(), peiffer_suite},
      {5, "diagram commutative, exact, free; u2 = 0 for [x,y]", diagram_limit_s, diagram_suite},
      {6, "CM1 and CM2 at 100 rational points", axiom_limit_s, axiom_suite},
      {7, "QR and p-regularity scans, adversarial fixture", torsion_limit_s, torsion_suite},
      {8, "cd2 evidence for <x,y | [x,y]> at class 5", cd2_limit_s, cd2_suite},
      {9, "byte-identical JSON across repeated CLI runs", determinism_limit_s, determinism_suite},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = seconds_since(t0);
    if (s >= c.limit) o.require(false, "exceeded time limit");
    std::ostringstream line;
    line << "criterion " << c.number << " [" << c.name << "]: " << (o.ok ? "PASS" : "FAIL") << " (" << std::fixed
         << std::setprecision(2) << s << " s, limit " << std::setprecision(0) << c.limit << " s)";
    if (!o.ok) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures ? "acceptance: FAIL (" + std::to_string(failures) + " criteria)" : "acceptance: PASS") << "\n";
  return failures ? 1 : 0;
}
