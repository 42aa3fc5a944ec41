// unipotent-lab command line.
//
// Exit codes: 0 success, 1 obstruction verdict, 2 input error, 3 budget
// exhausted, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unipotent_lab/report_json.hpp"
#include "unipotent_lab/unipotent_lab.hpp"

using namespace unipotent_lab;

namespace {

struct Options {
  std::string file;
  unsigned cutoff = 5;
  unsigned p = 0;
  unsigned precision = 3;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 20240601;
  std::size_t samples = 100;
  std::string out;
  bool json = false;
  std::string word;
  std::string mode = "one-plus-x";
  std::string weighting = "initial-degree";
  std::size_t rank = 0;
  unsigned n = 0;
};

RunConfig config(const Options& o) {
  RunConfig c;
  c.cutoff = o.cutoff;
  if (o.p) c.prime = o.p;
  c.precision = o.precision;
  c.budget = o.budget;
  c.seed = o.seed;
  c.samples = o.samples;
  c.output = o.out;
  c.validate();
  return c;
}

Presentation load(const std::string& path) {
  if (path.empty()) throw InputError("--file is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string id = path;
  auto slash = id.find_last_of('/');
  if (slash != std::string::npos) id = id.substr(slash + 1);
  auto pres = parse_presentation(ss.str(), id);
  for (const auto& w : pres.warnings) std::cerr << "warning: " << w << "\n";
  return pres;
}

void emit(const Options& o, const Json& j) {
  std::string text = render(j);
  if (!o.out.empty()) write_atomically(o.out, text);
  if (o.json) std::cout << text;
}

std::string dims_line(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t d = 1; d < v.size(); ++d) s += (d > 1 ? " " : "") + std::to_string(v[d]);
  return s;
}

// Word plus the generator names it is read against.
std::pair<Word, std::vector<std::string>> read_word(const Options& o) {
  if (o.word.empty()) throw InputError("--word is required");
  std::vector<std::string> names;
  if (!o.file.empty()) {
    names = load(o.file).generators;
    return {parse_word(o.word, std::as_const(names)), names};
  }
  Word w = parse_word(o.word, names, true);
  return {w, names};
}

int run_expand(const Options& o) {
  auto cfg = config(o);
  auto [w, names] = read_word(o);
  std::size_t rank = std::max(o.rank, names.size());
  if (rank == 0) rank = 1;
  while (names.size() < rank) names.push_back("a" + std::to_string(names.size()));
  MagnusMode mode;
  if (o.mode == "one-plus-x")
    mode = MagnusMode::OnePlusX;
  else if (o.mode == "exponential")
    mode = MagnusMode::Exponential;
  else
    throw InputError("--mode must be one-plus-x or exponential");
  CoefficientRing ring = CoefficientRing::rationals();
  if (cfg.prime) ring = CoefficientRing::integers_mod(*cfg.prime, cfg.precision);
  auto s = magnus_expand(w, ring, rank, cfg.cutoff, mode);
  std::cout << s.format(names) << "\n";
  Json j = {{"schema", schema_version},
            {"kind", "expand"},
            {"word", format_word(w, names)},
            {"mode", o.mode},
            {"generators", names},
            {"series", series_json(s, names)}};
  emit(o, j);
  return 0;
}

int run_zindex(const Options& o) {
  auto cfg = config(o);
  auto [w, names] = read_word(o);
  unsigned p = 0;
  if (cfg.prime)
    p = *cfg.prime;
  else if (!o.file.empty() && load(o.file).prime)
    p = *load(o.file).prime;
  else
    throw InputError("zindex needs --p");
  auto idx = zassenhaus_index(w, p, cfg.cutoff, std::max(o.rank, names.size()));
  std::cout << idx.to_string() << "\n";
  Json j = {{"schema", schema_version},
            {"kind", "zindex"},
            {"word", format_word(w, names)},
            {"p", p},
            {"cutoff", cfg.cutoff},
            {"index_text", idx.to_string()},
            {"beyond_cutoff", idx.beyond_cutoff()}};
  j["index"] = idx.value ? Json(*idx.value) : Json(nullptr);
  emit(o, j);
  return 0;
}

int run_dimsub(const Options& o) {
  auto cfg = config(o);
  std::size_t rank = o.rank;
  if (!o.file.empty()) {
    auto pres = load(o.file);
    if (!rank) rank = pres.rank();
    if (!cfg.prime && pres.prime) cfg.prime = pres.prime;
  }
  if (!rank) rank = 2;
  if (!cfg.prime) throw InputError("dimsub needs --p");
  if (o.n == 0) throw InputError("dimsub needs --n >= 1");
  if (o.n > RunConfig::max_cutoff + 1) throw InputError("--n is above the cutoff bound");
  auto q = dimension_quotient(rank, *cfg.prime, o.n, cfg.budget);
  std::cout << "log_p |F/M_n| = " << q.log_order << " (order " << q.order << ")\n";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i + 1));
  Json images = Json::array();
  for (const auto& s : q.generator_images) images.push_back(series_json(s, names));
  Json j = {{"schema", schema_version},
            {"kind", "dimsub"},
            {"rank", rank},
            {"p", *cfg.prime},
            {"n", o.n},
            {"log_order", q.log_order},
            {"order", std::to_string(q.order)},
            {"generator_images", images}};
  emit(o, j);
  return 0;
}

CrossedOptions crossed(const Options& o, const RunConfig& cfg) {
  CrossedOptions c = cfg.crossed();
  if (o.weighting == "unit")
    c.weighting = RelatorWeighting::Unit;
  else if (o.weighting != "initial-degree")
    throw InputError("--weighting must be initial-degree or unit");
  return c;
}

int run_diagram(const Options& o) {
  auto cfg = config(o);
  auto pres = load(o.file);
  auto rep = build_diagram(pres, cfg.cutoff, crossed(o, cfg));
  std::cout << "C_bar dims: " << dims_line(rep.c_bar_dims) << "\n"
            << "R_bar dims: " << dims_line(rep.r_bar_dims) << "\n"
            << "u2 dims:    " << dims_line(rep.u2_dims) << "\n"
            << "commutative " << rep.commutative << ", exact " << rep.exact << ", free " << rep.free
            << ", CM1 " << rep.cm1.passed() << ", CM2 " << rep.cm2.passed() << ", Peiffer routes agree "
            << rep.peiffer_routes_agree << "\n";
  emit(o, to_json(rep));
  return rep.all_verdicts() ? 0 : 1;
}

int run_pi2(const Options& o) {
  auto cfg = config(o);
  auto pres = load(o.file);
  auto rep = build_diagram(pres, cfg.cutoff, crossed(o, cfg));
  std::cout << "pi2 dims: " << dims_line(rep.pi2_dims) << " (equal to u2; assumes a quasirational presentation)\n";
  for (const auto& t : rep.u2_basis_text) std::cout << "  " << t << "\n";
  Json basis = Json::array();
  for (std::size_t k = 0; k < rep.u2_basis.size(); ++k)
    basis.push_back({{"coordinates", vector_json(rep.u2_basis[k])}, {"text", rep.u2_basis_text[k]}});
  Json j = {{"schema", schema_version},
            {"kind", "pi2"},
            {"presentation", rep.presentation_id},
            {"cutoff", rep.cutoff},
            {"total_generators", rep.total_names},
            {"u2_dims", degree_table(rep.u2_dims)},
            {"pi2_dims", degree_table(rep.pi2_dims)},
            {"u2_basis", basis},
            {"conditional_on_quasirationality", true},
            {"exact", rep.exact}};
  emit(o, j);
  return 0;
}

void print_torsion(const TorsionReport& r) {
  for (const auto& d : r.degrees) {
    std::cout << "degree " << d.degree << ": free rank " << d.free_rank;
    for (const auto& t : d.torsion) std::cout << " Z/" << t;
    std::cout << "\n";
  }
  std::cout << r.verdict << "\n";
}

int run_qr(const Options& o) {
  auto cfg = config(o);
  auto pres = load(o.file);
  auto rep = qr_graded_scan(pres, cfg.cutoff, cfg.resolve_prime(pres), cfg.budget);
  print_torsion(rep);
  emit(o, to_json(rep));
  return rep.clean() ? 0 : 1;
}

int run_pregular(const Options& o) {
  auto cfg = config(o);
  auto pres = load(o.file);
  auto rep = p_regularity_scan(pres, cfg.cutoff, cfg.resolve_prime(pres), cfg.budget);
  print_torsion(rep);
  emit(o, to_json(rep));
  return rep.clean() ? 0 : 1;
}

int run_cd2(const Options& o) {
  auto cfg = config(o);
  auto pres = load(o.file);
  auto rep = one_relator_cd2_evidence(pres, cfg.cutoff, cfg.resolve_prime(pres), cfg.crossed(), cfg.budget);
  std::cout << "(a) relation module free: " << rep.relation_module_free << "\n"
            << "(b) kappa bijective:      " << rep.kappa_bijective << "\n"
            << "(c) u2 vanishes:          " << rep.u2_vanishes << "\n"
            << "(d) p-regular:            " << rep.p_regular << "\n"
            << rep.verdict << "\n";
  emit(o, to_json(rep));
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unipotent-lab: exact Zassenhaus filtrations, truncated unipotent completions and crossed modules"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "presentation file");
    sub->add_option("--cutoff", o.cutoff, "class / degree cutoff (1..10)");
    sub->add_option("--p", o.p, "prime (overrides the file)");
    sub->add_option("--precision", o.precision, "e for Z/p^e coefficients");
    sub->add_option("--budget", o.budget, "size budget for enumerations and Lie models");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--samples", o.samples, "sample points per axiom check");
    sub->add_option("--out", o.out, "write the JSON report here");
    sub->add_flag("--json", o.json, "print the JSON report to stdout");
  };

  auto* expand = app.add_subcommand("expand", "Magnus expansion of a word");
  common(expand);
  expand->add_option("--word", o.word, "word, e.g. \"[x,y]^2 x\"");
  expand->add_option("--mode", o.mode, "one-plus-x or exponential");
  expand->add_option("--rank", o.rank, "alphabet size (defaults to the letters used)");

  auto* zindex = app.add_subcommand("zindex", "Zassenhaus index of a word over F_p");
  common(zindex);
  zindex->add_option("--word", o.word, "word");
  zindex->add_option("--rank", o.rank, "alphabet size");

  auto* dimsub = app.add_subcommand("dimsub", "order of the dimension quotient F/M_n");
  common(dimsub);
  dimsub->add_option("--rank", o.rank, "rank of the free group");
  dimsub->add_option("--n", o.n, "filtration index n");

  auto* diagram = app.add_subcommand("diagram", "crossed module and comparison diagram");
  common(diagram);
  diagram->add_option("--weighting", o.weighting, "relator generator degree: initial-degree or unit");

  auto* pi2 = app.add_subcommand("pi2", "second homotopy dimensions (u2)");
  common(pi2);
  pi2->add_option("--weighting", o.weighting, "relator generator degree: initial-degree or unit");

  auto* qr = app.add_subcommand("qr-scan", "graded torsion scan of relation coinvariants");
  common(qr);
  auto* preg = app.add_subcommand("p-regular", "p-torsion scan of the graded Lie ring quotient");
  common(preg);
  auto* cd2 = app.add_subcommand("cd2", "one-relator cd = 2 evidence");
  common(cd2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) return run_expand(o);
    if (*zindex) return run_zindex(o);
    if (*dimsub) return run_dimsub(o);
    if (*diagram) return run_diagram(o);
    if (*pi2) return run_pi2(o);
    if (*qr) return run_qr(o);
    if (*preg) return run_pregular(o);
    if (*cd2) return run_cd2(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
