#pragma once

// JSON serialization of reports (schema "unipotent-lab/v1").
//
// Exact numbers are strings ("3", "-1/2"); dimensions and counts are JSON
// integers; per-degree tables are arrays indexed by degree starting at 1.
// Matrices are {"rows", "cols", "entries": [[row, col, "value"], ...]} with
// zero entries omitted. Keys are emitted in sorted order, so identical
// inputs produce byte-identical files.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unipotent_lab/analysis.hpp"
#include "unipotent_lab/crossed_module.hpp"
#include "unipotent_lab/series.hpp"

namespace unipotent_lab {

using Json = nlohmann::json;

inline constexpr const char* schema_version = "unipotent-lab/v1";

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) entries.push_back(Json::array({r, c, to_string(m(r, c))}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

// Drops the unused degree-0 entry.
template <class T>
Json degree_table(const std::vector<T>& v) {
  Json out = Json::array();
  for (std::size_t d = 1; d < v.size(); ++d) {
    if constexpr (std::is_same_v<T, Integer>)
      out.push_back(to_string(v[d]));
    else
      out.push_back(v[d]);
  }
  return out;
}

inline Json series_json(const TruncatedSeries& s, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json letters = Json::array();
    for (auto l : s.space()->spell(t.key)) letters.push_back(l < names.size() ? names[l] : "a" + std::to_string(l));
    terms.push_back({{"monomial", letters}, {"degree", t.degree}, {"coefficient", to_string(t.coefficient)}});
  }
  return {{"ring", s.ring().name()}, {"cutoff", s.cutoff()}, {"text", s.format(names)}, {"terms", terms}};
}

inline Json to_json(const SampleCheck& s) {
  return {{"samples", s.samples}, {"failures", s.failures}, {"passed", s.passed()}};
}

inline Json to_json(const DiagramReport& r) {
  Json u2 = Json::array();
  for (std::size_t k = 0; k < r.u2_basis.size(); ++k)
    u2.push_back({{"coordinates", vector_json(r.u2_basis[k])}, {"text", r.u2_basis_text[k]}});
  Json c_action = Json::array(), r_action = Json::array();
  for (const auto& m : r.c_bar_action) c_action.push_back(matrix_json(m));
  for (const auto& m : r.r_bar_action) r_action.push_back(matrix_json(m));
  return {
      {"schema", schema_version},
      {"kind", "diagram"},
      {"presentation", r.presentation_id},
      {"cutoff", r.cutoff},
      {"relator_weighting", to_string(r.weighting)},
      {"relator_weights", r.relator_weights},
      {"total_generators", r.total_names},
      {"dims",
       {{"base_lie", degree_table(r.base_dims)},
        {"total_lie", degree_table(r.total_dims)},
        {"ker_d0", degree_table(r.top_dims)},
        {"ker_d1", degree_table(r.ker_d1_dims)},
        {"peiffer", degree_table(r.peiffer_dims)},
        {"relation_ideal", degree_table(r.relation_dims)},
        {"quotient_lie", degree_table(r.quotient_lie_dims)},
        {"envelope", degree_table(r.envelope_dims)},
        {"C_bar", degree_table(r.c_bar_dims)},
        {"R_bar", degree_table(r.r_bar_dims)},
        {"C_hat", degree_table(r.c_hat_dims)},
        {"R_hat", degree_table(r.r_hat_dims)},
        {"free_C_bar_expected", degree_table(r.free_c_bar_dims)},
        {"u2", degree_table(r.u2_dims)},
        {"pi2", degree_table(r.pi2_dims)}}},
      {"maps",
       {{"gamma", matrix_json(r.gamma)},
        {"kappa", matrix_json(r.kappa)},
        {"tau", matrix_json(r.tau)},
        {"mu", matrix_json(r.mu)}}},
      {"basis_degrees",
       {{"C_bar", r.c_bar_degrees}, {"R_bar", r.r_bar_degrees}, {"C_hat", r.c_hat_degrees}, {"R_hat", r.r_hat_degrees}}},
      {"top_row_words", {{"C_hat", r.c_hat_words}, {"R_hat", r.r_hat_words}}},
      {"actions", {{"C_bar", c_action}, {"R_bar", r_action}}},
      {"u2_basis", u2},
      {"verdicts",
       {{"cm1", to_json(r.cm1)},
        {"cm2", to_json(r.cm2)},
        {"peiffer_routes_agree", r.peiffer_routes_agree},
        {"commutative", r.commutative},
        {"exact", r.exact},
        {"free", r.free},
        {"kappa_invertible", r.kappa_invertible},
        {"tau_invertible", r.tau_invertible},
        {"relations_act_trivially", r.relations_act_trivially},
        {"action_raises_degree", r.action_graded}}},
      {"top_row", "truncation model"},
      {"pi2_conditional_on_quasirationality", true},
      {"notes", r.notes},
  };
}

inline Json to_json(const TorsionReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"lattice_rank", d.ambient_rank},
                       {"torsion", integers_json(d.torsion)},
                       {"free_rank", d.free_rank},
                       {"p_torsion", d.p_torsion}});
  Json forms = Json::array();
  for (std::size_t j = 0; j < r.initial_forms.size(); ++j)
    forms.push_back({{"degree", r.initial_degrees[j]}, {"coordinates", integers_json(r.initial_forms[j])}});
  Json out = {
      {"schema", schema_version},
      {"kind", r.kind},
      {"presentation", r.presentation_id},
      {"cutoff", r.cutoff},
      {"p", r.prime},
      {"initial_forms", forms},
      {"degrees", degrees},
      {"verdict", r.verdict},
      {"disclaimer", graded_disclaimer()},
  };
  out["obstruction_degree"] = r.obstruction_degree ? Json(*r.obstruction_degree) : Json(nullptr);
  return out;
}

inline Json to_json(const CDEvidenceReport& r) {
  Json out = {
      {"schema", schema_version},
      {"kind", "cd2"},
      {"presentation", r.presentation_id},
      {"cutoff", r.cutoff},
      {"p", r.prime},
      {"relator_weight", r.relator_weight},
      {"checks",
       {{"single_relator", r.single_relator},
        {"relation_module_free", r.relation_module_free},
        {"kappa_bijective", r.kappa_bijective},
        {"u2_vanishes", r.u2_vanishes},
        {"p_regular", r.p_regular}}},
      {"R_bar_dims", degree_table(r.r_bar_dims)},
      {"R_bar_expected", degree_table(r.expected_r_bar_dims)},
      {"u2_dims", degree_table(r.u2_dims)},
      {"verdict", r.verdict},
      {"diagram", to_json(r.diagram)},
      {"p_regularity", to_json(r.regularity)},
      {"disclaimer", graded_disclaimer()},
  };
  out["obstruction_degree"] = r.obstruction_degree ? Json(*r.obstruction_degree) : Json(nullptr);
  return out;
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

// Writes next to the target and renames, so readers never see partial files.
inline void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot move report into place: " + ec.message());
  }
}

}  // namespace unipotent_lab
