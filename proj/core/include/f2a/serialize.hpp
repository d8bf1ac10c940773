#pragma once

// JSON views of the library results.  Header-only so that the CLI and the
// tests serialize through one code path; keys sort alphabetically, which
// keeps the output stable for diffing.

#if __has_include(<json.hpp>)
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "f2a/canon.hpp"
#include "f2a/census.hpp"

namespace f2a::serialize {

using nlohmann::json;

inline json params_json(const std::vector<std::pair<std::string, FieldElement>>& params) {
  json j = json::object();
  for (const auto& [name, value] : params) j[name] = value.str();
  return j;
}

inline json label_json(const canon::CanonicalLabel& label) {
  json j;
  j["char_class"] = canon::char_class_name(label.cls);
  j["family"] = label.family;
  j["params"] = json::object();
  if (label.param) {
    for (const canon::CatalogFamily& fam : canon::families(label.cls))
      if (fam.name == label.family) j["params"][fam.param_name()] = label.param->str();
  }
  return j;
}

inline json algebra_classification_json(const canon::AlgebraClassification& c) {
  json j = label_json(c.label);
  j["witness"] = c.witness.str();
  return j;
}

inline json pair_classification_json(const canon::PairClassification& c) {
  json j;
  j["algebra"] = label_json(c.label.algebra);
  j["table"] = c.label.table;
  j["item"] = c.label.item;
  j["display"] = c.label.display;
  j["params"] = params_json(c.label.params);
  j["reference_items"] = c.label.reference_items;
  j["witness"] = c.witness.str();
  j["matched_form"] = c.matched_form.str();
  return j;
}

inline json frobenius_classification_json(const canon::FrobeniusClassification& c) {
  json j;
  j["frobenius"] = c.is_frobenius();
  if (c.is_frobenius()) {
    j["algebra"] = label_json(c.label->algebra);
    j["table"] = c.label->table;
    j["item"] = c.label->item;
    j["display"] = c.label->display;
    j["params"] = params_json(c.label->params);
    j["reference_items"] = c.label->reference_items;
    j["witness"] = c.witness->str();
    j["matched_form"] = c.matched_form->str();
  } else {
    j["failing_residual"] = c.failing_residual;
  }
  return j;
}

inline json defect_json(const frob::FrobeniusDefect& d) {
  json residuals = json::array();
  for (const auto& r : d.residuals) residuals.push_back(r.str());
  json j;
  j["residuals"] = residuals;
  j["all_zero"] = d.all_zero();
  return j;
}

inline json solution_space_json(const frob::SolutionSpace& s) {
  json basis = json::array();
  for (const auto& f : s.basis) basis.push_back(f.str());
  json j;
  j["basis"] = basis;
  j["dimension"] = s.basis.size();
  j["has_nondegenerate"] = s.has_nondegenerate;
  return j;
}

inline json canonical_form_json(const forms::CanonicalForm& c) {
  json j;
  j["canonical"] = c.canonical.str();
  j["witness"] = c.witness.str();
  j["shape"] = c.shape;
  j["shape_supplementary"] = c.shape_supplementary;
  j["also_matches"] = c.also_matches;
  j["used_closure"] = c.used_closure;
  return j;
}

inline json check_json(const census::TheoremCheck& c) {
  json j;
  j["id"] = c.id;
  j["status"] = c.pass ? "pass" : "fail";
  j["discrepancies"] = c.discrepancies;
  j["corrections"] = c.corrections;
  return j;
}

inline json automorphisms_json(const std::vector<BasisChange>& aut) {
  json elems = json::array();
  for (const auto& g : aut) elems.push_back(g.str());
  json j;
  j["order"] = aut.size();
  j["elements"] = elems;
  return j;
}

}  // namespace f2a::serialize
