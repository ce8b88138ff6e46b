#pragma once

// JSON rendering of normal forms and class specs (nlohmann/json).

#include <json.hpp>

#include "monadic/class_spec.hpp"
#include "monadic/normal_form.hpp"

namespace monadic {

inline nlohmann::json type_json(const PredSet& preds, TypeMask s) {
  return preds.type_names(s);
}

inline nlohmann::json types_json(const PredSet& preds,
                                 const std::vector<TypeMask>& ts) {
  nlohmann::json a = nlohmann::json::array();
  for (TypeMask s : ts) a.push_back(type_json(preds, s));
  return a;
}

/// {"k", "dialect", "disjuncts": [{"T", "Pi", "Sigma"}]}
inline nlohmann::json to_json(const NormalForm& nf) {
  nlohmann::json ds = nlohmann::json::array();
  for (const auto& d : nf.disjuncts)
    ds.push_back({{"T", types_json(nf.preds, d.t)},
                  {"Pi", types_json(nf.preds, d.pi)},
                  {"Sigma", types_json(nf.preds, d.sigma)}});
  return {{"k", nf.k}, {"dialect", to_string(nf.dialect)}, {"disjuncts", ds}};
}

/// M: {"k", "dialect", "Sigma"}; otherwise {"k", "dialect", "values": [{"type",
/// "value"}]} with value a number, ">=k" or "omega".
inline nlohmann::json to_json(const ClassSpec& spec) {
  nlohmann::json j = {{"k", spec.rank()}, {"dialect", to_string(spec.dialect())}};
  if (spec.dialect() == Dialect::M && spec.rank() > 0) {
    j["Sigma"] = types_json(spec.preds(), spec.realised());
    return j;
  }
  nlohmann::json vs = nlohmann::json::array();
  for (TypeMask s = 0; s < spec.values().size(); ++s) {
    const ClassValue& v = spec[s];
    nlohmann::json value;
    switch (v.kind) {
      case ClassValue::Kind::Exact: value = v.n; break;
      case ClassValue::Kind::AtLeastK:
        value = ">=" + std::to_string(spec.threshold());
        break;
      case ClassValue::Kind::Infinite: value = "omega"; break;
    }
    vs.push_back({{"type", type_json(spec.preds(), s)}, {"value", value}});
  }
  j["values"] = vs;
  return j;
}

}  // namespace monadic
