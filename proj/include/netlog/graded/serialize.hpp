#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "netlog/errors.hpp"
#include "netlog/graded/module.hpp"

namespace netlog {

using json = nlohmann::json;

inline json field_to_json(const FieldSpec& f) {
  if (!f.is_extension()) return json{{"kind", "QQ"}};
  return json{{"kind", "extension"}, {"generator", f.generator}, {"minpoly", f.minpoly.to_string(f.generator)}};
}

inline FieldSpec field_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "QQ") return FieldSpec::rationals();
  if (kind != "extension") throw InputError("unknown field kind '" + kind + "'");
  std::string g = j.at("generator").get<std::string>();
  return FieldSpec::extension(parse_upoly(j.at("minpoly").get<std::string>(), g), g);
}

template <class K>
typename K::Context context_from_spec(const FieldSpec& f) {
  if constexpr (std::is_same_v<K, Rational>) {
    if (f.is_extension()) throw InputError("field spec is an extension but scalars are rational");
    return RationalField{};
  } else {
    return f.make_extension();
  }
}

template <class K>
json ring_to_json(const PolyRing<K>& R) {
  return json{{"field", field_to_json(R.field_spec())}, {"variables", R.names()}};
}

template <class K>
RingPtr<K> ring_from_json(const json& j) {
  auto f = field_from_json(j.at("field"));
  return PolyRing<K>::make(j.at("variables").get<std::vector<std::string>>(), context_from_spec<K>(f));
}

template <class K>
json vec_to_json(const Vec<K>& v, int rank, const PolyRing<K>& R) {
  json a = json::array();
  for (auto& p : v.components(rank)) a.push_back(to_string(p, R));
  return a;
}

template <class K>
Vec<K> vec_from_json(const json& a, int rank, const PolyRing<K>& R) {
  if (!a.is_array() || static_cast<int>(a.size()) != rank) throw InputError("vector entry count does not match rank");
  std::vector<Poly<K>> comps;
  for (auto& s : a) comps.push_back(parse_poly(s.get<std::string>(), R));
  return Vec<K>::from_components(comps);
}

template <class K>
json module_to_json(const PresentedModule<K>& M) {
  const auto& R = *M.ring();
  const int n = M.ambient().rank();
  json j;
  j["ring"] = ring_to_json(R);
  j["ambient_twists"] = M.ambient().twists;
  if (M.is_cokernel()) {
    j["generators"] = nullptr;
  } else {
    json g = json::array();
    for (auto& v : *M.explicit_generators()) g.push_back(vec_to_json(v, n, R));
    j["generators"] = g;
  }
  json r = json::array();
  for (auto& v : M.relations()) r.push_back(vec_to_json(v, n, R));
  j["relations"] = r;
  json I = json::array();
  for (auto& f : M.ideal()) I.push_back(to_string(f, R));
  j["ideal"] = I;
  j["integral"] = M.integral();
  return j;
}

template <class K>
PresentedModule<K> module_from_json(const json& j) {
  auto R = ring_from_json<K>(j.at("ring"));
  FreeModule F(j.at("ambient_twists").get<std::vector<int>>());
  std::vector<Vec<K>> rels, gens;
  for (auto& a : j.at("relations")) rels.push_back(vec_from_json(a, F.rank(), *R));
  std::vector<Poly<K>> I;
  for (auto& s : j.at("ideal")) I.push_back(parse_poly(s.get<std::string>(), *R));
  bool integral = j.value("integral", true);
  if (j.at("generators").is_null()) {
    std::vector<int> tw;
    for (auto& w : rels) tw.push_back(-w.degree(F));
    return PresentedModule<K>::cokernel(GradedMap<K>(R, FreeModule(tw), F, rels), I, integral);
  }
  for (auto& a : j.at("generators")) gens.push_back(vec_from_json(a, F.rank(), *R));
  return PresentedModule<K>::subquotient(R, F, gens, rels, I, integral);
}

}  // namespace netlog
