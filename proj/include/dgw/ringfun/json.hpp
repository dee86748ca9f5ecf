#pragma once

// JSON forms of finite-rank algebras and ring presentations.  Requires
// nlohmann/json (json.hpp on the include path); the core headers do not.
//
// Algebra:      {"basis": [...], "moduli": [...], "unit": [...],
//                "constants": [[i, j, k, c], ...]}   (e_i e_j has c at e_k)
// Presentation: {"generators": [...], "labels": [...], "inverses": [[g, g'], ...],
//                "relators": ["...", ...], "comments": [...]}

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgw/error.hpp"
#include "dgw/ringfun/algebra.hpp"
#include "dgw/ringfun/presentation.hpp"

namespace dgw {

namespace detail {

// Integers are written as JSON numbers when they fit in a long, as decimal
// strings otherwise.
inline nlohmann::json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ValidationError("expected an integer in JSON, got " + j.dump());
}

}  // namespace detail

inline nlohmann::json algebra_to_json(const FiniteRankAlgebra& alg) {
  nlohmann::json out;
  out["basis"] = alg.names();
  nlohmann::json moduli = nlohmann::json::array(), unit = nlohmann::json::array();
  for (const auto& m : alg.moduli()) moduli.push_back(detail::integer_to_json(m));
  for (const auto& u : alg.unit_vector()) unit.push_back(detail::integer_to_json(u));
  out["moduli"] = moduli;
  out["unit"] = unit;
  nlohmann::json constants = nlohmann::json::array();
  for (std::size_t i = 0; i < alg.rank(); ++i)
    for (std::size_t j = 0; j < alg.rank(); ++j) {
      const IntVector& v = alg.structure_constant(i, j);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) constants.push_back({i, j, k, detail::integer_to_json(v[k])});
    }
  out["constants"] = constants;
  out["invariant_factors"] = alg.additive_group().to_string();
  return out;
}

inline FiniteRankAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    auto names = j.at("basis").get<std::vector<std::string>>();
    const std::size_t n = names.size();
    std::vector<Integer> moduli;
    for (const auto& m : j.at("moduli")) moduli.push_back(detail::integer_from_json(m));
    IntVector unit;
    for (const auto& u : j.at("unit")) unit.push_back(detail::integer_from_json(u));
    std::vector<IntVector> table(n * n, IntVector(n));
    for (const auto& c : j.at("constants")) {
      if (!c.is_array() || c.size() != 4) throw ValidationError("malformed structure constant");
      auto i = c[0].get<std::size_t>(), jj = c[1].get<std::size_t>(), k = c[2].get<std::size_t>();
      if (i >= n || jj >= n || k >= n) throw ValidationError("structure constant out of range");
      table[i * n + jj][k] = detail::integer_from_json(c[3]);
    }
    return FiniteRankAlgebra(std::move(names), std::move(moduli), std::move(table),
                             std::move(unit));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed algebra JSON: ") + e.what());
  }
}

inline nlohmann::json presentation_to_json(const RingPresentation& p) {
  nlohmann::json out;
  out["generators"] = p.generators;
  out["labels"] = p.labels;
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& [a, b] : p.inverses) inv.push_back({p.generators[a], p.generators[b]});
  out["inverses"] = inv;
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : p.relators) rel.push_back(r.to_string(p.generators));
  out["relators"] = rel;
  out["comments"] = p.comments;
  return out;
}

inline RingPresentation presentation_from_json(const nlohmann::json& j) {
  try {
    RingPresentation p;
    auto gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<std::string> labels =
        j.contains("labels") ? j["labels"].get<std::vector<std::string>>() : gens;
    if (labels.size() != gens.size()) throw ValidationError("one label per generator is required");
    for (std::size_t g = 0; g < gens.size(); ++g) p.add_generator(gens[g], labels[g]);
    for (const auto& r : j.at("relators"))
      p.relators.push_back(NCPolynomial::parse(r.get<std::string>(), p.generators));
    if (j.contains("inverses"))
      for (const auto& pr : j["inverses"]) {
        auto a = p.find_generator(pr.at(0).get<std::string>());
        auto b = p.find_generator(pr.at(1).get<std::string>());
        if (!a || !b) throw ValidationError("inverse marker names a missing generator");
        p.inverses.emplace_back(*a, *b);
      }
    if (j.contains("comments")) p.comments = j["comments"].get<std::vector<std::string>>();
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed presentation JSON: ") + e.what());
  }
}

}  // namespace dgw
