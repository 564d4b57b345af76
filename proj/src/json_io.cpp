#include "ckdist/json_io.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace ckdist {

using nlohmann::json;

json step_function_to_json(const StepFunction& f) {
  json cuts = json::array();
  for (const auto& c : f.cuts()) cuts.push_back(format_ordinal(c));
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(format_rational(v));
  return {{"compact", format_ordinal(f.compact().endpoint)},
          {"cuts", std::move(cuts)},
          {"values", std::move(values)}};
}

StepFunction step_function_from_json(const json& j) {
  CompactInterval compact{parse_ordinal(j.at("compact").get<std::string>())};
  std::vector<Ordinal> cuts;
  for (const auto& c : j.at("cuts"))
    cuts.push_back(parse_ordinal(c.get<std::string>()));
  std::vector<Rat> values;
  for (const auto& v : j.at("values"))
    values.push_back(parse_rational(v.get<std::string>()));
  return StepFunction::make(std::move(compact), std::move(cuts),
                            std::move(values));
}

json delta_point_to_json(const DeltaPoint& p) {
  return json(p);
}

DeltaPoint delta_point_from_json(const json& j) {
  return make_delta_point(j.get<std::vector<std::uint64_t>>());
}

json sparse_vector_to_json(const SparseVector& v) {
  json out = json::object();
  for (const auto& [i, c] : v) out[std::to_string(i)] = format_rational(c);
  return out;
}

SparseVector sparse_vector_from_json(const json& j) {
  std::map<std::uint64_t, Rat> entries;
  for (const auto& [key, val] : j.items())
    entries[std::stoull(key)] = parse_rational(val.get<std::string>());
  return make_sparse_vector(std::move(entries));
}

CandidateMap candidate_map_from_json(const json& j) {
  std::uint64_t k = j.at("k").get<std::uint64_t>();
  CompactInterval compact{parse_ordinal(j.at("compact").get<std::string>())};
  Rat claimed = parse_rational(j.at("claimed_distortion").get<std::string>());

  auto table = std::make_shared<std::map<DeltaPoint, StepFunction>>();
  if (j.contains("images"))
    for (const auto& entry : j.at("images"))
      table->emplace(delta_point_from_json(entry.at("point")),
                     step_function_from_json(entry.at("function")));

  std::shared_ptr<CandidateMap> base;
  if (j.contains("default_rule") && !j.at("default_rule").is_null()) {
    const auto& rule = j.at("default_rule");
    std::string name = rule.at("name").get<std::string>();
    if (name == "basis-indicator") {
      Rat scale = rule.contains("scale")
                      ? parse_rational(rule.at("scale").get<std::string>())
                      : Rat(1);
      base = std::make_shared<CandidateMap>(
          basis_indicator_map(k, compact, claimed, scale));
    } else if (name == "frechet-window") {
      base = std::make_shared<CandidateMap>(
          frechet_window_map(k, rule.at("n").get<std::uint64_t>(), claimed));
    } else {
      throw std::invalid_argument("unknown default rule: " + name);
    }
  }

  CandidateMap out;
  out.k = k;
  out.compact = compact;
  out.claimed_D = claimed;
  out.assignment = [table, base](const DeltaPoint& p)
      -> std::optional<StepFunction> {
    if (auto it = table->find(p); it != table->end()) return it->second;
    if (base) return base->assignment(p);
    return std::nullopt;
  };
  return out;
}

json witness_to_json(const RefutationWitness& w) {
  return {{"a", delta_point_to_json(w.a)},
          {"b", delta_point_to_json(w.b)},
          {"image_a", step_function_to_json(w.image_a)},
          {"image_b", step_function_to_json(w.image_b)},
          {"measured", format_rational(w.measured)},
          {"violated",
           w.violated == RefutationWitness::Bound::lower ? "lower" : "upper"},
          {"trace", w.trace}};
}

json embedding_sample_to_json(const EmbeddingSample& s) {
  json entries = json::array();
  for (const auto& [v, f] : s.table)
    entries.push_back({{"vector", sparse_vector_to_json(v)},
                       {"function", step_function_to_json(f)}});
  return {{"compact", format_ordinal(s.compact.endpoint)},
          {"epsilon_prime", format_rational(s.epsilon_prime)},
          {"entries", std::move(entries)}};
}

EmbeddingSample embedding_sample_from_json(const json& j) {
  EmbeddingSample s;
  s.compact = CompactInterval{parse_ordinal(j.at("compact").get<std::string>())};
  s.epsilon_prime =
      parse_rational(j.at("epsilon_prime").get<std::string>());
  for (const auto& entry : j.at("entries"))
    s.table.emplace(sparse_vector_from_json(entry.at("vector")),
                    step_function_from_json(entry.at("function")));
  return s;
}

}  // namespace ckdist
