#pragma once

#include "json.hpp"

#include "ckdist/engine.hpp"
#include "ckdist/restriction.hpp"

namespace ckdist {

nlohmann::json step_function_to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

nlohmann::json delta_point_to_json(const DeltaPoint& p);
DeltaPoint delta_point_from_json(const nlohmann::json& j);

nlohmann::json sparse_vector_to_json(const SparseVector& v);
SparseVector sparse_vector_from_json(const nlohmann::json& j);

// {"k", "compact", "claimed_distortion", "images": [{"point", "function"}],
//  "default_rule": {"name": "basis-indicator"|"frechet-window", ...}}.
// Table entries shadow the default rule; without a rule, points outside the
// table have no image.
CandidateMap candidate_map_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const RefutationWitness& w);

nlohmann::json embedding_sample_to_json(const EmbeddingSample& s);
EmbeddingSample embedding_sample_from_json(const nlohmann::json& j);

}  // namespace ckdist
