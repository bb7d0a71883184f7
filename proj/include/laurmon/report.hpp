#pragma once

#include <json.hpp>

#include "laurmon/classifier.hpp"
#include "laurmon/factorization.hpp"

namespace laurmon {

// JSON rendering. Numbers that are not small integers (coefficients,
// lengths, rationals) are written as exact strings such as "7/2" or "-14".

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json to_json(const QPoly& f);
nlohmann::json to_json(const IntLaurentPoly& f);
nlohmann::json to_json(const NatLaurentPoly& f);
nlohmann::json to_json(const Interval& i);
nlohmann::json to_json(const AlgebraicReal& a);
nlohmann::json to_json(const MinimalPair& pair);
nlohmann::json to_json(const SearchBudget& budget);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const AccpChainWitness& w);
nlohmann::json to_json(const Factorization& f);
nlohmann::json to_json(const ElasticityWitness& w);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const EmbeddingBox& box);
nlohmann::json to_json(const FactorizationSet& fs);

/// One "path: value" line per leaf, in document order.
std::string flatten(const nlohmann::json& doc);

}  // namespace laurmon
