#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tabord/embeddings.hpp"
#include "tabord/tableau.hpp"

namespace tabord {

using Json = nlohmann::ordered_json;

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"shape":[...],"rows":[[...],...]}
Json syt_to_json(const StandardTableau& t);
StandardTableau syt_from_json(const Json& j);

// {"inner":[...],"chain":[[...],...]}
Json lr_to_json(const LRTableau& t);
LRTableau lr_from_json(const Json& j);

// {"field":p,"ambient":[...],"generators":["t^2*b_1 + t*b_2", ...]}
Json embedding_to_json(const Embedding& x);
Embedding embedding_from_json(const Json& j);

// {"matrix":[[[coefficients], ...], ...]}: row j, column i.
Json poly_matrix_to_json(const PolyMatrix& m);

// {"left":..., "middle":..., "right":..., "inject":[...], "project":[...]}
Json ses_to_json(const ShortExactSequence& s);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t h);

} // namespace tabord
