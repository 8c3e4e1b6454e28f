#pragma once

#include <nlohmann/json.hpp>

#include "ordim/dimension.hpp"
#include "ordim/extension.hpp"
#include "ordim/poset.hpp"
#include "ordim/representation.hpp"

namespace ordim {

// {"labels": [...], "cover": [[a,b], ...]} — cover is the transitive
// reduction, so save/load round trips bit-exactly.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// {"rows": [[["num","den"], ...], ...], "kind": "plain|strict|injective"}
nlohmann::json multi_utility_to_json(const MultiUtility& mu);
MultiUtility multi_utility_from_json(const nlohmann::json& j);

// Array of permutation label lists, bottom element first.
nlohmann::json realizer_to_json(const Realizer& r);
// `labels` fixes the members' ground-set order (so intersect() works against
// the base they came from).
Realizer realizer_from_json(const nlohmann::json& j, const std::vector<std::string>& labels);

// Array of {"index", "witness", "added_pairs"}.
nlohmann::json trace_to_json(const ExtensionTrace& t);

nlohmann::json certificate_to_json(const DimensionCertificate& c);

} // namespace ordim
