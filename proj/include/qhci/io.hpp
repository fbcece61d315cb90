#pragma once

#include "qhci/tevelev.hpp"
#include "qhci/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qhci {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json space_json(const FanoSpace& space);

/// {"basis": tag, "terms": [{basis_index, q_power, value}]}, terms sorted by
/// q_power ascending, then basis_index descending.
Json ring_element_json(const RingElement& element);

Json tevelev_json(const TevelevBreakdown& breakdown);

/// alpha^k_s for k = 1..k_max, s = 0..r, plus every stored descendant.
Json gw_table_json(GWTable& table, int k_max);

Json verify_json(const VerifyReport& report);

/// {"schema": 1, "space": ..., kind: payload}.
Json document(const FanoSpace& space, const std::string& kind, Json payload);

Json error_json(ErrorCode code, const std::string& message);

// Persistent cache of two-point invariants:
// {"schema": 1, "dim": r, "degrees": [...], "entries": {"k,a,i": "p/q"}}.

Json cache_json(const GWTable& table);
/// Merge entries into `table`. CacheMismatch on a foreign header or a
/// value that disagrees with the memo; MalformedRational on bad values.
/// Returns the number of entries read.
std::size_t merge_cache(const Json& cache, GWTable& table);

void save_cache(const std::filesystem::path& path, const GWTable& table);
/// Missing file: nothing loaded, returns 0.
std::size_t load_cache(const std::filesystem::path& path, GWTable& table);

}  // namespace qhci
