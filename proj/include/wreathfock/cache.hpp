#pragma once

#include "json.hpp"

#include <optional>
#include <string>

namespace wreathfock {

// Versioned JSON cache files. Reads tolerate corruption (warn on stderr and
// report a miss); writes go through a temp file and an atomic rename. A
// version mismatch inside the payload is treated as a miss by the caller.
std::optional<nlohmann::ordered_json> cache_get(const std::string& dir, const std::string& key);
void cache_put(const std::string& dir, const std::string& key, const nlohmann::ordered_json& payload);

// Resolves the cache directory: the WREATHFOCK_CACHE environment variable
// overrides the flag value; empty means caching disabled.
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace wreathfock
