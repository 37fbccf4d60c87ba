#include "wreathfock/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace wreathfock {

std::optional<nlohmann::ordered_json> cache_get(const std::string& dir, const std::string& key) {
    if (dir.empty()) return std::nullopt;
    std::filesystem::path path = std::filesystem::path(dir) / key;
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::ordered_json payload = nlohmann::ordered_json::parse(in);
        return payload;
    } catch (const std::exception& e) {
        std::cerr << "wreathfock: corrupt cache file " << path.string() << " (" << e.what()
                  << "), recomputing\n";
        return std::nullopt;
    }
}

void cache_put(const std::string& dir, const std::string& key,
               const nlohmann::ordered_json& payload) {
    if (dir.empty()) return;
    std::filesystem::path base(dir);
    std::error_code ec;
    std::filesystem::create_directories(base, ec);
    std::filesystem::path path = base / key;
    std::filesystem::path tmp = base / (key + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cache_put: cannot write " + tmp.string());
        out << payload.dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cache_put: rename failed for " + path.string());
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("WREATHFOCK_CACHE")) {
        if (*env) return env;
    }
    return flag_value;
}

}  // namespace wreathfock
