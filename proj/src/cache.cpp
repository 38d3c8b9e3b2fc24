#include "hesslab/cache.hpp"

#include "hesslab/version.hpp"

#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace hesslab {

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string hex(std::uint64_t v) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(v));
    return buffer;
}

}  // namespace

Cache::Cache(std::filesystem::path directory) : directory_(std::move(directory)) {}

Cache Cache::from_flag(const std::string& directory) {
    if (!directory.empty()) return Cache(directory);
    if (const char* env = std::getenv("HESSLAB_CACHE"); env && *env) return Cache(env);
    return Cache();
}

std::string Cache::key(const std::string& module, int n, const std::string& h,
                       const std::vector<int>& J, std::uint64_t seed) {
    std::ostringstream out;
    out << module << "|n=" << n << "|h=" << h << "|J=";
    for (std::size_t i = 0; i < J.size(); ++i) out << (i ? "," : "") << J[i];
    out << "|seed=" << seed << "|v=" << kVersion;
    return out.str();
}

std::filesystem::path Cache::path_for(const std::string& key) const {
    const auto module = key.substr(0, key.find('|'));
    return *directory_ / (module + "-" + hex(fnv1a(key)) + ".json");
}

std::optional<nlohmann::ordered_json> Cache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        nlohmann::ordered_json doc = nlohmann::ordered_json::parse(in);
        // a hash collision or a stale file is a miss, never a wrong answer
        if (!doc.contains("key") || doc["key"] != key || !doc.contains("value")) return std::nullopt;
        return doc["value"];
    } catch (const nlohmann::ordered_json::exception&) {
        return std::nullopt;
    }
}

void Cache::store(const std::string& key, const nlohmann::ordered_json& value) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(*directory_, ec);
    const auto target = path_for(key);
    auto temp = target;
    temp += ".tmp" + std::to_string(fnv1a(key + std::to_string(reinterpret_cast<std::uintptr_t>(&value))));
    {
        std::ofstream out(temp);
        if (!out) return;
        out << nlohmann::ordered_json{{"key", key}, {"value", value}}.dump() << '\n';
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) std::filesystem::remove(temp, ec);
}

}  // namespace hesslab
