#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hesslab {

/// Content-addressed store of JSON documents. A default-constructed cache is
/// disabled: load() misses and store() does nothing.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path directory);

    /// Explicit directory if nonempty, else $HESSLAB_CACHE, else disabled.
    static Cache from_flag(const std::string& directory);

    bool enabled() const noexcept { return directory_.has_value(); }
    const std::optional<std::filesystem::path>& directory() const noexcept { return directory_; }

    static std::string key(const std::string& module, int n, const std::string& h,
                           const std::vector<int>& J, std::uint64_t seed);

    std::optional<nlohmann::ordered_json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::ordered_json& value) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::optional<std::filesystem::path> directory_;
};

}  // namespace hesslab
