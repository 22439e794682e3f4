#pragma once

// Disk cache for invariant tables. Format is a small JSON object,
// human-auditable and diff-friendly:
//   {"version": 1, "pair": "...", "entries": [[d, "p/q"], ...],
//    "checksum": "<fnv1a64 over the canonical entry list>"}
// Writes are atomic (temp file in the same directory, then rename).

#include "relgw/rational.hpp"
#include "relgw/wdvv.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace relgw {

inline constexpr int kCacheFormatVersion = 1;

struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CacheParseError : CacheError {
    using CacheError::CacheError;
};
struct CacheVersionError : CacheError {
    using CacheError::CacheError;
};
struct CacheChecksumError : CacheError {
    using CacheError::CacheError;
};
struct CachePairMismatchError : CacheError {
    using CacheError::CacheError;
};

namespace detail {

inline std::string entries_digest(const std::map<long, Rational>& entries)
{
    // FNV-1a 64 over the canonical "d=p/q;" rendering of the sorted entries.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (const unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [d, v] : entries) {
        mix(std::to_string(d));
        mix("=");
        mix(to_string(v));
        mix(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace detail

inline void write_cache(const std::string& pair_name, const std::map<long, Rational>& entries,
                        const std::filesystem::path& path)
{
    nlohmann::json j;
    j["version"] = kCacheFormatVersion;
    j["pair"] = pair_name;
    auto& arr = j["entries"] = nlohmann::json::array();
    for (const auto& [d, v] : entries) {
        arr.push_back({d, to_string(v)});
    }
    j["checksum"] = detail::entries_digest(entries);

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw CacheError("cache: cannot open " + tmp.string() + " for writing");
        }
        out << j.dump(2) << "\n";
        if (!out.good()) {
            throw CacheError("cache: write failure on " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

/// Reads and fully validates a cache file. pair_name, when nonempty, must
/// match the stored pair.
inline std::map<long, Rational> read_cache(const std::filesystem::path& path,
                                           const std::string& pair_name = {})
{
    std::ifstream in(path);
    if (!in) {
        throw CacheError("cache: cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw CacheParseError("cache: " + path.string() + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("version") || !j.contains("pair") ||
        !j.contains("entries") || !j.contains("checksum")) {
        throw CacheParseError("cache: " + path.string() + ": missing required fields");
    }
    if (j["version"] != kCacheFormatVersion) {
        throw CacheVersionError("cache: " + path.string() + ": format version " +
                                j["version"].dump() + ", expected " +
                                std::to_string(kCacheFormatVersion));
    }
    if (!pair_name.empty() && j["pair"] != pair_name) {
        throw CachePairMismatchError("cache: " + path.string() + ": stored for pair \"" +
                                     j["pair"].get<std::string>() + "\", requested \"" +
                                     pair_name + "\"");
    }
    std::map<long, Rational> entries;
    try {
        for (const auto& e : j["entries"]) {
            entries[e.at(0).get<long>()] = parse_rational(e.at(1).get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw CacheParseError("cache: " + path.string() + ": malformed entry: " + e.what());
    } catch (const std::invalid_argument& e) {
        throw CacheParseError("cache: " + path.string() + ": " + e.what());
    }
    if (j["checksum"] != detail::entries_digest(entries)) {
        throw CacheChecksumError("cache: " + path.string() + ": checksum mismatch");
    }
    return entries;
}

inline void write_cache(InvariantTable& table, const std::filesystem::path& path)
{
    write_cache(table.pair().name, table.values(), path);
}

} // namespace relgw
