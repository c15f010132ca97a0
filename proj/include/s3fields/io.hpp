#pragma once

// On-disk formats: the cubic field cache (CSV + JSON sidecar) and census
// reports (CSV or JSON).

#include "s3fields/census.hpp"
#include "s3fields/enumerator.hpp"

#include <boost/crc.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace s3f {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheHeader = "a,b,c,d,disc_k,cyclic,ram_profile";

struct CacheMetadata {
    int format_version = kCacheFormatVersion;
    Sign sign = Sign::negative;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t record_count = 0;
    std::string crc32;  // of the CSV bytes, 8 lowercase hex digits

    nlohmann::json to_json() const;
    static CacheMetadata from_json(const nlohmann::json& j);
};

std::filesystem::path sidecar_path(const std::filesystem::path& csv);

std::string format_ram_profile(const std::vector<RamEntry>& ram);
std::string format_record_row(const CubicFieldRecord& r);
// Rebuilds the record, including the factorization implied by the profile.
// Throws IoError on malformed or inconsistent rows.
CubicFieldRecord parse_record_row(const std::string& line);

// Writes `<path>.partial` and renames to `path` on finish(); the sidecar
// appears only after the CSV is complete. If finish() is never reached the
// `.partial` file stays behind as the failure marker.
class CacheWriter {
public:
    CacheWriter(std::filesystem::path path, const EnumerationRange& range);
    void write(const CubicFieldRecord& r);
    CacheMetadata finish();

private:
    std::filesystem::path path_, partial_;
    std::ofstream out_;
    CacheMetadata meta_;
    boost::crc_32_type crc_;
    bool finished_ = false;
};

CacheMetadata write_cache(const std::filesystem::path& path, const EnumerationRange& range,
                          const EnumerationOptions& options = {});

CacheMetadata read_cache_metadata(const std::filesystem::path& path);
// Streams records; verifies header, row count and checksum at the end.
CacheMetadata read_cache(const std::filesystem::path& path, const RecordSink& sink);

// Census source backed by a cache that starts at |disc| = 0.
struct CachedSource {
    CubicSource source;
    std::uint64_t upper = 0;
    Sign sign = Sign::negative;
};
CachedSource cached_source(const std::filesystem::path& path);

std::string report_csv(const CensusReport& report);
nlohmann::json report_json(const CensusReport& report);

}  // namespace s3f
