#include "s3fields/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace s3f {

namespace fs = std::filesystem;
using nlohmann::json;

json CacheMetadata::to_json() const {
    return json{{"format_version", format_version}, {"sign", to_string(sign)}, {"lower", lower},
                {"upper", upper}, {"record_count", record_count}, {"crc32", crc32}};
}

CacheMetadata CacheMetadata::from_json(const json& j) {
    try {
        CacheMetadata m;
        m.format_version = j.at("format_version").get<int>();
        const auto s = j.at("sign").get<std::string>();
        if (s != "pos" && s != "neg") throw IoError("bad sign in cache metadata: " + s);
        m.sign = s == "pos" ? Sign::positive : Sign::negative;
        m.lower = j.at("lower").get<std::uint64_t>();
        m.upper = j.at("upper").get<std::uint64_t>();
        m.record_count = j.at("record_count").get<std::uint64_t>();
        m.crc32 = j.at("crc32").get<std::string>();
        return m;
    } catch (const json::exception& e) {
        throw IoError(std::string("malformed cache metadata: ") + e.what());
    }
}

fs::path sidecar_path(const fs::path& csv) { return fs::path(csv.string() + ".json"); }

std::string format_ram_profile(const std::vector<RamEntry>& ram) {
    std::string s;
    for (std::size_t i = 0; i < ram.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(ram[i].p) + ':' + std::to_string(ram[i].e) + ':' + (ram[i].total ? 'T' : 'P');
    }
    return s;
}

std::string format_record_row(const CubicFieldRecord& r) {
    return std::to_string(r.form.a) + ',' + std::to_string(r.form.b) + ',' + std::to_string(r.form.c) + ',' +
           std::to_string(r.form.d) + ',' + std::to_string(r.disc) + ',' + (r.cyclic ? '1' : '0') + ',' +
           format_ram_profile(r.ramification);
}

namespace {

template <typename T> T parse_num(std::string_view s, const std::string& line) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw IoError("malformed cache row: " + line);
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

}  // namespace

CubicFieldRecord parse_record_row(const std::string& line) {
    const auto cols = split(line, ',');
    if (cols.size() != 7) throw IoError("malformed cache row: " + line);
    CubicFieldRecord r;
    r.form = {parse_num<std::int64_t>(cols[0], line), parse_num<std::int64_t>(cols[1], line),
              parse_num<std::int64_t>(cols[2], line), parse_num<std::int64_t>(cols[3], line)};
    r.disc = parse_num<std::int64_t>(cols[4], line);
    if (cols[5] != "0" && cols[5] != "1") throw IoError("malformed cyclic flag: " + line);
    r.cyclic = cols[5] == "1";
    r.factorization.sign = r.disc < 0 ? -1 : 1;
    if (!cols[6].empty()) {
        for (auto entry : split(cols[6], ';')) {
            const auto parts = split(entry, ':');
            if (parts.size() != 3 || (parts[2] != "T" && parts[2] != "P")) throw IoError("malformed ram profile: " + line);
            RamEntry e{parse_num<std::uint64_t>(parts[0], line), parse_num<int>(parts[1], line), parts[2] == "T"};
            r.ramification.push_back(e);
            r.factorization.factors.push_back({e.p, e.e});
        }
    }
    if (r.disc == 0 || r.factorization.value() != r.disc || discriminant(r.form) != r.disc)
        throw IoError("inconsistent cache row: " + line);
    return r;
}

CacheWriter::CacheWriter(fs::path path, const EnumerationRange& range)
    : path_(std::move(path)), partial_(path_.string() + ".partial") {
    meta_.sign = range.sign();
    meta_.lower = range.lower();
    meta_.upper = range.upper();
    out_.open(partial_, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoError("cannot open " + partial_.string() + " for writing");
    const std::string header = std::string(kCacheHeader) + "\n";
    out_ << header;
    crc_.process_bytes(header.data(), header.size());
}

void CacheWriter::write(const CubicFieldRecord& r) {
    const std::string row = format_record_row(r) + "\n";
    out_ << row;
    crc_.process_bytes(row.data(), row.size());
    ++meta_.record_count;
}

CacheMetadata CacheWriter::finish() {
    if (finished_) return meta_;
    out_.flush();
    out_.close();
    if (!out_) throw IoError("write failed for " + partial_.string());
    meta_.crc32 = hex32(crc_.checksum());
    std::error_code ec;
    fs::rename(partial_, path_, ec);
    if (ec) throw IoError("cannot rename " + partial_.string() + " to " + path_.string() + ": " + ec.message());
    const fs::path side = sidecar_path(path_);
    const fs::path side_partial = side.string() + ".partial";
    {
        std::ofstream s(side_partial, std::ios::binary | std::ios::trunc);
        if (!s) throw IoError("cannot open " + side_partial.string() + " for writing");
        s << meta_.to_json().dump(2) << "\n";
        if (!s) throw IoError("write failed for " + side_partial.string());
    }
    fs::rename(side_partial, side, ec);
    if (ec) throw IoError("cannot rename " + side_partial.string() + ": " + ec.message());
    finished_ = true;
    return meta_;
}

CacheMetadata write_cache(const fs::path& path, const EnumerationRange& range, const EnumerationOptions& options) {
    CacheWriter w(path, range);
    enumerate(range, [&](const CubicFieldRecord& r) { w.write(r); }, options);
    return w.finish();
}

CacheMetadata read_cache_metadata(const fs::path& path) {
    const fs::path side = sidecar_path(path);
    std::ifstream in(side);
    if (!in) throw IoError("cannot read cache metadata " + side.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IoError("malformed cache metadata " + side.string() + ": " + e.what());
    }
    auto m = CacheMetadata::from_json(j);
    if (m.format_version != kCacheFormatVersion)
        throw IoError("unsupported cache format version " + std::to_string(m.format_version) + " in " + side.string());
    return m;
}

CacheMetadata read_cache(const fs::path& path, const RecordSink& sink) {
    const auto meta = read_cache_metadata(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read cache " + path.string());
    boost::crc_32_type crc;
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader) throw IoError("bad cache header in " + path.string());
    crc.process_bytes(line.data(), line.size());
    crc.process_byte('\n');
    std::uint64_t count = 0;
    while (std::getline(in, line)) {
        crc.process_bytes(line.data(), line.size());
        crc.process_byte('\n');
        sink(parse_record_row(line));
        ++count;
    }
    if (count != meta.record_count)
        throw IoError("cache " + path.string() + " has " + std::to_string(count) + " rows, metadata says " +
                      std::to_string(meta.record_count));
    if (hex32(crc.checksum()) != meta.crc32) throw IoError("checksum mismatch for cache " + path.string());
    return meta;
}

CachedSource cached_source(const fs::path& path) {
    const auto meta = read_cache_metadata(path);
    CachedSource s;
    s.sign = meta.sign;
    s.upper = meta.lower == 0 ? meta.upper : 0;
    s.source = [path](const RecordSink& sink) { read_cache(path, sink); };
    return s;
}

namespace {

std::string opt_count(const std::optional<long double>& v) {
    return v ? std::to_string(round_count(*v)) : std::string();
}

json opt_json(const std::optional<long double>& v) { return v ? json(static_cast<double>(*v)) : json(nullptr); }

}  // namespace

std::string report_csv(const CensusReport& report) {
    std::ostringstream os;
    os << "X,actual,pred_strong,pred_stronger,error_strong";
    const std::uint64_t m = report.filter.modulus.value_or(0);
    for (std::uint64_t r = 0; r < m; ++r) os << ",r" << r;
    const bool pred_hist = !report.rows.empty() && !report.rows.back().predicted_histogram.empty();
    if (pred_hist)
        for (std::uint64_t r = 0; r < m; ++r) os << ",pred_r" << r;
    os << "\n";
    for (const auto& row : report.rows) {
        os << to_string(row.X) << ',' << row.actual << ',' << opt_count(row.pred_strong) << ','
           << opt_count(row.pred_stronger) << ',' << (row.error_strong ? format_fixed(*row.error_strong, 3) : "");
        for (auto c : row.histogram) os << ',' << c;
        if (pred_hist) {
            if (row.predicted_histogram.empty())
                for (std::uint64_t r = 0; r < m; ++r) os << ',';
            for (auto v : row.predicted_histogram) os << ',' << round_count(v);
        }
        os << "\n";
    }
    return os.str();
}

json report_json(const CensusReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json j{{"X", to_string(row.X)},
               {"actual", row.actual},
               {"pred_strong", row.pred_strong ? json(round_count(*row.pred_strong)) : json(nullptr)},
               {"pred_stronger", row.pred_stronger ? json(round_count(*row.pred_stronger)) : json(nullptr)},
               {"pred_strong_exact", opt_json(row.pred_strong)},
               {"pred_stronger_exact", opt_json(row.pred_stronger)},
               {"error_strong", row.error_strong ? json(format_fixed(*row.error_strong, 3)) : json(nullptr)}};
        if (!row.histogram.empty()) j["histogram"] = row.histogram;
        if (!row.predicted_histogram.empty()) {
            json ph = json::array();
            for (auto v : row.predicted_histogram) ph.push_back(round_count(v));
            j["predicted_histogram"] = ph;
        }
        rows.push_back(j);
    }
    json filter{{"sign", to_string(report.filter.sign)}, {"unramified_primes", report.filter.unramified_primes}};
    filter["modulus"] = report.filter.modulus ? json(*report.filter.modulus) : json(nullptr);
    return json{{"filter", filter}, {"rows", rows}};
}

}  // namespace s3f
