#pragma once

#include "s3fields/census.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace s3f::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kIo = 3,
    kVerification = 4,
    kInsufficientRange = 5,
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { csv, json };

struct RunConfig {
    std::optional<Sign> sign;
    std::optional<std::uint64_t> max_abs_disc;  // inclusive
    std::uint64_t min_abs_disc = 0;
    std::vector<int128> checkpoints;
    std::optional<std::uint64_t> modulus;
    std::vector<std::uint64_t> unramified;
    Model model = Model::strong;
    std::optional<std::filesystem::path> cache;
    std::optional<std::filesystem::path> cache_dir;
    bool live = false;
    unsigned threads = 1;
    Format format = Format::csv;
    std::optional<std::filesystem::path> out;
    bool mod5 = false;
    bool cubic = false;
    std::optional<std::uint64_t> bound;
    std::optional<long double> X;  // predict
    std::string table;             // repro
    std::optional<int128> max_X;   // repro
    std::uint64_t oracle_bound = 5000;
};

// Parsers for option values; throw UsageError.
Sign parse_sign(const std::string& s);
std::vector<int128> parse_checkpoints(const std::string& s);
std::vector<std::uint64_t> parse_prime_list(const std::string& s);
std::uint64_t parse_count(const std::string& s);
long double parse_real(const std::string& s);

int cmd_enumerate(const RunConfig& cfg, std::ostream& log);
int cmd_census(const RunConfig& cfg, std::ostream& log);
int cmd_predict(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_repro(const RunConfig& cfg, std::ostream& log);

}  // namespace s3f::cli
