#include "commands.hpp"

#include "s3fields/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace s3f;
using namespace s3f::cli;

namespace {

struct RawOptions {
    std::string sign, checkpoints, X, unram, model = "strong", format = "csv", max_abs_disc, min_abs_disc = "0",
                                             modulus, bound, max_X, table;
    std::string cache, cache_dir, out;
    bool live = false, mod5 = false, cubic = false;
    unsigned threads = 1;
    std::uint64_t oracle_bound = 5000;
};

RunConfig resolve(const RawOptions& raw, const std::string& command) {
    RunConfig cfg;
    if (!raw.sign.empty()) cfg.sign = parse_sign(raw.sign);
    if (!raw.max_abs_disc.empty()) cfg.max_abs_disc = parse_count(raw.max_abs_disc);
    cfg.min_abs_disc = parse_count(raw.min_abs_disc);
    if (!raw.checkpoints.empty()) cfg.checkpoints = parse_checkpoints(raw.checkpoints);
    if (!raw.X.empty()) {
        if (command == "predict") {
            cfg.X = parse_real(raw.X);
        } else {
            for (auto x : parse_checkpoints(raw.X)) cfg.checkpoints.push_back(x);
        }
    }
    if (!raw.modulus.empty()) cfg.modulus = parse_count(raw.modulus);
    if (!raw.unram.empty()) cfg.unramified = parse_prime_list(raw.unram);
    try {
        cfg.model = parse_model(raw.model);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (raw.format != "csv" && raw.format != "json") throw UsageError("--format must be csv or json");
    cfg.format = raw.format == "json" ? Format::json : Format::csv;
    if (!raw.cache.empty()) cfg.cache = raw.cache;
    if (!raw.cache_dir.empty()) cfg.cache_dir = raw.cache_dir;
    if (!raw.out.empty()) cfg.out = raw.out;
    cfg.live = raw.live;
    cfg.mod5 = raw.mod5;
    cfg.cubic = raw.cubic;
    if (raw.threads == 0) throw UsageError("--threads must be at least 1");
    cfg.threads = raw.threads;
    if (!raw.bound.empty()) cfg.bound = parse_count(raw.bound);
    if (!raw.max_X.empty()) cfg.max_X = parse_checkpoints(raw.max_X).front();
    cfg.table = raw.table;
    cfg.oracle_bound = raw.oracle_bound;
    if (cfg.cache && cfg.live) throw UsageError("--cache and --live are exclusive");
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic field enumeration and S3-sextic discriminant counts"};
    app.require_subcommand(1);
    RawOptions raw;

    auto* enumerate = app.add_subcommand("enumerate", "Write a cache of cubic fields with |disc| <= max");
    enumerate->add_option("--sign", raw.sign, "pos or neg")->required();
    enumerate->add_option("--max-abs-disc", raw.max_abs_disc, "largest |disc| (inclusive)")->required();
    enumerate->add_option("--min-abs-disc", raw.min_abs_disc, "smallest |disc| (inclusive)");
    enumerate->add_option("--out", raw.out, "cache CSV path; a .json sidecar is written next to it")->required();
    enumerate->add_option("--threads", raw.threads, "worker threads");

    auto* census = app.add_subcommand("census", "Count S3-sextic fields below checkpoints");
    census->add_option("--sign", raw.sign, "pos or neg");
    census->add_option("--checkpoints", raw.checkpoints, "comma-separated X values, e.g. 1e12,1e13");
    census->add_option("--X", raw.X, "a single checkpoint");
    census->add_option("--mod", raw.modulus, "histogram of the discriminant modulo m");
    census->add_option("--unram", raw.unram, "comma-separated primes required unramified");
    census->add_option("--cache", raw.cache, "cache CSV written by enumerate");
    census->add_flag("--live", raw.live, "enumerate the needed cubic range instead of reading a cache");
    census->add_flag("--cubic", raw.cubic, "histogram cubic discriminants instead (needs --bound and --mod)");
    census->add_option("--bound", raw.bound, "|disc| bound for --cubic");
    census->add_option("--threads", raw.threads, "worker threads for --live");
    census->add_option("--format", raw.format, "csv or json");
    census->add_option("--out", raw.out, "output path (default stdout)");

    auto* predict = app.add_subcommand("predict", "Predicted number of S3-sextic fields");
    predict->add_option("--X", raw.X, "discriminant bound")->required();
    predict->add_option("--sign", raw.sign, "pos or neg (default neg)");
    predict->add_option("--model", raw.model, "main, strong or stronger");
    predict->add_option("--unram", raw.unram, "comma-separated primes conditioned unramified");
    predict->add_flag("--mod5", raw.mod5, "columns by discriminant mod 5 for fields unramified at 2 and 3");
    predict->add_option("--format", raw.format, "csv or json");
    predict->add_option("--out", raw.out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "Oracle comparisons and numeric identities (JSON)");
    verify->add_option("--oracle-bound", raw.oracle_bound, "largest |disc| compared against the brute-force oracle");
    verify->add_option("--out", raw.out, "output path (default stdout)");

    auto* repro = app.add_subcommand("repro", "Regenerate a reference table and compare");
    repro->add_option("--table", raw.table, "pos, neg, mod5 or cubic-ap")->required();
    repro->add_option("--max-X", raw.max_X, "largest checkpoint whose counts are computed");
    repro->add_option("--cache-dir", raw.cache_dir, "reuse or write cubic caches here");
    repro->add_option("--threads", raw.threads, "worker threads");
    repro->add_option("--out", raw.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const RunConfig cfg = resolve(raw, command);
        if (command == "enumerate") return cmd_enumerate(cfg, std::cerr);
        if (command == "census") return cmd_census(cfg, std::cerr);
        if (command == "predict") return cmd_predict(cfg, std::cerr);
        if (command == "verify") return cmd_verify(cfg, std::cerr);
        if (command == "repro") return cmd_repro(cfg, std::cerr);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const InsufficientRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInsufficientRange;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
