#pragma once

// Counting S3-sextic fields below checkpoints, residue histograms, and the
// comparison against predictions.

#include "s3fields/enumerator.hpp"
#include "s3fields/predictor.hpp"
#include "s3fields/sextic.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace s3f {

struct CensusFilter {
    Sign sign = Sign::negative;
    std::vector<std::uint64_t> unramified_primes;  // e_p(K~) = 0 required
    std::optional<std::uint64_t> modulus;          // histogram of disc(K~) mod m

    void validate() const;
    bool accepts(const SexticRecord& s) const;
};

// Raised when the cubic source does not reach the bound a census needs.
class InsufficientRange : public std::runtime_error {
public:
    InsufficientRange(std::uint64_t required_upper, std::uint64_t available_upper);
    std::uint64_t required_upper() const { return required_; }

private:
    std::uint64_t required_;
};

// Exclusive upper bound on |disc_K| needed for sextic bound X:
// |disc(K~)| >= 3 disc_K^2, so |disc_K| <= isqrt((X-1)/3).
std::uint64_t required_cubic_upper(int128 x_max);

// Streaming counter. Counts are cumulative per checkpoint with the strict
// bound |disc(K~)| < X.
class CheckpointCounter {
public:
    // Checkpoints must be positive and strictly increasing.
    CheckpointCounter(std::vector<int128> checkpoints, CensusFilter filter);

    void add(const SexticRecord& s);
    void merge(const CheckpointCounter& other);

    const std::vector<int128>& checkpoints() const { return checkpoints_; }
    const CensusFilter& filter() const { return filter_; }
    std::vector<std::uint64_t> counts() const;
    // histograms()[i][r]: records below checkpoint i with residue r.
    std::vector<std::vector<std::uint64_t>> histograms() const;
    std::vector<std::uint64_t> moduli() const;

private:
    std::vector<int128> checkpoints_;
    CensusFilter filter_;
    std::vector<std::uint64_t> bucket_;               // per checkpoint interval, not cumulative
    std::vector<std::vector<std::uint64_t>> hist_;    // same, per residue
};

using CubicSource = std::function<void(const RecordSink&)>;

// Drives a cubic record stream through build_sextic into the counter.
// Cyclic records are skipped; every other record passes the dual-route
// discriminant check. `source_upper` is the exclusive |disc_K| bound the
// source covers (starting from 0); InsufficientRange is thrown when it is
// below required_cubic_upper.
CheckpointCounter count_checkpoints(const CubicSource& source, std::uint64_t source_upper,
                                    const std::vector<int128>& checkpoints, const CensusFilter& filter);

// (predicted - actual) / X^{5/18}
long double error_column(long double predicted, long double actual, long double X);

struct CensusRow {
    int128 X = 0;
    std::uint64_t actual = 0;
    std::optional<long double> pred_strong, pred_stronger;  // present for X >= 1e6
    std::optional<long double> error_strong;                // uses the rounded strong prediction
    std::vector<std::uint64_t> histogram;                   // when a modulus is set
    std::vector<long double> predicted_histogram;           // modulus 5 only
};

struct CensusReport {
    CensusFilter filter;
    std::vector<CensusRow> rows;
};

struct ReportOptions {
    PredictionOptions prediction;
};

// Predictions use the filter's unramified primes as overrides.
CensusReport build_report(const CheckpointCounter& counter, const ReportOptions& options = {});

CensusReport run_census(const CubicSource& source, std::uint64_t source_upper, const std::vector<int128>& checkpoints,
                        const CensusFilter& filter, const ReportOptions& options = {});

// Convenience: enumerate the required cubic range live.
CensusReport run_census_live(const std::vector<int128>& checkpoints, const CensusFilter& filter,
                             const EnumerationOptions& enumeration = {}, const ReportOptions& options = {});

// Counts of cubic discriminants of the source's sign with |disc| < bound, by
// disc mod m (mathematical residue).
struct CubicApHistogram {
    std::uint64_t modulus = 0;
    std::uint64_t bound = 0;
    std::vector<std::uint64_t> with_cyclic;
    std::vector<std::uint64_t> without_cyclic;
};
CubicApHistogram cubic_ap_histogram(const CubicSource& source, std::uint64_t source_upper, std::uint64_t modulus,
                                    std::uint64_t bound);

std::string format_fixed(long double v, int decimals);

}  // namespace s3f
