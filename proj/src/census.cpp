#include "s3fields/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace s3f {

void CensusFilter::validate() const {
    if (unramified_primes.size() > 10) throw std::invalid_argument("at most 10 unramified primes");
    for (auto p : unramified_primes) {
        if (p < 2) throw std::invalid_argument("unramified prime must be at least 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (modulus && *modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

bool CensusFilter::accepts(const SexticRecord& s) const {
    if ((s.disc_sextic > 0) != (sign == Sign::positive)) return false;
    for (auto p : unramified_primes)
        if (s.disc_sextic % static_cast<int128>(p) == 0) return false;
    return true;
}

InsufficientRange::InsufficientRange(std::uint64_t required_upper, std::uint64_t available_upper)
    : std::runtime_error("cubic range too small: the census needs |disc_K| < " + std::to_string(required_upper) +
                         " but the source only covers |disc_K| < " + std::to_string(available_upper)),
      required_(required_upper) {}

std::uint64_t required_cubic_upper(int128 x_max) {
    if (x_max <= 1) return 1;
    return static_cast<std::uint64_t>(isqrt(static_cast<uint128>((x_max - 1) / 3))) + 1;
}

CheckpointCounter::CheckpointCounter(std::vector<int128> checkpoints, CensusFilter filter)
    : checkpoints_(std::move(checkpoints)), filter_(std::move(filter)) {
    filter_.validate();
    for (std::size_t i = 0; i < checkpoints_.size(); ++i) {
        if (checkpoints_[i] <= 0) throw std::invalid_argument("checkpoints must be positive");
        if (i && checkpoints_[i] <= checkpoints_[i - 1]) throw std::invalid_argument("checkpoints must be strictly increasing");
    }
    bucket_.assign(checkpoints_.size(), 0);
    if (filter_.modulus) hist_.assign(checkpoints_.size(), std::vector<std::uint64_t>(*filter_.modulus, 0));
}

void CheckpointCounter::add(const SexticRecord& s) {
    if (!filter_.accepts(s)) return;
    const int128 a = s.disc_sextic < 0 ? -s.disc_sextic : s.disc_sextic;
    // first checkpoint X with a < X
    auto it = std::upper_bound(checkpoints_.begin(), checkpoints_.end(), a);
    if (it == checkpoints_.end()) return;
    const auto i = static_cast<std::size_t>(it - checkpoints_.begin());
    ++bucket_[i];
    if (filter_.modulus) {
        const auto m = static_cast<int128>(*filter_.modulus);
        ++hist_[i][static_cast<std::size_t>(mod_floor<int128>(s.disc_sextic, m))];
    }
}

void CheckpointCounter::merge(const CheckpointCounter& other) {
    if (other.checkpoints_ != checkpoints_ || other.hist_.size() != hist_.size())
        throw std::invalid_argument("merge: counters are not compatible");
    for (std::size_t i = 0; i < bucket_.size(); ++i) {
        bucket_[i] += other.bucket_[i];
        for (std::size_t r = 0; r < (hist_.empty() ? 0 : hist_[i].size()); ++r) hist_[i][r] += other.hist_[i][r];
    }
}

std::vector<std::uint64_t> CheckpointCounter::counts() const {
    std::vector<std::uint64_t> out(bucket_.size());
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < bucket_.size(); ++i) out[i] = run += bucket_[i];
    return out;
}

std::vector<std::vector<std::uint64_t>> CheckpointCounter::histograms() const {
    std::vector<std::vector<std::uint64_t>> out = hist_;
    for (std::size_t i = 1; i < out.size(); ++i)
        for (std::size_t r = 0; r < out[i].size(); ++r) out[i][r] += out[i - 1][r];
    return out;
}

std::vector<std::uint64_t> CheckpointCounter::moduli() const {
    if (filter_.modulus) return {*filter_.modulus};
    return {};
}

CheckpointCounter count_checkpoints(const CubicSource& source, std::uint64_t source_upper,
                                    const std::vector<int128>& checkpoints, const CensusFilter& filter) {
    CheckpointCounter counter(checkpoints, filter);
    if (checkpoints.empty()) return counter;
    const std::uint64_t need = required_cubic_upper(checkpoints.back());
    if (source_upper < need) throw InsufficientRange(need, source_upper);
    const auto moduli = counter.moduli();
    source([&](const CubicFieldRecord& r) {
        if ((r.disc > 0) != (filter.sign == Sign::positive)) return;
        if (r.cyclic) return;
        counter.add(build_sextic(r, moduli));
    });
    return counter;
}

long double error_column(long double predicted, long double actual, long double X) {
    if (!(X > 0)) throw std::invalid_argument("error_column: X must be positive");
    return (predicted - actual) / std::pow(X, 5.0L / 18);
}

CensusReport build_report(const CheckpointCounter& counter, const ReportOptions& options) {
    CensusReport report;
    report.filter = counter.filter();
    std::vector<LocalCondition> overrides;
    for (auto p : report.filter.unramified_primes) overrides.push_back(LocalCondition::unramified(p));
    const bool mod5 = report.filter.modulus && *report.filter.modulus == 5 &&
                      std::find(report.filter.unramified_primes.begin(), report.filter.unramified_primes.end(), 5) ==
                          report.filter.unramified_primes.end();
    const auto counts = counter.counts();
    const auto hists = counter.histograms();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        CensusRow row;
        row.X = counter.checkpoints()[i];
        row.actual = counts[i];
        if (!hists.empty()) row.histogram = hists[i];
        const auto X = static_cast<long double>(row.X);
        if (X >= 1e6L) {
            const Sign sign = report.filter.sign;
            row.pred_strong = predict(X, Model::strong, sign, overrides, options.prediction);
            row.pred_stronger = predict(X, Model::stronger, sign, overrides, options.prediction);
            row.error_strong = error_column(static_cast<long double>(round_count(*row.pred_strong)),
                                            static_cast<long double>(row.actual), X);
            if (mod5) {
                auto with5 = [&](LocalCondition c) {
                    auto o = overrides;
                    o.push_back(std::move(c));
                    return predict(X, Model::strong, sign, o, options.prediction);
                };
                const auto ram = with5(LocalCondition::ramified(5));
                const auto unram = with5(LocalCondition::unramified(5)) / 4;
                row.predicted_histogram = {ram, unram, unram, unram, unram};
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

CensusReport run_census(const CubicSource& source, std::uint64_t source_upper, const std::vector<int128>& checkpoints,
                        const CensusFilter& filter, const ReportOptions& options) {
    return build_report(count_checkpoints(source, source_upper, checkpoints, filter), options);
}

CensusReport run_census_live(const std::vector<int128>& checkpoints, const CensusFilter& filter,
                             const EnumerationOptions& enumeration, const ReportOptions& options) {
    if (checkpoints.empty()) return build_report(CheckpointCounter(checkpoints, filter), options);
    const std::uint64_t need = required_cubic_upper(checkpoints.back());
    const auto range = EnumerationRange::make(filter.sign, 0, need);
    CubicSource source = [&](const RecordSink& sink) { enumerate(range, sink, enumeration); };
    return run_census(source, need, checkpoints, filter, options);
}

CubicApHistogram cubic_ap_histogram(const CubicSource& source, std::uint64_t source_upper, std::uint64_t modulus,
                                    std::uint64_t bound) {
    if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
    if (source_upper < bound) throw InsufficientRange(bound, source_upper);
    CubicApHistogram h;
    h.modulus = modulus;
    h.bound = bound;
    h.with_cyclic.assign(modulus, 0);
    h.without_cyclic.assign(modulus, 0);
    source([&](const CubicFieldRecord& r) {
        if (r.abs_disc() >= bound) return;
        const auto res = static_cast<std::size_t>(mod_floor<std::int64_t>(r.disc, static_cast<std::int64_t>(modulus)));
        ++h.with_cyclic[res];
        if (!r.cyclic) ++h.without_cyclic[res];
    });
    return h;
}

std::string format_fixed(long double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*Lf", decimals, v);
    std::string s = buf;
    if (s == "-0" || s.rfind("-0.", 0) == 0) {
        bool zero = s.find_first_not_of("-0.") == std::string::npos;
        if (zero) s.erase(0, 1);
    }
    return s;
}

}  // namespace s3f
