#include <doctest.h>

#include "s3fields/census.hpp"

#include <numeric>

using namespace s3f;

namespace {

CubicSource live(Sign s, std::uint64_t upper) {
    const auto range = EnumerationRange::make(s, 0, upper);
    return [range](const RecordSink& sink) { enumerate(range, sink); };
}

}  // namespace

TEST_CASE("required cubic bound") {
    CHECK(required_cubic_upper(12168) == 64);  // (12167)/3 = 4055, isqrt 63
    CHECK(required_cubic_upper(12) == 2);
    CHECK(required_cubic_upper(13) == 3);
    CHECK(required_cubic_upper(1) == 1);
    // every disc_K with 3 disc_K^2 < X is below the bound
    for (std::int64_t X = 2; X < 3000; ++X) {
        const auto u = required_cubic_upper(X);
        CHECK(3 * (u - 1) * (u - 1) < static_cast<std::uint64_t>(X));
        CHECK(3 * u * u >= static_cast<std::uint64_t>(X));
    }
}

TEST_CASE("strict bound at the least sextic discriminant") {
    CensusFilter f;
    f.sign = Sign::negative;
    const auto c = count_checkpoints(live(Sign::negative, 100), 100, {12167, 12168}, f);
    CHECK(c.counts() == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("insufficient range is rejected") {
    CensusFilter f;
    f.sign = Sign::negative;
    try {
        count_checkpoints(live(Sign::negative, 100), 100, {int128(1000000)}, f);
        FAIL("expected InsufficientRange");
    } catch (const InsufficientRange& e) {
        CHECK(e.required_upper() == 578);
    }
    CHECK_THROWS_AS(cubic_ap_histogram(live(Sign::positive, 100), 100, 5, 1000), InsufficientRange);
}

TEST_CASE("filter validation") {
    CensusFilter f;
    f.unramified_primes = {4};
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);
    f.unramified_primes = {2};
    f.modulus = 1;
    CHECK_THROWS_AS(f.validate(), std::invalid_argument);
    CHECK_THROWS_AS(CheckpointCounter({int128(10), int128(10)}, CensusFilter{}), std::invalid_argument);
    CHECK_THROWS_AS(CheckpointCounter({int128(0)}, CensusFilter{}), std::invalid_argument);
}

TEST_CASE("histograms partition the filtered count and counts are monotone") {
    const std::vector<int128> xs = {int128(1000000), int128(100000000), int128(10000000000LL)};
    for (Sign s : {Sign::negative, Sign::positive}) {
        CensusFilter plain;
        plain.sign = s;
        CensusFilter hist = plain;
        hist.modulus = 7;
        CensusFilter unram = hist;
        unram.unramified_primes = {2, 3};
        const auto need = required_cubic_upper(xs.back());
        const auto a = count_checkpoints(live(s, need), need, xs, plain);
        const auto b = count_checkpoints(live(s, need), need, xs, hist);
        const auto u = count_checkpoints(live(s, need), need, xs, unram);
        CHECK(a.counts() == b.counts());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto h = b.histograms()[i];
            CHECK(std::accumulate(h.begin(), h.end(), std::uint64_t{0}) == b.counts()[i]);
            const auto hu = u.histograms()[i];
            CHECK(std::accumulate(hu.begin(), hu.end(), std::uint64_t{0}) == u.counts()[i]);
            CHECK(u.counts()[i] <= a.counts()[i]);
            if (i) CHECK(a.counts()[i] >= a.counts()[i - 1]);
        }
        CHECK(a.counts().back() > 0);
    }
}

TEST_CASE("counts from partitioned sources merge to the sequential counts") {
    const std::vector<int128> xs = {int128(100000000), int128(3000000000LL)};
    CensusFilter f;
    f.sign = Sign::negative;
    f.modulus = 5;
    const auto need = required_cubic_upper(xs.back());
    const auto whole = count_checkpoints(live(Sign::negative, need), need, xs, f);
    CheckpointCounter merged(xs, f);
    for (const auto& part : partition(EnumerationRange::make(Sign::negative, 0, need), 8)) {
        CheckpointCounter c(xs, f);
        enumerate(part, [&](const CubicFieldRecord& r) {
            if (!r.cyclic) c.add(build_sextic(r));
        });
        merged.merge(c);
    }
    CHECK(merged.counts() == whole.counts());
    CHECK(merged.histograms() == whole.histograms());
    CHECK_THROWS_AS(merged.merge(CheckpointCounter({int128(5)}, f)), std::invalid_argument);
}

TEST_CASE("error column") {
    CHECK(format_fixed(error_column(756, 690, 1e12L), 3) == "0.031");
    CHECK(format_fixed(error_column(2979, 2809, 1e12L), 3) == "0.079");
    CHECK(format_fixed(error_column(5, 5, 1e12L), 3) == "0.000");
    CHECK(format_fixed(-0.0001L, 3) == "0.000");
    CHECK(format_fixed(-0.25L, 2) == "-0.25");
    CHECK_THROWS_AS(error_column(1, 1, 0), std::invalid_argument);
}

TEST_CASE("report assembly") {
    CensusFilter f;
    f.sign = Sign::positive;
    const auto empty = run_census(live(Sign::positive, 10), 10, {}, f);
    CHECK(empty.rows.empty());

    const std::vector<int128> xs = {int128(1000), int128(1000000000LL)};
    const auto rep = run_census_live(xs, f);
    REQUIRE(rep.rows.size() == 2);
    CHECK_FALSE(rep.rows[0].pred_strong.has_value());
    REQUIRE(rep.rows[1].pred_strong.has_value());
    REQUIRE(rep.rows[1].error_strong.has_value());
    CHECK(*rep.rows[1].pred_stronger < *rep.rows[1].pred_strong);

    CensusFilter m5;
    m5.sign = Sign::negative;
    m5.unramified_primes = {2, 3};
    m5.modulus = 5;
    const auto r5 = run_census_live({int128(10000000000LL)}, m5);
    REQUIRE(r5.rows[0].predicted_histogram.size() == 5);
    const auto cols = mod5_prediction(1e10L, Sign::negative);
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(r5.rows[0].predicted_histogram[i] - cols[i]) < 1e-9L * cols[i]);
}

TEST_CASE("cubic AP histogram") {
    const std::uint64_t bound = 20000;
    const auto h5 = cubic_ap_histogram(live(Sign::positive, bound), bound, 5, bound);
    const auto h7 = cubic_ap_histogram(live(Sign::positive, bound), bound, 7, bound);
    const auto total = enumerate_all(EnumerationRange::make(Sign::positive, 0, bound)).size();
    auto sum = [](const std::vector<std::uint64_t>& v) { return std::accumulate(v.begin(), v.end(), std::uint64_t{0}); };
    CHECK(sum(h5.with_cyclic) == total);
    CHECK(sum(h7.with_cyclic) == total);
    CHECK(sum(h5.without_cyclic) == sum(h7.without_cyclic));
    CHECK(sum(h5.without_cyclic) < total);
    // cyclic discriminants are squares of conductors 9 or p = 1 mod 3 products, never 0 mod 7 unless 7 | f
    CHECK(h7.with_cyclic[0] >= h7.without_cyclic[0]);
}
