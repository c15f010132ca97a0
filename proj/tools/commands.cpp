#include "commands.hpp"

#include "s3fields/io.hpp"
#include "s3fields/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

namespace s3f::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using ld = long double;

Sign parse_sign(const std::string& s) {
    if (s == "pos" || s == "+") return Sign::positive;
    if (s == "neg" || s == "-") return Sign::negative;
    throw UsageError("sign must be pos or neg, got '" + s + "'");
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int128 parse_exact(const std::string& s) {
    try {
        return parse_int128(s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

std::vector<int128> parse_checkpoints(const std::string& s) {
    std::vector<int128> out;
    for (const auto& item : split_list(s)) {
        const int128 v = parse_exact(item);
        if (v <= 0) throw UsageError("checkpoints must be positive: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty checkpoint list");
    return out;
}

std::vector<std::uint64_t> parse_prime_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(s)) out.push_back(parse_count(item));
    return out;
}

std::uint64_t parse_count(const std::string& s) {
    const int128 v = parse_exact(s);
    if (v < 0 || v > static_cast<int128>(UINT64_MAX)) throw UsageError("value out of range: " + s);
    return static_cast<std::uint64_t>(v);
}

long double parse_real(const std::string& s) {
    std::size_t used = 0;
    long double v = 0;
    try {
        v = std::stold(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: " + s);
    }
    if (used != s.size()) throw UsageError("not a number: " + s);
    return v;
}

namespace {

// Writes to --out atomically (via a .partial file) or to stdout.
void emit(const RunConfig& cfg, const std::function<void(std::ostream&)>& body) {
    if (!cfg.out) {
        body(std::cout);
        std::cout.flush();
        return;
    }
    const fs::path partial = cfg.out->string() + ".partial";
    {
        std::ofstream os(partial, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + partial.string() + " for writing");
        body(os);
        os.flush();
        if (!os) throw IoError("write failed for " + partial.string());
    }
    std::error_code ec;
    fs::rename(partial, *cfg.out, ec);
    if (ec) throw IoError("cannot rename " + partial.string() + " to " + cfg.out->string() + ": " + ec.message());
}

EnumerationOptions enum_options(const RunConfig& cfg) {
    EnumerationOptions o;
    o.threads = cfg.threads;
    return o;
}

CensusFilter make_filter(const RunConfig& cfg, Sign sign) {
    CensusFilter f;
    f.sign = sign;
    f.unramified_primes = cfg.unramified;
    f.modulus = cfg.modulus;
    try {
        f.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return f;
}

std::string fixed(ld v, int decimals) { return format_fixed(v, decimals); }

// Cubic source for the census: either a cache file or a live enumeration
// up to `need`.
struct Source {
    CubicSource source;
    std::uint64_t upper = 0;
    Sign sign = Sign::negative;
};

Source open_cache(const fs::path& path) {
    const auto c = cached_source(path);
    return {c.source, c.upper, c.sign};
}

Source live_source(Sign sign, std::uint64_t need, const EnumerationOptions& opts) {
    const auto range = EnumerationRange::make(sign, 0, std::max<std::uint64_t>(need, 1));
    return {[range, opts](const RecordSink& sink) { enumerate(range, sink, opts); }, range.upper(), sign};
}

// Reuses `<dir>/<sign>_<upper>.csv` style caches when one covers `need`,
// otherwise writes a new one.
Source cache_dir_source(const fs::path& dir, Sign sign, std::uint64_t need, const EnumerationOptions& opts,
                        std::ostream& log) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create cache directory " + dir.string() + ": " + ec.message());
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto p = entry.path();
        if (p.extension() != ".csv") continue;
        try {
            const auto meta = read_cache_metadata(p);
            if (meta.sign == sign && meta.lower == 0 && meta.upper >= need) {
                log << "using cache " << p.string() << "\n";
                return open_cache(p);
            }
        } catch (const IoError&) {
        }
    }
    const fs::path p = dir / (std::string(to_string(sign)) + "_" + std::to_string(need) + ".csv");
    log << "writing cache " << p.string() << " (|disc| < " << need << ")\n";
    write_cache(p, EnumerationRange::make(sign, 0, need), opts);
    return open_cache(p);
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.sign || !cfg.max_abs_disc || !cfg.out) throw UsageError("enumerate needs --sign, --max-abs-disc and --out");
    if (*cfg.max_abs_disc + 1 > kMaxEnumerationUpper)
        throw UsageError("--max-abs-disc above the supported bound " + std::to_string(kMaxEnumerationUpper - 1));
    if (cfg.min_abs_disc > *cfg.max_abs_disc) throw UsageError("--min-abs-disc exceeds --max-abs-disc");
    const auto range = EnumerationRange::make(*cfg.sign, cfg.min_abs_disc, *cfg.max_abs_disc + 1);
    const auto meta = write_cache(*cfg.out, range, enum_options(cfg));
    log << "wrote " << meta.record_count << " fields to " << cfg.out->string() << " (crc32 " << meta.crc32 << ")\n";
    return kOk;
}

namespace {

int census_cubic(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.bound || !cfg.modulus) throw UsageError("--cubic needs --bound and --mod");
    if (*cfg.modulus < 2) throw UsageError("--mod must be at least 2");
    Source src;
    if (cfg.cache) {
        src = open_cache(*cfg.cache);
    } else if (cfg.live) {
        src = live_source(cfg.sign.value_or(Sign::positive), *cfg.bound, enum_options(cfg));
    } else {
        throw UsageError("census needs --cache or --live");
    }
    if (cfg.sign && *cfg.sign != src.sign) throw UsageError("--sign does not match the cache");
    const auto h = cubic_ap_histogram(src.source, src.upper, *cfg.modulus, *cfg.bound);
    emit(cfg, [&](std::ostream& os) {
        if (cfg.format == Format::json) {
            os << json{{"sign", to_string(src.sign)},
                       {"modulus", h.modulus},
                       {"bound", h.bound},
                       {"with_cyclic", h.with_cyclic},
                       {"without_cyclic", h.without_cyclic}}
                      .dump(2)
               << "\n";
            return;
        }
        os << "residue,with_cyclic,without_cyclic\n";
        for (std::uint64_t r = 0; r < h.modulus; ++r)
            os << r << ',' << h.with_cyclic[r] << ',' << h.without_cyclic[r] << "\n";
    });
    log << "cubic fields of sign " << to_string(src.sign) << " with |disc| < " << h.bound << " by residue mod "
        << h.modulus << "\n";
    return kOk;
}

}  // namespace

int cmd_census(const RunConfig& cfg, std::ostream& log) {
    if (cfg.cubic) return census_cubic(cfg, log);
    if (cfg.checkpoints.empty()) throw UsageError("census needs --checkpoints or --X");
    auto xs = cfg.checkpoints;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    const std::uint64_t need = required_cubic_upper(xs.back());
    Source src;
    if (cfg.cache) {
        src = open_cache(*cfg.cache);
        if (cfg.sign && *cfg.sign != src.sign) throw UsageError("--sign does not match the cache");
    } else if (cfg.live) {
        if (!cfg.sign) throw UsageError("--live needs --sign");
        if (need > kMaxEnumerationUpper) throw UsageError("checkpoint too large for the supported cubic range");
        src = live_source(*cfg.sign, need, enum_options(cfg));
    } else {
        throw UsageError("census needs --cache or --live");
    }
    const auto report = run_census(src.source, src.upper, xs, make_filter(cfg, src.sign));
    emit(cfg, [&](std::ostream& os) {
        if (cfg.format == Format::json)
            os << report_json(report).dump(2) << "\n";
        else
            os << report_csv(report);
    });
    log << "census of " << report.rows.size() << " checkpoint(s), cubic range |disc| < " << need << "\n";
    return kOk;
}

int cmd_predict(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.X) throw UsageError("predict needs --X");
    const Sign sign = cfg.sign.value_or(Sign::negative);
    const ld X = *cfg.X;
    if (cfg.mod5) {
        for (auto p : cfg.unramified)
            if (p != 2 && p != 3) throw UsageError("--mod5 fixes the conditions at 2 and 3; drop --unram");
        const auto cols = mod5_prediction(X, sign, cfg.model);
        emit(cfg, [&](std::ostream& os) {
            if (cfg.format == Format::json) {
                json j{{"X", static_cast<double>(X)}, {"sign", to_string(sign)}, {"model", to_string(cfg.model)}};
                for (int i = 0; i < 5; ++i) {
                    j["exact"].push_back(static_cast<double>(cols[i]));
                    j["rounded"].push_back(round_count(cols[i]));
                }
                os << j.dump(2) << "\n";
                return;
            }
            os << "residue,prediction,rounded\n";
            for (int i = 0; i < 5; ++i) os << i << ',' << fixed(cols[i], 6) << ',' << round_count(cols[i]) << "\n";
        });
        return kOk;
    }
    std::vector<LocalCondition> overrides;
    for (auto p : cfg.unramified) overrides.push_back(LocalCondition::unramified(p));
    const auto t = predict_terms(X, cfg.model, sign, overrides);
    emit(cfg, [&](std::ostream& os) {
        if (cfg.format == Format::json) {
            os << json{{"X", static_cast<double>(X)},
                       {"sign", to_string(sign)},
                       {"model", to_string(cfg.model)},
                       {"main", static_cast<double>(t.main)},
                       {"secondary", static_cast<double>(t.secondary)},
                       {"cyclic", static_cast<double>(t.cyclic)},
                       {"prediction", static_cast<double>(t.total())},
                       {"rounded", round_count(t.total())}}
                      .dump(2)
               << "\n";
            return;
        }
        os << "X,sign,model,main,secondary,cyclic,prediction,rounded\n";
        char xbuf[64];
        std::snprintf(xbuf, sizeof xbuf, "%.6Lg", X);
        os << xbuf << ',' << to_string(sign) << ',' << to_string(cfg.model) << ',' << fixed(t.main, 6) << ','
           << fixed(t.secondary, 6) << ',' << fixed(t.cyclic, 6) << ',' << fixed(t.total(), 6) << ','
           << round_count(t.total()) << "\n";
    });
    (void)log;
    return kOk;
}

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

std::string sci(ld v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", v);
    return buf;
}

// eta(s) by repeated averaging of alternating partial sums.
ld zeta_by_averaging(ld s) {
    const int n = 200, levels = 40;
    std::vector<ld> partial;
    ld acc = 0;
    for (int k = 1; k <= n; ++k) {
        acc += (k % 2 ? 1 : -1) * std::pow(static_cast<ld>(k), -s);
        partial.push_back(acc);
    }
    std::vector<ld> v(partial.end() - levels - 1, partial.end());
    for (int l = 0; l < levels; ++l)
        for (std::size_t i = 0; i + 1 < v.size() - l; ++i) v[i] = (v[i] + v[i + 1]) / 2;
    return v[0] / (1 - std::pow(2.0L, 1 - s));
}

std::vector<Check> run_checks(std::uint64_t oracle_bound) {
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };
    for (Sign s : {Sign::negative, Sign::positive}) {
        const auto range = EnumerationRange::make(s, 0, oracle_bound + 1);
        std::set<Form> fast, slow;
        for (const auto& r : enumerate_all(range)) fast.insert(r.form);
        for (const auto& r : brute_force_enumerate(range)) slow.insert(r.form);
        add(std::string("oracle_") + to_string(s), fast == slow,
            std::to_string(fast.size()) + " fields, oracle " + std::to_string(slow.size()));
    }

    const ld pi = std::numbers::pi_v<ld>;
    const ld third = 1.0L / 3;
    const ld c3_dual = (1 - 1.0L / 9) *
                       (1 + third + (2.0L / 27) * std::pow(3.0L, 2 * third) + (1.0L / 27) * std::pow(3.0L, 4 * third)) /
                       (1 + third);
    add("c3_dual_form", std::fabs(c_p(3) - c3_dual) < 1e-12L, "difference " + sci(c_p(3) - c3_dual));

    ld worst_k = 0, worst_c = 0;
    for (auto p : primes_up_to(10000)) {
        const ld q = static_cast<ld>(p);
        ld ssum = 0, msum = 0;
        for (auto w : secondary_weights(p)) ssum += w;
        for (auto w : main_weights(p)) msum += w;
        worst_k = std::max(worst_k, std::fabs(k_p(p) - secondary_normalizer(p) * ssum));
        worst_c = std::max(worst_c, std::fabs(c_p(p) - (1 - 1 / q) * msum));
        if (p != 3) {
            const ld theta = 1 / (q * q * (1 + std::pow(q, -2.0L / 3) + 1 / q + std::pow(q, -4.0L / 3)));
            worst_k = std::max(worst_k, std::fabs(k_p(p) - (1 + theta * std::pow(q, 5.0L / 9)) *
                                                              (1 - (std::cbrt(q) + 1) / (q * (q + 1)))));
        }
    }
    add("k_p_triple_form", worst_k < 1e-12L, "max deviation " + sci(worst_k) + " for p <= 10000");
    add("c_p_weight_form", worst_c < 1e-14L, "max deviation " + sci(worst_c) + " for p <= 10000");

    const ld g = gamma_two_thirds();
    const ld refl = std::tgamma(third) * g - 2 * pi / std::sqrt(3.0L);
    add("gamma_reflection", std::fabs(refl) < 1e-12L, "difference " + sci(refl));
    const ld rec = std::tgamma(5.0L / 3) - (2.0L / 3) * g;
    add("gamma_recurrence", std::fabs(rec) < 1e-12L, "difference " + sci(rec));

    const ld z2 = riemann_zeta(2) - pi * pi / 6;
    add("zeta_2", std::fabs(z2) < 1e-12L, "difference " + sci(z2));
    const ld z13 = riemann_zeta(third), z13_alt = zeta_by_averaging(third);
    add("zeta_one_third", z13 < 0 && std::fabs(z13 - z13_alt) < 1e-9L,
        fixed(z13, 13) + " vs averaged series " + fixed(z13_alt, 13));

    for (Term t : {Term::main, Term::secondary}) {
        const auto r = euler_product(t, {}, 1e-8L);
        add(t == Term::main ? "euler_product_main" : "euler_product_secondary", r.doubling_change < 1e-8L,
            "value " + fixed(r.value, 12) + ", doubling change " + sci(r.doubling_change) + ", P = " +
                std::to_string(r.prime_bound));
    }

    const auto small = enumerate_all(EnumerationRange::make(Sign::negative, 0, 110));
    int128 d23 = 0, d108 = 0;
    for (const auto& r : small) {
        if (r.disc == -23) d23 = build_sextic(r).disc_sextic;
        if (r.disc == -108) d108 = build_sextic(r).disc_sextic;
    }
    add("sextic_examples", d23 == -12167 && d108 == -34992, to_string(d23) + ", " + to_string(d108));
    return checks;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
    if (cfg.oracle_bound > kMaxOracleUpper - 1) throw UsageError("--oracle-bound too large for the brute-force oracle");
    const auto checks = run_checks(cfg.oracle_bound);
    bool all = true;
    json j = json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        log << (c.pass ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    emit(cfg, [&](std::ostream& os) { os << json{{"pass", all}, {"checks", j}}.dump(2) << "\n"; });
    return all ? kOk : kVerification;
}

namespace {

// Reference tables the repro command compares against.
struct CountRow {
    const char* X;
    std::uint64_t actual;
    long long strong, stronger;
    const char* error;
};

const std::vector<CountRow> kRefPositive = {
    {"1e12", 690, 756, 709, "0.031"},         {"1e13", 1650, 1762, 1682, "0.027"},
    {"1e14", 3848, 4045, 3910, "0.025"},      {"1e15", 8867, 9181, 8955, "0.021"},
    {"1e16", 20062, 20658, 20276, "0.021"},   {"1e17", 45054, 46159, 45513, "0.021"},
    {"1e18", 100335, 102555, 101460, "0.022"}, {"1e19", 222939, 226801, 224943, "0.020"},
    {"1e20", 492335, 499647, 496490, "0.020"}, {"1e21", 1083761, 1097214, 1091842, "0.020"},
    {"1e22", 2378358, 2402995, 2393842, "0.019"}, {"1e23", 5207310, 5250840, 5235221, "0.018"},
};

const std::vector<CountRow> kRefNegative = {
    {"1e12", 2809, 2979, 2828, "0.079"},          {"1e13", 6315, 6613, 6362, "0.073"},
    {"1e14", 14121, 14617, 14199, "0.064"},       {"1e15", 31276, 32192, 31492, "0.062"},
    {"1e16", 68972, 70683, 69507, "0.061"},       {"1e17", 151877, 154800, 152820, "0.055"},
    {"1e18", 333398, 338279, 334938, "0.049"},    {"1e19", 729572, 737847, 732195, "0.044"},
    {"1e20", 1592941, 1606792, 1597213, "0.039"}, {"1e21", 3470007, 3494240, 3477974, "0.036"},
    {"1e22", 7550171, 7589746, 7562074, "0.031"}, {"1e23", 16399890, 16468453, 16421298, "0.028"},
    {"3e23", 23738460, 23824734, 23763890, "0.026"},
};

struct Mod5Row {
    const char* X;
    std::array<std::uint64_t, 5> actual;
};

const std::vector<Mod5Row> kRefMod5 = {
    {"1e16", {5034, 3974, 4091, 4027, 4075}},
    {"1e17", {11211, 8817, 8967, 8833, 9075}},
    {"1e18", {24816, 19530, 19872, 19395, 19902}},
    {"1e19", {54582, 42917, 43623, 42972, 43615}},
    {"1e20", {119354, 94222, 95303, 94175, 95428}},
    {"1e21", {261627, 205997, 208080, 205916, 208632}},
    {"1e22", {570179, 449574, 453456, 449432, 454119}},
    {"1e23", {1243107, 980023, 985513, 978812, 986670}},
    {"3e23", {1801227, 1420062, 1427778, 1418371, 1429022}},
};

// Predicted mod-5 quintuples: column 0 and the common value of columns 1-4.
const std::vector<std::tuple<const char*, long long, long long>> kRefMod5Predicted = {
    {"1e20", 122687, 96553},
    {"3e23", 1824995, 1437452},
};

const std::vector<std::uint64_t> kRefCubicMod5 = {21277, 22887, 22751, 22748, 22781};
const std::vector<std::uint64_t> kRefCubicMod7 = {15330, 17229, 14327, 15323, 17027, 18058, 15150};

Source repro_source(const RunConfig& cfg, Sign sign, std::uint64_t need, std::ostream& log) {
    if (cfg.cache_dir) return cache_dir_source(*cfg.cache_dir, sign, need, enum_options(cfg), log);
    log << "enumerating " << to_string(sign) << " cubic fields with |disc| < " << need << "\n";
    return live_source(sign, need, enum_options(cfg));
}

int repro_counts(const RunConfig& cfg, Sign sign, std::ostream& log) {
    const auto& ref = sign == Sign::positive ? kRefPositive : kRefNegative;
    const int128 max_X = cfg.max_X.value_or(parse_int128("1e14"));
    std::vector<int128> xs;
    for (const auto& row : ref)
        if (parse_int128(row.X) <= max_X) xs.push_back(parse_int128(row.X));
    std::vector<std::uint64_t> counts;
    if (!xs.empty()) {
        const auto src = repro_source(cfg, sign, required_cubic_upper(xs.back()), log);
        CensusFilter f;
        f.sign = sign;
        counts = count_checkpoints(src.source, src.upper, xs, f).counts();
    }
    bool counts_ok = true;
    emit(cfg, [&](std::ostream& os) {
        os << "X,actual,ref_actual,pred_strong,ref_strong,pred_stronger,ref_stronger,error_strong,ref_error\n";
        for (std::size_t i = 0; i < ref.size(); ++i) {
            const auto& row = ref[i];
            const ld X = static_cast<ld>(parse_int128(row.X));
            const auto ps = round_count(predict(X, Model::strong, sign));
            const auto pr = round_count(predict(X, Model::stronger, sign));
            os << to_string(parse_int128(row.X)) << ',';
            std::uint64_t actual = row.actual;
            if (i < counts.size()) {
                os << counts[i];
                actual = counts[i];
                counts_ok = counts_ok && counts[i] == row.actual;
            }
            // the error column uses the reference count where none was computed
            const auto err = fixed(error_column(static_cast<ld>(ps), static_cast<ld>(actual), X), 3);
            os << ',' << row.actual << ',' << ps << ',' << row.strong << ',' << pr << ',' << row.stronger << ','
               << err << ',' << row.error << "\n";
        }
    });
    log << (counts_ok ? "computed counts match the reference\n" : "computed counts DIFFER from the reference\n");
    return counts_ok ? kOk : kVerification;
}

int repro_mod5(const RunConfig& cfg, std::ostream& log) {
    const int128 max_X = cfg.max_X.value_or(parse_int128("1e16"));
    std::vector<int128> xs;
    for (const auto& row : kRefMod5)
        if (parse_int128(row.X) <= max_X) xs.push_back(parse_int128(row.X));
    std::vector<std::vector<std::uint64_t>> hists;
    if (!xs.empty()) {
        const auto src = repro_source(cfg, Sign::negative, required_cubic_upper(xs.back()), log);
        CensusFilter f;
        f.sign = Sign::negative;
        f.unramified_primes = {2, 3};
        f.modulus = 5;
        hists = count_checkpoints(src.source, src.upper, xs, f).histograms();
    }
    bool ok = true;
    emit(cfg, [&](std::ostream& os) {
        os << "X,r0,r1,r2,r3,r4,ref_r0,ref_r1,ref_r2,ref_r3,ref_r4,pred_r0,pred_r1,pred_r2,pred_r3,pred_r4,ref_pred_r0,"
              "ref_pred_r1\n";
        for (std::size_t i = 0; i < kRefMod5.size(); ++i) {
            const auto& row = kRefMod5[i];
            os << to_string(parse_int128(row.X));
            for (int r = 0; r < 5; ++r) {
                os << ',';
                if (i < hists.size()) {
                    os << hists[i][r];
                    ok = ok && hists[i][r] == row.actual[r];
                }
            }
            for (auto v : row.actual) os << ',' << v;
            const auto cols = mod5_prediction(static_cast<ld>(parse_int128(row.X)), Sign::negative);
            for (auto v : cols) os << ',' << round_count(v);
            std::string ref0, ref1;
            for (const auto& [x, c0, c1] : kRefMod5Predicted)
                if (std::string(x) == row.X) {
                    ref0 = std::to_string(c0);
                    ref1 = std::to_string(c1);
                }
            os << ',' << ref0 << ',' << ref1 << "\n";
        }
    });
    log << (ok ? "computed histograms match the reference\n" : "computed histograms DIFFER from the reference\n");
    return ok ? kOk : kVerification;
}

int repro_cubic_ap(const RunConfig& cfg, std::ostream& log) {
    const std::uint64_t bound = 2000000;
    const auto src = repro_source(cfg, Sign::positive, bound, log);
    const auto h5 = cubic_ap_histogram(src.source, src.upper, 5, bound);
    const auto h7 = cubic_ap_histogram(src.source, src.upper, 7, bound);
    const bool with = h5.with_cyclic == kRefCubicMod5 && h7.with_cyclic == kRefCubicMod7;
    const bool without = h5.without_cyclic == kRefCubicMod5 && h7.without_cyclic == kRefCubicMod7;
    emit(cfg, [&](std::ostream& os) {
        os << "modulus,residue,with_cyclic,without_cyclic,reference\n";
        for (const auto* h : {&h5, &h7}) {
            const auto& ref = h->modulus == 5 ? kRefCubicMod5 : kRefCubicMod7;
            for (std::uint64_t r = 0; r < h->modulus; ++r)
                os << h->modulus << ',' << r << ',' << h->with_cyclic[r] << ',' << h->without_cyclic[r] << ','
                   << ref[r] << "\n";
        }
    });
    log << "matching convention: "
        << (with ? "cyclic fields included" : without ? "cyclic fields excluded" : "none") << "\n";
    return with || without ? kOk : kVerification;
}

}  // namespace

int cmd_repro(const RunConfig& cfg, std::ostream& log) {
    if (cfg.table == "pos") return repro_counts(cfg, Sign::positive, log);
    if (cfg.table == "neg") return repro_counts(cfg, Sign::negative, log);
    if (cfg.table == "mod5") return repro_mod5(cfg, log);
    if (cfg.table == "cubic-ap") return repro_cubic_ap(cfg, log);
    throw UsageError("--table must be one of pos, neg, mod5, cubic-ap");
}

}  // namespace s3f::cli
