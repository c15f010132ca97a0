#include "s3fields/enumerator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

namespace s3f {

const char* to_string(Sign s) { return s == Sign::positive ? "pos" : "neg"; }

const RamEntry* CubicFieldRecord::ram_at(std::uint64_t p) const {
    for (const auto& r : ramification)
        if (r.p == p) return &r;
    return nullptr;
}

bool record_less(const CubicFieldRecord& x, const CubicFieldRecord& y) {
    if (x.abs_disc() != y.abs_disc()) return x.abs_disc() < y.abs_disc();
    return x.form < y.form;
}

EnumerationRange EnumerationRange::make(Sign sign, std::uint64_t lower, std::uint64_t upper) {
    if (lower >= upper) throw std::invalid_argument("enumeration range needs lower < upper");
    if (upper > kMaxEnumerationUpper)
        throw std::invalid_argument("enumeration bound " + std::to_string(upper) + " exceeds the supported maximum " +
                                    std::to_string(kMaxEnumerationUpper));
    return EnumerationRange(sign, lower, upper);
}

std::vector<EnumerationRange> partition(const EnumerationRange& range, unsigned k) {
    if (k == 0) throw std::invalid_argument("partition: k must be positive");
    const std::uint64_t width = range.upper() - range.lower();
    const std::uint64_t parts = std::min<std::uint64_t>(k, width);
    std::vector<EnumerationRange> out;
    for (std::uint64_t i = 0; i < parts; ++i) {
        auto lo = range.lower() + static_cast<std::uint64_t>(static_cast<uint128>(width) * i / parts);
        auto hi = range.lower() + static_cast<std::uint64_t>(static_cast<uint128>(width) * (i + 1) / parts);
        out.push_back(EnumerationRange::make(range.sign(), lo, hi));
    }
    return out;
}

std::optional<CubicFieldRecord> make_field_record(const Form& f, const Factorization& fact,
                                                  const EnumerationOptions& options) {
    if (!is_maximal(f, fact)) return std::nullopt;
    if (!is_irreducible(f)) return std::nullopt;
    CubicFieldRecord r;
    r.form = f;
    r.disc = static_cast<std::int64_t>(fact.value());
    r.factorization = fact;
    r.cyclic = is_cyclic(r.disc);
    r.ramification.reserve(fact.factors.size());
    for (const auto& pe : fact.factors) r.ramification.push_back({pe.p, pe.e, has_triple_root_mod(f, pe.p)});
    for (auto p : options.splitting_primes) r.splitting.emplace_back(p, splitting_type(f, p));
    return r;
}

namespace {

using ld = long double;

std::int64_t lfloor(ld x) { return static_cast<std::int64_t>(std::floor(x)); }
std::int64_t lceil(ld x) { return static_cast<std::int64_t>(std::ceil(x)); }

// Iterates integers in [lo, hi] except those inside the `skip` intervals.
template <typename F>
void for_each_except(std::int64_t lo, std::int64_t hi, std::vector<std::pair<std::int64_t, std::int64_t>>& skip,
                     F&& body) {
    std::sort(skip.begin(), skip.end());
    std::int64_t x = lo;
    std::size_t i = 0;
    while (x <= hi) {
        while (i < skip.size() && skip[i].second < x) ++i;
        if (i < skip.size() && skip[i].first <= x) {
            x = skip[i].second + 1;
            continue;
        }
        std::int64_t stop = hi;
        if (i < skip.size()) stop = std::min(stop, skip[i].first - 1);
        for (; x <= stop; ++x) body(x);
    }
}

// Interval strictly between the real roots r1 < r2, shrunk to integers that
// are certainly inside despite floating-point error.
void add_inner(std::vector<std::pair<std::int64_t, std::int64_t>>& skip, ld r1, ld r2) {
    std::int64_t lo = lceil(r1) + 1, hi = lfloor(r2) - 1;
    if (lo <= hi) skip.emplace_back(lo, hi);
}

void reduced_negative(std::uint64_t lower, std::uint64_t upper,
                      const std::function<void(const Form&, std::int64_t)>& visit) {
    const std::int64_t X = static_cast<std::int64_t>(upper) - 1;
    const std::int64_t L = std::max<std::int64_t>(static_cast<std::int64_t>(lower), 1);
    if (X < L) return;
    const ld Xl = static_cast<ld>(X);
    const std::int64_t amax = lfloor(std::pow(16 * Xl / 27, 0.25L)) + 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> skip;
    for (std::int64_t a = 1; a <= amax; ++a) {
        const ld al = static_cast<ld>(a);
        const ld T = std::sqrt(Xl / (3 * al * al * al * al));
        if (T < 0.75L - 1e-12L) continue;
        const ld umax = 0.5L + std::sqrt(std::max<ld>(0, T - 0.75L)) + 1e-9L;
        const ld Cmax = std::cbrt(16 * Xl / (27 * al)) + 1e-9L;
        for (std::int64_t b = lfloor(-al * umax) - 1; b <= lceil(al + al * umax) + 1; ++b) {
            const ld bl = static_cast<ld>(b);
            const ld ulo = std::max(-bl / al, -umax), uhi = std::min((al - bl) / al, umax);
            if (ulo >= uhi) continue;
            auto h = [&](ld u) { return -bl * u - al * u * u; };
            ld hmin = std::min(h(ulo), h(uhi)), hmax = std::max(h(ulo), h(uhi));
            const ld vert = -bl / (2 * al);
            if (vert > ulo && vert < uhi) hmax = std::max(hmax, h(vert));
            const std::int64_t cmin = lfloor(al + hmin) - 1, cmax = lceil(Cmax + hmax) + 1;
            for (std::int64_t c = cmin; c <= cmax; ++c) {
                const int128 amb = a - b;
                const std::int64_t dhi = floor_div<int128>(int128(b) * c - 1, a);
                const std::int64_t dlo = floor_div<int128>(-amb * amb - int128(c) * amb, a) + 1;
                if (dlo > dhi) continue;
                // -D(d) = 27 a^2 d^2 - beta d - gamma
                const ld cl = static_cast<ld>(c);
                const ld beta = 18 * al * bl * cl - 4 * bl * bl * bl;
                const ld gamma = bl * bl * cl * cl - 4 * al * cl * cl * cl;
                const ld den = 54 * al * al;
                const ld disc_hi = beta * beta + 108 * al * al * (gamma + Xl);
                if (disc_hi < 0) continue;
                const ld rh = std::sqrt(disc_hi);
                const std::int64_t lo = std::max(dlo, lfloor((beta - rh) / den) - 1);
                const std::int64_t hi = std::min(dhi, lceil((beta + rh) / den) + 1);
                if (lo > hi) continue;
                skip.clear();
                const ld disc_lo = beta * beta + 108 * al * al * (gamma + static_cast<ld>(L));
                if (disc_lo > 0) {
                    const ld rl = std::sqrt(disc_lo);
                    add_inner(skip, (beta - rl) / den, (beta + rl) / den);
                }
                const ld disc3 = bl * bl - 4 * (al * cl - al * al);
                if (disc3 > 0) {
                    const ld r3 = std::sqrt(disc3);
                    add_inner(skip, (bl - r3) / 2, (bl + r3) / 2);
                }
                for_each_except(lo, hi, skip, [&](std::int64_t d) {
                    const Form f{a, b, c, d};
                    if (!is_reduced_negative(f)) return;
                    const int128 D = discriminant(f);
                    if (-D < L || -D > X) return;
                    visit(f, static_cast<std::int64_t>(D));
                });
            }
        }
    }
}

void reduced_positive(std::uint64_t lower, std::uint64_t upper,
                      const std::function<void(const Form&, std::int64_t)>& visit) {
    const std::int64_t X = static_cast<std::int64_t>(upper) - 1;
    const std::int64_t L = std::max<std::int64_t>(static_cast<std::int64_t>(lower), 1);
    if (X < L) return;
    const auto sqX = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(X)));
    const std::int64_t amax = lfloor(std::sqrt(4 * static_cast<ld>(sqX) / 27)) + 1;
    for (std::int64_t a = 1; a <= amax; ++a) {
        const std::int64_t m3 = 3 * a;
        const std::int64_t bmax = lfloor(1.5L * a + std::sqrt(static_cast<ld>(sqX))) + 1;
        const std::int64_t pmin1 = (27 * a * a + 3) / 4;
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            const ld t = std::abs(static_cast<ld>(b)) - 1.5L * a;
            const std::int64_t pmin2 = t > 0 ? lfloor(t * t) - 1 : 0;
            const std::int64_t plow = std::max<std::int64_t>({pmin1, pmin2, 1});
            const std::int64_t p0 = plow + mod_floor<std::int64_t>(b * b - plow, m3);
            for (std::int64_t P = p0; P <= sqX; P += m3) {
                const std::int64_t c = (b * b - P) / m3;
                const int128 Dlo = std::max<int128>(L, int128(P) * P);
                const int128 P3x4 = 4 * int128(P) * P * P;
                const int128 hiG2 = P3x4 - 27 * int128(a) * a * Dlo;
                if (hiG2 < 0) continue;
                const int128 loG2 = std::max<int128>(0, P3x4 - 27 * int128(a) * a * X);
                const ld gmin = std::sqrt(static_cast<ld>(loG2)), gmax = std::sqrt(static_cast<ld>(hiG2));
                // 0 <= Q = bc - 9ad <= P
                const int128 bc = int128(b) * c;
                const std::int64_t qlo = -floor_div<int128>(-(bc - P), 9 * a);  // ceil
                const std::int64_t qhi = floor_div<int128>(bc, 9 * a);
                if (qlo > qhi) continue;
                const ld shift = 2 * static_cast<ld>(b) * b * b - 9 * static_cast<ld>(a) * b * c;
                const ld den = 27 * static_cast<ld>(a) * a;
                auto range_for = [&](ld g1, ld g2) {
                    return std::pair<std::int64_t, std::int64_t>(std::max(qlo, lfloor((g1 - shift) / den) - 1),
                                                                 std::min(qhi, lceil((g2 - shift) / den) + 1));
                };
                auto r1 = range_for(-gmax, -gmin);
                auto r2 = range_for(gmin, gmax);
                if (r1.second >= r2.first - 1) r1 = {r1.first, std::max(r1.second, r2.second)}, r2 = {1, 0};
                for (auto [lo, hi] : {r1, r2})
                    for (std::int64_t d = lo; d <= hi; ++d) {
                        const Form f{a, b, c, d};
                        const int128 D = discriminant(f);
                        if (D < L || D > X) continue;
                        if (!is_reduced_positive(f)) continue;
                        visit(f, static_cast<std::int64_t>(D));
                    }
            }
        }
    }
}

std::vector<CubicFieldRecord> enumerate_chunk(const EnumerationRange& range, const FactorTable& table,
                                              const EnumerationOptions& options) {
    std::vector<CubicFieldRecord> out;
    reduced_forms(range, [&](const Form& f, std::int64_t D) {
        if (auto r = make_field_record(f, table.factorize(D), options)) out.push_back(std::move(*r));
    });
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

}  // namespace

void reduced_forms(const EnumerationRange& range, const std::function<void(const Form&, std::int64_t)>& visit) {
    if (range.sign() == Sign::negative) reduced_negative(range.lower(), range.upper(), visit);
    else reduced_positive(range.lower(), range.upper(), visit);
}

void enumerate(const EnumerationRange& range, const RecordSink& sink, const EnumerationOptions& options) {
    const std::uint64_t width = std::max<std::uint64_t>(options.chunk_width, 1);
    std::vector<EnumerationRange> chunks;
    for (std::uint64_t lo = range.lower(); lo < range.upper(); lo += std::min(width, range.upper() - lo))
        chunks.push_back(EnumerationRange::make(range.sign(), lo, std::min(range.upper(), lo + width)));
    // The table only pays off when the range is large.
    const std::uint64_t table_limit = range.upper() > 4'000'000 ? std::min<std::uint64_t>(range.upper(), 200'000'000) : 0;
    const FactorTable table(table_limit);
    const unsigned threads = std::max(1u, options.threads);
    for (std::size_t start = 0; start < chunks.size(); start += threads) {
        const std::size_t n = std::min<std::size_t>(threads, chunks.size() - start);
        std::vector<std::vector<CubicFieldRecord>> results(n);
        if (n == 1) {
            results[0] = enumerate_chunk(chunks[start], table, options);
        } else {
            std::vector<std::exception_ptr> errors(n);
            {
                std::vector<std::jthread> pool;
                for (std::size_t i = 0; i < n; ++i)
                    pool.emplace_back([&, i] {
                        try {
                            results[i] = enumerate_chunk(chunks[start + i], table, options);
                        } catch (...) {
                            errors[i] = std::current_exception();
                        }
                    });
            }
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (auto& part : results)
            for (const auto& r : part) sink(r);
    }
}

std::vector<CubicFieldRecord> enumerate_all(const EnumerationRange& range, const EnumerationOptions& options) {
    std::vector<CubicFieldRecord> out;
    enumerate(range, [&](const CubicFieldRecord& r) { out.push_back(r); }, options);
    return out;
}

}  // namespace s3f
