#include "s3fields/enumerator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace s3f {

// Box bounds, with slack, valid for the reduced representative of every
// orbit with 0 < |D| <= X:
//  D < 0: a^4 <= 16X/27, |theta| <= 1/2 + sqrt(T - 3/4) with T = sqrt(X/(3a^4)),
//         C^3 <= 16X/(27a), b = B - a theta, c = C - B theta, d = -C theta, 0 < B < a.
//  D > 0: 27 a^2 <= 4 sqrt(X), |b| <= 3a/2 + X^(1/4), 3a|c| <= b^2 + sqrt(X),
//         9a|d| <= |bc| + sqrt(X).
std::vector<CubicFieldRecord> brute_force_enumerate(const EnumerationRange& range, const EnumerationOptions& options) {
    if (range.upper() > kMaxOracleUpper)
        throw std::invalid_argument("brute_force_enumerate: bound " + std::to_string(range.upper()) +
                                    " too large for the oracle (max " + std::to_string(kMaxOracleUpper) + ")");
    std::map<Form, CubicFieldRecord> found;
    const std::int64_t X = static_cast<std::int64_t>(range.upper()) - 1;
    if (X < 1) return {};
    const double x = static_cast<double>(X);
    const double slack = 1.25;
    auto consider = [&](const Form& f) {
        const auto D = discriminant(f);
        if (D == 0) return;
        if ((D > 0) != (range.sign() == Sign::positive)) return;
        const auto absD = static_cast<std::uint64_t>(D < 0 ? -D : D);
        if (!range.contains_abs(absD)) return;
        if (!is_irreducible(f)) return;
        const auto fact = factorize(static_cast<std::int64_t>(D));
        if (!is_maximal(f, fact)) return;
        const Form g = canonical_reduce(f);
        if (found.count(g)) return;
        CubicFieldRecord r;
        r.form = g;
        r.disc = static_cast<std::int64_t>(D);
        r.factorization = fact;
        r.cyclic = is_cyclic(r.disc);
        for (const auto& pe : fact.factors) r.ramification.push_back({pe.p, pe.e, is_totally_ramified(g, pe.p)});
        for (auto p : options.splitting_primes) r.splitting.emplace_back(p, splitting_type(g, p));
        found.emplace(g, std::move(r));
    };
    if (range.sign() == Sign::negative) {
        const auto amax = static_cast<std::int64_t>(std::pow(16 * x / 27, 0.25) * slack) + 1;
        for (std::int64_t a = 1; a <= amax; ++a) {
            const double T = std::sqrt(x / (3.0 * a * a * a * a));
            const double umax = (0.5 + std::sqrt(std::max(0.0, T - 0.75))) * slack + 1;
            const double cmax = std::cbrt(16 * x / (27.0 * a)) * slack + 1;
            const auto bmax = static_cast<std::int64_t>(a + a * umax) + 1;
            const auto cbound = static_cast<std::int64_t>(cmax + a * umax) + 1;
            const auto dbound = static_cast<std::int64_t>(cmax * umax) + 1;
            for (std::int64_t b = -bmax; b <= bmax; ++b)
                for (std::int64_t c = -cbound; c <= cbound; ++c)
                    for (std::int64_t d = -dbound; d <= dbound; ++d) consider({a, b, c, d});
        }
    } else {
        const double sq = std::sqrt(x);
        const auto amax = static_cast<std::int64_t>(std::sqrt(4 * sq / 27) * slack) + 1;
        for (std::int64_t a = 1; a <= amax; ++a) {
            const auto bmax = static_cast<std::int64_t>((1.5 * a + std::sqrt(sq)) * slack) + 1;
            for (std::int64_t b = -bmax; b <= bmax; ++b) {
                const auto cbound = static_cast<std::int64_t>((b * b + sq) / (3.0 * a) * slack) + 1;
                for (std::int64_t c = -cbound; c <= cbound; ++c) {
                    const auto dbound = static_cast<std::int64_t>((std::abs(b * c) + sq) / (9.0 * a) * slack) + 1;
                    for (std::int64_t d = -dbound; d <= dbound; ++d) consider({a, b, c, d});
                }
            }
        }
    }
    std::vector<CubicFieldRecord> out;
    for (auto& [f, r] : found) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

}  // namespace s3f
