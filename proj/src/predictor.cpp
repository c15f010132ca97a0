#include "s3fields/predictor.hpp"

#include "s3fields/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace s3f {

const char* to_string(Model m) {
    switch (m) {
    case Model::main: return "main";
    case Model::strong: return "strong";
    case Model::stronger: return "stronger";
    }
    return "?";
}

Model parse_model(const std::string& s) {
    if (s == "main") return Model::main;
    if (s == "strong") return Model::strong;
    if (s == "stronger") return Model::stronger;
    throw std::invalid_argument("unknown model '" + s + "' (expected main, strong or stronger)");
}

LocalCondition LocalCondition::unramified(std::uint64_t p) {
    return {p, {SplittingType::s111, SplittingType::s12, SplittingType::s3}};
}
LocalCondition LocalCondition::ramified(std::uint64_t p) { return {p, {SplittingType::s1_2_1, SplittingType::s1_3}}; }
LocalCondition LocalCondition::totally_ramified(std::uint64_t p) { return {p, {SplittingType::s1_3}}; }
LocalCondition LocalCondition::partially_ramified(std::uint64_t p) { return {p, {SplittingType::s1_2_1}}; }

namespace {

using ld = long double;

ld pw(std::uint64_t p, ld e) { return std::pow(static_cast<ld>(p), e); }

}  // namespace

ld c_p(std::uint64_t p) {
    if (p == 3) return (1 - 1.0L / 3) * (4.0L / 3 + pw(3, -5.0L / 3) + 2 * pw(3, -7.0L / 3));
    const ld q = static_cast<ld>(p);
    return (1 - 1 / q) * (1 + 1 / q + pw(p, -4.0L / 3));
}

ld k_p(std::uint64_t p) {
    if (p == 3)
        return (11.0L / 3 - pw(3, -2.0L / 3) + pw(3, -8.0L / 9) + 2 * pw(3, -13.0L / 9) - pw(3, -14.0L / 9) -
                2 * pw(3, -19.0L / 9)) /
               4;
    const ld q = static_cast<ld>(p);
    return 1 + (1 - pw(p, -2.0L / 9) - pw(p, -5.0L / 9) - pw(p, -2.0L / 3)) / (pw(p, 13.0L / 9) * (1 + 1 / q));
}

std::array<ld, 5> main_weights(std::uint64_t p) {
    const ld last = p == 3 ? pw(3, -5.0L / 3) + 2 * pw(3, -7.0L / 3) : pw(p, -4.0L / 3);
    return {1.0L / 6, 1.0L / 2, 1.0L / 3, 1 / static_cast<ld>(p), last};
}

std::array<ld, 5> secondary_weights(std::uint64_t p) {
    const ld t = pw(p, -1.0L / 3);
    const ld last = p == 3 ? pw(3, -17.0L / 9) + 2 * pw(3, -22.0L / 9) : pw(p, -13.0L / 9);
    return {(1 + 2 * t + t * t) / 6, (1 + t * t) / 2, (1 - t + t * t) / 3, (1 + t) / static_cast<ld>(p), last};
}

ld secondary_normalizer(std::uint64_t p) {
    const ld q = static_cast<ld>(p);
    return (1 - (pw(p, 1.0L / 3) + 1) / (q * (q + 1))) / (1 + pw(p, -2.0L / 3) + 1 / q + pw(p, -4.0L / 3));
}

ld local_factor(std::uint64_t p, const LocalCondition& condition, Term term) {
    if (condition.allowed.empty()) throw std::invalid_argument("local condition at p=" + std::to_string(p) + " is empty");
    const auto w = term == Term::main ? main_weights(p) : secondary_weights(p);
    ld sum = 0;
    for (std::size_t i = 0; i < kAllSplittingTypes.size(); ++i)
        if (std::find(condition.allowed.begin(), condition.allowed.end(), kAllSplittingTypes[i]) != condition.allowed.end())
            sum += w[i];
    if (term == Term::main) return (1 - 1 / static_cast<ld>(p)) * sum;
    return secondary_normalizer(p) * sum;
}

namespace {

// Truncated integer power series in x = p^{-1/q}.
using Series = std::vector<long long>;

Series mul_one_minus(const Series& s, int k) {  // s * (1 - x^k)
    Series r = s;
    for (std::size_t i = s.size(); i-- > static_cast<std::size_t>(k);) r[i] -= s[i - k];
    return r;
}

Series div_one_minus(const Series& s, int k) {  // s / (1 - x^k)
    Series r = s;
    for (std::size_t i = k; i < s.size(); ++i) r[i] += r[i - k];
    return r;
}

struct Accelerator {
    int q = 1;
    std::vector<std::pair<int, long long>> factors;  // (k, e_k)
    Series residual;                                 // generic factor times prod (1 - x^k)^{e_k}
    int order = 0;                                   // residual = 1 + O(x^{order+1})
};

// Writes the generic factor as prod (1 - x^k)^{-e_k} up to x^order.
Accelerator make_accelerator(int q, Series series, int order) {
    Accelerator acc;
    acc.q = q;
    acc.order = order;
    for (int k = 1; k <= order; ++k) {
        const long long e = series[k];
        if (e == 0) continue;
        if (k <= q) throw std::logic_error("accelerator exponent k/q <= 1");
        acc.factors.emplace_back(k, e);
        for (long long i = 0; i < std::abs(e); ++i) series = e > 0 ? mul_one_minus(series, k) : div_one_minus(series, k);
    }
    acc.residual = series;
    return acc;
}

const Accelerator& accelerator(Term term) {
    static const Accelerator main_acc = [] {
        // (1 - x^3)(1 + x^3 + x^4), x = p^{-1/3}
        Series s(40, 0);
        s[0] = 1;
        s[4] = 1;
        s[6] = -1;
        s[7] = -1;
        return make_accelerator(3, s, 12);
    }();
    static const Accelerator secondary_acc = [] {
        // 1 + t^13 (1 - t^2 - t^5 - t^6) / (1 + t^9), t = p^{-1/9}
        Series s(100, 0);
        s[0] = 1;
        for (int j = 0; 13 + 9 * j < 100; ++j) {
            const long long sg = j % 2 ? -1 : 1;
            for (auto [off, c] : {std::pair{0, 1}, {2, -1}, {5, -1}, {6, -1}})
                if (13 + off + 9 * j < 100) s[13 + off + 9 * j] += sg * c;
        }
        return make_accelerator(9, s, 30);
    }();
    return term == Term::main ? main_acc : secondary_acc;
}

ld accel_factor(const Accelerator& acc, std::uint64_t p) {
    const ld x = pw(p, -1.0L / acc.q);
    ld r = 1;
    for (auto [k, e] : acc.factors) r *= std::pow(1 - std::pow(x, static_cast<ld>(k)), static_cast<ld>(e));
    return r;
}

ld generic_factor(Term term, std::uint64_t p) { return term == Term::main ? c_p(p) : k_p(p); }

// Relative bound on prod_{p > P} residual(p).
ld tail_bound(const Accelerator& acc, std::uint64_t P) {
    const ld x0 = pw(P, -1.0L / acc.q);
    ld M = 0;
    for (std::size_t k = acc.order + 1; k < acc.residual.size(); ++k)
        M += std::abs(static_cast<ld>(acc.residual[k])) * std::pow(x0, static_cast<ld>(k - acc.order - 1));
    M *= 2;
    const ld sigma = static_cast<ld>(acc.order + 1) / acc.q;
    return 1.1L * M * std::pow(static_cast<ld>(P), 1 - sigma) / (sigma - 1);
}

ld product_to(Term term, const std::map<std::uint64_t, LocalCondition>& overrides, const std::vector<std::uint32_t>& primes,
              std::uint64_t P) {
    const Accelerator& acc = accelerator(term);
    ld prod = 1;
    for (auto p : primes) {
        if (p > P) break;
        auto it = overrides.find(p);
        const ld f = it == overrides.end() ? generic_factor(term, p) : local_factor(p, it->second, term);
        prod *= f * accel_factor(acc, p);
    }
    for (const auto& [p, cond] : overrides)
        if (p > P) prod *= local_factor(p, cond, term) * accel_factor(acc, p);
    for (auto [k, e] : acc.factors) prod *= std::pow(riemann_zeta(static_cast<ld>(k) / acc.q), static_cast<ld>(e));
    return prod;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

EulerProductResult euler_product(Term term, const std::vector<LocalCondition>& overrides, ld rel_tol) {
    if (!(rel_tol >= 1e-10L)) throw std::invalid_argument("euler_product: rel_tol must be at least 1e-10");
    std::map<std::uint64_t, LocalCondition> by_prime;
    for (const auto& c : overrides) {
        if (!is_prime_u64(c.p)) throw std::invalid_argument("override at non-prime " + std::to_string(c.p));
        if (c.allowed.empty()) throw std::invalid_argument("empty local condition at p=" + std::to_string(c.p));
        if (!by_prime.emplace(c.p, c).second) throw std::invalid_argument("duplicate override at p=" + std::to_string(c.p));
    }
    const Accelerator& acc = accelerator(term);
    std::uint64_t P = 1000;
    while (tail_bound(acc, P) > rel_tol / 4) P *= 2;
    constexpr std::uint64_t kMaxBound = 1ULL << 27;
    for (; P <= kMaxBound; P *= 2) {
        const auto primes = primes_up_to(2 * P);
        const ld v1 = product_to(term, by_prime, primes, P);
        const ld v2 = product_to(term, by_prime, primes, 2 * P);
        const ld change = std::abs(v2 / v1 - 1);
        if (change <= rel_tol) return {v1, P, tail_bound(acc, P), change};
    }
    throw std::runtime_error("euler_product: doubling check failed up to prime bound " + std::to_string(kMaxBound));
}

ld cyclic_cubic_constant() {
    static const ld value = [] {
        constexpr std::uint64_t P = 10'000'000;
        ld prod = 1;
        for (auto p : primes_up_to(P))
            if (p % 3 == 1) {
                const ld q = p;
                prod *= 1 - 2 / (q * (q + 1));
            }
        // Tail: sum over p > P, p = 1 mod 3 of 2/p^2 is about 1/(P log P).
        prod *= 1 - 1 / (static_cast<ld>(P) * std::log(static_cast<ld>(P)));
        return 11 * std::sqrt(3.0L) / (36 * std::numbers::pi_v<ld>) * prod;
    }();
    return value;
}

PredictionTerms predict_terms(ld X, Model model, Sign sign, const std::vector<LocalCondition>& overrides,
                              const PredictionOptions& options) {
    if (!(X >= 1e6L)) throw std::invalid_argument("predict: X must be at least 1e6");
    const ld C = sign == Sign::positive ? 1 : 3;
    const ld K = sign == Sign::positive ? 1 : std::sqrt(3.0L);
    PredictionTerms t;
    t.main = C / 12 * euler_product(Term::main, overrides, options.rel_tol).value * std::cbrt(X);
    if (model == Model::main) return t;
    const ld g = gamma_two_thirds();
    t.secondary = 4 * K * riemann_zeta(1.0L / 3) / (5 * g * g * g) *
                  euler_product(Term::secondary, overrides, options.rel_tol).value * std::pow(X, 5.0L / 18);
    if (model == Model::stronger) {
        const ld lx = std::log(X);
        t.main *= 1 - 12 * std::pow(X, -1.0L / 12) / lx;
        t.secondary *= 1 - 9 * std::pow(X, -1.0L / 9) / lx;
    }
    if (sign == Sign::positive && overrides.empty() && options.cyclic_correction)
        t.cyclic = -cyclic_cubic_constant() / 3 * std::pow(X, 0.25L);
    return t;
}

ld predict(ld X, Model model, Sign sign, const std::vector<LocalCondition>& overrides, const PredictionOptions& options) {
    return predict_terms(X, model, sign, overrides, options).total();
}

std::array<ld, 5> mod5_prediction(ld X, Sign sign, Model model) {
    const std::vector<LocalCondition> base = {LocalCondition::unramified(2), LocalCondition::unramified(3)};
    auto with5 = [&](LocalCondition c) {
        auto o = base;
        o.push_back(std::move(c));
        return predict(X, model, sign, o);
    };
    const ld ram = with5(LocalCondition::ramified(5));
    const ld unram = with5(LocalCondition::unramified(5)) / 4;
    return {ram, unram, unram, unram, unram};
}

long long round_count(ld x) { return static_cast<long long>(std::llround(x)); }

}  // namespace s3f
