#pragma once

// Predicted counts of S3-sextic fields: local constants c_p and k_p,
// splitting-type weights, Euler products and the main/secondary terms.

#include "s3fields/enumerator.hpp"
#include "s3fields/local.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace s3f {

enum class Term { main, secondary };
enum class Model { main, strong, stronger };

const char* to_string(Model m);
Model parse_model(const std::string& s);

// Allowed splitting types at p (nonempty).
struct LocalCondition {
    std::uint64_t p = 0;
    std::vector<SplittingType> allowed;

    static LocalCondition unramified(std::uint64_t p);
    static LocalCondition ramified(std::uint64_t p);
    static LocalCondition totally_ramified(std::uint64_t p);
    static LocalCondition partially_ramified(std::uint64_t p);
};

long double c_p(std::uint64_t p);
long double k_p(std::uint64_t p);

// Weights in kAllSplittingTypes order: (111), (12), (3), (1^2 1), (1^3).
std::array<long double, 5> main_weights(std::uint64_t p);
std::array<long double, 5> secondary_weights(std::uint64_t p);
long double secondary_normalizer(std::uint64_t p);  // n_p

// main: (1 - 1/p) * sum of allowed main weights; secondary: n_p * sum of
// allowed secondary weights. Throws on an empty condition.
long double local_factor(std::uint64_t p, const LocalCondition& condition, Term term);

struct EulerProductResult {
    long double value = 0;
    std::uint64_t prime_bound = 0;   // primes <= bound multiplied explicitly
    long double tail_bound = 0;      // bound on the relative truncation error
    long double doubling_change = 0; // relative change when the bound is doubled
};

// prod_p local_factor(p, .) with the given overrides. The slowly converging
// part of the generic factor is divided out as a finite product of
// (1 - p^{-k/q})^{e_k} and restored through zeta(k/q). Throws
// std::runtime_error if the doubling check fails; rel_tol must be >= 1e-10.
EulerProductResult euler_product(Term term, const std::vector<LocalCondition>& overrides = {},
                                 long double rel_tol = 1e-10L);

// Constant of the count of cyclic cubic fields by conductor:
// (11 sqrt3 / (36 pi)) prod_{p = 1 mod 3} (1 - 2/(p(p+1))).
long double cyclic_cubic_constant();

struct PredictionOptions {
    // Positive sign only: subtract (c/3) X^{1/4} for the cyclic cubic fields,
    // which the printed positive columns exclude. Applied to the strong and
    // stronger models without overrides.
    bool cyclic_correction = true;
    long double rel_tol = 1e-10L;
};

struct PredictionTerms {
    long double main = 0;       // including the tail factor for the stronger model
    long double secondary = 0;  // likewise; zero for Model::main
    long double cyclic = 0;     // correction added (<= 0)
    long double total() const { return main + secondary + cyclic; }
};

// Throws std::invalid_argument for X < 1e6.
PredictionTerms predict_terms(long double X, Model model, Sign sign, const std::vector<LocalCondition>& overrides = {},
                              const PredictionOptions& options = {});
long double predict(long double X, Model model, Sign sign, const std::vector<LocalCondition>& overrides = {},
                    const PredictionOptions& options = {});

// Columns 0..4 for disc mod 5 of fields unramified at 2 and 3: column 0 is
// the prediction with 5 ramified, the others a quarter of the prediction
// with 5 unramified.
std::array<long double, 5> mod5_prediction(long double X, Sign sign, Model model = Model::strong);

// Round half away from zero.
long long round_count(long double x);

}  // namespace s3f
