#include "s3fields/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace s3f {

namespace {

// B_2, B_4, ..., B_24
constexpr std::array<long double, 12> kBernoulli = {
    1.0L / 6,          -1.0L / 30,       1.0L / 42,           -1.0L / 30,     5.0L / 66,        -691.0L / 2730,
    7.0L / 6,          -3617.0L / 510,   43867.0L / 798,      -174611.0L / 330, 854513.0L / 138, -236364091.0L / 2730};

long double zeta_euler_maclaurin(long double s) {
    constexpr int N = 24;
    long double sum = 0;
    for (int n = 1; n < N; ++n) sum += std::pow(static_cast<long double>(n), -s);
    const long double n = N;
    sum += std::pow(n, 1 - s) / (s - 1) + std::pow(n, -s) / 2;
    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    long double rising = s;  // s(s+1)...(s+2k-2)
    long double fact = 2;    // (2k)!
    long double npow = std::pow(n, -s - 1);
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        sum += kBernoulli[k - 1] / fact * rising * npow;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        fact *= (2 * k + 1) * (2 * k + 2);
        npow /= n * n;
    }
    return sum;
}

// Borwein's algorithm for eta(s) = sum (-1)^(k-1) k^(-s).
long double eta_borwein(long double s) {
    constexpr int n = 40;
    std::array<long double, n + 1> d{};
    long double term = 1.0L / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
    long double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<long double>(n + i - 1) * (n - i + 1) * 4 / ((2 * i - 1) * (2 * i));
        acc += term;
        d[i] = n * acc;
    }
    long double sum = 0;
    for (int k = 0; k < n; ++k) {
        long double t = (d[k] - d[n]) / std::pow(static_cast<long double>(k + 1), s);
        sum += (k % 2 == 0) ? t : -t;
    }
    return -sum / d[n];
}

}  // namespace

long double riemann_zeta(long double s) {
    if (!(s > 0) || s == 1) throw std::domain_error("riemann_zeta: requires s > 0 and s != 1");
    if (s > 1) return zeta_euler_maclaurin(s);
    return eta_borwein(s) / (1 - std::pow(2.0L, 1 - s));
}

long double gamma_two_thirds() { return std::tgamma(2.0L / 3); }

}  // namespace s3f
