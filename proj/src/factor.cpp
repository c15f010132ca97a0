#include "s3fields/factor.hpp"

#include <stdexcept>

namespace s3f {

int128 Factorization::value() const {
    int128 v = sign;
    for (const auto& pe : factors)
        for (int i = 0; i < pe.e; ++i) v *= static_cast<int128>(pe.p);
    return v;
}

int Factorization::exponent(std::uint64_t p) const {
    for (const auto& pe : factors)
        if (pe.p == p) return pe.e;
    return 0;
}

std::string to_string(const Factorization& f) {
    std::string s = f.sign < 0 ? "-" : "+";
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        s += (i ? "*" : "") + std::to_string(f.factors[i].p);
        if (f.factors[i].e > 1) s += "^" + std::to_string(f.factors[i].e);
    }
    return s;
}

namespace {

void trial_divide(std::uint64_t n, std::uint64_t start, Factorization& out) {
    for (std::uint64_t p = start; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (n > 1) out.factors.push_back({n, 1});
}

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
}

}  // namespace

Factorization factorize(std::int64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    trial_divide(magnitude(n), 2, out);
    return out;
}

FactorTable::FactorTable(std::uint64_t limit) : limit_(limit), spf_(limit / 2 + 1, 0) {
    for (std::uint64_t p = 3; p * p <= limit; p += 2) {
        if (spf_[p / 2]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p)
            if (!spf_[m / 2]) spf_[m / 2] = static_cast<std::uint16_t>(p);
    }
}

Factorization FactorTable::factorize(std::int64_t n) const {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Factorization out;
    out.sign = n < 0 ? -1 : 1;
    std::uint64_t m = magnitude(n);
    if (m > limit_) {
        trial_divide(m, 2, out);
        return out;
    }
    int e2 = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e2;
    }
    if (e2) out.factors.push_back({2, e2});
    while (m > 1) {
        std::uint64_t p = spf_[m / 2];
        if (p == 0) p = m;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return out;
}

}  // namespace s3f
