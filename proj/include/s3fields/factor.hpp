#pragma once

// Integer factorization for discriminants: trial division, and a
// smallest-prime-factor table for bulk work during enumeration.

#include "s3fields/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace s3f {

struct PrimePower {
    std::uint64_t p = 0;
    int e = 0;
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    int sign = 1;                     // +1 or -1
    std::vector<PrimePower> factors;  // strictly increasing primes

    int128 value() const;
    int exponent(std::uint64_t p) const;
    bool operator==(const Factorization&) const = default;
};

std::string to_string(const Factorization& f);

// Trial division. Throws std::invalid_argument for n == 0.
Factorization factorize(std::int64_t n);

// Smallest-prime-factor table over odd integers up to `limit`; falls back to
// trial division above it. Immutable after construction, so it can be
// shared between threads.
class FactorTable {
public:
    explicit FactorTable(std::uint64_t limit);
    std::uint64_t limit() const { return limit_; }
    Factorization factorize(std::int64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint16_t> spf_;  // index n/2 for odd n; 0 marks a prime
};

// All primes <= limit (simple Eratosthenes sieve).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

}  // namespace s3f
