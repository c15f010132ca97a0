#pragma once

// Integer helpers shared by every module: the 128-bit type used for
// widening, exact square roots, floor division and decimal I/O.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace s3f {

using Integer = boost::multiprecision::cpp_int;
using int128 = __int128;
using uint128 = unsigned __int128;

// Wide accumulator type for products of coefficients.
template <typename Int> struct WideOf { using type = Int; };
template <> struct WideOf<std::int64_t> { using type = int128; };
template <typename Int> using wide_t = typename WideOf<Int>::type;

template <typename T> constexpr T iabs(T x) { return x < 0 ? T(-x) : x; }

// floor(n / d) for d != 0, any signs.
template <typename T> constexpr T floor_div(T n, T d) {
    T q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

// Mathematical residue in [0, m).
template <typename T> constexpr T mod_floor(T n, T m) {
    T r = n % m;
    return r < 0 ? T(r + m) : r;
}

std::uint64_t isqrt(std::uint64_t n);
uint128 isqrt(uint128 n);
std::uint64_t icbrt(std::uint64_t n);

bool is_square(std::int64_t n);
bool is_square(int128 n);

std::string to_string(int128 x);
std::string to_string(uint128 x);

// Parses a decimal integer or an exact scientific literal such as "3e23"
// or "1.5e6". Throws std::invalid_argument when the value is not integral
// or does not fit.
int128 parse_int128(std::string_view text);

Integer to_integer(int128 x);
int128 to_int128(const Integer& x);  // throws std::overflow_error

}  // namespace s3f
