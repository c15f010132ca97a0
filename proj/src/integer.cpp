#include "s3fields/integer.hpp"

#include <cmath>
#include <stdexcept>

namespace s3f {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<uint128>(r) * r > n) --r;
    while (static_cast<uint128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

uint128 isqrt(uint128 n) {
    if (n <= UINT64_MAX) return isqrt(static_cast<std::uint64_t>(n));
    auto r = static_cast<uint128>(std::sqrt(static_cast<long double>(n)));
    // Newton polish; the float guess is within a few ulps.
    for (int i = 0; i < 4; ++i) r = (r + n / r) / 2;
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t icbrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<uint128>(r) * r * r > n) --r;
    while (static_cast<uint128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    auto r = isqrt(static_cast<std::uint64_t>(n));
    return r * r == static_cast<std::uint64_t>(n);
}

bool is_square(int128 n) {
    if (n < 0) return false;
    auto r = isqrt(static_cast<uint128>(n));
    return r * r == static_cast<uint128>(n);
}

std::string to_string(uint128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return s;
}

std::string to_string(int128 x) {
    if (x < 0) return "-" + to_string(static_cast<uint128>(-(x + 1)) + 1);
    return to_string(static_cast<uint128>(x));
}

int128 parse_int128(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("cannot parse integer '") + std::string(text) +
                                    "': " + why);
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false;
    for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
        char ch = text[i];
        if (ch == '.') {
            if (seen_dot) fail("two decimal points");
            seen_dot = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_dot) ++frac_digits;
        } else {
            fail("unexpected character");
        }
    }
    if (digits.empty()) fail("no digits");
    long exponent = 0;
    if (i < text.size()) {
        ++i;
        std::string e(text.substr(i));
        if (e.empty()) fail("empty exponent");
        std::size_t used = 0;
        try {
            exponent = std::stol(e, &used);
        } catch (const std::exception&) {
            fail("bad exponent");
        }
        if (used != e.size()) fail("bad exponent");
    }
    exponent -= frac_digits;
    while (exponent < 0) {
        if (digits.empty() || digits.back() != '0') fail("value is not an integer");
        digits.pop_back();
        ++exponent;
    }
    if (exponent > 40) fail("too large");
    digits.append(static_cast<std::size_t>(exponent), '0');
    const uint128 limit = (static_cast<uint128>(1) << 126);
    uint128 v = 0;
    for (char ch : digits) {
        v = v * 10 + static_cast<unsigned>(ch - '0');
        if (v > limit) fail("too large");
    }
    auto r = static_cast<int128>(v);
    return neg ? -r : r;
}

Integer to_integer(int128 x) {
    bool neg = x < 0;
    uint128 u = neg ? static_cast<uint128>(-(x + 1)) + 1 : static_cast<uint128>(x);
    Integer r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? Integer(-r) : r;
}

int128 to_int128(const Integer& x) {
    Integer ax = abs(x);
    if (msb(ax) >= 126 && ax != 0) throw std::overflow_error("integer does not fit in 128 bits");
    auto lo = static_cast<std::uint64_t>(ax & Integer(UINT64_MAX));
    auto hi = static_cast<std::uint64_t>(ax >> 64);
    auto u = (static_cast<uint128>(hi) << 64) | lo;
    auto r = static_cast<int128>(u);
    return x < 0 ? -r : r;
}

}  // namespace s3f
