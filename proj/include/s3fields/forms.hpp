#pragma once

// Integral binary cubic forms f(u,v) = a u^3 + b u^2 v + c u v^2 + d v^3.
//
// The scalar is a template parameter: std::int64_t is the fast path (all
// products are formed in __int128), Integer (cpp_int) is exact for any size.
//
// Action convention: a matrix g acts on the right of the coordinate row
// vector, (f.g)(u,v) = f((u,v) g) = f(g11 u + g21 v, g12 u + g22 v), so
// apply(h, apply(g, f)) == apply(h * g, f). Call it qualified (s3f::apply)
// since std::apply is otherwise picked up by argument-dependent lookup.

#include "s3fields/integer.hpp"

#include <array>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace s3f {

template <typename Int> struct BinaryCubicForm {
    Int a{}, b{}, c{}, d{};

    friend bool operator==(const BinaryCubicForm& x, const BinaryCubicForm& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const BinaryCubicForm& x, const BinaryCubicForm& y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

using Form = BinaryCubicForm<std::int64_t>;
using BigForm = BinaryCubicForm<Integer>;

template <typename Int> std::string to_string(const BinaryCubicForm<Int>& f) {
    auto s = [](const Int& x) {
        if constexpr (std::is_same_v<Int, Integer>) return x.str();
        else return std::to_string(x);
    };
    return "(" + s(f.a) + "," + s(f.b) + "," + s(f.c) + "," + s(f.d) + ")";
}

template <typename Int> std::ostream& operator<<(std::ostream& os, const BinaryCubicForm<Int>& f) {
    return os << to_string(f);
}

// Narrowing from the wide accumulator, with overflow detection.
template <typename Int> Int narrow(const wide_t<Int>& w) {
    if constexpr (std::is_same_v<Int, wide_t<Int>>) {
        return w;
    } else {
        if (w > std::numeric_limits<Int>::max() || w < std::numeric_limits<Int>::min())
            throw std::overflow_error("form coefficient overflows the scalar type");
        return static_cast<Int>(w);
    }
}

template <typename Int> BigForm to_big(const BinaryCubicForm<Int>& f) {
    return {Integer(f.a), Integer(f.b), Integer(f.c), Integer(f.d)};
}

template <typename Int> BinaryCubicForm<Int> from_big(const BigForm& f) {
    if constexpr (std::is_same_v<Int, Integer>) {
        return f;
    } else {
        auto one = [](const Integer& x) {
            if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
                throw std::overflow_error("form coefficient overflows the scalar type");
            return static_cast<Int>(x);
        };
        return {one(f.a), one(f.b), one(f.c), one(f.d)};
    }
}

// 2x2 integer matrix with determinant +1 or -1.
template <typename Int> class UnimodularMap {
public:
    // Throws std::invalid_argument unless det = +-1.
    static UnimodularMap make(Int g11, Int g12, Int g21, Int g22) {
        wide_t<Int> det = wide_t<Int>(g11) * g22 - wide_t<Int>(g12) * g21;
        if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
        return UnimodularMap(g11, g12, g21, g22);
    }
    static UnimodularMap identity() { return UnimodularMap(1, 0, 0, 1); }
    static UnimodularMap swap() { return UnimodularMap(0, 1, 1, 0); }
    static UnimodularMap negate() { return UnimodularMap(-1, 0, 0, -1); }
    // u -> u + k v
    static UnimodularMap translate(Int k) { return UnimodularMap(1, 0, k, 1); }
    // v -> -v
    static UnimodularMap flip_v() { return UnimodularMap(1, 0, 0, -1); }

    const Int& g11() const { return m_[0]; }
    const Int& g12() const { return m_[1]; }
    const Int& g21() const { return m_[2]; }
    const Int& g22() const { return m_[3]; }
    int det() const {
        return (wide_t<Int>(m_[0]) * m_[3] - wide_t<Int>(m_[1]) * m_[2]) > 0 ? 1 : -1;
    }

    friend UnimodularMap operator*(const UnimodularMap& x, const UnimodularMap& y) {
        auto e = [](const Int& p, const Int& q, const Int& r, const Int& s) {
            return narrow<Int>(wide_t<Int>(p) * q + wide_t<Int>(r) * s);
        };
        return UnimodularMap(e(x.g11(), y.g11(), x.g12(), y.g21()), e(x.g11(), y.g12(), x.g12(), y.g22()),
                             e(x.g21(), y.g11(), x.g22(), y.g21()), e(x.g21(), y.g12(), x.g22(), y.g22()));
    }
    friend bool operator==(const UnimodularMap& x, const UnimodularMap& y) {
        return x.m_[0] == y.m_[0] && x.m_[1] == y.m_[1] && x.m_[2] == y.m_[2] && x.m_[3] == y.m_[3];
    }

private:
    UnimodularMap(Int g11, Int g12, Int g21, Int g22) : m_{g11, g12, g21, g22} {}
    std::array<Int, 4> m_;
};

// Hessian covariant P u^2 + Q u v + R v^2.
template <typename Int> struct HessianForm {
    wide_t<Int> P{}, Q{}, R{};
    friend bool operator==(const HessianForm& x, const HessianForm& y) {
        return x.P == y.P && x.Q == y.Q && x.R == y.R;
    }
};

template <typename Int> wide_t<Int> evaluate(const BinaryCubicForm<Int>& f, const Int& u, const Int& v) {
    using W = wide_t<Int>;
    W uu = W(u) * u, vv = W(v) * v;
    return W(f.a) * uu * u + W(f.b) * uu * v + W(f.c) * u * vv + W(f.d) * vv * v;
}

template <typename Int> wide_t<Int> discriminant(const BinaryCubicForm<Int>& f) {
    using W = wide_t<Int>;
    W a = f.a, b = f.b, c = f.c, d = f.d;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

template <typename Int> HessianForm<Int> hessian(const BinaryCubicForm<Int>& f) {
    using W = wide_t<Int>;
    W a = f.a, b = f.b, c = f.c, d = f.d;
    return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

template <typename Int>
BinaryCubicForm<Int> apply(const UnimodularMap<Int>& g, const BinaryCubicForm<Int>& f) {
    using W = wide_t<Int>;
    // x = p u + q v, y = r u + s v
    W p = g.g11(), q = g.g21(), r = g.g12(), s = g.g22();
    W a = f.a, b = f.b, c = f.c, d = f.d;
    W na = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
    W nb = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) + c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
    W nc = 3 * a * p * q * q + b * (2 * p * q * s + q * q * r) + c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
    W nd = a * q * q * q + b * q * q * s + c * q * s * s + d * s * s * s;
    return {narrow<Int>(na), narrow<Int>(nb), narrow<Int>(nc), narrow<Int>(nd)};
}

template <typename Int>
HessianForm<Int> apply(const UnimodularMap<Int>& g, const HessianForm<Int>& h) {
    using W = wide_t<Int>;
    W p = g.g11(), r = g.g12(), q = g.g21(), s = g.g22();
    return {h.P * p * p + h.Q * p * r + h.R * r * r,
            2 * h.P * p * q + h.Q * (p * s + q * r) + 2 * h.R * r * s,
            h.P * q * q + h.Q * q * s + h.R * s * s};
}

template <typename Int> Int gcd_abs(Int x, Int y) {
    x = iabs(x);
    y = iabs(y);
    while (y != 0) {
        Int t = x % y;
        x = y;
        y = t;
    }
    return x;
}

template <typename Int> Int content(const BinaryCubicForm<Int>& f) {
    if (f.is_zero()) throw std::invalid_argument("content of the zero form");
    return gcd_abs(gcd_abs(f.a, f.b), gcd_abs(f.c, f.d));
}

// Positive divisors of n > 0, by trial division.
template <typename Int> std::vector<Int> divisors(Int n) {
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail {

// True when f mod p has no zero on P^1(F_p); then f has no rational
// linear factor. Requires p not dividing a.
template <typename Int> bool rootless_mod(const BinaryCubicForm<Int>& f, int p) {
    auto m = [p](const Int& x) { return static_cast<long>(mod_floor<Int>(x, Int(p))); };
    long a = m(f.a), b = m(f.b), c = m(f.c), d = m(f.d);
    if (a == 0) return false;
    for (long x = 0; x < p; ++x)
        if ((((a * x + b) % p * x + c) % p * x + d) % p == 0) return false;
    return true;
}

}  // namespace detail

// True iff f has no rational linear factor. Throws on zero discriminant.
template <typename Int> bool is_irreducible(const BinaryCubicForm<Int>& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("is_irreducible: zero discriminant");
    if (f.a == 0 || f.d == 0) return false;
    for (int p : {2, 3, 5, 7, 11, 13})
        if (detail::rootless_mod(f, p)) return true;
    // Rational root test: a root (x : y) in lowest terms has x | d and y | a.
    for (const Int& y : divisors(iabs(f.a)))
        for (const Int& x : divisors(iabs(f.d))) {
            if (evaluate(f, x, y) == 0) return false;
            if (evaluate(f, Int(-x), y) == 0) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical orbit representatives.

namespace detail {

inline BigForm negate(const BigForm& f) { return {-f.a, -f.b, -f.c, -f.d}; }

// Lexicographically least f.h with leading coefficient > 0, over the
// automorphisms h of the Hessian (entries in {-1,0,1} suffice for a
// Gauss-reduced definite form).
template <typename Int> BinaryCubicForm<Int> hessian_tiebreak(const BinaryCubicForm<Int>& f) {
    const auto h = hessian(f);
    BinaryCubicForm<Int> best{};
    bool have = false;
    for (int g11 = -1; g11 <= 1; ++g11)
        for (int g12 = -1; g12 <= 1; ++g12)
            for (int g21 = -1; g21 <= 1; ++g21)
                for (int g22 = -1; g22 <= 1; ++g22) {
                    int det = g11 * g22 - g12 * g21;
                    if (det != 1 && det != -1) continue;
                    auto g = UnimodularMap<Int>::make(g11, g12, g21, g22);
                    if (!(s3f::apply(g, h) == h)) continue;
                    auto cand = s3f::apply(g, f);
                    if (cand.a <= 0) continue;
                    if (!have || cand < best) {
                        best = cand;
                        have = true;
                    }
                }
    if (!have) throw std::logic_error("hessian_tiebreak: no candidate with positive leading coefficient");
    return best;
}

inline BigForm reduce_positive(BigForm f) {
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw std::logic_error("reduce_positive: no convergence");
        auto h = hessian(f);
        if (h.P > h.R) {
            f = s3f::apply(UnimodularMap<Integer>::swap(), f);
        } else if (abs(h.Q) > h.P) {
            Integer k = floor_div<Integer>(h.P - h.Q, 2 * h.P);
            f = s3f::apply(UnimodularMap<Integer>::translate(k), f);
        } else {
            break;
        }
    }
    if (hessian(f).Q < 0) f = s3f::apply(UnimodularMap<Integer>::flip_v(), f);
    return hessian_tiebreak(f);
}

// sign of N^3 + b N^2 + a c N + a^2 d; negative iff N < a*theta + b for the
// real root theta of f(x,1) (a > 0, one real root).
inline int root_side(const BigForm& f, const Integer& N) {
    Integer v = ((N + f.b) * N + f.a * f.c) * N + f.a * f.a * f.d;
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
}

inline BigForm reduce_negative(BigForm f) {
    if (f.a < 0) f = negate(f);
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw std::logic_error("reduce_negative: no convergence");
        // Largest m with m*a < a*theta + b.
        auto below = [&](const Integer& m) { return root_side(f, m * f.a - f.b) < 0; };
        Integer lo = 0, hi = 0;
        if (below(0)) {
            hi = 1;
            while (below(hi)) { lo = hi; hi *= 2; }
        } else {
            lo = -1;
            while (!below(lo)) { hi = lo; lo *= 2; }
        }
        while (hi - lo > 1) {
            Integer mid = floor_div<Integer>(lo + hi, 2);
            (below(mid) ? lo : hi) = mid;
        }
        const Integer m = lo;
        Integer j = floor_div<Integer>(m, 2);
        if (m - 2 * j == 0) {
            f = s3f::apply(UnimodularMap<Integer>::translate(-j), f);
        } else {
            f = s3f::apply(UnimodularMap<Integer>::translate(-(j + 1)), f);
            f = s3f::apply(UnimodularMap<Integer>::flip_v(), f);
        }
        if (f.d * f.d - f.b * f.d + f.a * f.c - f.a * f.a > 0) return f;
        f = s3f::apply(UnimodularMap<Integer>::swap(), f);
        if (f.a < 0) f = negate(f);
    }
}

}  // namespace detail

// Canonical representative of the GL2(Z)-orbit of an irreducible form.
// D > 0: Gauss-reduced Hessian 0 <= Q <= P <= R, then the lexicographic
// minimum with a > 0 over the Hessian's automorphisms.
// D < 0: a > 0 and bc - ad > 0, (a-b)^2 + c(a-b) + ad > 0,
// d^2 - bd + ac - a^2 > 0 (the complex root lies strictly inside the
// standard fundamental domain, so no tie-break is needed).
template <typename Int> BinaryCubicForm<Int> canonical_reduce(const BinaryCubicForm<Int>& f) {
    auto D = discriminant(f);
    if (D == 0) throw std::invalid_argument("canonical_reduce: zero discriminant");
    if (!is_irreducible(f)) throw std::invalid_argument("canonical_reduce: reducible form");
    BigForm big = to_big(f);
    return from_big<Int>(D > 0 ? detail::reduce_positive(big) : detail::reduce_negative(big));
}

template <typename Int>
bool equivalent(const BinaryCubicForm<Int>& f1, const BinaryCubicForm<Int>& f2) {
    if (discriminant(f1) != discriminant(f2)) {
        // still validate both inputs
        (void)canonical_reduce(f1);
        (void)canonical_reduce(f2);
        return false;
    }
    return canonical_reduce(f1) == canonical_reduce(f2);
}

// Membership tests used by the enumerator; both assume irreducibility.
template <typename Int> bool is_reduced_negative(const BinaryCubicForm<Int>& f) {
    using W = wide_t<Int>;
    W a = f.a, b = f.b, c = f.c, d = f.d;
    return a > 0 && b * c - a * d > 0 && (a - b) * (a - b) + c * (a - b) + a * d > 0 &&
           d * d - b * d + a * c - a * a > 0;
}

template <typename Int> bool is_reduced_positive(const BinaryCubicForm<Int>& f) {
    if (f.a <= 0) return false;
    auto h = hessian(f);
    if (!(0 <= h.Q && h.Q <= h.P && h.P <= h.R)) return false;
    if (h.Q == 0 || h.Q == h.P || h.P == h.R) return detail::hessian_tiebreak(f) == f;
    return true;
}

}  // namespace s3f
