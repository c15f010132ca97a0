#include "s3fields/local.hpp"

#include <stdexcept>

namespace s3f {

namespace {

struct ModForm {
    // coefficients reduced into [0, m)
    std::uint64_t a, b, c, d, m;

    ModForm(const Form& f, std::uint64_t mod)
        : a(red(f.a, mod)), b(red(f.b, mod)), c(red(f.c, mod)), d(red(f.d, mod)), m(mod) {}

    static std::uint64_t red(std::int64_t x, std::uint64_t mod) {
        return static_cast<std::uint64_t>(mod_floor<int128>(x, static_cast<int128>(mod)));
    }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        return static_cast<std::uint64_t>(static_cast<uint128>(x) * y % m);
    }
    // f(x, 1)
    std::uint64_t at(std::uint64_t x) const { return (mul((mul((mul(a, x) + b) % m, x) + c) % m, x) + d) % m; }
    // partial derivatives at (x, 1)
    std::uint64_t du(std::uint64_t x) const { return (mul(mul(3 % m, a), mul(x, x)) + mul(mul(2 % m, b), x) + c) % m; }
    std::uint64_t dv(std::uint64_t x) const { return (mul(b, mul(x, x)) + mul(mul(2 % m, c), x) + mul(3 % m, d)) % m; }
    bool zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

void require_nondegenerate(const Form& f) {
    if (discriminant(f) == 0) throw std::invalid_argument("degenerate form (zero discriminant)");
}

}  // namespace

std::string to_string(SplittingType t) {
    switch (t) {
    case SplittingType::s111: return "(111)";
    case SplittingType::s12: return "(12)";
    case SplittingType::s3: return "(3)";
    case SplittingType::s1_2_1: return "(1^2 1)";
    case SplittingType::s1_3: return "(1^3)";
    }
    return "?";
}

SplittingType parse_splitting_type(const std::string& s) {
    std::string k;
    for (char ch : s)
        if (ch != '(' && ch != ')' && ch != ' ' && ch != '^') k.push_back(ch);
    if (k == "111") return SplittingType::s111;
    if (k == "12" || k == "21") return SplittingType::s12;
    if (k == "3") return SplittingType::s3;
    if (k == "121") return SplittingType::s1_2_1;
    if (k == "13") return SplittingType::s1_3;
    throw std::invalid_argument("unknown splitting type '" + s + "'");
}

SplittingType shape_mod_p(const Form& f, std::uint64_t p) {
    ModForm g(f, p);
    if (g.zero()) throw std::invalid_argument("shape_mod_p: form vanishes mod p");
    int distinct = 0;
    bool multiple = false;
    if (g.a == 0) {
        ++distinct;
        multiple = g.b == 0;  // partials at (1,0) are 3a and b
    }
    for (std::uint64_t x = 0; x < p; ++x) {
        if (g.at(x)) continue;
        ++distinct;
        if (g.du(x) == 0 && g.dv(x) == 0) multiple = true;
    }
    switch (distinct) {
    case 3: return SplittingType::s111;
    case 2: return SplittingType::s1_2_1;
    case 1: return multiple ? SplittingType::s1_3 : SplittingType::s12;
    default: return SplittingType::s3;
    }
}

bool is_maximal_at(const Form& f, std::uint64_t p) {
    require_nondegenerate(f);
    ModForm g(f, p);
    if (g.zero()) return false;
    const ModForm g2(f, p * p);
    // Root at (1:0): multiple iff p | b; moving it is the identity.
    if (g.a == 0 && g.b == 0 && g2.a == 0) return false;
    for (std::uint64_t x = 0; x < p; ++x) {
        if (g.at(x) || g.du(x) || g.dv(x)) continue;
        // Multiple root (x:1). Any lift gives the same f(x,1) mod p^2.
        if (g2.at(x) == 0) return false;
    }
    return true;
}

bool is_maximal(const Form& f, const Factorization& fact) {
    require_nondegenerate(f);
    if (fact.value() != discriminant(f)) throw std::invalid_argument("is_maximal: factorization does not match the discriminant");
    for (const auto& pe : fact.factors)
        if (pe.e >= 2 && !is_maximal_at(f, pe.p)) return false;
    return true;
}

SplittingType splitting_type(const Form& f, std::uint64_t p) {
    if (!is_maximal_at(f, p)) throw std::invalid_argument("splitting_type: form is not maximal at p");
    return shape_mod_p(f, p);
}

bool is_totally_ramified(const Form& f, std::uint64_t p) { return splitting_type(f, p) == SplittingType::s1_3; }

bool has_triple_root_mod(const Form& f, std::uint64_t p) {
    ModForm g(f, p);
    if (g.zero()) return false;
    auto h = hessian(f);
    auto pp = static_cast<int128>(p);
    return h.P % pp == 0 && h.Q % pp == 0 && h.R % pp == 0;
}

bool is_cyclic(std::int64_t disc_k) { return disc_k > 0 && is_square(disc_k); }

}  // namespace s3f
