#include <doctest.h>

#include "s3fields/enumerator.hpp"
#include "s3fields/local.hpp"

#include <random>

using namespace s3f;

namespace {

// Independent index computation for monogenic-type checks: the field
// discriminant of Q(cbrt m) for cube-free m, from the classical formula
// -27 m1^2 m2^2 / (9 if m^2 = 1 mod 9), with m = m1 m2^2.
std::int64_t pure_cubic_field_disc(std::int64_t m1, std::int64_t m2) {
    const std::int64_t m = m1 * m2 * m2;
    const std::int64_t base = -27 * m1 * m1 * m2 * m2;
    return (m * m) % 9 == 1 ? base / 9 : base;
}

}  // namespace

TEST_CASE("factorize") {
    auto f = factorize(-23);
    CHECK(f.sign == -1);
    CHECK(f.factors == std::vector<PrimePower>{{23, 1}});
    CHECK(factorize(148).factors == std::vector<PrimePower>{{2, 2}, {37, 1}});
    auto g = factorize(-34992);
    CHECK(g.sign == -1);
    CHECK(g.factors == std::vector<PrimePower>{{2, 4}, {3, 7}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK(factorize(1).factors.empty());
}

TEST_CASE("factor table agrees with trial division") {
    FactorTable t(200000);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> n(-400000, 400000);
    for (int i = 0; i < 20000; ++i) {
        auto x = n(rng);
        if (x == 0) continue;
        CHECK(t.factorize(x) == factorize(x));
    }
    for (std::int64_t x = 1; x < 3000; ++x) CHECK(t.factorize(x).value() == x);
}

TEST_CASE("is_maximal_at and is_maximal") {
    CHECK(is_maximal_at(Form{1, 0, -1, -1}, 2));
    CHECK(is_maximal_at(Form{1, 0, -1, -1}, 23));
    CHECK_FALSE(is_maximal_at(Form{1, 0, 0, -4}, 2));
    CHECK(is_maximal_at(Form{1, 0, 0, -2}, 2));
    CHECK(is_maximal(Form{1, 0, -1, -1}, factorize(-23)));
    CHECK_FALSE(is_maximal(Form{2, 0, -2, -2}, factorize(discriminant(Form{2, 0, -2, -2}))));
    CHECK_FALSE(is_maximal(Form{1, 0, 0, -4}, factorize(-432)));
    CHECK_THROWS_AS(is_maximal(Form{1, 0, -1, -1}, factorize(-46)), std::invalid_argument);
    CHECK_THROWS_AS(is_maximal_at(Form{1, 0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("maximality matches the pure cubic field discriminant") {
    // x^3 - m: ring disc is -27 m^2; maximal iff it equals the field disc.
    for (std::int64_t m1 : {2, 3, 5, 6, 7, 10, 11, 13, 17, 19, 22, 26, 30})
        for (std::int64_t m2 : {1, 2, 3, 5}) {
            if (m2 > 1 && m1 % m2 == 0) continue;
            const std::int64_t m = m1 * m2 * m2;
            bool cube_free = true;
            for (std::int64_t p = 2; p <= 7; ++p)
                if (m % (p * p * p) == 0) cube_free = false;
            if (!cube_free) continue;
            const Form f{1, 0, 0, -m};
            const bool maximal = is_maximal(f, factorize(discriminant(f)));
            CHECK_MESSAGE(maximal == (-27 * m * m == pure_cubic_field_disc(m1, m2)), "m=", m);
        }
}

TEST_CASE("maximality is an orbit invariant") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> k(-4, 4);
    const std::vector<Form> forms = {{1, 0, 0, -4}, {1, 0, 0, -2}, {1, 1, 1, 1}, {2, 0, 6, 4}, {1, 0, 0, -10}, {1, 2, 3, 4}};
    for (const auto& f : forms)
        for (std::uint64_t p : {2, 3, 5, 7}) {
            const bool m = is_maximal_at(f, p);
            for (int i = 0; i < 30; ++i) {
                auto g = UnimodularMap<std::int64_t>::make(1, 0, k(rng), 1) * UnimodularMap<std::int64_t>::swap() *
                         UnimodularMap<std::int64_t>::make(1, 0, k(rng), 1);
                CHECK(is_maximal_at(s3f::apply(g, f), p) == m);
            }
        }
}

TEST_CASE("splitting types") {
    CHECK(splitting_type(Form{1, 0, -1, -1}, 5) == SplittingType::s12);
    CHECK(shape_mod_p(Form{1, 1, 1, 1}, 2) == SplittingType::s1_3);
    CHECK(splitting_type(Form{1, 0, -1, -1}, 23) == SplittingType::s1_2_1);
    CHECK(is_totally_ramified(Form{1, 0, 0, -2}, 2));
    CHECK_FALSE(is_totally_ramified(Form{3, 1, 0, 2}, 2));  // = (1,1,0,0) mod 2
    CHECK(shape_mod_p(Form{1, 1, 0, 0}, 2) == SplittingType::s1_2_1);
    CHECK_THROWS_AS(splitting_type(Form{1, 0, 0, -4}, 2), std::invalid_argument);
    CHECK(parse_splitting_type("(1^2 1)") == SplittingType::s1_2_1);
    CHECK(to_string(SplittingType::s1_3) == "(1^3)");
}

TEST_CASE("triple root via the Hessian agrees with the root scan for every form mod p") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c)
                    for (std::int64_t d = 0; d < p; ++d) {
                        const Form f{a, b, c, d};
                        if (f.is_zero()) continue;
                        CHECK(has_triple_root_mod(f, p) == (shape_mod_p(f, p) == SplittingType::s1_3));
                    }
    }
}

TEST_CASE("triple roots mod 2 are exactly the listed forms") {
    // forms with a triple root mod 2: (1,1,1,1), (1,0,0,0), (0,0,0,1)
    for (std::int64_t a = 0; a < 2; ++a)
        for (std::int64_t b = 0; b < 2; ++b)
            for (std::int64_t c = 0; c < 2; ++c)
                for (std::int64_t d = 0; d < 2; ++d) {
                    const Form f{a, b, c, d};
                    if (f.is_zero()) continue;
                    const bool listed = f == Form{1, 1, 1, 1} || f == Form{1, 0, 0, 0} || f == Form{0, 0, 0, 1};
                    CHECK(has_triple_root_mod(f, 2) == listed);
                }
}

TEST_CASE("is_cyclic") {
    CHECK(is_cyclic(49));
    CHECK_FALSE(is_cyclic(-23));
    CHECK_FALSE(is_cyclic(148));
    CHECK(is_cyclic(81));
}

TEST_CASE("ramification profile invariants on enumerated fields") {
    for (Sign s : {Sign::positive, Sign::negative}) {
        for (const auto& r : enumerate_all(EnumerationRange::make(s, 0, 20000), {1, {2, 3, 5}})) {
            int128 prod = r.disc < 0 ? -1 : 1;
            for (const auto& e : r.ramification) {
                for (int i = 0; i < e.e; ++i) prod *= static_cast<int128>(e.p);
                // total flag agrees with the splitting type
                CHECK(e.total == is_totally_ramified(r.form, e.p));
                CHECK(shape_mod_p(r.form, e.p) != SplittingType::s111);
                if (e.p > 3) CHECK(e.e == (e.total ? 2 : 1));
            }
            CHECK(prod == r.disc);
            // mod 2 membership in the triple-root list
            const Form m2{mod_floor<std::int64_t>(r.form.a, 2), mod_floor<std::int64_t>(r.form.b, 2),
                          mod_floor<std::int64_t>(r.form.c, 2), mod_floor<std::int64_t>(r.form.d, 2)};
            const bool listed = m2 == Form{1, 1, 1, 1} || m2 == Form{1, 0, 0, 0} || m2 == Form{0, 0, 0, 1};
            CHECK(is_totally_ramified(r.form, 2) == listed);
            // unramified primes: shape has no repeated factor
            for (const auto& [p, t] : r.splitting)
                if (r.disc % static_cast<std::int64_t>(p) != 0)
                    CHECK((t == SplittingType::s111 || t == SplittingType::s12 || t == SplittingType::s3));
        }
    }
}
