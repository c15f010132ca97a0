#include "s3fields/sextic.hpp"

#include <stdexcept>
#include <string>

namespace s3f {

std::int64_t fundamental_discriminant(std::int64_t n, const Factorization& fact) {
    if (n == 0) throw std::invalid_argument("fundamental_discriminant: zero");
    if (fact.value() != n) throw std::invalid_argument("fundamental_discriminant: factorization mismatch");
    std::int64_t s = fact.sign;
    for (const auto& pe : fact.factors)
        if (pe.e % 2) s *= static_cast<std::int64_t>(pe.p);
    return mod_floor<std::int64_t>(s, 4) == 1 ? s : 4 * s;
}

std::int64_t fundamental_discriminant(std::int64_t n) { return fundamental_discriminant(n, factorize(n)); }

int128 sextic_disc_resolvent(const CubicFieldRecord& record) {
    if (record.cyclic) throw std::invalid_argument("sextic_disc_resolvent: cyclic field has no S3 closure");
    const int128 dk = record.disc;
    return dk * dk * fundamental_discriminant(record.disc, record.factorization);
}

int sextic_exponent(const RamEntry& r) {
    auto bad = [&]() -> int {
        throw std::logic_error("ramification profile outside the admissible cases: p=" + std::to_string(r.p) +
                               " e=" + std::to_string(r.e) + (r.total ? " total" : " partial"));
    };
    if (!r.total) return 3 * r.e;
    if (r.p != 3) return r.e == 2 ? 4 : bad();
    switch (r.e) {
    case 3: return 7;
    case 4: return 8;
    case 5: return 11;
    default: return bad();
    }
}

int128 sextic_disc_lemma(const CubicFieldRecord& record) {
    if (record.cyclic) throw std::invalid_argument("sextic_disc_lemma: cyclic field has no S3 closure");
    int128 v = record.disc < 0 ? -1 : 1;
    for (const auto& r : record.ramification) {
        const int e = sextic_exponent(r);
        for (int i = 0; i < e; ++i) v *= static_cast<int128>(r.p);
    }
    return v;
}

int m_a_of(int v3) { return v3 < 3 ? 1 : (v3 == 3 ? 9 : 81); }

SexticRecord build_sextic(const CubicFieldRecord& record, const std::vector<std::uint64_t>& moduli) {
    SexticRecord s;
    s.disc_k = record.disc;
    s.fundamental_disc_f = fundamental_discriminant(record.disc, record.factorization);
    s.disc_sextic = sextic_disc_resolvent(record);
    const int128 lemma = sextic_disc_lemma(record);
    if (lemma != s.disc_sextic)
        throw std::logic_error("sextic discriminant mismatch for form " + to_string(record.form) + " disc " +
                               std::to_string(record.disc) + ": resolvent " + to_string(s.disc_sextic) + " vs lemma " +
                               to_string(lemma));
    s.e3 = record.factorization.exponent(3);
    s.v3_class = s.e3 < 3 ? V3Class::below3 : (s.e3 == 3 ? V3Class::equal3 : V3Class::above3);
    s.m_a = m_a_of(s.e3);
    for (auto m : moduli) {
        if (m < 2) throw std::invalid_argument("residue modulus must be at least 2");
        s.residues.emplace_back(m, static_cast<std::uint64_t>(mod_floor<int128>(s.disc_sextic, static_cast<int128>(m))));
    }
    s.unramified_2 = s.disc_sextic % 2 != 0;
    s.unramified_3 = s.disc_sextic % 3 != 0;
    return s;
}

}  // namespace s3f
