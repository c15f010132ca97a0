#pragma once

// Galois closure discriminants of non-cyclic cubic fields.

#include "s3fields/enumerator.hpp"

#include <cstdint>
#include <vector>

namespace s3f {

enum class V3Class { below3, equal3, above3 };

struct SexticRecord {
    int128 disc_sextic = 0;
    std::int64_t disc_k = 0;
    std::int64_t fundamental_disc_f = 0;
    int e3 = 0;  // v_3 of the local discriminant at 3
    V3Class v3_class = V3Class::below3;
    int m_a = 1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> residues;  // (modulus, disc_sextic mod modulus)
    bool unramified_2 = false;
    bool unramified_3 = false;
};

// Discriminant of Q(sqrt n): squarefree kernel s if s = 1 mod 4, else 4s.
std::int64_t fundamental_discriminant(std::int64_t n, const Factorization& fact);
std::int64_t fundamental_discriminant(std::int64_t n);

// disc_K^2 * disc(F). Throws std::invalid_argument for cyclic records.
int128 sextic_disc_resolvent(const CubicFieldRecord& record);

// sign(disc_K) * prod p^{e_p(K~)} from the ramification profile.
// Throws std::logic_error for exponents outside the admissible cases.
int128 sextic_disc_lemma(const CubicFieldRecord& record);

// e_p(K~) for one profile entry.
int sextic_exponent(const RamEntry& entry);

int m_a_of(int v3);

// Fills every field, checking that both discriminant routes agree; a
// mismatch throws std::logic_error with the record in the message.
SexticRecord build_sextic(const CubicFieldRecord& record, const std::vector<std::uint64_t>& moduli = {});

}  // namespace s3f
