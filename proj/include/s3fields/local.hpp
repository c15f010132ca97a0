#pragma once

// Local invariants of the cubic ring of a form at a prime p.

#include "s3fields/factor.hpp"
#include "s3fields/forms.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace s3f {

// Factorization shape of a prime: (111) split, (12), (3) inert,
// (1^2 1) partially ramified, (1^3) totally ramified.
enum class SplittingType { s111, s12, s3, s1_2_1, s1_3 };

inline constexpr std::array<SplittingType, 5> kAllSplittingTypes = {
    SplittingType::s111, SplittingType::s12, SplittingType::s3, SplittingType::s1_2_1, SplittingType::s1_3};

std::string to_string(SplittingType t);
SplittingType parse_splitting_type(const std::string& s);  // accepts "111", "(1^2 1)", "1^3", ...

// Shape of f mod p as a product of homogeneous irreducibles; no maximality
// assumption. Throws if p divides every coefficient.
SplittingType shape_mod_p(const Form& f, std::uint64_t p);

// True iff the cubic ring of f is maximal at p. Throws on D == 0.
bool is_maximal_at(const Form& f, std::uint64_t p);

// Maximal at every p with p^2 | D. Throws if the factorization does not
// reconstruct the discriminant.
bool is_maximal(const Form& f, const Factorization& disc_factorization);

// Requires f maximal at p with p not dividing the content.
SplittingType splitting_type(const Form& f, std::uint64_t p);
bool is_totally_ramified(const Form& f, std::uint64_t p);

// f has a triple root mod p (f not identically zero mod p); equivalently the
// Hessian vanishes mod p.
bool has_triple_root_mod(const Form& f, std::uint64_t p);

bool is_cyclic(std::int64_t disc_k);

}  // namespace s3f
