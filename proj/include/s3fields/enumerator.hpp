#pragma once

// Enumeration of cubic fields by discriminant via reduced binary cubic forms.
// Every isomorphism class of cubic field with |disc| in [lower, upper) and
// the requested sign is produced once, as its canonical form.

#include "s3fields/factor.hpp"
#include "s3fields/forms.hpp"
#include "s3fields/local.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace s3f {

enum class Sign { positive, negative };

inline int sign_value(Sign s) { return s == Sign::positive ? 1 : -1; }
const char* to_string(Sign s);

struct RamEntry {
    std::uint64_t p = 0;
    int e = 0;           // exponent of p in disc_K
    bool total = false;  // totally ramified (triple root mod p)
    bool operator==(const RamEntry&) const = default;
};

struct CubicFieldRecord {
    Form form;
    std::int64_t disc = 0;
    Factorization factorization;
    bool cyclic = false;
    std::vector<RamEntry> ramification;  // one entry per prime dividing disc
    std::vector<std::pair<std::uint64_t, SplittingType>> splitting;  // requested primes only

    std::uint64_t abs_disc() const { return static_cast<std::uint64_t>(disc < 0 ? -disc : disc); }
    const RamEntry* ram_at(std::uint64_t p) const;
    bool operator==(const CubicFieldRecord&) const = default;
};

// Emission order: |disc| ascending, then canonical coefficients.
bool record_less(const CubicFieldRecord& x, const CubicFieldRecord& y);

// Largest supported |disc| bound (exclusive upper).
inline constexpr std::uint64_t kMaxEnumerationUpper = 2'000'000'001ULL;
// Largest upper bound accepted by the brute-force oracle.
inline constexpr std::uint64_t kMaxOracleUpper = 100'000ULL;

// Half-open range lower <= |disc| < upper of the given sign.
class EnumerationRange {
public:
    // Throws std::invalid_argument unless 0 <= lower < upper <= kMaxEnumerationUpper.
    static EnumerationRange make(Sign sign, std::uint64_t lower, std::uint64_t upper);
    Sign sign() const { return sign_; }
    std::uint64_t lower() const { return lower_; }
    std::uint64_t upper() const { return upper_; }
    bool contains_abs(std::uint64_t abs_disc) const { return abs_disc >= lower_ && abs_disc < upper_; }
    bool operator==(const EnumerationRange&) const = default;

private:
    EnumerationRange(Sign s, std::uint64_t lo, std::uint64_t hi) : sign_(s), lower_(lo), upper_(hi) {}
    Sign sign_;
    std::uint64_t lower_, upper_;
};

// k consecutive disjoint sub-ranges covering `range`; k is capped at the
// width of the range so that every part is nonempty.
std::vector<EnumerationRange> partition(const EnumerationRange& range, unsigned k);

struct EnumerationOptions {
    unsigned threads = 1;
    std::vector<std::uint64_t> splitting_primes;  // fill CubicFieldRecord::splitting
    std::uint64_t chunk_width = 1u << 20;         // |disc| width handled per work unit
};

using RecordSink = std::function<void(const CubicFieldRecord&)>;

// Streams records in emission order. Output is independent of threads and
// chunk_width.
void enumerate(const EnumerationRange& range, const RecordSink& sink, const EnumerationOptions& options = {});
std::vector<CubicFieldRecord> enumerate_all(const EnumerationRange& range, const EnumerationOptions& options = {});

// Slow oracle: exhausts a coefficient box containing a representative of
// every orbit, keeps irreducible maximal forms and deduplicates through
// canonical_reduce. Throws when upper > kMaxOracleUpper.
std::vector<CubicFieldRecord> brute_force_enumerate(const EnumerationRange& range,
                                                    const EnumerationOptions& options = {});

// Builds a record from a canonical form, or nullopt when the form is
// reducible or not maximal. `fact` must factor discriminant(f).
std::optional<CubicFieldRecord> make_field_record(const Form& f, const Factorization& fact,
                                                  const EnumerationOptions& options = {});

// Reduced forms (irreducibility and maximality not yet tested) with |disc|
// in the range, in no particular order. Exposed for tests.
void reduced_forms(const EnumerationRange& range, const std::function<void(const Form&, std::int64_t)>& visit);

}  // namespace s3f
