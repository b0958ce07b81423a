#ifndef RANKIN_CODES_HPP_
#define RANKIN_CODES_HPP_

#include "rankin/exact.hpp"
#include "rankin/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rankin {

inline constexpr std::uint64_t kDefaultCodewordCap = 10'000'000;

/* Named family a code was built from; kept so that spec documents can be
 * written back in the same form they were read. */
struct CodeFamily {
    std::string name;                       // parity_check, reed_muller, extended_hamming, full, zero
    std::map<std::string, long> params;     // family parameters other than q and n

    friend bool operator==(CodeFamily const&, CodeFamily const&) = default;
};

/* Additive subgroup of Z_q^n spanned by generator rows.
 *
 * Generator entries are normalized into [0, q). The rows need not be
 * independent (over a ring they usually cannot be); the cardinality comes
 * from the Construction A lattice: |C| = q^n / prod(HNF diagonal).
 */
class LinearCode {
public:
    LinearCode(long q, long n, IntMatrix generators, std::optional<CodeFamily> family = std::nullopt);

    long q() const { return q_; }
    long n() const { return n_; }
    IntMatrix const& generators() const { return generators_; }
    std::optional<CodeFamily> const& family() const { return family_; }
    BigInt const& cardinality() const { return cardinality_; }

    /* HNF basis of the lifted lattice rho^{-1}(C). */
    IntMatrix const& lattice_basis() const { return lattice_basis_; }

    /* Nonzero rows of lattice_basis() mod q: a canonical generator set. */
    IntMatrix canonical_generators() const;

    /* Same set of codewords (generators may differ). */
    bool same_code(LinearCode const& other) const;
    bool is_self_dual() const;

    /* All codewords, entries in [0, q). Fails with CapExceeded above cap. */
    std::vector<IntVector> codewords(std::uint64_t cap = kDefaultCodewordCap) const;

private:
    long q_;
    long n_;
    IntMatrix generators_;
    std::optional<CodeFamily> family_;
    IntMatrix lattice_basis_;
    BigInt cardinality_;
};

struct CodewordWeightReport {
    long min_hamming = 0;         // d_H
    std::int64_t min_euclidean = 0;  // d_E
    IntVector witness_codeword;   // lexicographically smallest codeword attaining d_E
    IntVector witness_lift;       // its minimal-norm lift
    std::int64_t max_coeff_sq = 0;   // b^2, maximized over all codewords attaining d_E
    std::uint64_t codewords = 0;  // |C| as enumerated
};

/* min(a^2, (q-a)^2) for a in [0, q). */
std::int64_t euclidean_weight(std::int64_t a, long q);
/* Representative of a with minimal square; the tie a = q/2 keeps +q/2. */
std::int64_t minimal_lift(std::int64_t a, long q);
IntVector minimal_lift(IntVector const& word, long q);

LinearCode parity_check_code(long n, long q);
LinearCode full_code(long n, long q);
LinearCode zero_code(long n, long q);
LinearCode extended_hamming_code();

/* Generator matrix B_{r,m} of the binary Reed-Muller code R(r, m) via
 * B_{r,m} = [[B_{r,m-1}, B_{r,m-1}], [0, B_{r-1,m-1}]],
 * B_{0,i} = all-ones row, B_{i,i} = identity. */
IntMatrix reed_muller_generators(long r, long m);
LinearCode reed_muller_code(long r, long m);

CodewordWeightReport weight_report(LinearCode const& code, std::uint64_t cap = kDefaultCodewordCap);

/* C^perp, computed as (q * dual basis of Lambda_C) mod q. */
LinearCode dual_code(LinearCode const& code);

}  // namespace rankin

#endif  /* RANKIN_CODES_HPP_ */
