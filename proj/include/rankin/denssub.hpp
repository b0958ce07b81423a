#ifndef RANKIN_DENSSUB_HPP_
#define RANKIN_DENSSUB_HPP_

#include "rankin/codes.hpp"
#include "rankin/lattice.hpp"

#include <cstdint>
#include <optional>

namespace rankin {

inline constexpr std::size_t kMaxSearchRank = 4;

struct SearchOptions {
    std::optional<BigInt> upper_hint;     // any valid upper bound on d_l
    std::uint64_t max_candidates = 10'000'000;
    unsigned threads = 1;
    bool escalate = true;
};

/* Certified value of d_l: the minimum Gram determinant over rank-l
 * sublattices, with a witness attaining it. */
struct SearchCertificate {
    std::size_t l = 0;
    BigInt value;
    Sublattice witness;                   // rows sorted lexicographically
    BigInt upper_bound;                   // U used to size the search
    std::int64_t minimum_norm = 0;        // lambda_1^2
    std::int64_t per_vector_bound = 0;    // Bv
    std::int64_t escalation_bound = 0;    // 2 Bv, or 0 when not escalated
    std::uint64_t candidates_examined = 0;
    bool confirmed_by_escalation = false;
};

/* Exact d_l for 1 <= l <= min(4, n).
 *
 * Candidates are all vectors of norm <= Bv = floor(H U / lambda_1^(2(l-1))),
 * H = (4/3)^(l(l-1)/2); l-tuples are searched depth first in (norm, vector)
 * order, pruning on the product of norms. The witness is the lexicographically
 * smallest tuple among those that look Minkowski reduced (pairwise
 * 2|<u,v>| <= min(N(u), N(v)) and prod N <= H det), so it does not depend on
 * the hint, the thread count, or escalation. With `escalate` the search is
 * repeated without the reducedness filter at radius 2 Bv.
 */
SearchCertificate d_l_search(IntegralLattice const& lattice, std::size_t l,
                             SearchOptions const& options = {});

/* Search on Lambda_C seeded with the bound d_l <= q^(2l). */
SearchCertificate d_l_search(LinearCode const& code, std::size_t l, SearchOptions options = {});

struct Rank2Bound {
    BigInt value;          // min(q^4, q^2 (d_E - b^2)), or min(q^4, q^2 d_E) when clamped
    bool clamped = false;  // d_E = b^2: the minimal word has weight one
};

Rank2Bound d2_upper_bound_code(LinearCode const& code, std::uint64_t cap = kDefaultCodewordCap);

}  // namespace rankin

#endif  /* RANKIN_DENSSUB_HPP_ */
