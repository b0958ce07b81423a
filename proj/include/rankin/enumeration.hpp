#ifndef RANKIN_ENUMERATION_HPP_
#define RANKIN_ENUMERATION_HPP_

#include "rankin/lattice.hpp"

#include <cstdint>
#include <vector>

namespace rankin {

inline constexpr std::uint64_t kDefaultVectorCap = 10'000'000;

struct ShortVector {
    IntVector vector;   // ambient coordinates, first nonzero entry positive
    IntVector coords;   // coordinates against the lattice basis
    std::int64_t norm = 0;
};

/* All nonzero lattice vectors of squared norm <= bound, one per sign pair,
 * sorted by (norm, vector). */
struct ShortVectorList {
    std::int64_t bound = 0;
    std::vector<ShortVector> vectors;
};

ShortVectorList short_vectors(IntegralLattice const& lattice, std::int64_t bound,
                              std::uint64_t cap = kDefaultVectorCap);

/* Same enumeration for a lattice known only by its Gram matrix; vectors are
 * reported in basis coordinates. */
ShortVectorList short_vectors_gram(IntMatrix const& gram, std::int64_t bound,
                                   std::uint64_t cap = kDefaultVectorCap);

struct LatticeMinimum {
    std::int64_t norm = 0;
    IntVector witness;  // lexicographically smallest sign-canonical minimal vector
};

LatticeMinimum lattice_minimum(IntegralLattice const& lattice);
LatticeMinimum lattice_minimum_gram(IntMatrix const& gram);

}  // namespace rankin

#endif  /* RANKIN_ENUMERATION_HPP_ */
