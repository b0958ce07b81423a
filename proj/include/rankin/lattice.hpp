#ifndef RANKIN_LATTICE_HPP_
#define RANKIN_LATTICE_HPP_

#include "rankin/codes.hpp"
#include "rankin/exact.hpp"
#include "rankin/matrix.hpp"

#include <memory>

namespace rankin {

/* Full-rank integral lattice in Z^n, stored by its row-style HNF basis. */
class IntegralLattice {
public:
    /* HNF of the row span; throws RankDeficient unless the rank equals the
     * number of columns. */
    static IntegralLattice from_rows(IntMatrix const& rows);
    static IntegralLattice from_rows(BigMatrix const& rows, std::size_t columns);

    std::size_t n() const { return basis_.size(); }
    IntMatrix const& basis() const { return basis_; }
    IntMatrix const& gram() const { return gram_; }
    BigInt const& det_gram() const { return det_gram_; }

    /* Coordinates of v against the basis, nullopt for non-members. */
    std::optional<IntVector> coordinates(IntVector const& v) const;
    bool contains(IntVector const& v) const { return coordinates(v).has_value(); }

    friend bool operator==(IntegralLattice const& a, IntegralLattice const& b) {
        return a.basis_ == b.basis_;
    }

private:
    IntegralLattice() = default;

    IntMatrix basis_;
    IntMatrix gram_;
    BigInt det_gram_;
};

/* rho^{-1}(C): all integer vectors reducing to a codeword mod q. */
IntegralLattice construction_a(LinearCode const& code);

/* Lambda_{C^perp} = q * (Lambda_C)^*, kept integral. */
IntegralLattice dual_as_code_lattice(LinearCode const& code);

/* HNF of q * B^{-T} for a lattice with basis B; integral when q * B^{-T} is. */
IntegralLattice dual_lattice_scaled(IntegralLattice const& lattice, long q);

/* s * Lambda. */
IntegralLattice scaled(IntegralLattice const& lattice, long s);

bool is_even(IntegralLattice const& lattice);
bool is_even_gram(IntMatrix const& gram);

/* Rank-l sublattice given by actual lattice vectors in ambient coordinates. */
struct Sublattice {
    std::shared_ptr<IntegralLattice const> ambient;
    IntMatrix rows;
    IntMatrix gram_l;
    BigInt det_l;

    std::size_t rank() const { return rows.size(); }
};

/* Throws NotAMember for a row outside the lattice and RankDeficient when the
 * rows are dependent. */
Sublattice sublattice_from_rows(IntegralLattice const& lattice, IntMatrix rows);
Sublattice sublattice_from_rows(std::shared_ptr<IntegralLattice const> lattice, IntMatrix rows);

/* det_l / det_gram^(l/n). */
ExactRadical gamma_ratio(IntegralLattice const& lattice, Sublattice const& sub);

}  // namespace rankin

#endif  /* RANKIN_LATTICE_HPP_ */
