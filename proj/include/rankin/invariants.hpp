#ifndef RANKIN_INVARIANTS_HPP_
#define RANKIN_INVARIANTS_HPP_

#include "rankin/denssub.hpp"
#include "rankin/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankin {

enum class InvariantKind { rankin, berge_martinet };

std::string kind_name(InvariantKind kind);            // "rankin" / "berge_martinet"
InvariantKind parse_kind(std::string const& name);
/* "gamma(5,2)" or "gamma'(5,2)" */
std::string cell_label(InvariantKind kind, long n, long l);

/* An exactly known value of gamma_{n,l} or gamma'_{n,l}. */
struct KnownFact {
    InvariantKind kind;
    long n;
    long l;
    ExactRadical value;
    std::string lattice;       // lattice attaining it, empty when not recorded
    bool code_construction;    // reproduced here from a code lattice
};

std::vector<KnownFact> const& known_facts();
std::optional<KnownFact> find_known_fact(InvariantKind kind, long n, long l);

/* gamma_{n,l}(L) = d_l / det^(l/n) from a certificate for L. */
ExactRadical gamma_nl(IntegralLattice const& lattice, SearchCertificate const& cert);

struct GammaPrimeResult {
    ExactRadical value;
    SearchCertificate primal;          // d_l(Lambda_C)
    SearchCertificate dual;            // d_l(Lambda_{C^perp}); copy of primal when self-dual
    bool self_dual = false;
    bool used_shortcut = false;
};

/* gamma'_{n,l}(Lambda_C) = sqrt(d_l(Lambda_C) d_l(Lambda_{C^perp})) / q^l.
 * For self-dual C the shortcut d_l(Lambda_C) / q^l is used unless
 * `generic` is set. */
GammaPrimeResult gamma_prime_nl(LinearCode const& code, std::size_t l, SearchOptions const& options = {},
                                bool generic = false);

}  // namespace rankin

#endif  /* RANKIN_INVARIANTS_HPP_ */
