#ifndef RANKIN_PROPAGATION_HPP_
#define RANKIN_PROPAGATION_HPP_

#include "rankin/invariants.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rankin {

/* One derivation step; premises index into BoundTable::steps. */
struct BoundStep {
    std::string rule;          // "known value", "lattice", "rule 4", ...
    std::string statement;     // e.g. "gamma(7,2) <= gamma(5,2)^(5/3)"
    std::vector<std::size_t> premises;
};

struct BoundInterval {
    InvariantKind kind;
    long n;
    long l;
    ExactRadical lower;
    std::optional<ExactRadical> upper;     // nullopt: no finite upper bound derived
    std::optional<std::size_t> lower_step;
    std::optional<std::size_t> upper_step;
};

struct BoundTable {
    long n_max = 0;
    std::set<int> rules;
    std::vector<BoundInterval> intervals;  // ordered by (kind, n, l), 1 <= l < n
    std::vector<BoundStep> steps;
    std::size_t passes = 0;
    bool pass_cap_hit = false;

    BoundInterval const* find(InvariantKind kind, long n, long l) const;
    /* Steps behind an endpoint, premises first. */
    std::vector<BoundStep const*> provenance(std::optional<std::size_t> step) const;
};

/* Seed: lower (and optionally upper) bound with a label for provenance. */
struct BoundSeed {
    InvariantKind kind;
    long n;
    long l;
    ExactRadical lower;
    std::optional<ExactRadical> upper;
    std::string source;
};

inline std::set<int> const kAllRules{2, 3, 4, 5, 6, 7, 8};
inline constexpr std::size_t kDefaultPassCap = 10'000;

/* Lower bounds from lattices built here: Z^n, D_n (n = 3..min(8, n_max),
 * l = 1, 2) and Lambda_{R(1,3)}. */
std::vector<BoundSeed> lattice_seed_bounds(long n_max);
std::vector<BoundSeed> known_fact_seeds(long n_max);

/* Fixed point of the inequality rules over the grid n <= n_max. Throws
 * InconsistentBounds when a lower bound exceeds an upper bound. */
BoundTable propagate_bounds(long n_max, std::vector<BoundSeed> const& seeds,
                            std::set<int> const& rules = kAllRules,
                            std::size_t pass_cap = kDefaultPassCap);

/* known_fact_seeds + lattice_seed_bounds. */
std::vector<BoundSeed> default_seeds(long n_max);

}  // namespace rankin

#endif  /* RANKIN_PROPAGATION_HPP_ */
