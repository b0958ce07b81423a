#ifndef RANKIN_ASYMPTOTIC_HPP_
#define RANKIN_ASYMPTOTIC_HPP_

#include "rankin/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rankin {

/* Outward-rounded decimal enclosure of one formula. */
struct RoundedBound {
    std::string label;
    BigRational value;
    std::string decimal;
};

/* Bounds on gamma_{2k,k}:
 *   classic:  (k/12)^(k/2) <= gamma_{2k,k} <= (1 + k/2)^(k ln 2 + 1/2),  k >= 2
 *   improved: 4/(pi^2 sqrt k) (2k/(pi e^(3/2)))^(k/2) <= gamma_{2k,k}
 *             <= e^9 0.0833^(k/2) ((4k-1)/17)^(k/(4k-2)) (k-1/2)^(k ln 2),  k >= 5
 * Lower values are rounded down and upper values up to `digits` significant
 * digits; `lower`/`upper` hold the tighter of the available formulas. */
struct AsymptoticInterval {
    long k = 0;
    int digits = 0;
    RoundedBound classic_lower;
    RoundedBound classic_upper;
    std::optional<RoundedBound> improved_lower;
    std::optional<RoundedBound> improved_upper;
    RoundedBound lower;
    RoundedBound upper;
    std::vector<std::string> notes;
};

AsymptoticInterval asymptotic_gamma_2k_k(long k, int digits = 30);

bool contains(AsymptoticInterval const& iv, ExactRadical const& value);

}  // namespace rankin

#endif  /* RANKIN_ASYMPTOTIC_HPP_ */
