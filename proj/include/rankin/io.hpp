#ifndef RANKIN_IO_HPP_
#define RANKIN_IO_HPP_

#include "rankin/asymptotic.hpp"
#include "rankin/codes.hpp"
#include "rankin/denssub.hpp"
#include "rankin/lattice.hpp"
#include "rankin/propagation.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>

namespace rankin {

using Json = nlohmann::json;

/* A code spec document. Three accepted forms:
 *   {"family": "parity_check", "n": 4, "q": 2}
 *   {"family": "reed_muller", "r": 1, "m": 3}          (n = 2^m, q = 2)
 *   {"family": "extended_hamming"}                      (n = 8, q = 2)
 *   {"generators": [[...], ...], "n": 4, "q": 3}
 *   {"rows": [[...], ...], "n": 3}                      (a lattice given directly)
 * Exactly one of `code` and `rows` is set. */
struct SpecDocument {
    std::optional<LinearCode> code;
    std::optional<IntMatrix> rows;

    IntegralLattice lattice() const;
    std::string describe() const;
};

/* Families: parity_check, reed_muller, extended_hamming, full, zero.
 * `params` holds n and q, and r and m for reed_muller. */
LinearCode make_family(std::string const& name, std::map<std::string, long> const& params);

SpecDocument parse_spec(std::string const& text);
SpecDocument load_spec(std::string const& path);
Json spec_to_json(SpecDocument const& spec);
/* Canonical form: sorted keys, generators reduced mod q, two-space indent. */
std::string dump_spec(SpecDocument const& spec);

/* Two-space indented dump with a trailing newline. */
std::string dump_json(Json const& doc);

/* Decimal shown to the user: plain integer for integral values, otherwise
 * `digits` significant digits. */
std::string display_decimal(ExactRadical const& value, int digits);

/* {"num", "den", "root", "exact", "decimal"}; num and den are strings. */
Json radical_to_json(ExactRadical const& value, int digits);
ExactRadical radical_from_json(Json const& doc);

Json matrix_to_json(IntMatrix const& m);
IntMatrix matrix_from_json(Json const& doc, char const* what);

/* {"basis", "det_gram", "gram", "n"}. */
Json lattice_to_json(IntegralLattice const& lattice);

Json certificate_to_json(SearchCertificate const& cert);
/* Rebuilds the witness against `ambient`; throws MismatchedCertificate when
 * the witness is not a sublattice with determinant equal to the value. */
SearchCertificate certificate_from_json(Json const& doc, std::shared_ptr<IntegralLattice const> ambient);

Json bound_table_to_json(BoundTable const& table, int digits);
/* One row per cell: kind,n,l,lower_*,upper_*,lower_rule,upper_rule. */
std::string bound_table_to_csv(BoundTable const& table, int digits);

Json asymptotic_to_json(AsymptoticInterval const& iv);

}  // namespace rankin

#endif  /* RANKIN_IO_HPP_ */
