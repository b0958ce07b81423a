#ifndef RANKIN_PAPERBENCH_HPP_
#define RANKIN_PAPERBENCH_HPP_

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rankin {

enum class CheckStatus { pass, fail, skipped };

std::string status_name(CheckStatus status);

struct CheckResult {
    std::string check_id;      // e.g. "g.table2.m5.r2"
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string computed;
    std::string note;
    std::int64_t runtime_ms = 0;
};

/* Finite windows standing in for "for all n" statements. */
struct BenchConfig {
    long n_lo = 3;
    long n_hi = 7;
    std::vector<long> primal_q{2, 3, 4, 5};
    std::vector<long> dual_q{2, 3};
    std::size_t random_codes = 200;
    std::uint64_t seed = 20240611;
    unsigned threads = 1;
};

/* Ids of every check, in execution order. */
std::vector<std::string> check_ids(BenchConfig const& config = {});

/* A filter with *, ? or [ is a glob; otherwise it is an id prefix. */
bool check_matches(std::string const& filter, std::string const& id);

/* Runs the selected checks in declared order. A check that throws is
 * recorded as a failure with the exception text; the suite never aborts. */
std::vector<CheckResult> run_checks(std::optional<std::string> const& filter = std::nullopt,
                                    BenchConfig const& config = {});

bool all_passed(std::vector<CheckResult> const& results);

/* Statements printed with every report. */
std::vector<std::string> const& report_notes();

/* One record per line; timing is left out unless asked for, so two runs
 * compare byte for byte. */
std::string format_report(std::vector<CheckResult> const& results, bool with_timing = false);
nlohmann::json report_to_json(std::vector<CheckResult> const& results, bool with_timing = false);

}  // namespace rankin

#endif  /* RANKIN_PAPERBENCH_HPP_ */
