#include "rankin/asymptotic.hpp"
#include "rankin/cache.hpp"
#include "rankin/errors.hpp"
#include "rankin/invariants.hpp"
#include "rankin/io.hpp"
#include "rankin/paperbench.hpp"
#include "rankin/propagation.hpp"
#include "rankin/version.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace rankin;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kInfeasible = 3 };

struct Common {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    unsigned threads = 1;
    std::uint64_t max_candidates = 10'000'000;
    int precision = 6;
};

struct SpecArgs {
    std::string path;
    std::string family;
    std::optional<long> n, q, r, m;
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--precision", c.precision, "Significant digits of decimal renderings")
        ->check(CLI::Range(1, 200));
}

void add_search(CLI::App* cmd, Common& c)
{
    cmd->add_option("--cache", c.cache_dir, "Certificate cache directory");
    cmd->add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
    cmd->add_option("--threads", c.threads, "Search worker threads")->check(CLI::Range(1u, 256u));
    cmd->add_option("--max-candidates", c.max_candidates, "Cap on enumerated vectors and tuples")
        ->check(CLI::PositiveNumber);
}

void add_spec(CLI::App* cmd, SpecArgs& s)
{
    cmd->add_option("spec", s.path, "Code spec file (JSON)");
    cmd->add_option("--family", s.family, "parity_check, reed_muller, extended_hamming, full or zero");
    cmd->add_option("--n", s.n, "Length");
    cmd->add_option("--q", s.q, "Alphabet size");
    cmd->add_option("--r", s.r, "Reed-Muller order");
    cmd->add_option("--m", s.m, "Reed-Muller log-length");
}

SpecDocument resolve_spec(SpecArgs const& s)
{
    if (!s.path.empty() && !s.family.empty())
        throw ParseError("give either a spec file or --family, not both");
    if (!s.path.empty())
        return load_spec(s.path);
    if (s.family.empty())
        throw ParseError("need a spec file or --family");
    std::map<std::string, long> params;
    for (auto const& [key, value] : {std::pair{"n", s.n}, {"q", s.q}, {"r", s.r}, {"m", s.m}})
        if (value)
            params[key] = *value;
    SpecDocument doc;
    doc.code = make_family(s.family, params);
    return doc;
}

std::string csv_field(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string csv_line(std::vector<std::string> const& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

std::string row_text(IntVector const& row)
{
    std::string out = "[";
    for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? ", " : "") + std::to_string(row[i]);
    return out + "]";
}

std::string rows_inline(IntMatrix const& rows)
{
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        out += (i ? "; " : "") + row_text(rows[i]);
    return out;
}

std::string radical_text(ExactRadical const& v, int digits)
{
    return v.to_string() + " ~ " + display_decimal(v, digits) + "  (num " + v.radicand().get_num().get_str() +
           ", den " + v.radicand().get_den().get_str() + ", root " + std::to_string(v.root()) + ")";
}

/* d_l with the cache consulted first; cache traffic is reported on stderr
 * so that cold and warm runs print the same result. */
class Searcher {
public:
    explicit Searcher(Common const& c) : common_(c)
    {
        if (!c.no_cache)
            cache_.emplace(c.cache_dir.empty() ? CertificateCache::default_dir() : std::filesystem::path(c.cache_dir));
    }

    SearchCertificate run(IntegralLattice const& lattice, std::optional<LinearCode> const& code, std::size_t l)
    {
        auto shared = std::make_shared<IntegralLattice const>(lattice);
        if (cache_) {
            if (auto hit = cache_->load(shared, l)) {
                std::cerr << "cache: hit " << CertificateCache::key(lattice, l) << "\n";
                return *hit;
            }
        }
        SearchOptions opts;
        opts.threads = common_.threads;
        opts.max_candidates = common_.max_candidates;
        SearchCertificate cert = code ? d_l_search(*code, l, opts) : d_l_search(lattice, l, opts);
        if (cache_) {
            try {
                cache_->store(lattice, cert);
                std::cerr << "cache: stored " << CertificateCache::key(lattice, l) << "\n";
            } catch (std::exception const& e) {
                std::cerr << "warning: could not write cache entry: " << e.what() << "\n";
            }
        }
        return cert;
    }

private:
    Common const& common_;
    std::optional<CertificateCache> cache_;
};

int cmd_build(SpecArgs const& s, Common const& c)
{
    SpecDocument spec = resolve_spec(s);
    IntegralLattice lattice = spec.lattice();
    if (c.format == "json") {
        Json doc = {{"spec", spec_to_json(spec)}, {"lattice", lattice_to_json(lattice)}};
        if (spec.code)
            doc["cardinality"] = spec.code->cardinality().get_str();
        std::cout << dump_json(doc);
    } else if (c.format == "csv") {
        std::cout << csv_line({"row", "basis"});
        for (std::size_t i = 0; i < lattice.n(); ++i)
            std::cout << csv_line({std::to_string(i), row_text(lattice.basis()[i])});
    } else {
        std::cout << spec.describe() << "\n";
        if (spec.code)
            std::cout << "|C| = " << spec.code->cardinality() << "\n";
        std::cout << "n = " << lattice.n() << "\ndet = " << lattice.det_gram() << "\nbasis (HNF):\n"
                  << format_matrix(lattice.basis()) << "\ngram:\n"
                  << format_matrix(lattice.gram()) << "\n";
    }
    return kOk;
}

int cmd_dl(SpecArgs const& s, std::size_t l, Common const& c)
{
    SpecDocument spec = resolve_spec(s);
    IntegralLattice lattice = spec.lattice();
    SearchCertificate cert = Searcher(c).run(lattice, spec.code, l);
    if (c.format == "json") {
        std::cout << dump_json({{"spec", spec_to_json(spec)}, {"l", l}, {"certificate", certificate_to_json(cert)}});
    } else if (c.format == "csv") {
        std::cout << csv_line({"l", "value", "upper_bound", "candidates_examined", "confirmed_by_escalation", "witness"});
        std::cout << csv_line({std::to_string(l), cert.value.get_str(), cert.upper_bound.get_str(),
                               std::to_string(cert.candidates_examined),
                               cert.confirmed_by_escalation ? "true" : "false", rows_inline(cert.witness.rows)});
    } else {
        std::cout << spec.describe() << "\n"
                  << "d_" << l << " = " << cert.value << "\nwitness rows:\n"
                  << format_matrix(cert.witness.rows) << "\nwitness gram:\n"
                  << format_matrix(cert.witness.gram_l) << "\n"
                  << "search: U = " << cert.upper_bound << ", lambda_1^2 = " << cert.minimum_norm
                  << ", per-vector bound " << cert.per_vector_bound << ", candidates " << cert.candidates_examined
                  << "\n";
        if (cert.escalation_bound)
            std::cout << "escalation to radius " << cert.escalation_bound << ": "
                      << (cert.confirmed_by_escalation ? "confirmed" : "not confirmed") << "\n";
    }
    return kOk;
}

int cmd_gamma(SpecArgs const& s, std::size_t l, Common const& c)
{
    SpecDocument spec = resolve_spec(s);
    IntegralLattice lattice = spec.lattice();
    SearchCertificate cert = Searcher(c).run(lattice, spec.code, l);
    ExactRadical value = gamma_nl(lattice, cert);
    if (c.format == "json") {
        std::cout << dump_json({{"spec", spec_to_json(spec)},
                                {"n", lattice.n()},
                                {"l", l},
                                {"d_l", cert.value.get_str()},
                                {"det", lattice.det_gram().get_str()},
                                {"gamma", radical_to_json(value, c.precision)},
                                {"witness", matrix_to_json(cert.witness.rows)}});
    } else if (c.format == "csv") {
        std::cout << csv_line({"n", "l", "d_l", "det", "num", "den", "root", "decimal"});
        std::cout << csv_line({std::to_string(lattice.n()), std::to_string(l), cert.value.get_str(),
                               lattice.det_gram().get_str(), value.radicand().get_num().get_str(),
                               value.radicand().get_den().get_str(), std::to_string(value.root()),
                               display_decimal(value, c.precision)});
    } else {
        std::cout << spec.describe() << "\n"
                  << "d_" << l << " = " << cert.value << ", det = " << lattice.det_gram() << "\n"
                  << "gamma_{" << lattice.n() << "," << l << "} = " << radical_text(value, c.precision) << "\n";
    }
    return kOk;
}

int cmd_gamma_prime(SpecArgs const& s, std::size_t l, Common const& c)
{
    SpecDocument spec = resolve_spec(s);
    if (!spec.code)
        throw ParseError("gamma-prime needs a code spec (family or generators)");
    LinearCode const& code = *spec.code;
    LinearCode dual = dual_code(code);
    bool self_dual = dual.same_code(code);
    Searcher searcher(c);
    SearchCertificate primal = searcher.run(construction_a(code), code, l);
    SearchCertificate dual_cert = self_dual ? primal : searcher.run(construction_a(dual), dual, l);
    BigInt q_pow = pow_int(code.q(), static_cast<unsigned long>(l));
    ExactRadical value(BigRational(primal.value * dual_cert.value, q_pow * q_pow), 2);
    if (c.format == "json") {
        std::cout << dump_json({{"spec", spec_to_json(spec)},
                                {"n", code.n()},
                                {"l", l},
                                {"q", code.q()},
                                {"self_dual", self_dual},
                                {"d_l", primal.value.get_str()},
                                {"d_l_dual", dual_cert.value.get_str()},
                                {"gamma_prime", radical_to_json(value, c.precision)}});
    } else if (c.format == "csv") {
        std::cout << csv_line({"n", "l", "q", "self_dual", "d_l", "d_l_dual", "num", "den", "root", "decimal"});
        std::cout << csv_line({std::to_string(code.n()), std::to_string(l), std::to_string(code.q()),
                               self_dual ? "true" : "false", primal.value.get_str(), dual_cert.value.get_str(),
                               value.radicand().get_num().get_str(), value.radicand().get_den().get_str(),
                               std::to_string(value.root()), display_decimal(value, c.precision)});
    } else {
        std::cout << spec.describe() << (self_dual ? " (self-dual)" : "") << "\n"
                  << "d_" << l << "(Lambda_C) = " << primal.value << ", d_" << l
                  << "(Lambda_C^perp) = " << dual_cert.value << "\n"
                  << "gamma'_{" << code.n() << "," << l << "} = " << radical_text(value, c.precision) << "\n";
    }
    return kOk;
}

int cmd_bounds(long n_max, std::vector<int> const& rule_list, bool provenance, Common const& c)
{
    std::set<int> rules = rule_list.empty() ? kAllRules : std::set<int>(rule_list.begin(), rule_list.end());
    BoundTable table = propagate_bounds(n_max, default_seeds(n_max), rules);
    if (c.format == "json") {
        std::cout << dump_json(bound_table_to_json(table, c.precision));
    } else if (c.format == "csv") {
        std::cout << bound_table_to_csv(table, c.precision);
    } else {
        for (auto const& iv : table.intervals) {
            std::cout << cell_label(iv.kind, iv.n, iv.l) << ": [" << iv.lower.to_string() << ", "
                      << (iv.upper ? iv.upper->to_string() : std::string("inf")) << "]  ~ ["
                      << display_decimal(iv.lower, c.precision) << ", "
                      << (iv.upper ? display_decimal(*iv.upper, c.precision) : std::string("inf")) << "]\n";
            if (!provenance)
                continue;
            for (auto [name, step] : {std::pair{"lower", iv.lower_step}, {"upper", iv.upper_step}})
                for (auto const* s : table.provenance(step))
                    std::cout << "    " << name << " [" << s->rule << "] " << s->statement << "\n";
        }
        std::cout << "passes: " << table.passes << (table.pass_cap_hit ? " (cap hit)" : "") << "\n";
    }
    return table.pass_cap_hit ? kInfeasible : kOk;
}

int cmd_rm_table(long m_max, Common const& c)
{
    if (m_max < 1 || m_max > 7)
        throw InvalidArgument("--m-max must lie in [1, 7]");
    Json rows = Json::array();
    if (c.format == "csv")
        std::cout << csv_line({"m", "r", "k", "det_generator_gram", "det_lattice", "det_lattice_log2"});
    else if (c.format == "text")
        std::cout << "m  r  k  det(B B^T)  det(Lambda_R)\n";
    for (long m = 1; m <= m_max; ++m) {
        for (long r = 0; r < m; ++r) {
            IntMatrix gen = reed_muller_generators(r, m);
            BigInt det_b = determinant(gram_matrix(gen));
            BigInt det_r = construction_a(reed_muller_code(r, m)).det_gram();
            long k = static_cast<long>(gen.size());
            long log2 = 2 * ((1L << m) - k);
            if (c.format == "json")
                rows.push_back({{"m", m}, {"r", r}, {"k", k}, {"det_generator_gram", det_b.get_str()},
                                {"det_lattice", det_r.get_str()}, {"det_lattice_log2", log2}});
            else if (c.format == "csv")
                std::cout << csv_line({std::to_string(m), std::to_string(r), std::to_string(k), det_b.get_str(),
                                       det_r.get_str(), std::to_string(log2)});
            else
                std::cout << m << "  " << r << "  " << k << "  " << det_b << "  2^" << log2 << " = " << det_r << "\n";
        }
    }
    if (c.format == "json")
        std::cout << dump_json({{"rows", rows}});
    return kOk;
}

int cmd_asymptotic(long k, int digits, Common const& c)
{
    AsymptoticInterval iv = asymptotic_gamma_2k_k(k, digits);
    if (c.format == "json") {
        std::cout << dump_json(asymptotic_to_json(iv));
    } else if (c.format == "csv") {
        std::cout << csv_line({"k", "lower", "lower_formula", "upper", "upper_formula"});
        std::cout << csv_line({std::to_string(k), iv.lower.decimal, iv.lower.label, iv.upper.decimal, iv.upper.label});
    } else {
        std::cout << "gamma_{" << 2 * k << "," << k << "} in [" << iv.lower.decimal << ", " << iv.upper.decimal
                  << "]\n  lower: " << iv.lower.label << "\n  upper: " << iv.upper.label << "\n";
        for (auto const& note : iv.notes)
            std::cout << "  note: " << note << "\n";
    }
    return kOk;
}

int cmd_verify(std::string const& filter, bool timing, unsigned threads, Common const& c)
{
    BenchConfig config;
    config.threads = threads;
    auto results = run_checks(filter.empty() ? std::nullopt : std::optional<std::string>(filter), config);
    if (results.empty())
        throw InvalidArgument("no check matches '" + filter + "'");
    if (c.format == "json") {
        std::cout << dump_json(report_to_json(results, timing));
    } else if (c.format == "csv") {
        std::vector<std::string> head{"check_id", "status", "expected", "computed", "note"};
        if (timing)
            head.push_back("runtime_ms");
        std::cout << csv_line(head);
        for (auto const& r : results) {
            std::vector<std::string> row{r.check_id, status_name(r.status), r.expected, r.computed, r.note};
            if (timing)
                row.push_back(std::to_string(r.runtime_ms));
            std::cout << csv_line(row);
        }
    } else {
        std::cout << format_report(results, timing);
    }
    return all_passed(results) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rankin and Berge-Martinet invariants of lattices from codes"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common common;
    SpecArgs spec;
    std::size_t l = 1;
    long n_max = 8, m_max = 5, k = 2;
    int digits = 30;
    std::vector<int> rules;
    bool provenance = false, timing = false;
    std::string filter;

    auto* build = app.add_subcommand("build", "Build the lattice of a code spec");
    add_spec(build, spec);
    add_common(build, common);

    auto* dl = app.add_subcommand("dl", "Certified d_l (densest rank-l sublattice)");
    auto* gamma = app.add_subcommand("gamma", "Rankin invariant gamma_{n,l} of the lattice");
    auto* gamma_prime = app.add_subcommand("gamma-prime", "Berge-Martinet invariant gamma'_{n,l} of Lambda_C");
    for (auto* cmd : {dl, gamma, gamma_prime}) {
        add_spec(cmd, spec);
        add_common(cmd, common);
        add_search(cmd, common);
        cmd->add_option("--l", l, "Sublattice rank")->check(CLI::Range(std::size_t{1}, kMaxSearchRank));
    }

    auto* bounds = app.add_subcommand("bounds", "Propagate interval bounds on the constants");
    add_common(bounds, common);
    bounds->add_option("--n-max", n_max, "Largest dimension")->check(CLI::Range(2L, 64L));
    bounds->add_option("--rules", rules, "Inequality rules to apply (default: 2..8)")
        ->delimiter(',')
        ->check(CLI::Range(2, 8));
    bounds->add_flag("--provenance", provenance, "Print the derivation of every endpoint");

    auto* rm_table = app.add_subcommand("rm-table", "Determinants of Reed-Muller generator lattices");
    add_common(rm_table, common);
    rm_table->add_option("--m-max", m_max, "Largest m");

    auto* asymptotic = app.add_subcommand("asymptotic", "Bounds on gamma_{2k,k}");
    add_common(asymptotic, common);
    asymptotic->add_option("--k", k, "k >= 2")->required();
    asymptotic->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1, 70));

    auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
    add_common(verify, common);
    verify->add_option("filter", filter, "Check id prefix or glob");
    verify->add_flag("--timing", timing, "Include runtimes");
    verify->add_option("--threads", common.threads, "Search worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForVersion const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*build)
            return cmd_build(spec, common);
        if (*dl)
            return cmd_dl(spec, l, common);
        if (*gamma)
            return cmd_gamma(spec, l, common);
        if (*gamma_prime)
            return cmd_gamma_prime(spec, l, common);
        if (*bounds)
            return cmd_bounds(n_max, rules, provenance, common);
        if (*rm_table)
            return cmd_rm_table(m_max, common);
        if (*asymptotic)
            return cmd_asymptotic(k, digits, common);
        if (*verify)
            return cmd_verify(filter, timing, common.threads, common);
    } catch (RankDeficient const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (ParseError const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (InvalidArgument const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (CapExceeded const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (InconsistentBounds const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    }
    return kOk;
}
