#include "rankin/io.hpp"

#include "rankin/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace rankin {

namespace {

long get_long(Json const& doc, char const* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing field '") + key + "'");
    if (!it->is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer");
    return it->get<long>();
}

std::optional<long> find_long(Json const& doc, char const* key)
{
    if (!doc.contains(key))
        return std::nullopt;
    return get_long(doc, key);
}

BigInt big_from_json(Json const& doc, char const* what)
{
    if (doc.is_number_integer())
        return BigInt(doc.get<long>());
    if (!doc.is_string())
        throw ParseError(std::string(what) + " must be an integer or a decimal string");
    BigInt v;
    if (v.set_str(doc.get<std::string>(), 10) != 0)
        throw ParseError(std::string(what) + " is not a decimal integer");
    return v;
}

void reject_unknown(Json const& doc, std::set<std::string> const& allowed)
{
    for (auto const& [key, value] : doc.items())
        if (!allowed.count(key))
            throw ParseError("unexpected field '" + key + "'");
}

void require(bool ok, std::string const& message)
{
    if (!ok)
        throw ParseError(message);
}

Json steps_to_json(BoundTable const& table, std::optional<std::size_t> step)
{
    Json out = Json::array();
    for (auto const* s : table.provenance(step))
        out.push_back({{"rule", s->rule}, {"statement", s->statement}});
    return out;
}

std::string csv_radical(std::optional<ExactRadical> const& v, int digits)
{
    if (!v)
        return ",,,";
    return v->radicand().get_num().get_str() + "," + v->radicand().get_den().get_str() + "," +
           std::to_string(v->root()) + "," + display_decimal(*v, digits);
}

std::string step_rule(BoundTable const& table, std::optional<std::size_t> step)
{
    return step ? table.steps[*step].rule : std::string();
}

}  // namespace

LinearCode make_family(std::string const& name, std::map<std::string, long> const& params)
{
    auto param = [&](char const* key) -> std::optional<long> {
        auto it = params.find(key);
        return it == params.end() ? std::nullopt : std::optional<long>(it->second);
    };
    auto needed = [&](char const* key) {
        auto v = param(key);
        if (!v)
            throw ParseError("family '" + name + "' needs '" + key + "'");
        return *v;
    };
    if (name == "reed_muller") {
        long r = needed("r"), m = needed("m");
        require(m >= 1 && m <= 20 && r >= 0 && r <= m, "reed_muller needs 0 <= r <= m and 1 <= m <= 20");
        if (auto n = param("n"))
            require(*n == (1L << m), "reed_muller with m = " + std::to_string(m) + " has n = " +
                                         std::to_string(1L << m));
        if (auto q = param("q"))
            require(*q == 2, "reed_muller codes are binary");
        return reed_muller_code(r, m);
    }
    if (name == "extended_hamming") {
        if (auto n = param("n"))
            require(*n == 8, "extended_hamming has n = 8");
        if (auto q = param("q"))
            require(*q == 2, "extended_hamming is binary");
        return extended_hamming_code();
    }
    long n = needed("n"), q = needed("q");
    require(q >= 2, "q must be at least 2");
    require(n >= 1, "n must be positive");
    if (name == "parity_check") {
        require(n >= 2, "parity_check needs n >= 2");
        return parity_check_code(n, q);
    }
    if (name == "full")
        return full_code(n, q);
    if (name == "zero")
        return zero_code(n, q);
    throw ParseError("unknown family '" + name + "'");
}

IntegralLattice SpecDocument::lattice() const
{
    if (code)
        return construction_a(*code);
    return IntegralLattice::from_rows(*rows);
}

std::string SpecDocument::describe() const
{
    if (!code)
        return "lattice given by " + std::to_string(rows->size()) + " rows in Z^" +
               std::to_string(rows->empty() ? 0 : rows->front().size());
    std::string base = "code over Z_" + std::to_string(code->q()) + " of length " + std::to_string(code->n());
    if (code->family()) {
        base = code->family()->name + " " + base;
        for (auto const& [k, v] : code->family()->params)
            base += ", " + k + " = " + std::to_string(v);
    }
    return base;
}

SpecDocument parse_spec(std::string const& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (Json::parse_error const& e) {
        throw ParseError(std::string("spec is not valid JSON: ") + e.what());
    }
    require(doc.is_object(), "spec must be a JSON object");

    SpecDocument out;
    if (doc.contains("family")) {
        reject_unknown(doc, {"family", "n", "q", "r", "m"});
        require(doc["family"].is_string(), "field 'family' must be a string");
        std::map<std::string, long> params;
        for (char const* key : {"n", "q", "r", "m"})
            if (auto v = find_long(doc, key))
                params[key] = *v;
        out.code = make_family(doc["family"].get<std::string>(), params);
        return out;
    }
    if (doc.contains("generators")) {
        reject_unknown(doc, {"generators", "n", "q"});
        long n = get_long(doc, "n"), q = get_long(doc, "q");
        require(n >= 1 && q >= 2, "need n >= 1 and q >= 2");
        IntMatrix g = matrix_from_json(doc["generators"], "generators");
        for (auto const& row : g)
            require(static_cast<long>(row.size()) == n, "generator rows must have length n");
        try {
            out.code = LinearCode(q, n, std::move(g));
        } catch (InvalidArgument const& e) {
            throw ParseError(e.what());
        }
        return out;
    }
    if (doc.contains("rows")) {
        reject_unknown(doc, {"rows", "n"});
        long n = get_long(doc, "n");
        require(n >= 1, "n must be positive");
        IntMatrix rows = matrix_from_json(doc["rows"], "rows");
        require(!rows.empty(), "rows must not be empty");
        for (auto const& row : rows)
            require(static_cast<long>(row.size()) == n, "rows must have length n");
        out.rows = std::move(rows);
        return out;
    }
    throw ParseError("spec needs one of 'family', 'generators' or 'rows'");
}

SpecDocument load_spec(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read spec file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

Json spec_to_json(SpecDocument const& spec)
{
    if (!spec.code)
        return {{"n", spec.rows->front().size()}, {"rows", matrix_to_json(*spec.rows)}};
    LinearCode const& code = *spec.code;
    Json doc = {{"n", code.n()}, {"q", code.q()}};
    if (code.family()) {
        doc["family"] = code.family()->name;
        for (auto const& [k, v] : code.family()->params)
            doc[k] = v;
    } else {
        doc["generators"] = matrix_to_json(code.generators());
    }
    return doc;
}

std::string dump_spec(SpecDocument const& spec)
{
    return dump_json(spec_to_json(spec));
}

std::string dump_json(Json const& doc)
{
    return doc.dump(2) + "\n";
}

std::string display_decimal(ExactRadical const& value, int digits)
{
    if (value.is_rational() && value.radicand().get_den() == 1)
        return value.radicand().get_num().get_str();
    return radical_to_decimal(value, digits);
}

Json radical_to_json(ExactRadical const& value, int digits)
{
    return {{"num", value.radicand().get_num().get_str()},
            {"den", value.radicand().get_den().get_str()},
            {"root", value.root()},
            {"exact", value.to_string()},
            {"decimal", display_decimal(value, digits)}};
}

ExactRadical radical_from_json(Json const& doc)
{
    require(doc.is_object(), "radical must be an object");
    BigInt num = big_from_json(doc.at("num"), "num");
    BigInt den = big_from_json(doc.at("den"), "den");
    auto root = get_long(doc, "root");
    require(root >= 1 && sgn(den) > 0 && sgn(num) >= 0, "radical needs num >= 0, den > 0, root >= 1");
    return ExactRadical::make(num, den, static_cast<std::uint64_t>(root));
}

Json matrix_to_json(IntMatrix const& m)
{
    Json out = Json::array();
    for (auto const& row : m)
        out.push_back(row);
    return out;
}

IntMatrix matrix_from_json(Json const& doc, char const* what)
{
    require(doc.is_array(), std::string(what) + " must be a list of rows");
    IntMatrix out;
    for (auto const& row : doc) {
        require(row.is_array(), std::string(what) + " rows must be lists of integers");
        IntVector v;
        for (auto const& x : row) {
            require(x.is_number_integer(), std::string(what) + " entries must be integers");
            v.push_back(x.get<std::int64_t>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

Json lattice_to_json(IntegralLattice const& lattice)
{
    return {{"n", lattice.n()},
            {"basis", matrix_to_json(lattice.basis())},
            {"gram", matrix_to_json(lattice.gram())},
            {"det_gram", lattice.det_gram().get_str()}};
}

Json certificate_to_json(SearchCertificate const& cert)
{
    return {{"l", cert.l},
            {"value", cert.value.get_str()},
            {"witness", {{"rows", matrix_to_json(cert.witness.rows)}, {"gram", matrix_to_json(cert.witness.gram_l)}}},
            {"upper_bound", cert.upper_bound.get_str()},
            {"minimum_norm", cert.minimum_norm},
            {"per_vector_bound", cert.per_vector_bound},
            {"escalation_bound", cert.escalation_bound},
            {"candidates_examined", cert.candidates_examined},
            {"confirmed_by_escalation", cert.confirmed_by_escalation}};
}

SearchCertificate certificate_from_json(Json const& doc, std::shared_ptr<IntegralLattice const> ambient)
{
    SearchCertificate cert;
    try {
        cert.l = doc.at("l").get<std::size_t>();
        cert.value = big_from_json(doc.at("value"), "value");
        cert.upper_bound = big_from_json(doc.at("upper_bound"), "upper_bound");
        cert.minimum_norm = doc.at("minimum_norm").get<std::int64_t>();
        cert.per_vector_bound = doc.at("per_vector_bound").get<std::int64_t>();
        cert.escalation_bound = doc.at("escalation_bound").get<std::int64_t>();
        cert.candidates_examined = doc.at("candidates_examined").get<std::uint64_t>();
        cert.confirmed_by_escalation = doc.at("confirmed_by_escalation").get<bool>();
        IntMatrix rows = matrix_from_json(doc.at("witness").at("rows"), "witness rows");
        cert.witness = sublattice_from_rows(std::move(ambient), std::move(rows));
    } catch (Json::exception const& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    } catch (NotAMember const& e) {
        throw MismatchedCertificate(std::string("certificate witness is not in the lattice: ") + e.what());
    } catch (RankDeficient const& e) {
        throw MismatchedCertificate(std::string("certificate witness is degenerate: ") + e.what());
    }
    if (cert.witness.rank() != cert.l || cert.witness.det_l != cert.value)
        throw MismatchedCertificate("certificate witness does not attain its value");
    return cert;
}

Json bound_table_to_json(BoundTable const& table, int digits)
{
    Json cells = Json::array();
    for (auto const& iv : table.intervals) {
        Json cell = {{"kind", kind_name(iv.kind)},
                     {"label", cell_label(iv.kind, iv.n, iv.l)},
                     {"n", iv.n},
                     {"l", iv.l},
                     {"lower", radical_to_json(iv.lower, digits)},
                     {"upper", iv.upper ? radical_to_json(*iv.upper, digits) : Json()},
                     {"lower_provenance", steps_to_json(table, iv.lower_step)},
                     {"upper_provenance", steps_to_json(table, iv.upper_step)}};
        cells.push_back(std::move(cell));
    }
    return {{"n_max", table.n_max},
            {"rules", std::vector<int>(table.rules.begin(), table.rules.end())},
            {"passes", table.passes},
            {"pass_cap_hit", table.pass_cap_hit},
            {"cells", std::move(cells)}};
}

std::string bound_table_to_csv(BoundTable const& table, int digits)
{
    std::string out = "kind,n,l,lower_num,lower_den,lower_root,lower_decimal,"
                      "upper_num,upper_den,upper_root,upper_decimal,lower_rule,upper_rule\n";
    for (auto const& iv : table.intervals) {
        out += kind_name(iv.kind) + "," + std::to_string(iv.n) + "," + std::to_string(iv.l) + ",";
        out += csv_radical(iv.lower, digits) + "," + csv_radical(iv.upper, digits) + ",";
        out += step_rule(table, iv.lower_step) + "," + step_rule(table, iv.upper_step) + "\n";
    }
    return out;
}

Json asymptotic_to_json(AsymptoticInterval const& iv)
{
    auto bound = [](RoundedBound const& b) {
        return Json{{"label", b.label},
                    {"decimal", b.decimal},
                    {"num", b.value.get_num().get_str()},
                    {"den", b.value.get_den().get_str()}};
    };
    return {{"k", iv.k},
            {"digits", iv.digits},
            {"classic_lower", bound(iv.classic_lower)},
            {"classic_upper", bound(iv.classic_upper)},
            {"improved_lower", iv.improved_lower ? bound(*iv.improved_lower) : Json()},
            {"improved_upper", iv.improved_upper ? bound(*iv.improved_upper) : Json()},
            {"lower", bound(iv.lower)},
            {"upper", bound(iv.upper)},
            {"notes", iv.notes}};
}

}  // namespace rankin
