#include "rankin/invariants.hpp"

#include "rankin/errors.hpp"

namespace rankin {

std::string kind_name(InvariantKind kind)
{
    return kind == InvariantKind::rankin ? "rankin" : "berge_martinet";
}

InvariantKind parse_kind(std::string const& name)
{
    if (name == "rankin" || name == "gamma")
        return InvariantKind::rankin;
    if (name == "berge_martinet" || name == "gamma_prime" || name == "gamma'")
        return InvariantKind::berge_martinet;
    throw InvalidArgument("unknown invariant kind '" + name + "'");
}

std::string cell_label(InvariantKind kind, long n, long l)
{
    return std::string(kind == InvariantKind::rankin ? "gamma" : "gamma'") + "(" + std::to_string(n) +
           "," + std::to_string(l) + ")";
}

namespace {

ExactRadical rad(long num, long den, std::uint64_t root)
{
    return ExactRadical::make(num, den, root);
}

std::vector<KnownFact> build_table()
{
    constexpr auto R = InvariantKind::rankin;
    constexpr auto B = InvariantKind::berge_martinet;
    return {
        {R, 2, 1, rad(4, 3, 2), "A2", false},
        {B, 2, 1, rad(4, 3, 2), "", false},
        {R, 3, 1, rad(2, 1, 3), "D3", true},
        {B, 3, 1, rad(3, 2, 2), "D3", true},
        {R, 4, 1, rad(2, 1, 2), "D4", true},
        {B, 4, 1, rad(2, 1, 2), "D4", true},
        {R, 4, 2, rad(3, 2, 1), "D4", true},
        {B, 4, 2, rad(3, 2, 1), "D4", true},
        {R, 5, 1, rad(8, 1, 5), "D5", true},
        {B, 5, 1, rad(2, 1, 2), "D5", true},
        {R, 6, 1, rad(64, 3, 6), "E6", false},
        {B, 6, 1, rad(8, 3, 2), "", false},
        {R, 6, 2, rad(9, 1, 3), "E6", false},
        {B, 6, 2, rad(2, 1, 1), "E6", false},
        {R, 7, 1, rad(64, 1, 7), "E7", false},
        {B, 7, 1, rad(3, 1, 2), "", false},
        {R, 8, 1, rad(2, 1, 1), "E8", true},
        {B, 8, 1, rad(2, 1, 1), "E8", true},
        {R, 8, 2, rad(3, 1, 1), "E8", true},
        {B, 8, 2, rad(3, 1, 1), "E8", true},
        {R, 8, 3, rad(4, 1, 1), "E8", false},
        {B, 8, 3, rad(4, 1, 1), "E8", false},
        {R, 8, 4, rad(4, 1, 1), "E8", false},
        {B, 8, 4, rad(4, 1, 1), "E8", false},
    };
}

}  // namespace

std::vector<KnownFact> const& known_facts()
{
    static std::vector<KnownFact> const table = build_table();
    return table;
}

std::optional<KnownFact> find_known_fact(InvariantKind kind, long n, long l)
{
    if (l > n - l)
        l = n - l;
    for (auto const& f : known_facts())
        if (f.kind == kind && f.n == n && f.l == l)
            return f;
    return std::nullopt;
}

ExactRadical gamma_nl(IntegralLattice const& lattice, SearchCertificate const& cert)
{
    if (cert.witness.ambient && !(*cert.witness.ambient == lattice))
        throw MismatchedCertificate("certificate was computed for a different lattice");
    if (cert.witness.rank() != cert.l)
        throw MismatchedCertificate("certificate witness rank " + std::to_string(cert.witness.rank()) +
                                    " does not match l = " + std::to_string(cert.l));
    if (cert.witness.det_l != cert.value)
        throw MismatchedCertificate("certificate witness determinant differs from its value");
    auto l = static_cast<long>(cert.l);
    auto n = static_cast<long>(lattice.n());
    return ExactRadical(BigRational(cert.value)) / radical_pow(ExactRadical(BigRational(lattice.det_gram())), l, n);
}

GammaPrimeResult gamma_prime_nl(LinearCode const& code, std::size_t l, SearchOptions const& options,
                                bool generic)
{
    GammaPrimeResult out;
    BigInt q_pow = pow_int(code.q(), static_cast<unsigned long>(l));
    out.primal = d_l_search(code, l, options);
    LinearCode dual = dual_code(code);
    out.self_dual = dual.same_code(code);
    if (out.self_dual && !generic) {
        out.used_shortcut = true;
        out.dual = out.primal;
        out.value = ExactRadical(BigRational(out.primal.value, q_pow));
        return out;
    }
    out.dual = d_l_search(dual, l, options);
    BigRational inside(out.primal.value * out.dual.value, q_pow * q_pow);
    out.value = ExactRadical(inside, 2);
    return out;
}

}  // namespace rankin
