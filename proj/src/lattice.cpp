#include "rankin/lattice.hpp"

#include "rankin/errors.hpp"

namespace rankin {

IntegralLattice IntegralLattice::from_rows(BigMatrix const& rows, std::size_t columns)
{
    if (columns == 0)
        throw InvalidArgument("lattice dimension must be positive");
    HermiteForm h = hermite_normal_form(rows, columns);
    if (!h.full_rank())
        throw RankDeficient(h.rank(), columns);
    IntegralLattice out;
    out.basis_ = to_int(h.rows);
    out.gram_ = gram_matrix(out.basis_);
    BigInt d = 1;
    for (std::size_t i = 0; i < columns; ++i)
        d *= out.basis_[i][i];
    out.det_gram_ = d * d;
    return out;
}

IntegralLattice IntegralLattice::from_rows(IntMatrix const& rows)
{
    if (rows.empty())
        throw InvalidArgument("lattice needs at least one row");
    return from_rows(to_big(rows), rows.front().size());
}

std::optional<IntVector> IntegralLattice::coordinates(IntVector const& v) const
{
    if (v.size() != n())
        throw InvalidArgument("vector of length " + std::to_string(v.size()) +
                              " tested against lattice of dimension " + std::to_string(n()));
    BigVector bv;
    bv.reserve(v.size());
    for (auto x : v)
        bv.emplace_back(static_cast<long>(x));
    auto c = solve_upper_triangular(to_big(basis_), bv);
    if (!c)
        return std::nullopt;
    IntVector out;
    out.reserve(c->size());
    for (auto const& x : *c)
        out.push_back(to_int64(x));
    return out;
}

IntegralLattice construction_a(LinearCode const& code)
{
    return IntegralLattice::from_rows(code.lattice_basis());
}

IntegralLattice dual_as_code_lattice(LinearCode const& code)
{
    return construction_a(dual_code(code));
}

IntegralLattice dual_lattice_scaled(IntegralLattice const& lattice, long q)
{
    std::size_t n = lattice.n();
    auto inv = inverse(to_big(lattice.basis()));
    BigMatrix rows(n, BigVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            BigRational v = inv[j][i] * q;
            v.canonicalize();
            if (v.get_den() != 1)
                throw InvalidArgument("scaled dual lattice is not integral for q = " + std::to_string(q));
            rows[i][j] = v.get_num();
        }
    }
    return IntegralLattice::from_rows(rows, n);
}

IntegralLattice scaled(IntegralLattice const& lattice, long s)
{
    if (s == 0)
        throw InvalidArgument("scale factor must be nonzero");
    BigMatrix rows = to_big(lattice.basis());
    for (auto& row : rows)
        for (auto& x : row)
            x *= s;
    return IntegralLattice::from_rows(rows, lattice.n());
}

bool is_even_gram(IntMatrix const& gram)
{
    for (std::size_t i = 0; i < gram.size(); ++i)
        if (gram[i][i] % 2 != 0)
            return false;
    return true;
}

bool is_even(IntegralLattice const& lattice)
{
    return is_even_gram(lattice.gram());
}

Sublattice sublattice_from_rows(std::shared_ptr<IntegralLattice const> lattice, IntMatrix rows)
{
    if (rows.empty())
        throw InvalidArgument("sublattice needs at least one row");
    for (auto const& r : rows)
        if (!lattice->contains(r))
            throw NotAMember("row " + format_matrix({r}) + " is not a lattice vector");
    Sublattice s;
    s.gram_l = gram_matrix(rows);
    s.det_l = determinant(s.gram_l);
    if (sgn(s.det_l) == 0)
        throw RankDeficient(rank(rows), rows.size());
    s.rows = std::move(rows);
    s.ambient = std::move(lattice);
    return s;
}

Sublattice sublattice_from_rows(IntegralLattice const& lattice, IntMatrix rows)
{
    return sublattice_from_rows(std::make_shared<IntegralLattice const>(lattice), std::move(rows));
}

ExactRadical gamma_ratio(IntegralLattice const& lattice, Sublattice const& sub)
{
    if (sub.ambient && !(*sub.ambient == lattice))
        throw MismatchedCertificate("sublattice belongs to a different lattice");
    ExactRadical det(BigRational(lattice.det_gram()));
    auto l = static_cast<long>(sub.rank());
    auto n = static_cast<long>(lattice.n());
    return ExactRadical(BigRational(sub.det_l)) / radical_pow(det, l, n);
}

}  // namespace rankin
