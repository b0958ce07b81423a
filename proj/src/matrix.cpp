#include "rankin/matrix.hpp"

#include "rankin/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rankin {

BigMatrix to_big(IntMatrix const& m)
{
    BigMatrix out;
    out.reserve(m.size());
    for (auto const& row : m) {
        BigVector r;
        r.reserve(row.size());
        for (auto x : row)
            r.emplace_back(static_cast<long>(x));
        out.push_back(std::move(r));
    }
    return out;
}

std::int64_t to_int64(BigInt const& v)
{
    if (!v.fits_slong_p())
        throw Overflow("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

IntMatrix to_int(BigMatrix const& m)
{
    IntMatrix out;
    out.reserve(m.size());
    for (auto const& row : m) {
        IntVector r;
        r.reserve(row.size());
        for (auto const& x : row)
            r.push_back(to_int64(x));
        out.push_back(std::move(r));
    }
    return out;
}

std::int64_t dot(std::span<std::int64_t const> a, std::span<std::int64_t const> b)
{
    __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += static_cast<__int128>(a[i]) * b[i];
    if (acc > INT64_MAX || acc < INT64_MIN)
        throw Overflow("inner product overflows 64 bits");
    return static_cast<std::int64_t>(acc);
}

IntMatrix gram_matrix(IntMatrix const& rows)
{
    std::size_t k = rows.size();
    IntMatrix g(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
            g[i][j] = g[j][i] = dot(rows[i], rows[j]);
    return g;
}

BigInt determinant(BigMatrix m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m[p][k]) == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt determinant(IntMatrix const& m)
{
    return determinant(to_big(m));
}

HermiteForm hermite_normal_form(BigMatrix a, std::size_t columns)
{
    for (auto const& row : a)
        if (row.size() != columns)
            throw InvalidArgument("ragged matrix: expected " + std::to_string(columns) + " columns");

    HermiteForm out;
    out.columns = columns;
    std::size_t m = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < columns && r < m; ++c) {
        bool found = false;
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (sgn(a[i][c]) != 0 && (best == m || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0))
                    best = i;
            if (best == m)
                break;
            found = true;
            std::swap(a[r], a[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (sgn(a[i][c]) == 0)
                    continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                for (std::size_t j = c; j < columns; ++j)
                    a[i][j] -= q * a[r][j];
                if (sgn(a[i][c]) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (!found)
            continue;
        if (sgn(a[r][c]) < 0)
            for (std::size_t j = c; j < columns; ++j)
                a[r][j] = -a[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            if (sgn(q) != 0)
                for (std::size_t j = c; j < columns; ++j)
                    a[i][j] -= q * a[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

HermiteForm hermite_normal_form(IntMatrix const& rows, std::size_t columns)
{
    return hermite_normal_form(to_big(rows), columns);
}

std::size_t rank(IntMatrix const& rows)
{
    if (rows.empty())
        return 0;
    return hermite_normal_form(rows, rows.front().size()).rank();
}

std::optional<BigVector> solve_upper_triangular(BigMatrix const& basis, BigVector const& v)
{
    std::size_t n = basis.size();
    if (v.size() != n)
        throw InvalidArgument("dimension mismatch in membership test");
    BigVector c(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigInt rest = v[j];
        for (std::size_t i = 0; i < j; ++i)
            rest -= c[i] * basis[i][j];
        if (!mpz_divisible_p(rest.get_mpz_t(), basis[j][j].get_mpz_t()))
            return std::nullopt;
        mpz_divexact(c[j].get_mpz_t(), rest.get_mpz_t(), basis[j][j].get_mpz_t());
    }
    return c;
}

std::vector<std::vector<BigRational>> inverse(BigMatrix const& m)
{
    std::size_t n = m.size();
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0)
            ++p;
        if (p == n)
            throw InvalidArgument("singular matrix");
        std::swap(a[c], a[p]);
        BigRational piv = a[c][c];
        for (auto& x : a[c])
            x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0)
                continue;
            BigRational f = a[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<BigRational>> out(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = a[i][n + j];
    return out;
}

std::string format_matrix(IntMatrix const& m)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j)
            os << (j ? ", " : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace rankin
