#include "rankin/enumeration.hpp"

#include "rankin/errors.hpp"

#include <algorithm>
#include <functional>

namespace rankin {

namespace {

/* Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, the rational LDL^T of G. */
struct QuadraticForm {
    std::vector<BigRational> d;
    std::vector<std::vector<BigRational>> mu;
};

QuadraticForm decompose(IntMatrix const& gram)
{
    std::size_t n = gram.size();
    std::vector<std::vector<BigRational>> q(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n)
            throw InvalidArgument("Gram matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[i][j] != gram[j][i])
                throw NotPositiveDefinite("Gram matrix is not symmetric");
            q[i][j] = static_cast<long>(gram[i][j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(q[i][i]) <= 0)
            throw NotPositiveDefinite("Gram matrix is not positive definite (pivot " +
                                      std::to_string(i) + " is " + q[i][i].get_str() + ")");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l)
                q[k][l] -= q[k][i] * q[i][l];
    }
    QuadraticForm f;
    f.d.resize(n);
    f.mu.assign(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        f.d[i] = q[i][i];
        for (std::size_t j = i + 1; j < n; ++j)
            f.mu[i][j] = q[i][j];
    }
    return f;
}

/* Depth-first Fincke-Pohst walk from the last coordinate down. One vector of
 * each sign pair is visited: while all higher coordinates are zero the
 * current one is restricted to x >= 0. The visitor may lower `bound`. */
class Enumerator {
public:
    using Visit = std::function<void(IntVector const& coords, BigRational const& norm)>;

    Enumerator(QuadraticForm const& form, std::int64_t bound, Visit visit)
        : bound(static_cast<long>(bound)), form_(form), visit_(std::move(visit)),
          x_(form.d.size(), 0)
    {
    }

    void run()
    {
        if (!x_.empty())
            walk(x_.size() - 1, BigRational(0), true);
    }

    BigRational bound;

private:
    void walk(std::size_t i, BigRational const& spent, bool leading_zero)
    {
        BigRational c = 0;
        for (std::size_t j = i + 1; j < x_.size(); ++j)
            if (x_[j] != 0)
                c -= form_.mu[i][j] * static_cast<long>(x_[j]);

        auto cost = [&](std::int64_t x) {
            BigRational t = BigRational(static_cast<long>(x)) - c;
            return BigRational(spent + form_.d[i] * t * t);
        };
        auto step = [&](std::int64_t x) {
            BigRational s = cost(x);
            if (s > bound)
                return false;
            x_[i] = x;
            if (i == 0) {
                if (!(leading_zero && x == 0))
                    visit_(x_, s);
            } else {
                walk(i - 1, s, leading_zero && x == 0);
            }
            return true;
        };

        BigRational shifted = c + BigRational(1, 2);
        BigInt r;
        mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        std::int64_t x0 = to_int64(r);
        if (leading_zero)
            x0 = 0;
        for (std::int64_t x = x0; step(x); ++x) {
        }
        if (!leading_zero)
            for (std::int64_t x = x0 - 1; step(x); --x) {
            }
        x_[i] = 0;
    }

    QuadraticForm const& form_;
    Visit visit_;
    IntVector x_;
};

std::int64_t integer_norm(IntMatrix const& gram, IntVector const& x)
{
    __int128 acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            row += static_cast<__int128>(gram[i][j]) * x[j];
        acc += row * x[i];
    }
    if (acc > INT64_MAX)
        throw Overflow("vector norm overflows 64 bits");
    return static_cast<std::int64_t>(acc);
}

IntVector to_ambient(IntMatrix const* basis, IntVector const& coords)
{
    if (!basis)
        return coords;
    std::size_t n = coords.size();
    IntVector v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t term = 0;
            if (__builtin_mul_overflow(coords[i], (*basis)[i][j], &term) ||
                __builtin_add_overflow(v[j], term, &v[j]))
                throw Overflow("lattice vector coordinate overflows 64 bits");
        }
    }
    return v;
}

/* Flip v and its coordinates so the first nonzero ambient entry is positive. */
void canonical_sign(IntVector& v, IntVector& coords)
{
    auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (it != v.end() && *it < 0) {
        for (auto& x : v)
            x = -x;
        for (auto& x : coords)
            x = -x;
    }
}

ShortVector make_vector(IntMatrix const& gram, IntMatrix const* basis, IntVector const& coords,
                        BigRational const& exact_norm)
{
    ShortVector sv;
    sv.coords = coords;
    sv.vector = to_ambient(basis, coords);
    sv.norm = basis ? dot(sv.vector, sv.vector) : integer_norm(gram, coords);
    if (BigRational(static_cast<long>(sv.norm)) != exact_norm)
        throw Error("internal: enumeration norm disagrees with integer inner product");
    canonical_sign(sv.vector, sv.coords);
    return sv;
}

ShortVectorList enumerate(IntMatrix const& gram, IntMatrix const* basis, std::int64_t bound,
                          std::uint64_t cap)
{
    if (bound < 1)
        throw InvalidArgument("norm bound must be positive");
    QuadraticForm form = decompose(gram);
    ShortVectorList out;
    out.bound = bound;
    Enumerator e(form, bound, [&](IntVector const& coords, BigRational const& norm) {
        if (out.vectors.size() >= cap)
            throw CapExceeded("short vector enumeration", out.vectors.size() + 1, cap);
        out.vectors.push_back(make_vector(gram, basis, coords, norm));
    });
    e.run();
    std::sort(out.vectors.begin(), out.vectors.end(), [](ShortVector const& a, ShortVector const& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.vector < b.vector;
    });
    return out;
}

LatticeMinimum minimum(IntMatrix const& gram, IntMatrix const* basis)
{
    if (gram.empty())
        throw InvalidArgument("empty lattice");
    std::int64_t start = gram[0][0];
    for (std::size_t i = 0; i < gram.size(); ++i)
        start = std::min(start, gram[i][i]);
    QuadraticForm form = decompose(gram);
    LatticeMinimum best;
    best.norm = start + 1;
    Enumerator e(form, start, [&](IntVector const& coords, BigRational const& norm) {
        ShortVector sv = make_vector(gram, basis, coords, norm);
        if (sv.norm < best.norm || (sv.norm == best.norm && sv.vector < best.witness)) {
            best.norm = sv.norm;
            best.witness = std::move(sv.vector);
        }
        e.bound = static_cast<long>(best.norm);
    });
    e.run();
    return best;
}

}  // namespace

ShortVectorList short_vectors(IntegralLattice const& lattice, std::int64_t bound, std::uint64_t cap)
{
    return enumerate(lattice.gram(), &lattice.basis(), bound, cap);
}

ShortVectorList short_vectors_gram(IntMatrix const& gram, std::int64_t bound, std::uint64_t cap)
{
    return enumerate(gram, nullptr, bound, cap);
}

LatticeMinimum lattice_minimum(IntegralLattice const& lattice)
{
    return minimum(lattice.gram(), &lattice.basis());
}

LatticeMinimum lattice_minimum_gram(IntMatrix const& gram)
{
    return minimum(gram, nullptr);
}

}  // namespace rankin
