#include "rankin/errors.hpp"
#include "rankin/matrix.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace rankin;

namespace {

/* Leibniz expansion. */
BigInt leibniz(IntMatrix const& m)
{
    std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        BigInt term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= static_cast<long>(m[i][perm[i]]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long span)
{
    std::uniform_int_distribution<long> entry(-span, span);
    IntMatrix m(rows, IntVector(cols));
    for (auto& r : m)
        for (auto& x : r)
            x = entry(rng);
    return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("determinant matches the Leibniz expansion")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + i % 5;
        IntMatrix m = random_matrix(rng, n, n, 6);
        CHECK(determinant(m) == leibniz(m));
    }
}

TEST_CASE("Hermite normal form is canonical and upper triangular")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 2 + i % 4;
        IntMatrix m = random_matrix(rng, n + 2, n, 5);
        HermiteForm h = hermite_normal_form(m, n);
        for (std::size_t r = 0; r < h.rank(); ++r) {
            std::size_t p = h.pivots[r];
            CHECK(h.rows[r][p] > 0);
            for (std::size_t c = 0; c < p; ++c)
                CHECK(h.rows[r][c] == 0);
            for (std::size_t above = 0; above < r; ++above) {
                CHECK(h.rows[above][p] >= 0);
                CHECK(h.rows[above][p] < h.rows[r][p]);
            }
        }
        // A unimodular shuffle of the rows leaves the form unchanged.
        IntMatrix shuffled = m;
        for (std::size_t c = 0; c < n; ++c)
            shuffled[0][c] += 3 * shuffled[1][c];
        std::reverse(shuffled.begin(), shuffled.end());
        HermiteForm g = hermite_normal_form(shuffled, n);
        CHECK(g.rows == h.rows);
        CHECK(rank(m) == h.rank());
    }
}

TEST_CASE("inverse and triangular solves")
{
    BigMatrix m = to_big(IntMatrix{{2, 1}, {1, 2}});
    auto inv = inverse(m);
    CHECK(inv[0][0] == BigRational(2, 3));
    CHECK(inv[0][1] == BigRational(-1, 3));
    BigMatrix upper = to_big(IntMatrix{{2, 1}, {0, 3}});
    auto x = solve_upper_triangular(upper, BigVector{4, 5});
    REQUIRE(x);
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve_upper_triangular(upper, BigVector{1, 1}));
}

TEST_CASE("gram matrix")
{
    CHECK(gram_matrix(IntMatrix{{1, 1, 0}, {0, 1, 1}}) == IntMatrix{{2, 1}, {1, 2}});
    CHECK_THROWS_AS(to_int64(BigInt("100000000000000000000")), Overflow);
}

}
