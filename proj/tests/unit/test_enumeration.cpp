#include "oracles.hpp"
#include "rankin/enumeration.hpp"
#include "rankin/errors.hpp"

#include <doctest.h>

using namespace rankin;

namespace {

IntVector sign_canonical(IntVector v)
{
    for (auto x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        break;
    }
    return v;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("Z^2 up to norm 4")
{
    IntegralLattice Z2 = IntegralLattice::from_rows(IntMatrix{{1, 0}, {0, 1}});
    ShortVectorList list = short_vectors(Z2, 4);
    std::vector<IntVector> got;
    for (auto const& v : list.vectors)
        got.push_back(v.vector);
    CHECK(got == std::vector<IntVector>{{0, 1}, {1, 0}, {1, -1}, {1, 1}, {0, 2}, {2, 0}});
}

TEST_CASE("short vectors match a box scan")
{
    std::mt19937_64 rng(301);
    for (int i = 0; i < 60; ++i) {
        long q = 2 + i % 3, n = 2 + i % 4;
        IntMatrix g = oracle::random_generators(rng, q, n);
        auto words = oracle::codewords(q, n, g);
        IntegralLattice L = construction_a(LinearCode(q, n, g));
        std::int64_t bound = 2 * q * q;
        std::set<IntVector> expected;
        for (auto const& v : oracle::code_lattice_vectors(q, n, words, bound))
            expected.insert(sign_canonical(v));
        ShortVectorList list = short_vectors(L, bound);
        std::set<IntVector> got;
        for (auto const& v : list.vectors) {
            CHECK(oracle::norm(v.vector) == v.norm);
            CHECK(v.vector == sign_canonical(v.vector));
            got.insert(v.vector);
        }
        CHECK(got == expected);
        CHECK(got.size() == list.vectors.size());
        for (std::size_t k = 1; k < list.vectors.size(); ++k) {
            auto const& a = list.vectors[k - 1];
            auto const& b = list.vectors[k];
            CHECK(std::tie(a.norm, a.vector) < std::tie(b.norm, b.vector));
        }
    }
}

TEST_CASE("lambda_1 of Lambda_C is min(q^2, d_E)")
{
    std::mt19937_64 rng(303);
    for (int i = 0; i < 200; ++i) {
        long q = 2 + i % 3, n = 1 + (i / 3) % 6;
        IntMatrix g = oracle::random_generators(rng, q, n);
        std::int64_t dE = oracle::min_euclidean(oracle::codewords(q, n, g), q);
        std::int64_t expected = dE == 0 ? q * q : std::min<std::int64_t>(q * q, dE);
        LatticeMinimum m = lattice_minimum(construction_a(LinearCode(q, n, g)));
        CHECK(m.norm == expected);
        CHECK(oracle::norm(m.witness) == expected);
    }
}

TEST_CASE("doubling the bound extends the list")
{
    std::mt19937_64 rng(307);
    for (int i = 0; i < 60; ++i) {
        long q = 2 + i % 4, n = 2 + i % 5;
        IntegralLattice L = construction_a(LinearCode(q, n, oracle::random_generators(rng, q, n)));
        std::int64_t bound = 1 + i % 9;
        auto small = short_vectors(L, bound).vectors;
        auto large = short_vectors(L, 2 * bound).vectors;
        REQUIRE(small.size() <= large.size());
        for (std::size_t k = 0; k < small.size(); ++k)
            CHECK(small[k].vector == large[k].vector);
        if (small.size() < large.size())
            CHECK(large[small.size()].norm > bound);
    }
}

TEST_CASE("Gram-only enumeration and the cap")
{
    IntMatrix a2{{2, 1}, {1, 2}};
    CHECK(short_vectors_gram(a2, 2).vectors.size() == 3);
    CHECK(lattice_minimum_gram(a2).norm == 2);
    IntegralLattice Z4 = IntegralLattice::from_rows(IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(short_vectors(Z4, 50, 100), CapExceeded);
    CHECK_THROWS_AS(lattice_minimum_gram(IntMatrix{{1, 2}, {2, 1}}), NotPositiveDefinite);
}

}
