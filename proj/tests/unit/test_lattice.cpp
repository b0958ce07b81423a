#include "oracles.hpp"
#include "rankin/errors.hpp"
#include "rankin/lattice.hpp"

#include <doctest.h>

using namespace rankin;

TEST_SUITE("lattices") {

TEST_CASE("det(Lambda_C) = (q^n / |C|)^2 and qZ^n is contained")
{
    std::mt19937_64 rng(201);
    std::vector<std::pair<LinearCode, std::size_t>> cases;
    for (int i = 0; i < 200; ++i) {
        long q = 2 + i % 4, n = 1 + (i / 4) % 6;
        IntMatrix g = oracle::random_generators(rng, q, n);
        cases.emplace_back(LinearCode(q, n, g), oracle::codewords(q, n, g).size());
    }
    for (long n = 2; n <= 6; ++n)
        for (long q = 2; q <= 5; ++q) {
            LinearCode pc = parity_check_code(n, q);
            cases.emplace_back(pc, oracle::codewords(q, n, pc.generators()).size());
        }
    for (auto const& [code, size] : cases) {
        IntegralLattice L = construction_a(code);
        BigRational ratio(pow_int(code.q(), code.n()), static_cast<unsigned long>(size));
        ratio.canonicalize();
        CHECK(BigRational(L.det_gram()) == ratio * ratio);
        for (long i = 0; i < code.n(); ++i) {
            IntVector e(code.n(), 0);
            e[i] = code.q();
            CHECK(L.contains(e));
        }
    }
}

TEST_CASE("membership agrees with reduction mod q")
{
    std::mt19937_64 rng(203);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int i = 0; i < 60; ++i) {
        long q = 2 + i % 4, n = 2 + i % 4;
        IntMatrix g = oracle::random_generators(rng, q, n);
        auto words = oracle::codewords(q, n, g);
        IntegralLattice L = construction_a(LinearCode(q, n, g));
        for (int t = 0; t < 40; ++t) {
            IntVector v(n);
            for (auto& x : v)
                x = entry(rng);
            CHECK(L.contains(v) == (words.count(oracle::reduce(v, q)) == 1));
        }
    }
}

TEST_CASE("q times the dual of Lambda_C is Lambda_{C^perp}")
{
    std::mt19937_64 rng(205);
    for (int i = 0; i < 120; ++i) {
        long q = 2 + i % 4, n = 1 + (i / 4) % 6;
        LinearCode code(q, n, oracle::random_generators(rng, q, n));
        IntegralLattice expected = construction_a(dual_code(code));
        CHECK(dual_lattice_scaled(construction_a(code), q) == expected);
        CHECK(dual_as_code_lattice(code) == expected);
    }
}

TEST_CASE("scaling multiplies determinants and keeps gamma")
{
    IntegralLattice L = construction_a(parity_check_code(4, 3));
    Sublattice sub = sublattice_from_rows(L, {{1, -1, 0, 0}, {0, 1, -1, 0}});
    for (long s : {2, 3, 5}) {
        IntegralLattice S = scaled(L, s);
        CHECK(S.det_gram() == L.det_gram() * pow_int(s, 8));
        IntMatrix rows = sub.rows;
        for (auto& r : rows)
            for (auto& x : r)
                x *= s;
        Sublattice scaled_sub = sublattice_from_rows(S, rows);
        CHECK(scaled_sub.det_l == sub.det_l * pow_int(s, 4));
        CHECK(gamma_ratio(S, scaled_sub) == gamma_ratio(L, sub));
    }
}

TEST_CASE("binary parity-check lattice is D_n")
{
    for (long n = 2; n <= 8; ++n) {
        IntMatrix rows;
        for (long i = 0; i + 1 < n; ++i) {
            IntVector r(n, 0);
            r[i] = 1;
            r[n - 1] = 1;
            rows.push_back(r);
        }
        IntVector last(n, 0);
        last[n - 1] = 2;
        rows.push_back(last);
        IntegralLattice Dn = IntegralLattice::from_rows(rows);
        CHECK(construction_a(parity_check_code(n, 2)) == Dn);
        CHECK(Dn.det_gram() == 4);
        CHECK(is_even(Dn));
    }
}

TEST_CASE("Lambda_R(1,3) is sqrt(2) E8")
{
    IntegralLattice L = construction_a(reed_muller_code(1, 3));
    CHECK(L.det_gram() == 256);
    IntMatrix half = L.gram();
    for (auto& r : half)
        for (auto& x : r) {
            CHECK(x % 2 == 0);
            x /= 2;
        }
    CHECK(is_even_gram(half));
    CHECK(determinant(half) == 1);
}

TEST_CASE("rank and membership errors")
{
    CHECK_THROWS_AS(IntegralLattice::from_rows(IntMatrix{{1, 2}, {2, 4}}), RankDeficient);
    IntegralLattice L = construction_a(parity_check_code(3, 2));
    CHECK_THROWS_AS(sublattice_from_rows(L, {{1, 0, 0}}), NotAMember);
    CHECK_THROWS_AS(sublattice_from_rows(L, {{1, 1, 0}, {2, 2, 0}}), RankDeficient);
    CHECK_FALSE(is_even(IntegralLattice::from_rows(IntMatrix{{1, 0}, {0, 1}})));
}

}
