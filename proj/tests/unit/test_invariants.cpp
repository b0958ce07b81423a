#include "rankin/asymptotic.hpp"
#include "rankin/errors.hpp"
#include "rankin/invariants.hpp"
#include "rankin/propagation.hpp"

#include <doctest.h>

using namespace rankin;

namespace {

LinearCode code_for(std::string const& lattice)
{
    if (lattice == "E8")
        return reed_muller_code(1, 3);
    return parity_check_code(lattice.at(1) - '0', 2);
}

ExactRadical rad(long num, long den, std::uint64_t root)
{
    return ExactRadical::make(num, den, root);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("checked table values are reproduced from code lattices")
{
    int reproduced = 0;
    for (auto const& fact : known_facts()) {
        if (!fact.code_construction)
            continue;
        LinearCode code = code_for(fact.lattice);
        auto l = static_cast<std::size_t>(fact.l);
        ExactRadical value = fact.kind == InvariantKind::rankin
                                 ? gamma_nl(construction_a(code), d_l_search(code, l))
                                 : gamma_prime_nl(code, l).value;
        CHECK_MESSAGE(value == fact.value, cell_label(fact.kind, fact.n, fact.l));
        ++reproduced;
    }
    CHECK(reproduced == 12);
}

TEST_CASE("E8 rank-3 and rank-4 values")
{
    LinearCode rm = reed_muller_code(1, 3);
    IntegralLattice L = construction_a(rm);
    CHECK(gamma_nl(L, d_l_search(rm, 3)) == ExactRadical(4));
    SearchOptions plain;
    plain.escalate = false;
    CHECK(gamma_nl(L, d_l_search(rm, 4, plain)) == ExactRadical(4));
}

TEST_CASE("self-dual shortcut agrees with the generic path")
{
    std::vector<LinearCode> self_dual{
        reed_muller_code(1, 3),
        LinearCode(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}),
        LinearCode(4, 2, {{2, 0}, {0, 2}}),
        LinearCode(2, 2, {{1, 1}}),
    };
    for (auto const& code : self_dual) {
        REQUIRE(code.is_self_dual());
        for (std::size_t l = 1; l <= std::min<std::size_t>(2, code.n()); ++l) {
            GammaPrimeResult fast = gamma_prime_nl(code, l);
            GammaPrimeResult slow = gamma_prime_nl(code, l, {}, true);
            CHECK(fast.used_shortcut);
            CHECK_FALSE(slow.used_shortcut);
            CHECK(fast.value == slow.value);
        }
    }
    GammaPrimeResult pc = gamma_prime_nl(parity_check_code(3, 2), 1);
    CHECK_FALSE(pc.self_dual);
    CHECK(pc.value == rad(3, 2, 2));
}

TEST_CASE("labels and lookup")
{
    CHECK(cell_label(InvariantKind::berge_martinet, 7, 2) == "gamma'(7,2)");
    CHECK(parse_kind("gamma_prime") == InvariantKind::berge_martinet);
    CHECK_THROWS_AS(parse_kind("delta"), InvalidArgument);
    auto dual_index = find_known_fact(InvariantKind::rankin, 4, 3);
    REQUIRE(dual_index);
    CHECK(dual_index->value == rad(2, 1, 2));
    CHECK_FALSE(find_known_fact(InvariantKind::rankin, 5, 2));
}

TEST_CASE("replayed intervals for the open cells")
{
    BoundTable t37 = propagate_bounds(7, default_seeds(7), {3, 7});
    BoundTable t35 = propagate_bounds(7, default_seeds(7), {3, 5});
    auto g52 = t37.find(InvariantKind::rankin, 5, 2);
    auto g72 = t37.find(InvariantKind::rankin, 7, 2);
    auto p52 = t35.find(InvariantKind::berge_martinet, 5, 2);
    auto p72 = t35.find(InvariantKind::berge_martinet, 7, 2);
    REQUIRE((g52 && g72 && p52 && p72));
    CHECK(g52->lower == ExactRadical(3) / radical_pow(ExactRadical(4), 2, 5));
    CHECK(g52->upper == ExactRadical(2));
    CHECK(g72->lower == ExactRadical(3) / radical_pow(ExactRadical(4), 2, 7));
    CHECK(g72->upper == radical_pow(ExactRadical(2), 5, 3));
    CHECK(p52->lower == rad(3, 1, 2));
    CHECK(p52->upper == ExactRadical(2));
    CHECK(p72->lower == rad(3, 1, 2));
    CHECK(p72->upper == ExactRadical(BigRational(8, 3)));
}

TEST_CASE("the full closure is sound and inside every partial closure")
{
    BoundTable full = propagate_bounds(8, default_seeds(8));
    CHECK_FALSE(full.pass_cap_hit);
    for (std::set<int> rules : {std::set<int>{3, 5}, {3, 7}, {2, 3}, {4, 6, 8}}) {
        BoundTable part = propagate_bounds(8, default_seeds(8), rules);
        for (auto const& iv : full.intervals) {
            auto other = part.find(iv.kind, iv.n, iv.l);
            REQUIRE(other);
            CHECK(other->lower <= iv.lower);
            if (other->upper)
                CHECK((iv.upper && *iv.upper <= *other->upper));
        }
    }
    for (auto const& iv : full.intervals) {
        if (iv.upper)
            CHECK(iv.lower <= *iv.upper);
        if (auto fact = find_known_fact(iv.kind, iv.n, iv.l)) {
            CHECK(iv.lower <= fact->value);
            if (iv.upper)
                CHECK(fact->value <= *iv.upper);
        }
        if (iv.kind == InvariantKind::berge_martinet) {
            auto g = full.find(InvariantKind::rankin, iv.n, iv.l);
            if (g->upper)
                CHECK((iv.upper && *iv.upper <= *g->upper));
        }
    }
}

TEST_CASE("provenance names the rule behind an endpoint")
{
    BoundTable t = propagate_bounds(7, default_seeds(7), {3, 7});
    auto g52 = t.find(InvariantKind::rankin, 5, 2);
    CHECK(t.steps.at(*g52->lower_step).rule == "lattice");
    auto chain = t.provenance(g52->upper_step);
    REQUIRE_FALSE(chain.empty());
    CHECK(chain.back()->rule == "rule 7");
    for (auto const* step : chain)
        for (auto p : step->premises)
            CHECK(p < t.steps.size());
}

TEST_CASE("contradictory seeds and the pass cap")
{
    std::vector<BoundSeed> seeds = default_seeds(6);
    seeds.push_back({InvariantKind::rankin, 4, 1, ExactRadical(1), ExactRadical(1), "contradiction"});
    CHECK_THROWS_AS(propagate_bounds(6, seeds), InconsistentBounds);
    BoundTable capped = propagate_bounds(8, default_seeds(8), kAllRules, 1);
    CHECK(capped.pass_cap_hit);
    CHECK(capped.passes == 1);
}

TEST_CASE("asymptotic bounds on gamma_{2k,k}")
{
    AsymptoticInterval k2 = asymptotic_gamma_2k_k(2, 10);
    CHECK(k2.lower.decimal == "0.1666666666");
    CHECK(k2.upper.decimal == "3.696844501");
    CHECK_FALSE(k2.improved_lower);
    CHECK(contains(k2, ExactRadical(BigRational(3, 2))));
    CHECK(contains(asymptotic_gamma_2k_k(4), ExactRadical(4)));
    AsymptoticInterval k10 = asymptotic_gamma_2k_k(10);
    REQUIRE(k10.improved_lower);
    CHECK(k10.lower.label == k10.improved_lower->label);
    CHECK(k10.upper.label == k10.improved_upper->label);
    for (long k = 2; k <= 40; ++k) {
        AsymptoticInterval iv = asymptotic_gamma_2k_k(k, 20);
        CHECK(iv.lower.value <= iv.upper.value);
        CHECK(iv.lower.value >= iv.classic_lower.value);
        CHECK(iv.upper.value <= iv.classic_upper.value);
    }
    CHECK_THROWS_AS(asymptotic_gamma_2k_k(1), InvalidArgument);
}

}
