#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsion/slice_space.hpp"
#include "helpers.hpp"

using namespace torsion;
using torsion::testing::cls;
using torsion::testing::mk_chain;
using torsion::testing::mod;

namespace {

TorsLattice pentagon() { return enumerate_torsion_classes(make_context(2)); }

}  // namespace

TEST_CASE("distance by mho/omega deviation") {
    TorsLattice l = pentagon();
    Chain a = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    Chain b = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "3/4"});
    CHECK(distance(l, a, b) == Rat(1, 6));
    CHECK(distance(l, a, a) == Rat(0));
    Chain nc = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "1/2"});
    CHECK(distance(l, nc, normalize(l, nc)) == Rat(0));
}

TEST_CASE("distance equals the Filt-window formula") {
    TorsLattice l = pentagon();
    Chain a = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    Chain b = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "3/4"});
    CHECK(distance_filt_formula(l, a, b) == Rat(1, 6));
    Chain nc = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "1/2"});
    CHECK(distance_filt_formula(l, nc, normalize(l, nc)) == Rat(0));

    // single-support chains at distinct phases but the same slice category
    Chain p = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/8"});
    Chain q = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"5/8"});
    CHECK(distance(l, p, q) == Rat(1, 2));
    CHECK(distance_filt_formula(l, p, q) == Rat(1, 2));
}

TEST_CASE("open balls") {
    TorsLattice l = pentagon();
    Chain center = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"0", "1"});
    CHECK(ball_contains(l, center, Rat(1, 4), center));
    Chain probe = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/5", "9/10"});
    CHECK(distance(l, center, probe) == Rat(1, 5));
    CHECK(ball_contains(l, center, Rat(1, 4), probe));
    Chain off = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]", ""}, {"1/5", "9/10"});
    CHECK_FALSE(ball_contains(l, center, Rat(1, 4), off));
    CHECK_THROWS_AS(ball_contains(l, center, Rat(0), probe), std::invalid_argument);
    CHECK_THROWS_AS(ball_contains(l, center, Rat(1), probe), std::invalid_argument);
}

TEST_CASE("nerve of the lattice") {
    TorsLattice l1 = enumerate_torsion_classes(make_context(1));
    NerveComplex n1 = nerve(l1);
    CHECK(n1.simplices.size() == 1);
    CHECK(n1.f_vector == std::vector<long long>{1});
    CHECK(n1.facets.size() == 1);

    TorsLattice l = pentagon();
    NerveComplex n2 = nerve(l);
    CHECK(n2.f_vector == std::vector<long long>{1, 3, 1});
    REQUIRE(n2.facets.size() == 2);
    CHECK(n2.facets[0].size() + n2.facets[1].size() == 7);  // lengths 3 and 4 as class lists
}

TEST_CASE("subsequence maps") {
    TorsLattice l = pentagon();
    std::vector<int> big{l.full_id, cls(l, "[2,2]"), l.zero_id};
    std::vector<int> small{l.full_id, l.zero_id};

    auto id_map = subsequence_map(l, big, big);
    REQUIRE(id_map);
    CHECK(id_map->f == std::vector<int>{0, 1, 2});
    CHECK(id_map->g == std::vector<int>{1, 2});

    auto maps = subsequence_map(l, small, big);
    REQUIRE(maps);
    CHECK(maps->f == std::vector<int>{0, 2});
    CHECK(maps->g == std::vector<int>{1, 1});

    std::vector<int> other{l.full_id, cls(l, "[1,1]"), l.zero_id};
    CHECK_FALSE(subsequence_map(l, other, big).has_value());
}

TEST_CASE("chambers are the maximal green sequences") {
    TorsLattice l = pentagon();
    CHECK(is_chamber(l, mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"})));
    CHECK_FALSE(is_chamber(l, mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"})));
    CHECK(is_chamber(l, mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]", "[1,1]", ""},
                                 {"1/4", "1/2", "3/4"})));
}

TEST_CASE("local constancy inside a chamber") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    std::vector<Chain> probes{
        mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"17/48", "2/3"}),
        mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "31/48"}),
        mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]", ""}, {"1/3", "2/3"}),  // far away
    };
    auto rep = chamber_local_constancy(l, c, Rat(1, 12), probes, 6);
    CHECK(rep.passed);
    CHECK(rep.probes_within == 2);

    CHECK_THROWS_AS(chamber_local_constancy(l, c, Rat(1, 4), probes, 6), std::invalid_argument);
    Chain notc = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    CHECK_THROWS_AS(chamber_local_constancy(l, notc, Rat(1, 12), probes, 6), std::invalid_argument);
}

TEST_CASE("refutation outside a chamber") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    auto ref = chamber_refutation(l, c, Rat(1, 8), 6);
    REQUIRE(ref);
    CHECK(distance(l, c, ref->probe) < Rat(1, 8));
    auto h1 = hn_filtration(l, c, ref->witness);
    auto h2 = hn_filtration(l, ref->probe, ref->witness);
    CHECK(h1.layers.size() != h2.layers.size());

    Chain chamber = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    CHECK_FALSE(chamber_refutation(l, chamber, Rat(1, 8), 6).has_value());
}

TEST_CASE("wall loci") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    auto w1 = wall_locus(l, c, mod(l, "[2,2]"));
    CHECK(w1.member);
    CHECK(w1.lower_bound == Rat(0));
    auto w2 = wall_locus(l, c, mod(l, "[1,2]"));
    CHECK_FALSE(w2.member);
    CHECK(w2.lower_bound == Rat(1, 6));
    CHECK_THROWS_AS(wall_locus(l, c, Module{}), std::invalid_argument);

    // every chain with [1,2] quasisemistable stays at least 1/6 away
    Chain on_wall = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    CHECK(wall_locus(l, on_wall, mod(l, "[1,2]")).member);
    CHECK(distance(l, c, on_wall) >= Rat(1, 6));
}

TEST_CASE("twin torsion loci") {
    TorsLattice l = pentagon();
    uint32_t x = summand_mask(l.ctx, mod(l, "[2,2]"));
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/4", "3/4"});
    CHECK(twin_locus_member(l, c, x, x, Phase(1, 4), Phase(3, 4)));
    Chain other = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]", ""}, {"0", "1"});
    CHECK_FALSE(twin_locus_member(l, other, x, x, Phase(1, 4), Phase(3, 4)));
    // the unconstrained window admits any single-plateau chain
    Chain anyc = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]", ""}, {"0", "1"});
    CHECK(twin_locus_member(l, anyc, 0, l.ctx.full_mask, Phase(0), Phase(1)));
    CHECK_THROWS_AS(twin_locus_member(l, c, l.ctx.full_mask, x, Phase(1, 4), Phase(3, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(twin_locus_member(l, c, x, x, Phase(3, 4), Phase(1, 4)),
                    std::invalid_argument);
}

TEST_CASE("separated family and compactness report") {
    TorsLattice l = pentagon();
    auto family = separated_family(l);
    REQUIRE(family.size() == 5);
    for (size_t i = 0; i < family.size(); ++i)
        for (size_t k = i + 1; k < family.size(); ++k)
            CHECK(distance(l, family[i], family[k]) == Rat(1));

    auto f1 = separated_family(enumerate_torsion_classes(make_context(1)));
    REQUIRE(f1.size() == 2);

    auto rep = compactness_report(l);
    CHECK(rep.tors_count == 5);
    CHECK(rep.facet_count == 2);
    CHECK(rep.f_vector == std::vector<long long>{1, 3, 1});
    CHECK(rep.verdict.find("compact") != std::string::npos);
}
