#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torsion/chain.hpp"
#include "helpers.hpp"

using namespace torsion;
using torsion::testing::cls;
using torsion::testing::mk_chain;
using torsion::testing::mod;

namespace {

TorsLattice pentagon() { return enumerate_torsion_classes(make_context(2)); }

}  // namespace

TEST_CASE("validation and normalisation") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "1/2"});
    Chain nc = normalize(l, c);
    CHECK(nc.classes == std::vector<int>{l.full_id, l.zero_id});
    CHECK(nc.breakpoints == std::vector<Phase>{Phase(1, 2)});

    Chain canon = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    CHECK(normalize(l, canon) == canon);
    CHECK(is_canonical(l, canon));
    CHECK_FALSE(is_canonical(l, c));

    // three classes, first two breakpoints equal: the middle class vanishes
    TorsLattice l3 = enumerate_torsion_classes(make_context(3));
    Chain c3 = mk_chain(l3, {"[1,1]+[1,2]+[1,3]+[2,2]+[2,3]+[3,3]", "[1,1]+[1,2]+[1,3]", "[1,1]", ""},
                        {"1/4", "1/4", "3/4"});
    Chain n3 = normalize(l3, c3);
    CHECK(n3.classes == std::vector<int>{l3.full_id, cls(l3, "[1,1]"), l3.zero_id});
    CHECK(n3.breakpoints == std::vector<Phase>{Phase(1, 4), Phase(3, 4)});
    for (const Phase& p : probe_points({&c3}))
        CHECK(torsion_class_at(l3, c3, p) == torsion_class_at(l3, n3, p));

    Chain bad = canon;
    bad.breakpoints = {Phase(2, 3), Phase(1, 3)};
    CHECK_THROWS_AS(validate_chain(l, bad), std::invalid_argument);
    Chain bad2 = canon;
    bad2.classes = {l.full_id, l.full_id, l.zero_id};
    CHECK_THROWS_AS(validate_chain(l, bad2), std::invalid_argument);
    Chain bad3 = canon;
    bad3.classes = {cls(l, "[1,1]"), cls(l, ""), l.zero_id};
    CHECK_THROWS_AS(validate_chain(l, bad3), std::invalid_argument);
}

TEST_CASE("step evaluation") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    CHECK(torsion_class_at(l, c, Phase(0)) == l.full_id);
    CHECK(torsion_class_at(l, c, Phase(1)) == l.zero_id);
    CHECK(torsion_class_at(l, c, Phase(1, 2)) == cls(l, "[2,2]"));
    CHECK(torsion_class_at(l, c, Phase(1, 3)) == l.full_id);  // left-closed piece
    CHECK(torsion_class_at(l, c, Phase(2, 3)) == cls(l, "[2,2]"));
    CHECK(torsion_class_at(l, c, Phase(3, 4)) == l.zero_id);
}

TEST_CASE("slicing support") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    auto s = slicing_support(l, c).support;
    REQUIRE(s.size() == 2);
    CHECK(s[0].phase == Phase(1, 3));
    CHECK(s[0].members == summand_mask(l.ctx, mod(l, "[1,1]")));
    CHECK(s[1].phase == Phase(2, 3));
    CHECK(s[1].members == summand_mask(l.ctx, mod(l, "[2,2]")));
    CHECK(slice_member(l.ctx, s[0], mod(l, "[1,1]*2")));
    CHECK_FALSE(slice_member(l.ctx, s[0], mod(l, "[1,1]+[2,2]")));
    CHECK_FALSE(slice_member(l.ctx, s[0], Module{}));

    // constant chain at X: P_0 = X^perp members, P_1 = X
    Chain constant = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"0", "1"});
    auto sc = slicing_support(l, constant).support;
    REQUIRE(sc.size() == 2);
    CHECK(sc[0].phase == Phase(0));
    CHECK(sc[0].members == summand_mask(l.ctx, mod(l, "[1,1]")));
    CHECK(sc[1].phase == Phase(1));
    CHECK(sc[1].members == summand_mask(l.ctx, mod(l, "[2,2]")));

    // everything is quasisemistable at the single phase of [A, 0]
    Chain half = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    auto sh = slicing_support(l, half).support;
    REQUIRE(sh.size() == 1);
    CHECK(sh[0].members == l.ctx.full_mask);
}

TEST_CASE("Harder-Narasimhan filtration") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    HNFiltration f = hn_filtration(l, c, mod(l, "[1,2]"));
    REQUIRE(f.layers.size() == 2);
    CHECK(module_str(f.layers[0].subobject) == "[2,2]");
    CHECK(f.layers[0].phase == Phase(2, 3));
    CHECK(module_str(f.layers[0].factor) == "[2,2]");
    CHECK(module_str(f.layers[1].subobject) == "[1,2]");
    CHECK(f.layers[1].phase == Phase(1, 3));
    CHECK(module_str(f.layers[1].factor) == "[1,1]");

    // a quasisemistable object has a single layer
    HNFiltration g = hn_filtration(l, c, mod(l, "[2,2]*3"));
    REQUIRE(g.layers.size() == 1);
    CHECK(g.layers[0].phase == Phase(2, 3));

    Chain half = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    HNFiltration h = hn_filtration(l, half, mod(l, "[1,2]+[1,1]"));
    REQUIRE(h.layers.size() == 1);
    CHECK(h.layers[0].phase == Phase(1, 2));
    CHECK(module_str(h.layers[0].factor) == "[1,1]+[1,2]");

    CHECK_THROWS_AS(hn_filtration(l, c, Module{}), std::invalid_argument);
}

TEST_CASE("mho and omega") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    auto [m1, o1] = mho_omega(l, c, mod(l, "[1,2]"));
    CHECK(m1 == Phase(1, 3));
    CHECK(o1 == Phase(2, 3));
    auto [m2, o2] = mho_omega(l, c, mod(l, "[2,2]"));
    CHECK(m2 == Phase(2, 3));
    CHECK(o2 == Phase(2, 3));

    Chain constant = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"0", "1"});
    auto [m3, o3] = mho_omega(l, constant, mod(l, "[1,2]"));
    CHECK(m3 == Phase(0));
    CHECK(o3 == Phase(1));

    // direct sum laws: mho takes the min, omega the max
    auto [ma, oa] = mho_omega(l, c, mod(l, "[1,1]"));
    auto [mb, ob] = mho_omega(l, c, mod(l, "[1,1]+[2,2]"));
    CHECK(mb == std::min(ma, m2));
    CHECK(ob == std::max(oa, o2));

    CHECK_THROWS_AS(mho_omega(l, c, Module{}), std::invalid_argument);
}

TEST_CASE("pointwise order on chains") {
    TorsLattice l = pentagon();
    Chain a = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/4"});
    Chain b = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"3/4"});
    CHECK(chain_leq(l, a, a));
    CHECK(chain_leq(l, a, b));
    CHECK_FALSE(chain_leq(l, b, a));

    Chain s1 = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]", ""}, {"1/3", "2/3"});
    Chain s2 = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    CHECK_FALSE(chain_leq(l, s1, s2));
    CHECK_FALSE(chain_leq(l, s2, s1));
}

TEST_CASE("split chains and total quasisemistability") {
    TorsLattice l = pentagon();
    Chain half = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    CHECK(is_split_chain(l, half));
    CHECK(all_indec_quasisemistable(l, half));

    Chain s2 = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    CHECK_FALSE(is_split_chain(l, s2));  // [1,2] is neither torsion nor torsionfree
    CHECK_FALSE(all_indec_quasisemistable(l, s2));

    Chain s3 = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]", ""}, {"1/3", "2/3"});
    CHECK(is_split_chain(l, s3));
    CHECK(all_indec_quasisemistable(l, s3));
}

TEST_CASE("equivalence of chains") {
    TorsLattice l = pentagon();
    Chain c = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/2", "1/2"});
    CHECK(chains_equivalent(l, c, normalize(l, c)));
    Chain a = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
    Chain b = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "3/4"});
    CHECK_FALSE(chains_equivalent(l, a, b));
}

TEST_CASE("two-slice chain of a torsion class") {
    TorsLattice l = pentagon();
    Chain c = from_torsion_class(l, cls(l, "[2,2]"));
    CHECK(c == mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"}));
    CHECK(slicing_support(l, c).support.size() == 2);

    Chain d = from_torsion_class(l, cls(l, "[1,1]"));
    auto s = slicing_support(l, d).support;
    REQUIRE(s.size() == 2);
    CHECK(s[0].members == summand_mask(l.ctx, mod(l, "[1,2]+[2,2]")));
    CHECK(s[1].members == summand_mask(l.ctx, mod(l, "[1,1]")));

    CHECK_THROWS_AS(from_torsion_class(l, l.full_id), std::invalid_argument);
    CHECK_THROWS_AS(from_torsion_class(l, l.zero_id), std::invalid_argument);
}
