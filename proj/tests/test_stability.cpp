#include <doctest.h>

#include "torsion/stability.hpp"
#include "helpers.hpp"

using namespace torsion;
using torsion::testing::cls;
using torsion::testing::mk_chain;
using torsion::testing::mod;

namespace {

TorsLattice pentagon() { return enumerate_torsion_classes(make_context(2)); }

Chain two_thirds(const TorsLattice& l) {
    return mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/3", "2/3"});
}

}  // namespace

TEST_CASE("phases of the three kinds") {
    TorsLattice l = pentagon();
    Chain c = two_thirds(l);
    CHECK(phase(l, ChainMho{c}, mod(l, "[1,2]")) == Phase(1, 3));
    CHECK(phase(l, ChainOmega{c}, mod(l, "[1,2]")) == Phase(2, 3));

    CentralCharge cc{{1, -1}, {1, 1}};
    CHECK(phase(l, cc, mod(l, "[1,1]")) == Phase(3, 4));
    CHECK(phase(l, cc, mod(l, "[2,2]")) == Phase(1, 4));
    CHECK(phase(l, cc, mod(l, "[1,2]")) == Phase(1, 2));
    CHECK(phase(l, cc, mod(l, "[1,2]+[1,2]")) == Phase(1, 2));  // slope is scale invariant

    CHECK_THROWS_AS(phase(l, cc, Module{}), std::invalid_argument);
    CHECK_THROWS_AS(phase(l, CentralCharge{{1}, {1}}, mod(l, "[1,1]")), std::invalid_argument);
    CHECK_THROWS_AS(phase(l, CentralCharge{{1, 1}, {1, 0}}, mod(l, "[1,1]")), std::invalid_argument);
}

TEST_CASE("see-saw verdicts") {
    TorsLattice l = pentagon();
    Chain c = two_thirds(l);
    SeesawVerdict vm = check_weak_seesaw(l, ChainMho{c}, 6);
    CHECK(vm.weak_passed);
    CHECK_FALSE(vm.seesaw_passed);  // the split sum of two phases breaks strictness
    REQUIRE(vm.seesaw_witness.has_value());

    SeesawVerdict vo = check_weak_seesaw(l, ChainOmega{c}, 6);
    CHECK(vo.weak_passed);
    CHECK_FALSE(vo.seesaw_passed);

    SeesawVerdict vc = check_weak_seesaw(l, CentralCharge{{1, -1}, {1, 1}}, 6);
    CHECK(vc.weak_passed);
    CHECK(vc.seesaw_passed);
}

TEST_CASE("semistability by exhaustive subobject scan") {
    TorsLattice l = pentagon();
    CentralCharge up{{1, -1}, {1, 1}};
    CentralCharge down{{-1, 1}, {1, 1}};
    CHECK(is_semistable(l, up, mod(l, "[1,1]")));
    CHECK(is_semistable(l, up, mod(l, "[2,2]")));
    CHECK(is_semistable(l, up, mod(l, "[1,2]")));
    CHECK_FALSE(is_semistable(l, down, mod(l, "[1,2]")));

    CHECK(module_str(max_destabilizing_subobject(l, down, mod(l, "[1,2]"))) == "[2,2]");
    CHECK(module_str(max_destabilizing_subobject(l, up, mod(l, "[1,2]"))) == "[1,2]");
    Chain c = two_thirds(l);
    CHECK(module_str(max_destabilizing_subobject(l, ChainOmega{c}, mod(l, "[1,2]"))) == "[2,2]");
}

TEST_CASE("torsion cuts") {
    TorsLattice l = pentagon();
    CentralCharge cc{{1, -1}, {1, 1}};
    TorsCuts cuts = tors_cuts(l, cc, Phase(1, 2));
    CHECK(cuts.geq == summand_mask(l.ctx, mod(l, "[1,1]+[1,2]")));
    CHECK(cuts.gt == summand_mask(l.ctx, mod(l, "[1,1]")));
    CHECK(tors_cuts(l, cc, Phase(0)).geq == l.ctx.full_mask);
    CHECK(is_torsion_class(l.ctx, cuts.geq));
    CHECK(is_torsion_class(l.ctx, cuts.gt));
}

TEST_CASE("induced chains eta+ and eta-") {
    TorsLattice l = pentagon();
    CentralCharge cc{{1, -1}, {1, 1}};
    auto [plus, minus] = eta_pm(l, cc);
    Chain expected = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]", "[1,1]", ""},
                              {"1/4", "1/2", "3/4"});
    CHECK(plus == expected);
    CHECK(minus == expected);  // strict and weak cuts assemble the same step chain

    Chain half = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    auto [p2, m2] = eta_pm(l, ChainMho{half});
    CHECK(p2 == half);
    CHECK(m2 == half);

    Chain c = two_thirds(l);
    auto [p3, m3] = eta_pm(l, ChainOmega{c});
    CHECK(chains_equivalent(l, p3, m3));
    CHECK(chains_equivalent(l, p3, c));
}

TEST_CASE("semistable objects form the slicing") {
    TorsLattice l = pentagon();
    CentralCharge cc{{1, -1}, {1, 1}};
    auto rep = semistable_slice_check(l, cc, 6);
    CHECK(rep.passed);
    auto support = slicing_support(l, eta_pm(l, cc).first).support;
    REQUIRE(support.size() == 3);
    CHECK(support[0].members == summand_mask(l.ctx, mod(l, "[2,2]")));
    CHECK(support[1].members == summand_mask(l.ctx, mod(l, "[1,2]")));
    CHECK(support[2].members == summand_mask(l.ctx, mod(l, "[1,1]")));

    Chain c = two_thirds(l);
    CHECK(semistable_slice_check(l, ChainMho{c}, 6).passed);
    CHECK(semistable_slice_check(l, ChainOmega{c}, 6).passed);
}

TEST_CASE("Filt description of the torsion cuts") {
    TorsLattice l = pentagon();
    CentralCharge cc{{1, -1}, {1, 1}};
    CHECK(filt_description_check(l, cc, Phase(0), 6));
    CHECK(filt_description_check(l, cc, Phase(1, 2), 6));
    CHECK(filt_description_check(l, cc, Phase(1), 6));
    Chain c = two_thirds(l);
    CHECK(filt_description_check(l, ChainMho{c}, Phase(1, 3), 6));
    CHECK(filt_description_check(l, ChainOmega{c}, Phase(2, 3), 6));
}

TEST_CASE("constant = stability = single slice") {
    TorsLattice l = pentagon();
    Chain half = mk_chain(l, {"[1,1]+[1,2]+[2,2]", ""}, {"1/2"});
    auto p1 = is_stability_and_constant(l, ChainMho{half}, 6);
    CHECK(p1.constant);
    CHECK(p1.stability);
    CHECK(p1.omega_eq_mho);
    CHECK(p1.single_slice);

    auto p2 = is_stability_and_constant(l, ChainOmega{two_thirds(l)}, 6);
    CHECK_FALSE(p2.constant);
    CHECK_FALSE(p2.stability);
    CHECK_FALSE(p2.omega_eq_mho);
    CHECK_FALSE(p2.single_slice);

    auto p3 = is_stability_and_constant(
        l, ChainMho{mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]", ""}, {"1/3", "2/3"})}, 6);
    CHECK_FALSE(p3.constant);
    CHECK_FALSE(p3.stability);

    CHECK_THROWS_AS(is_stability_and_constant(l, CentralCharge{{1, -1}, {1, 1}}, 6),
                    std::invalid_argument);
}

TEST_CASE("pointwise order on weak stability conditions") {
    TorsLattice l = pentagon();
    Chain c = two_thirds(l);
    CHECK(wsc_leq(l, ChainMho{c}, ChainMho{c}, 6));
    CHECK(wsc_leq(l, ChainMho{c}, ChainOmega{c}, 6));
    Chain earlier = mk_chain(l, {"[1,1]+[1,2]+[2,2]", "[2,2]", ""}, {"1/4", "2/3"});
    CHECK(wsc_leq(l, ChainMho{earlier}, ChainMho{c}, 6));
    CHECK_FALSE(wsc_leq(l, ChainOmega{c}, ChainMho{c}, 6));
}
