#include <doctest.h>

#include <set>

#include "torsion/tors.hpp"
#include "helpers.hpp"

using namespace torsion;
using torsion::testing::cls;
using torsion::testing::mod;

namespace {

uint32_t mask_of(const Context& ctx, const char* s) {
    return summand_mask(ctx, parse_module(ctx, s));
}

}  // namespace

TEST_CASE("torsion class predicate") {
    Context c2 = make_context(2);
    CHECK_FALSE(is_torsion_class(c2, mask_of(c2, "[1,1]+[2,2]")));  // middle [1,2] missing
    CHECK(is_torsion_class(c2, mask_of(c2, "[1,1]+[1,2]")));
    CHECK(is_torsion_class(c2, 0));
    CHECK(is_torsion_class(c2, c2.full_mask));
    CHECK(is_torsion_class(c2, mask_of(c2, "[2,2]")));
    CHECK_FALSE(is_torsion_class(c2, mask_of(c2, "[1,2]")));  // quotient [1,1] missing
}

TEST_CASE("lattice enumeration and counts") {
    CHECK(enumerate_torsion_classes(make_context(1)).count() == 2);
    TorsLattice l2 = enumerate_torsion_classes(make_context(2));
    CHECK(l2.count() == 5);
    std::set<uint32_t> masks;
    for (const auto& c : l2.classes) masks.insert(c.members);
    Context& c2 = l2.ctx;
    CHECK(masks == std::set<uint32_t>{0, mask_of(c2, "[1,1]"), mask_of(c2, "[2,2]"),
                                      mask_of(c2, "[1,1]+[1,2]"), c2.full_mask});
    CHECK(enumerate_torsion_classes(make_context(3)).count() == 14);
    CHECK(enumerate_torsion_classes(make_context(4)).count() == 42);
    CHECK_THROWS_AS(enumerate_torsion_classes(make_context(6), 5), std::invalid_argument);
}

TEST_CASE("filt closure") {
    Context c2 = make_context(2);
    CHECK(filt_closure(c2, mask_of(c2, "[1,1]+[2,2]")) == c2.full_mask);
    uint32_t t = mask_of(c2, "[1,1]+[1,2]");
    CHECK(filt_closure(c2, t) == t);  // idempotent on torsion classes
    CHECK(filt_closure(c2, mask_of(c2, "[1,2]")) == mask_of(c2, "[1,1]+[1,2]"));
    CHECK(ext_closure(c2, mask_of(c2, "[1,2]")) == mask_of(c2, "[1,2]"));
    CHECK(ext_closure(c2, mask_of(c2, "[1,1]+[2,2]")) == c2.full_mask);
}

TEST_CASE("torsion subobject and canonical sequence") {
    TorsLattice l = enumerate_torsion_classes(make_context(2));
    const Context& ctx = l.ctx;
    auto [t1, f1] = torsion_subobject(ctx, mask_of(ctx, "[2,2]"), mod(l, "[1,2]"));
    CHECK(module_str(t1) == "[2,2]");
    CHECK(module_str(f1) == "[1,1]");

    auto [t2, f2] = torsion_subobject(ctx, ctx.full_mask, mod(l, "[1,2]+[1,1]"));
    CHECK(module_str(t2) == "[1,1]+[1,2]");
    CHECK(f2.is_zero());
    auto [t3, f3] = torsion_subobject(ctx, 0, mod(l, "[1,2]"));
    CHECK(t3.is_zero());
    CHECK(module_str(f3) == "[1,2]");

    auto [t4, f4] = torsion_subobject(ctx, mask_of(ctx, "[1,1]+[1,2]"), mod(l, "[2,2]"));
    CHECK(t4.is_zero());
    CHECK(module_str(f4) == "[2,2]");
}

TEST_CASE("torsionfree membership") {
    Context c2 = make_context(2);
    CHECK_FALSE(in_torsionfree(c2, mask_of(c2, "[2,2]"), parse_module(c2, "[1,2]")));
    CHECK(in_torsionfree(c2, mask_of(c2, "[2,2]"), parse_module(c2, "[1,1]")));
    CHECK(in_torsionfree(c2, 0, parse_module(c2, "[1,2]+[2,2]*2")));
}

TEST_CASE("Hasse diagram of the pentagon") {
    TorsLattice l = enumerate_torsion_classes(make_context(2));
    REQUIRE(l.hasse.size() == 5);
    auto brick = [&](const std::string& u, const std::string& v) {
        for (const auto& e : l.hasse)
            if (e.upper == cls(l, u) && e.lower == cls(l, v)) return interval_str(e.brick);
        return std::string("missing");
    };
    CHECK(brick("[1,1]+[1,2]+[2,2]", "[1,1]+[1,2]") == "[2,2]");
    CHECK(brick("[1,1]+[1,2]+[2,2]", "[2,2]") == "[1,1]");
    CHECK(brick("[1,1]+[1,2]", "[1,1]") == "[1,2]");
    CHECK(brick("[1,1]", "") == "[1,1]");
    CHECK(brick("[2,2]", "") == "[2,2]");
}

TEST_CASE("maximal green sequences") {
    CHECK(maximal_green_sequences(enumerate_torsion_classes(make_context(1))).size() == 1);
    TorsLattice l = enumerate_torsion_classes(make_context(2));
    auto mgs = maximal_green_sequences(l);
    REQUIRE(mgs.size() == 2);
    std::set<std::vector<int>> got(mgs.begin(), mgs.end());
    std::vector<int> a{cls(l, "[1,1]+[1,2]+[2,2]"), cls(l, "[1,1]+[1,2]"), cls(l, "[1,1]"),
                       cls(l, "")};
    std::vector<int> b{cls(l, "[1,1]+[1,2]+[2,2]"), cls(l, "[2,2]"), cls(l, "")};
    CHECK(got == std::set<std::vector<int>>{a, b});
}
