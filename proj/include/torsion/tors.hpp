#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torsion/interval.hpp"

namespace torsion {

struct TorsionClass {
    uint32_t members = 0;  // bitset over indecomposables
    int id = -1;
};

struct HasseEdge {
    int upper = -1;
    int lower = -1;
    Interval brick;
};

// The lattice Tors(mod kA_n). Classes are sorted by (popcount, bits) so ids
// are stable across runs and in file output.
struct TorsLattice {
    Context ctx;
    std::vector<TorsionClass> classes;
    std::vector<HasseEdge> hasse;          // covering pairs with brick labels
    std::vector<uint32_t> perp;            // per class: intervals of T^perp
    int full_id = -1;
    int zero_id = -1;

    int count() const { return static_cast<int>(classes.size()); }
    uint32_t members(int id) const { return classes[id].members; }
    bool leq(int a, int b) const { return (members(a) & ~members(b)) == 0; }
    int id_of(uint32_t mask) const;  // -1 if not a class
};

// Closed under quotients of indecomposables and under the summands of
// nonsplit extension middles of member pairs; coproduct closure is automatic
// at this scale.
bool is_torsion_class(const Context& ctx, uint32_t mask);

// Least fixed point adding interval quotients and nonsplit-middle summands:
// the smallest torsion class containing the given intervals.
uint32_t filt_closure(const Context& ctx, uint32_t mask);

// Extension closure only (no quotients): the smallest extension-closed
// additive subcategory, as a bitset of indecomposables.
uint32_t ext_closure(const Context& ctx, uint32_t mask);

// Intervals receiving no nonzero map from any member of the mask.
uint32_t perp_mask(const Context& ctx, uint32_t mask);

// Full subset scan for n <= 4, closure-image dedup for n = 5.
TorsLattice enumerate_torsion_classes(const Context& ctx, int n_bound = 5);

// Canonical sequence 0 -> tM -> M -> fM -> 0 for the pair (T, T^perp):
// summand [a,b] contributes its largest tail [c,b] lying in T.
std::pair<Module, Module> torsion_subobject(const Context& ctx, uint32_t t_members, const Module& m);

bool in_torsionfree(const Context& ctx, uint32_t t_members, const Module& m);

// All maximal chains A = T_0 > T_1 > ... > T_m = 0 through covering
// relations, sorted lexicographically by id sequence.
std::vector<std::vector<int>> maximal_green_sequences(const TorsLattice& l);

std::string class_str(const TorsLattice& l, int id);

}  // namespace torsion
