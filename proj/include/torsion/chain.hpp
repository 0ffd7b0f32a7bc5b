#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torsion/rational.hpp"
#include "torsion/tors.hpp"

namespace torsion {

using Phase = Rat;

// Finite step chain of torsion classes, as a function [0,1] -> Tors(A):
//   T_i = classes[0] (= A)  on [0, x_1],
//   T_i = classes[j]        on (x_j, x_{j+1}] for 1 <= j < m,
//   T_i = classes[m] (= 0)  on (x_m, 1],
// with T(0) = A and T(1) = 0 always forced. classes strictly decrease;
// breakpoints are monotone in [0,1]. Canonical form has strictly increasing
// breakpoints (boundary values 0 and 1 are admitted).
struct Chain {
    std::vector<int> classes;      // ids into a TorsLattice, classes[0]=A, back()=0
    std::vector<Phase> breakpoints;

    auto operator<=>(const Chain&) const = default;
};

// Throws std::invalid_argument on malformed chains.
void validate_chain(const TorsLattice& l, const Chain& c);

// Collapses classes occupying empty intervals (equal adjacent breakpoints).
// Evaluates identically as a function [0,1] -> Tors(A).
Chain normalize(const TorsLattice& l, const Chain& c);

bool is_canonical(const TorsLattice& l, const Chain& c);

// Step evaluation with forced endpoints; order-reversing in i.
int torsion_class_at(const TorsLattice& l, const Chain& c, const Phase& i);

// One entry per breakpoint x_j of the canonical form: the quasisemistable
// category P_{x_j} = X_{j-1} /\ X_j^perp, as the bitset of its intervals.
// P_t = {0} everywhere else, including the endpoints unless they are
// breakpoints themselves.
struct SliceEntry {
    Phase phase;
    int upper = -1;   // X_{j-1}
    int lower = -1;   // X_j
    uint32_t members = 0;

    bool operator==(const SliceEntry& o) const { return phase == o.phase && members == o.members; }
};
struct SlicingData {
    std::vector<SliceEntry> support;  // phases strictly increasing
};
SlicingData slicing_support(const TorsLattice& l, const Chain& c);

bool slice_member(const Context& ctx, const SliceEntry& e, const Module& m);

struct HNLayer {
    Module subobject;
    Phase phase;
    Module factor;
};
// Layers ordered by strictly decreasing phase; subobjects strictly increase
// up to M; every factor is nonzero and quasisemistable at its phase.
struct HNFiltration {
    std::vector<HNLayer> layers;
};
HNFiltration hn_filtration(const TorsLattice& l, const Chain& c, const Module& m);

// (mho, omega) = (sup { i : M in T_i }, inf { i : M in F_i }); these are the
// last and first Harder-Narasimhan phases of M.
std::pair<Phase, Phase> mho_omega(const TorsLattice& l, const Chain& c, const Module& m);

// Pointwise containment T_i(c1) <= T_i(c2) for all i, decided exactly on the
// merged breakpoint partition.
bool chain_leq(const TorsLattice& l, const Chain& c1, const Chain& c2);

// Every evaluated torsion pair is split: each indecomposable lies in T or F.
bool is_split_chain(const TorsLattice& l, const Chain& c);

// Each indecomposable is quasisemistable at some phase of the chain.
bool all_indec_quasisemistable(const TorsLattice& l, const Chain& c);

bool chains_equivalent(const TorsLattice& l, const Chain& c1, const Chain& c2);

// The two-slice chain ([A, T, 0], (1/3, 2/3)) of a proper torsion class.
Chain from_torsion_class(const TorsLattice& l, int id);

// Exact probe points deciding any pointwise predicate on the given chains:
// all breakpoints, 0, 1, extra values, and midpoints of consecutive values.
std::vector<Phase> probe_points(const std::vector<const Chain*>& chains,
                                const std::vector<Phase>& extra = {});

}  // namespace torsion
