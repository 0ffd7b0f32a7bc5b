#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torsion/chain.hpp"
#include "torsion/gf2.hpp"

namespace torsion {

// The three representable kinds of weak stability condition. Chain-induced
// phases are the last/first Harder-Narasimhan phases; a central charge takes
// the slope mu(M) = (theta.dim M)/(delta.dim M) compactified into (0,1) by
// the order isomorphism sigma(x) = 1/2 + x/(2(1+|x|)).
struct ChainMho {
    Chain chain;
};
struct ChainOmega {
    Chain chain;
};
struct CentralCharge {
    std::vector<long long> theta;
    std::vector<long long> delta;  // strictly positive entries
};
using WeakStability = std::variant<ChainMho, ChainOmega, CentralCharge>;

Phase phase(const TorsLattice& l, const WeakStability& w, const Module& m);

struct SeesawVerdict {
    bool weak_passed = true;            // phi L <= phi M <= phi N or reversed
    std::optional<Ses> weak_witness;
    bool seesaw_passed = true;          // strict see-saw (<,<,<), (=,=,=) or (>,>,>)
    std::optional<Ses> seesaw_witness;
};
// Scans every short exact sequence of nonzero objects among modules of total
// dimension <= dim_bound.
SeesawVerdict check_weak_seesaw(const TorsLattice& l, const WeakStability& w, int dim_bound);

// phi(L) <= phi(M/L) for every proper nonzero subobject, enumerated by the
// gf2 oracle.
bool is_semistable(const TorsLattice& l, const WeakStability& w, const Module& m,
                   int dim_bound = 8);

// A semistable subobject M' with phi(M') >= phi(L) for all subobjects L;
// ties broken by maximal dimension then canonical module order.
Module max_destabilizing_subobject(const TorsLattice& l, const WeakStability& w, const Module& m,
                                   int dim_bound = 8);

struct TorsCuts {
    uint32_t geq = 0;  // intervals whose every quotient has phase >= p
    uint32_t gt = 0;   // strict version
};
TorsCuts tors_cuts(const TorsLattice& l, const WeakStability& w, const Phase& p);

// The chains eta+ (classes T_{>=s}) and eta- (classes T_{>s}) induced by the
// cut values of w, in canonical form. On finite step chains the two
// assemblies must agree.
std::pair<Chain, Chain> eta_pm(const TorsLattice& l, const WeakStability& w);

struct SliceCheckReport {
    bool passed = true;
    std::vector<std::string> counterexamples;
};
// P_t of eta_pm(w) = { M semistable with phase t }, both sides computed
// independently, for every module up to dim_bound.
SliceCheckReport semistable_slice_check(const TorsLattice& l, const WeakStability& w,
                                        int dim_bound);

// tors_cuts(w,p).geq equals the filt closure of the semistable intervals of
// phase >= p, and every semistable module of phase >= p lies in the class.
bool filt_description_check(const TorsLattice& l, const WeakStability& w, const Phase& p,
                            int dim_bound);

struct StabilityProfile {
    bool constant = false;      // one phase value across all modules
    bool stability = false;     // strict see-saw on all tested sequences
    bool omega_eq_mho = false;  // pointwise equality of the two chain phases
    bool single_slice = false;  // exactly one nonzero quasisemistable phase
};
// The four predicates are computed independently; they must coincide.
// Requires a chain-induced kind.
StabilityProfile is_stability_and_constant(const TorsLattice& l, const WeakStability& w,
                                           int dim_bound);

// Pointwise phi1 <= phi2 over all modules of total dimension <= dim_bound.
bool wsc_leq(const TorsLattice& l, const WeakStability& w1, const WeakStability& w2,
             int dim_bound);

}  // namespace torsion
