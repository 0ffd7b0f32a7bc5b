#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsion/chain.hpp"

namespace torsion {

// d(c1, c2) = max over indecomposables I of
// max(|mho_1(I) - mho_2(I)|, |omega_1(I) - omega_2(I)|). The restriction to
// indecomposables is exact: mho/omega obey min/max laws over direct sums.
Rat distance(const TorsLattice& l, const Chain& c1, const Chain& c2);

// The same value as the least epsilon such that every slice of one chain is
// filtered by the slices of the other within a closed phase window of radius
// epsilon, and symmetrically. Candidates are the pairwise differences of
// support phases; window membership of an interval I in Filt of a slice
// union is exactly mho(I) >= r-eps and omega(I) <= r+eps.
Rat distance_filt_formula(const TorsLattice& l, const Chain& c1, const Chain& c2);

// Strict open ball membership, 0 < eps < 1.
bool ball_contains(const TorsLattice& l, const Chain& center, const Rat& eps, const Chain& probe);

// The nerve of Tors(A): simplices are the strictly decreasing sequences from
// A to 0, closed under subsequences; facets are the maximal ones. f_vector[k]
// counts the sequences with k+2 classes (k+1 breakpoint slots), k >= 0.
struct NerveComplex {
    std::vector<std::vector<int>> simplices;
    std::vector<std::vector<int>> facets;
    std::vector<long long> f_vector;
};
NerveComplex nerve(const TorsLattice& l);

// For S_sub a subsequence of S: the unique increasing injection f on class
// indices with X'_m = X_{f(m)}, and the companion surjection g on slot
// indices with g(f(b)) = b and P^S_a contained in P^{S_sub}_{g(a)}.
struct SubseqMaps {
    std::vector<int> f;
    std::vector<int> g;
};
std::optional<SubseqMaps> subsequence_map(const TorsLattice& l, const std::vector<int>& s_sub,
                                          const std::vector<int>& s);

// Every consecutive class pair is a covering relation of the lattice.
bool is_chamber(const TorsLattice& l, const Chain& c);

struct ChamberReport {
    bool passed = true;
    int probes_within = 0;
    std::vector<std::string> failures;
};
// For every probe within distance eps of c: identical Harder-Narasimhan
// layers (subobjects and factors) on every module up to dim_bound, with
// phases shifted by at most eps. Requires is_chamber(c) and eps below half
// the minimum gap between consecutive breakpoints.
ChamberReport chamber_local_constancy(const TorsLattice& l, const Chain& c, const Rat& eps,
                                      const std::vector<Chain>& probes, int dim_bound);

// For a non-chamber chain: a refining probe within distance < eps together
// with a module whose filtration changes (the constructive half of the
// chamber correspondence).
struct ChamberRefutation {
    Chain probe;
    Module witness;
};
std::optional<ChamberRefutation> chamber_refutation(const TorsLattice& l, const Chain& c,
                                                    const Rat& eps, int dim_bound);

struct WallLocus {
    bool member = false;   // X quasisemistable for c, i.e. c in L(X)
    Rat lower_bound;       // (omega - mho)/2 bounds d(c, -) from below on L(X)
};
WallLocus wall_locus(const TorsLattice& l, const Chain& c, const Module& x);

// Membership in the twin-torsion-pair set: T_i = A on [0,a), some class
// between X and X' on (a,b), and 0 on (b,1].
bool twin_locus_member(const TorsLattice& l, const Chain& c, uint32_t x, uint32_t x_prime,
                       const Phase& a, const Phase& b);

// One chain per torsion class: the constant chain at T (breakpoints (0,1)),
// with the two trivial chains for A and 0. Pairwise distances are all 1.
std::vector<Chain> separated_family(const TorsLattice& l);

struct CompactnessReport {
    int tors_count = 0;
    std::vector<long long> f_vector;
    long long facet_count = 0;
    long long simplex_count = 0;
    std::string verdict;
};
CompactnessReport compactness_report(const TorsLattice& l);

}  // namespace torsion
