#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torsion/interval.hpp"

namespace torsion {

// Dense matrix over the two-element field, rows as bitmasks (<= 64 columns).
// Row-vector convention throughout: vectors live in rows, maps act as v * A.
struct Gf2Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint64_t> row;

    static Gf2Mat zero(int r, int c) { return Gf2Mat{r, c, std::vector<uint64_t>(r, 0)}; }
    static Gf2Mat identity(int d);
    bool get(int r, int c) const { return (row[r] >> c) & 1; }
    void set(int r, int c, bool v) {
        if (v) row[r] |= uint64_t(1) << c; else row[r] &= ~(uint64_t(1) << c);
    }
    bool operator==(const Gf2Mat&) const = default;
};

Gf2Mat gf2_mul(const Gf2Mat& a, const Gf2Mat& b);
Gf2Mat gf2_stack(const Gf2Mat& a, const Gf2Mat& b);
int gf2_rank(Gf2Mat a);
Gf2Mat gf2_rref(const Gf2Mat& a);  // canonical basis of the row space (no zero rows)
bool gf2_rowspace_contains(const Gf2Mat& rref, uint64_t v);
// All subspaces of F_2^d as canonical RREF bases, sorted by (dim, rows lex).
std::vector<Gf2Mat> gf2_subspaces(int d);

// Explicit representation of the quiver 1 -> 2 -> ... -> n: one space per
// vertex, maps[i] is the dims[i] x dims[i+1] matrix of the arrow i -> i+1.
struct Rep {
    std::vector<int> dims;
    std::vector<Gf2Mat> maps;

    int total_dim() const;
};

// A subrepresentation: per-vertex RREF bases, closed under the arrow maps.
struct SubRep {
    std::vector<Gf2Mat> bases;

    int total_dim() const;
    bool operator==(const SubRep&) const = default;
};

Rep module_to_rep(const Context& ctx, const Module& m);

// Interval decomposition by rank counts: multiplicity of [a,b] is
// r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1) with r(a,b) the rank of the
// composite map from vertex a to vertex b and out-of-range r = 0.
Module decompose_rep(const Context& ctx, const Rep& r);

// Every subrepresentation (deduplicated by subspace, not isomorphism class),
// paired with the module class of the subobject. Refuses total_dim > bound.
std::vector<std::pair<SubRep, Module>> subreps(const Context& ctx, const Rep& r, int dim_bound = 8);

bool is_subrep(const Rep& r, const SubRep& s);

// Module class of the quotient R/S. Rejects non-invariant subspaces.
Module quotient(const Context& ctx, const Rep& r, const SubRep& s);

Module subrep_class(const Context& ctx, const Rep& r, const SubRep& s);

// Class of outer/inner for nested subrepresentations inner <= outer of r.
Module relative_quotient_class(const Context& ctx, const Rep& r, const SubRep& outer,
                               const SubRep& inner);

// Per-vertex rowspace containment: inner <= outer.
bool subrep_contained(const SubRep& inner, const SubRep& outer);

// dim Hom as solution space of the intertwiner equations A_i F_{i+1} = F_i B_i.
int hom_dim(const Context& ctx, const Rep& r1, const Rep& r2);

// dim Ext^1 via the projective resolution 0 -> P_{y+1} -> P_x -> M[x,y] -> 0,
// extended additively over the decomposition of r1.
int ext_dim(const Context& ctx, const Rep& r1, const Rep& r2);

struct Ses {
    Module sub, whole, quot;
    auto operator<=>(const Ses&) const = default;
};

// One triple per subrepresentation of M (trivial ends included).
std::vector<Ses> enumerate_ses(const Context& ctx, const Module& m, int dim_bound = 8);

}  // namespace torsion
