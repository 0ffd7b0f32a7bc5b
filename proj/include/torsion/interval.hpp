#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace torsion {

// Indecomposable module of the linearly oriented A_n quiver 1 -> 2 -> ... -> n,
// supported on vertices a..b (1-indexed, a <= b <= n).
struct Interval {
    int a = 0;
    int b = 0;

    int dim() const { return b - a + 1; }
    auto operator<=>(const Interval&) const = default;
};

// Finite multiset of intervals, kept sorted. Empty list is the zero module.
struct Module {
    std::vector<Interval> summands;

    bool is_zero() const { return summands.empty(); }
    int total_dim() const;
    void push(Interval i);  // inserts keeping the sorted order
    auto operator<=>(const Module&) const = default;
};

// The ambient category mod kA_n together with precomputed closure tables for
// the n(n+1)/2 indecomposables. Bitsets over the lexicographic interval order
// are the working representation of subcategories everywhere.
struct Context {
    int n = 0;
    std::vector<Interval> indecs;           // lexicographic on (a,b)
    uint32_t full_mask = 0;
    std::vector<uint32_t> quot_mask;        // nonzero quotients of indec i (includes i)
    std::vector<uint32_t> sub_mask;         // nonzero subobjects of indec i (includes i)
    std::vector<uint32_t> hom_to;           // { j : Hom(I_i, I_j) != 0 }
    std::vector<uint32_t> middle_mask;      // N*N flat; summands of the nonsplit middle, 0 if Ext=0

    int count() const { return static_cast<int>(indecs.size()); }
    int idx(Interval x) const;
    uint32_t middle(int top, int bottom) const { return middle_mask[top * count() + bottom]; }
};

Context make_context(int n);

// Hom(M[a,b], M[c,d]) != 0  iff  c <= a <= d <= b; spaces are at most 1-dim.
bool hom_nonzero(Interval x, Interval y);

// Ext^1(M[x,y], M[u,v]) != 0  iff  x < u <= y+1 <= v; spaces are at most 1-dim.
bool ext_nonzero(Interval x, Interval y);

// Middle term of the unique nonsplit sequence 0 -> Y -> E -> X -> 0.
// Requires ext_nonzero(x, y).
Module nonsplit_middle(Interval x, Interval y);

struct SubQuotients {
    std::vector<Module> subobjects;  // [a,b] > [a+1,b] > ... > [b,b] > 0, a chain
    std::vector<Module> quotients;   // [a,b], [a,b-1], ..., [a,a], 0
};
SubQuotients indec_subquotients(Interval x);

std::vector<int> dim_vector(const Context& ctx, const Module& m);
uint32_t summand_mask(const Context& ctx, const Module& m);

Module module_from_mask(const Context& ctx, uint32_t mask);  // one copy of each member

// Text format: "[a,b]" / "[a,b]+[c,d]*k" / "0".
std::string module_str(const Module& m);
Module parse_module(const Context& ctx, std::string_view s);

// All nonzero modules of total dimension <= bound, in a fixed canonical order.
std::vector<Module> enumerate_modules(const Context& ctx, int max_total_dim);

std::string interval_str(Interval x);

}  // namespace torsion
