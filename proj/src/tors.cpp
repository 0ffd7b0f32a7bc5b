#include "torsion/tors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace torsion {

int TorsLattice::id_of(uint32_t mask) const {
    for (const auto& c : classes)
        if (c.members == mask) return c.id;
    return -1;
}

bool is_torsion_class(const Context& ctx, uint32_t mask) {
    const int N = ctx.count();
    for (int i = 0; i < N; ++i) {
        if (!(mask & (uint32_t(1) << i))) continue;
        if ((ctx.quot_mask[i] & ~mask) != 0) return false;
    }
    for (int i = 0; i < N; ++i) {
        if (!(mask & (uint32_t(1) << i))) continue;
        for (int j = 0; j < N; ++j) {
            if (!(mask & (uint32_t(1) << j))) continue;
            uint32_t mid = ctx.middle(i, j);
            if (mid && (mid & ~mask) != 0) return false;
        }
    }
    return true;
}

namespace {

uint32_t closure(const Context& ctx, uint32_t mask, bool with_quotients) {
    const int N = ctx.count();
    bool changed = true;
    while (changed) {
        changed = false;
        uint32_t next = mask;
        for (int i = 0; i < N; ++i) {
            if (!(mask & (uint32_t(1) << i))) continue;
            if (with_quotients) next |= ctx.quot_mask[i];
            for (int j = 0; j < N; ++j)
                if (mask & (uint32_t(1) << j)) next |= ctx.middle(i, j);
        }
        if (next != mask) {
            mask = next;
            changed = true;
        }
    }
    return mask;
}

}  // namespace

uint32_t filt_closure(const Context& ctx, uint32_t mask) { return closure(ctx, mask, true); }

uint32_t ext_closure(const Context& ctx, uint32_t mask) { return closure(ctx, mask, false); }

uint32_t perp_mask(const Context& ctx, uint32_t mask) {
    uint32_t hit = 0;
    for (int i = 0; i < ctx.count(); ++i)
        if (mask & (uint32_t(1) << i)) hit |= ctx.hom_to[i];
    return ctx.full_mask & ~hit;
}

namespace {

std::vector<uint32_t> sorted_masks(std::vector<uint32_t> masks) {
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

}  // namespace

TorsLattice enumerate_torsion_classes(const Context& ctx, int n_bound) {
    if (ctx.n > n_bound)
        throw std::invalid_argument("enumerate_torsion_classes: n=" + std::to_string(ctx.n) +
                                    " exceeds bound " + std::to_string(n_bound));
    const int N = ctx.count();
    std::vector<uint32_t> masks;
    if (N <= 10) {
        for (uint32_t s = 0; s <= ctx.full_mask; ++s)
            if (is_torsion_class(ctx, s)) masks.push_back(s);
    } else {
        std::set<uint32_t> seen;
        for (uint32_t s = 0; s <= ctx.full_mask; ++s) seen.insert(filt_closure(ctx, s));
        masks.assign(seen.begin(), seen.end());
    }
    masks = sorted_masks(std::move(masks));

    TorsLattice l;
    l.ctx = ctx;
    for (size_t i = 0; i < masks.size(); ++i)
        l.classes.push_back(TorsionClass{masks[i], static_cast<int>(i)});
    l.full_id = l.id_of(ctx.full_mask);
    l.zero_id = l.id_of(0);
    for (const auto& c : l.classes) l.perp.push_back(perp_mask(ctx, c.members));

    // covering pairs and brick labels
    for (int u = 0; u < l.count(); ++u)
        for (int v = 0; v < l.count(); ++v) {
            if (u == v || !l.leq(v, u)) continue;
            bool cover = true;
            for (int w = 0; w < l.count() && cover; ++w)
                if (w != u && w != v && l.leq(v, w) && l.leq(w, u)) cover = false;
            if (!cover) continue;
            std::vector<Interval> labels;
            uint32_t diff = l.members(u) & ~l.members(v);
            for (int i = 0; i < N; ++i) {
                if (!(diff & (uint32_t(1) << i))) continue;
                Interval b = ctx.indecs[i];
                if (filt_closure(ctx, l.members(v) | (uint32_t(1) << i)) == l.members(u) &&
                    in_torsionfree(ctx, l.members(v), Module{{b}}))
                    labels.push_back(b);
            }
            if (labels.size() != 1)
                throw std::logic_error("hasse: expected exactly one brick label on edge " +
                                       std::to_string(u) + " > " + std::to_string(v) + ", got " +
                                       std::to_string(labels.size()));
            l.hasse.push_back(HasseEdge{u, v, labels[0]});
        }
    std::sort(l.hasse.begin(), l.hasse.end(), [](const HasseEdge& a, const HasseEdge& b) {
        if (a.upper != b.upper) return a.upper < b.upper;
        return a.lower < b.lower;
    });
    return l;
}

std::pair<Module, Module> torsion_subobject(const Context& ctx, uint32_t t_members, const Module& m) {
    Module t, f;
    for (const auto& s : m.summands) {
        int cstar = -1;
        for (int c = s.a; c <= s.b; ++c)
            if (t_members & (uint32_t(1) << ctx.idx(Interval{c, s.b}))) { cstar = c; break; }
        if (cstar < 0) {
            f.push(s);
        } else {
            t.push(Interval{cstar, s.b});
            if (cstar > s.a) f.push(Interval{s.a, cstar - 1});
        }
    }
    return {t, f};
}

bool in_torsionfree(const Context& ctx, uint32_t t_members, const Module& m) {
    return (summand_mask(ctx, m) & ~perp_mask(ctx, t_members)) == 0;
}

namespace {

void mgs_rec(const TorsLattice& l, std::vector<std::vector<int>>& lowers, int at,
             std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (at == l.zero_id) {
        out.push_back(cur);
        return;
    }
    for (int nxt : lowers[at]) {
        cur.push_back(nxt);
        mgs_rec(l, lowers, nxt, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> maximal_green_sequences(const TorsLattice& l) {
    std::vector<std::vector<int>> lowers(l.count());
    for (const auto& e : l.hasse) lowers[e.upper].push_back(e.lower);
    for (auto& v : lowers) std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    std::vector<int> cur{l.full_id};
    mgs_rec(l, lowers, l.full_id, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string class_str(const TorsLattice& l, int id) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < l.ctx.count(); ++i)
        if (l.members(id) & (uint32_t(1) << i)) {
            if (!first) s += ",";
            s += interval_str(l.ctx.indecs[i]);
            first = false;
        }
    return s + "}";
}

}  // namespace torsion
