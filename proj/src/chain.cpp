#include "torsion/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {

void validate_chain(const TorsLattice& l, const Chain& c) {
    if (c.classes.size() < 2) throw std::invalid_argument("chain: need at least [A, 0]");
    if (c.breakpoints.size() + 1 != c.classes.size())
        throw std::invalid_argument("chain: expected one breakpoint per step");
    if (c.classes.front() != l.full_id) throw std::invalid_argument("chain: first class must be A");
    if (c.classes.back() != l.zero_id) throw std::invalid_argument("chain: last class must be 0");
    for (int id : c.classes)
        if (id < 0 || id >= l.count()) throw std::invalid_argument("chain: class id out of range");
    for (size_t j = 0; j + 1 < c.classes.size(); ++j) {
        uint32_t hi = l.members(c.classes[j]), lo = l.members(c.classes[j + 1]);
        if ((lo & ~hi) != 0 || lo == hi)
            throw std::invalid_argument("chain: classes must strictly decrease");
    }
    for (size_t j = 0; j < c.breakpoints.size(); ++j) {
        if (c.breakpoints[j] < Phase(0) || c.breakpoints[j] > Phase(1))
            throw std::invalid_argument("chain: breakpoints must lie in [0,1]");
        if (j > 0 && c.breakpoints[j] < c.breakpoints[j - 1])
            throw std::invalid_argument("chain: breakpoints must be monotone");
    }
}

Chain normalize(const TorsLattice& l, const Chain& c) {
    validate_chain(l, c);
    Chain out = c;
    // classes[j] occupies (x_j, x_{j+1}]; collapse when that interval is empty
    for (size_t j = 0; j + 1 < out.breakpoints.size();) {
        if (out.breakpoints[j] == out.breakpoints[j + 1]) {
            out.classes.erase(out.classes.begin() + static_cast<long>(j) + 1);
            out.breakpoints.erase(out.breakpoints.begin() + static_cast<long>(j) + 1);
        } else {
            ++j;
        }
    }
    return out;
}

bool is_canonical(const TorsLattice& l, const Chain& c) {
    validate_chain(l, c);
    for (size_t j = 0; j + 1 < c.breakpoints.size(); ++j)
        if (c.breakpoints[j] == c.breakpoints[j + 1]) return false;
    return true;
}

int torsion_class_at(const TorsLattice& l, const Chain& c, const Phase& i) {
    if (i < Phase(0) || i > Phase(1)) throw std::invalid_argument("torsion_class_at: phase outside [0,1]");
    if (i == Phase(0)) return l.full_id;
    if (i == Phase(1)) return l.zero_id;
    size_t k = 0;
    while (k < c.breakpoints.size() && c.breakpoints[k] < i) ++k;
    return c.classes[k];
}

SlicingData slicing_support(const TorsLattice& l, const Chain& chain) {
    Chain c = normalize(l, chain);
    SlicingData s;
    for (size_t j = 0; j < c.breakpoints.size(); ++j) {
        SliceEntry e;
        e.phase = c.breakpoints[j];
        e.upper = c.classes[j];
        e.lower = c.classes[j + 1];
        e.members = l.members(e.upper) & l.perp[e.lower];
        s.support.push_back(e);
    }
    return s;
}

bool slice_member(const Context& ctx, const SliceEntry& e, const Module& m) {
    return !m.is_zero() && (summand_mask(ctx, m) & ~e.members) == 0;
}

HNFiltration hn_filtration(const TorsLattice& l, const Chain& chain, const Module& m) {
    if (m.is_zero()) throw std::invalid_argument("hn_filtration: zero module");
    Chain c = normalize(l, chain);
    const size_t mlen = c.breakpoints.size();
    const auto support = slicing_support(l, c).support;

    // per summand [a,b] and step j, the cut c*_j with t_{X_j}[a,b] = [c*_j, b]
    // (b+1 when the torsion part is zero); cuts increase with j
    const auto& cls = c.classes;
    std::vector<std::vector<int>> cut(m.summands.size(), std::vector<int>(mlen + 1));
    for (size_t s = 0; s < m.summands.size(); ++s) {
        Interval iv = m.summands[s];
        for (size_t j = 0; j <= mlen; ++j) {
            int cstar = iv.b + 1;
            for (int cc = iv.a; cc <= iv.b; ++cc)
                if (l.members(cls[j]) & (uint32_t(1) << l.ctx.idx(Interval{cc, iv.b}))) {
                    cstar = cc;
                    break;
                }
            cut[s][j] = cstar;
        }
    }

    HNFiltration hn;
    Module running;  // G_{j-1} accumulated from the top phase down
    for (size_t j = mlen; j >= 1; --j) {
        Module factor, sub;
        for (size_t s = 0; s < m.summands.size(); ++s) {
            if (cut[s][j - 1] < cut[s][j])
                factor.push(Interval{cut[s][j - 1], cut[s][j] - 1});
            if (cut[s][j - 1] <= m.summands[s].b)
                sub.push(Interval{cut[s][j - 1], m.summands[s].b});
        }
        if (factor.is_zero()) continue;
        if (!slice_member(l.ctx, support[j - 1], factor))
            throw std::logic_error("hn_filtration: factor not quasisemistable at its phase");
        hn.layers.push_back(HNLayer{sub, c.breakpoints[j - 1], factor});
        running = sub;
    }
    if (running != m) throw std::logic_error("hn_filtration: filtration does not reach M");
    return hn;
}

std::pair<Phase, Phase> mho_omega(const TorsLattice& l, const Chain& chain, const Module& m) {
    if (m.is_zero()) throw std::invalid_argument("mho_omega: zero module");
    Chain c = normalize(l, chain);
    uint32_t mask = summand_mask(l.ctx, m);
    const size_t mlen = c.breakpoints.size();
    size_t jstar = 0;
    for (size_t j = 0; j + 1 <= mlen; ++j)
        if ((mask & ~l.members(c.classes[j])) == 0) jstar = j; else break;
    Phase mho = c.breakpoints[jstar];
    Phase omega = c.breakpoints[mlen - 1];
    for (size_t j = 1; j <= mlen; ++j)
        if ((mask & ~l.perp[c.classes[j]]) == 0) { omega = c.breakpoints[j - 1]; break; }
    return {mho, omega};
}

std::vector<Phase> probe_points(const std::vector<const Chain*>& chains,
                                const std::vector<Phase>& extra) {
    std::vector<Phase> pts{Phase(0), Phase(1)};
    for (const Chain* c : chains)
        pts.insert(pts.end(), c->breakpoints.begin(), c->breakpoints.end());
    pts.insert(pts.end(), extra.begin(), extra.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Phase> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        out.push_back(pts[i]);
        if (i + 1 < pts.size()) out.push_back((pts[i] + pts[i + 1]) / 2);
    }
    return out;
}

bool chain_leq(const TorsLattice& l, const Chain& c1, const Chain& c2) {
    for (const Phase& p : probe_points({&c1, &c2})) {
        uint32_t a = l.members(torsion_class_at(l, c1, p));
        uint32_t b = l.members(torsion_class_at(l, c2, p));
        if ((a & ~b) != 0) return false;
    }
    return true;
}

bool is_split_chain(const TorsLattice& l, const Chain& c) {
    for (int id : c.classes)
        if ((l.members(id) | l.perp[id]) != l.ctx.full_mask) return false;
    return true;
}

bool all_indec_quasisemistable(const TorsLattice& l, const Chain& c) {
    uint32_t covered = 0;
    for (const auto& e : slicing_support(l, c).support) covered |= e.members;
    return covered == l.ctx.full_mask;
}

bool chains_equivalent(const TorsLattice& l, const Chain& c1, const Chain& c2) {
    auto s1 = slicing_support(l, c1).support;
    auto s2 = slicing_support(l, c2).support;
    return s1.size() == s2.size() && std::equal(s1.begin(), s1.end(), s2.begin());
}

Chain from_torsion_class(const TorsLattice& l, int id) {
    if (id == l.full_id || id == l.zero_id)
        throw std::invalid_argument("from_torsion_class: torsion class must be proper");
    return Chain{{l.full_id, id, l.zero_id}, {Phase(1, 3), Phase(2, 3)}};
}

}  // namespace torsion
