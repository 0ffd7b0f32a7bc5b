#include "torsion/slice_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torsion {

namespace {

// per-indecomposable (mho, omega) table
std::vector<std::pair<Phase, Phase>> phase_table(const TorsLattice& l, const Chain& c) {
    std::vector<std::pair<Phase, Phase>> t;
    t.reserve(l.ctx.count());
    for (const auto& iv : l.ctx.indecs) t.push_back(mho_omega(l, c, Module{{iv}}));
    return t;
}

}  // namespace

Rat distance(const TorsLattice& l, const Chain& c1, const Chain& c2) {
    auto t1 = phase_table(l, c1), t2 = phase_table(l, c2);
    Rat d(0);
    for (int i = 0; i < l.ctx.count(); ++i) {
        d = std::max(d, rat_abs(t1[i].first - t2[i].first));
        d = std::max(d, rat_abs(t1[i].second - t2[i].second));
    }
    return d;
}

namespace {

// P^{c2}_r subset of Filt(union of P^{c1}_t over t in [r-eps, r+eps]) for all
// support entries r of c2: an interval of the slice belongs to the Filt of a
// window union exactly when both its phases lie in the window.
bool filt_windows_ok(const TorsLattice& l, const std::vector<SliceEntry>& supp2,
                     const std::vector<std::pair<Phase, Phase>>& table1, const Rat& eps) {
    for (const auto& e : supp2) {
        for (int i = 0; i < l.ctx.count(); ++i) {
            if (!(e.members & (uint32_t(1) << i))) continue;
            if (table1[i].first < e.phase - eps || table1[i].second > e.phase + eps) return false;
        }
    }
    return true;
}

}  // namespace

Rat distance_filt_formula(const TorsLattice& l, const Chain& c1, const Chain& c2) {
    auto s1 = slicing_support(l, c1).support;
    auto s2 = slicing_support(l, c2).support;
    auto t1 = phase_table(l, c1), t2 = phase_table(l, c2);

    std::set<Rat> candidates{Rat(0)};
    for (const auto& a : s1)
        for (const auto& b : s2) candidates.insert(rat_abs(a.phase - b.phase));
    // phase deviations are candidates too: the window must reach the extreme
    // mho/omega of the intervals of each slice
    for (const auto& e : s2)
        for (int i = 0; i < l.ctx.count(); ++i)
            if (e.members & (uint32_t(1) << i)) {
                candidates.insert(rat_abs(t1[i].first - e.phase));
                candidates.insert(rat_abs(t1[i].second - e.phase));
            }
    for (const auto& e : s1)
        for (int i = 0; i < l.ctx.count(); ++i)
            if (e.members & (uint32_t(1) << i)) {
                candidates.insert(rat_abs(t2[i].first - e.phase));
                candidates.insert(rat_abs(t2[i].second - e.phase));
            }

    for (const Rat& eps : candidates)
        if (filt_windows_ok(l, s2, t1, eps) && filt_windows_ok(l, s1, t2, eps)) return eps;
    throw std::logic_error("distance_filt_formula: no feasible candidate");
}

bool ball_contains(const TorsLattice& l, const Chain& center, const Rat& eps, const Chain& probe) {
    if (eps <= Rat(0) || eps >= Rat(1))
        throw std::invalid_argument("ball_contains: eps must lie in (0,1)");
    return distance(l, center, probe) < eps;
}

namespace {

void nerve_rec(const TorsLattice& l, int at, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
    if (at == l.zero_id) {
        out.push_back(cur);
        return;
    }
    for (int nxt = 0; nxt < l.count(); ++nxt) {
        if (nxt == at || !l.leq(nxt, at)) continue;
        cur.push_back(nxt);
        nerve_rec(l, nxt, cur, out);
        cur.pop_back();
    }
}

}  // namespace

NerveComplex nerve(const TorsLattice& l) {
    NerveComplex nc;
    std::vector<int> cur{l.full_id};
    nerve_rec(l, l.full_id, cur, nc.simplices);
    std::sort(nc.simplices.begin(), nc.simplices.end());

    // a simplex is maximal iff no class can be inserted between two
    // consecutive entries (the endpoints A and 0 are always present)
    auto is_facet = [&](const std::vector<int>& s) {
        for (size_t j = 0; j + 1 < s.size(); ++j)
            for (int w = 0; w < l.count(); ++w) {
                if (w == s[j] || w == s[j + 1]) continue;
                if (l.leq(w, s[j]) && l.leq(s[j + 1], w)) return false;
            }
        return true;
    };
    for (const auto& s : nc.simplices) {
        size_t len = s.size() - 1;
        if (nc.f_vector.size() < len) nc.f_vector.resize(len, 0);
        ++nc.f_vector[len - 1];
        if (is_facet(s)) nc.facets.push_back(s);
    }
    return nc;
}

std::optional<SubseqMaps> subsequence_map(const TorsLattice& l, const std::vector<int>& s_sub,
                                          const std::vector<int>& s) {
    SubseqMaps maps;
    size_t at = 0;
    for (int cls : s_sub) {
        while (at < s.size() && s[at] != cls) ++at;
        if (at == s.size()) return std::nullopt;
        maps.f.push_back(static_cast<int>(at));
        ++at;
    }
    if (maps.f.front() != 0 || maps.f.back() != static_cast<int>(s.size()) - 1)
        return std::nullopt;

    // g(alpha) = min { beta >= 1 : f(beta) >= alpha } on slot indices 1..n
    const int n = static_cast<int>(s.size()) - 1;
    const int np = static_cast<int>(s_sub.size()) - 1;
    for (int alpha = 1; alpha <= n; ++alpha) {
        int beta = 1;
        while (beta <= np && maps.f[beta] < alpha) ++beta;
        maps.g.push_back(beta);
    }
    for (int beta = 1; beta <= np; ++beta)
        if (maps.g[maps.f[beta] - 1] != beta)
            throw std::logic_error("subsequence_map: g . f is not the identity");
    for (int alpha = 1; alpha <= n; ++alpha) {
        uint32_t p_s = l.members(s[alpha - 1]) & l.perp[s[alpha]];
        int beta = maps.g[alpha - 1];
        uint32_t p_sub = l.members(s_sub[beta - 1]) & l.perp[s_sub[beta]];
        if ((p_s & ~p_sub) != 0)
            throw std::logic_error("subsequence_map: slice containment fails");
    }
    return maps;
}

bool is_chamber(const TorsLattice& l, const Chain& chain) {
    Chain c = normalize(l, chain);
    for (size_t j = 0; j + 1 < c.classes.size(); ++j) {
        bool cover = false;
        for (const auto& e : l.hasse)
            if (e.upper == c.classes[j] && e.lower == c.classes[j + 1]) { cover = true; break; }
        if (!cover) return false;
    }
    return true;
}

namespace {

bool same_layers(const HNFiltration& a, const HNFiltration& b, const Rat& eps) {
    if (a.layers.size() != b.layers.size()) return false;
    for (size_t i = 0; i < a.layers.size(); ++i) {
        if (a.layers[i].subobject != b.layers[i].subobject) return false;
        if (a.layers[i].factor != b.layers[i].factor) return false;
        if (rat_abs(a.layers[i].phase - b.layers[i].phase) > eps) return false;
    }
    return true;
}

}  // namespace

ChamberReport chamber_local_constancy(const TorsLattice& l, const Chain& chain, const Rat& eps,
                                      const std::vector<Chain>& probes, int dim_bound) {
    Chain c = normalize(l, chain);
    if (!is_chamber(l, c))
        throw std::invalid_argument("chamber_local_constancy: chain is not a chamber");
    if (eps <= Rat(0)) throw std::invalid_argument("chamber_local_constancy: eps must be positive");
    for (size_t j = 0; j + 1 < c.breakpoints.size(); ++j)
        if (eps >= (c.breakpoints[j + 1] - c.breakpoints[j]) / 2)
            throw std::invalid_argument(
                "chamber_local_constancy: eps must be below half the minimum breakpoint gap");

    ChamberReport rep;
    auto modules = enumerate_modules(l.ctx, dim_bound);
    for (const auto& probe : probes) {
        if (distance(l, c, probe) >= eps) continue;
        ++rep.probes_within;
        for (const auto& m : modules) {
            auto h1 = hn_filtration(l, c, m);
            auto h2 = hn_filtration(l, probe, m);
            if (!same_layers(h1, h2, eps)) {
                rep.passed = false;
                rep.failures.push_back("module " + module_str(m) + " changes filtration");
            }
        }
    }
    return rep;
}

std::optional<ChamberRefutation> chamber_refutation(const TorsLattice& l, const Chain& chain,
                                                    const Rat& eps, int dim_bound) {
    Chain c = normalize(l, chain);
    if (is_chamber(l, c)) return std::nullopt;
    if (eps <= Rat(0)) throw std::invalid_argument("chamber_refutation: eps must be positive");

    // find a non-cover step and a class strictly between
    size_t step = 0;
    int mid = -1;
    for (size_t j = 0; j + 1 < c.classes.size() && mid < 0; ++j) {
        for (int w = 0; w < l.count() && mid < 0; ++w) {
            if (w == c.classes[j] || w == c.classes[j + 1]) continue;
            if (l.leq(w, c.classes[j]) && l.leq(c.classes[j + 1], w)) {
                step = j;
                mid = w;
            }
        }
    }
    if (mid < 0) throw std::logic_error("chamber_refutation: no refinement found");

    // insert mid next to breakpoint x_{step+1}, on whichever side has room
    const Phase x = c.breakpoints[step];
    const Phase before = step == 0 ? Phase(0) : c.breakpoints[step - 1];
    const Phase after = step + 1 < c.breakpoints.size() ? c.breakpoints[step + 1] : Phase(1);
    Chain probe = c;
    if (after > x) {
        Phase delta = std::min(eps, after - x) / 2;
        probe.classes.insert(probe.classes.begin() + static_cast<long>(step) + 1, mid);
        probe.breakpoints.insert(probe.breakpoints.begin() + static_cast<long>(step) + 1, x + delta);
    } else {
        Phase delta = std::min(eps, x - before) / 2;
        probe.classes.insert(probe.classes.begin() + static_cast<long>(step) + 1, mid);
        probe.breakpoints.insert(probe.breakpoints.begin() + static_cast<long>(step), x - delta);
    }
    validate_chain(l, probe);

    for (const auto& m : enumerate_modules(l.ctx, dim_bound)) {
        auto h1 = hn_filtration(l, c, m);
        auto h2 = hn_filtration(l, probe, m);
        if (!same_layers(h1, h2, Rat(1)))
            return ChamberRefutation{probe, m};
    }
    return std::nullopt;
}

WallLocus wall_locus(const TorsLattice& l, const Chain& c, const Module& x) {
    if (x.is_zero()) throw std::invalid_argument("wall_locus: zero module");
    auto [mho, omega] = mho_omega(l, c, x);
    return WallLocus{mho == omega, (omega - mho) / 2};
}

bool twin_locus_member(const TorsLattice& l, const Chain& c, uint32_t x, uint32_t x_prime,
                       const Phase& a, const Phase& b) {
    if ((x & ~x_prime) != 0)
        throw std::invalid_argument("twin_locus_member: need X contained in X'");
    if (!(a < b)) throw std::invalid_argument("twin_locus_member: need a < b");
    for (const Phase& p : probe_points({&c}, {a, b})) {
        if (p == a || p == b) continue;
        uint32_t cls = l.members(torsion_class_at(l, c, p));
        if (p < a && cls != l.ctx.full_mask) return false;
        if (a < p && p < b && ((x & ~cls) != 0 || (cls & ~x_prime) != 0)) return false;
        if (p > b && cls != 0) return false;
    }
    return true;
}

std::vector<Chain> separated_family(const TorsLattice& l) {
    std::vector<Chain> out;
    for (const auto& t : l.classes) {
        if (t.id == l.zero_id)
            out.push_back(Chain{{l.full_id, l.zero_id}, {Phase(0)}});
        else if (t.id == l.full_id)
            out.push_back(Chain{{l.full_id, l.zero_id}, {Phase(1)}});
        else
            out.push_back(Chain{{l.full_id, t.id, l.zero_id}, {Phase(0), Phase(1)}});
    }
    return out;
}

CompactnessReport compactness_report(const TorsLattice& l) {
    CompactnessReport rep;
    rep.tors_count = l.count();
    NerveComplex nc = nerve(l);
    rep.f_vector = nc.f_vector;
    rep.facet_count = static_cast<long long>(nc.facets.size());
    rep.simplex_count = static_cast<long long>(nc.simplices.size());
    rep.verdict = "compact: finite CW complex with " + std::to_string(rep.simplex_count) +
                  " simplices (" + std::to_string(rep.tors_count) + " torsion classes)";
    return rep;
}

}  // namespace torsion
