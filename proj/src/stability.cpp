#include "torsion/stability.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace torsion {

namespace {

void validate_central_charge(const TorsLattice& l, const CentralCharge& cc) {
    if (cc.theta.size() != static_cast<size_t>(l.ctx.n) ||
        cc.delta.size() != static_cast<size_t>(l.ctx.n))
        throw std::invalid_argument("central charge: theta/delta must have length n");
    for (long long d : cc.delta)
        if (d <= 0) throw std::invalid_argument("central charge: delta entries must be positive");
}

// sigma(p/q) = 1/2 + p / (2(q + |p|)), strictly increasing from Q onto (0,1)
Phase slope_phase(const TorsLattice& l, const CentralCharge& cc, const Module& m) {
    validate_central_charge(l, cc);
    auto d = dim_vector(l.ctx, m);
    long long num = 0, den = 0;
    for (int v = 0; v < l.ctx.n; ++v) {
        num += cc.theta[v] * d[v];
        den += cc.delta[v] * d[v];
    }
    return Phase(1, 2) + Phase(num, 2 * (den + std::abs(num)));
}

}  // namespace

Phase phase(const TorsLattice& l, const WeakStability& w, const Module& m) {
    if (m.is_zero()) throw std::invalid_argument("phase: zero module");
    return std::visit(
        [&](const auto& k) -> Phase {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ChainMho>)
                return mho_omega(l, k.chain, m).first;
            else if constexpr (std::is_same_v<T, ChainOmega>)
                return mho_omega(l, k.chain, m).second;
            else
                return slope_phase(l, k, m);
        },
        w);
}

namespace {

struct SubQuotData {
    std::vector<std::pair<Module, Module>> proper_pairs;  // distinct (sub, quot), both nonzero
    std::vector<Module> sub_classes;                      // distinct nonzero subobject classes
};

// The oracle subobject scan of a module is pure; memoise it so semistability
// queries over module families stay affordable.
const SubQuotData& subquot_data(const Context& ctx, const Module& m, int dim_bound) {
    if (m.total_dim() > dim_bound)
        throw std::invalid_argument("subobject scan: total dimension exceeds bound " +
                                    std::to_string(dim_bound));
    static std::mutex mu;
    static std::map<std::pair<int, Module>, SubQuotData> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(ctx.n, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SubQuotData data;
    std::set<std::pair<Module, Module>> pairs;
    std::set<Module> subs;
    for (const auto& s : enumerate_ses(ctx, m, m.total_dim())) {
        if (!s.sub.is_zero()) subs.insert(s.sub);
        if (!s.sub.is_zero() && !s.quot.is_zero()) pairs.insert({s.sub, s.quot});
    }
    data.proper_pairs.assign(pairs.begin(), pairs.end());
    data.sub_classes.assign(subs.begin(), subs.end());
    return cache.emplace(key, std::move(data)).first->second;
}

}  // namespace

SeesawVerdict check_weak_seesaw(const TorsLattice& l, const WeakStability& w, int dim_bound) {
    SeesawVerdict v;
    for (const auto& m : enumerate_modules(l.ctx, dim_bound)) {
        Phase pm = phase(l, w, m);
        for (const auto& [sub, quot] : subquot_data(l.ctx, m, dim_bound).proper_pairs) {
            Phase pl = phase(l, w, sub), pn = phase(l, w, quot);
            bool weak = (pl <= pm && pm <= pn) || (pl >= pm && pm >= pn);
            bool strict = (pl < pm && pm < pn) || (pl == pm && pm == pn) || (pl > pm && pm > pn);
            if (!weak && v.weak_passed) {
                v.weak_passed = false;
                v.weak_witness = Ses{sub, m, quot};
            }
            if (!strict && v.seesaw_passed) {
                v.seesaw_passed = false;
                v.seesaw_witness = Ses{sub, m, quot};
            }
            if (!v.weak_passed && !v.seesaw_passed) return v;
        }
    }
    return v;
}

bool is_semistable(const TorsLattice& l, const WeakStability& w, const Module& m, int dim_bound) {
    if (m.is_zero()) throw std::invalid_argument("is_semistable: zero module");
    for (const auto& [sub, quot] : subquot_data(l.ctx, m, dim_bound).proper_pairs)
        if (phase(l, w, sub) > phase(l, w, quot)) return false;
    return true;
}

Module max_destabilizing_subobject(const TorsLattice& l, const WeakStability& w, const Module& m,
                                   int dim_bound) {
    if (m.is_zero()) throw std::invalid_argument("max_destabilizing_subobject: zero module");
    const auto& sub_classes = subquot_data(l.ctx, m, dim_bound).sub_classes;

    Phase best_phase(0);
    for (const auto& s : sub_classes) best_phase = std::max(best_phase, phase(l, w, s));

    std::optional<Module> best;
    for (const auto& s : sub_classes) {
        if (phase(l, w, s) != best_phase || !is_semistable(l, w, s, dim_bound)) continue;
        if (!best || s.total_dim() > best->total_dim() ||
            (s.total_dim() == best->total_dim() && s < *best))
            best = s;
    }
    if (!best) throw std::logic_error("max_destabilizing_subobject: no semistable maximiser");
    return *best;
}

TorsCuts tors_cuts(const TorsLattice& l, const WeakStability& w, const Phase& p) {
    TorsCuts cuts;
    for (int i = 0; i < l.ctx.count(); ++i) {
        Interval iv = l.ctx.indecs[i];
        Phase minq = phase(l, w, Module{{iv}});
        for (int c = iv.a; c <= iv.b; ++c)
            minq = std::min(minq, phase(l, w, Module{{Interval{iv.a, c}}}));
        if (minq >= p) cuts.geq |= uint32_t(1) << i;
        if (minq > p) cuts.gt |= uint32_t(1) << i;
    }
    return cuts;
}

std::pair<Chain, Chain> eta_pm(const TorsLattice& l, const WeakStability& w) {
    std::set<Phase> cut_set;
    for (int i = 0; i < l.ctx.count(); ++i) {
        Interval iv = l.ctx.indecs[i];
        Phase minq = phase(l, w, Module{{iv}});
        for (int c = iv.a; c <= iv.b; ++c)
            minq = std::min(minq, phase(l, w, Module{{Interval{iv.a, c}}}));
        cut_set.insert(minq);
    }
    std::vector<Phase> cuts(cut_set.begin(), cut_set.end());

    Chain plus, minus;
    plus.breakpoints = cuts;
    minus.breakpoints = cuts;
    for (const Phase& p : cuts) {
        int id = l.id_of(tors_cuts(l, w, p).geq);
        if (id < 0) throw std::logic_error("eta_pm: T_{>=p} is not a torsion class");
        plus.classes.push_back(id);
    }
    plus.classes.push_back(l.zero_id);
    minus.classes.push_back(l.full_id);
    for (const Phase& p : cuts) {
        int id = l.id_of(tors_cuts(l, w, p).gt);
        if (id < 0) throw std::logic_error("eta_pm: T_{>p} is not a torsion class");
        minus.classes.push_back(id);
    }
    return {normalize(l, plus), normalize(l, minus)};
}

SliceCheckReport semistable_slice_check(const TorsLattice& l, const WeakStability& w,
                                        int dim_bound) {
    SliceCheckReport rep;
    auto [plus, minus] = eta_pm(l, w);
    auto support = slicing_support(l, plus).support;
    for (const auto& m : enumerate_modules(l.ctx, dim_bound)) {
        bool ss = is_semistable(l, w, m, dim_bound);
        Phase pm = phase(l, w, m);
        bool phase_in_support = false;
        for (const auto& e : support) {
            bool member = slice_member(l.ctx, e, m);
            bool expected = ss && pm == e.phase;
            if (member != expected) {
                rep.passed = false;
                rep.counterexamples.push_back(module_str(m) + " at phase " + rat_str(e.phase) +
                                              ": slice membership " + (member ? "yes" : "no") +
                                              ", semistability says " + (expected ? "yes" : "no"));
            }
            if (pm == e.phase) phase_in_support = true;
        }
        if (ss && !phase_in_support) {
            rep.passed = false;
            rep.counterexamples.push_back("semistable " + module_str(m) + " has phase " +
                                          rat_str(pm) + " outside the support");
        }
    }
    return rep;
}

bool filt_description_check(const TorsLattice& l, const WeakStability& w, const Phase& p,
                            int dim_bound) {
    uint32_t ss_intervals = 0;
    for (int i = 0; i < l.ctx.count(); ++i) {
        Module m{{l.ctx.indecs[i]}};
        if (phase(l, w, m) >= p && is_semistable(l, w, m, dim_bound))
            ss_intervals |= uint32_t(1) << i;
    }
    uint32_t geq = tors_cuts(l, w, p).geq;
    if (filt_closure(l.ctx, ss_intervals) != geq) return false;
    for (const auto& m : enumerate_modules(l.ctx, dim_bound))
        if (is_semistable(l, w, m, dim_bound) && phase(l, w, m) >= p &&
            (summand_mask(l.ctx, m) & ~geq) != 0)
            return false;
    return true;
}

StabilityProfile is_stability_and_constant(const TorsLattice& l, const WeakStability& w,
                                           int dim_bound) {
    const Chain* chain = nullptr;
    if (const auto* a = std::get_if<ChainMho>(&w)) chain = &a->chain;
    if (const auto* b = std::get_if<ChainOmega>(&w)) chain = &b->chain;
    if (!chain) throw std::invalid_argument("is_stability_and_constant: needs a chain-induced kind");

    StabilityProfile prof;
    auto modules = enumerate_modules(l.ctx, dim_bound);

    prof.constant = true;
    Phase first = phase(l, w, modules.front());
    for (const auto& m : modules)
        if (phase(l, w, m) != first) { prof.constant = false; break; }

    prof.stability = check_weak_seesaw(l, w, dim_bound).seesaw_passed;

    prof.omega_eq_mho = true;
    for (const auto& m : modules) {
        auto [mho, omega] = mho_omega(l, *chain, m);
        if (mho != omega) { prof.omega_eq_mho = false; break; }
    }

    prof.single_slice = slicing_support(l, *chain).support.size() == 1;
    return prof;
}

bool wsc_leq(const TorsLattice& l, const WeakStability& w1, const WeakStability& w2,
             int dim_bound) {
    for (const auto& m : enumerate_modules(l.ctx, dim_bound))
        if (phase(l, w1, m) > phase(l, w2, m)) return false;
    return true;
}

}  // namespace torsion
