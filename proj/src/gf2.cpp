#include "torsion/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {

Gf2Mat Gf2Mat::identity(int d) {
    Gf2Mat m = zero(d, d);
    for (int i = 0; i < d; ++i) m.row[i] = uint64_t(1) << i;
    return m;
}

Gf2Mat gf2_mul(const Gf2Mat& a, const Gf2Mat& b) {
    Gf2Mat c = Gf2Mat::zero(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        uint64_t bits = a.row[r];
        while (bits) {
            int k = __builtin_ctzll(bits);
            bits &= bits - 1;
            c.row[r] ^= b.row[k];
        }
    }
    return c;
}

Gf2Mat gf2_stack(const Gf2Mat& a, const Gf2Mat& b) {
    Gf2Mat c{a.rows + b.rows, a.cols, a.row};
    c.row.insert(c.row.end(), b.row.begin(), b.row.end());
    return c;
}

int gf2_rank(Gf2Mat a) {
    int rank = 0;
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < a.rows; ++r)
            if (a.get(r, c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a.row[rank], a.row[pivot]);
        for (int r = 0; r < a.rows; ++r)
            if (r != rank && a.get(r, c)) a.row[r] ^= a.row[rank];
        ++rank;
    }
    return rank;
}

Gf2Mat gf2_rref(const Gf2Mat& a) {
    Gf2Mat m = a;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.get(r, c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m.row[rank], m.row[pivot]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.get(r, c)) m.row[r] ^= m.row[rank];
        ++rank;
    }
    m.row.resize(rank);
    m.rows = rank;
    return m;
}

bool gf2_rowspace_contains(const Gf2Mat& rref, uint64_t v) {
    for (int r = 0; r < rref.rows; ++r) {
        int p = __builtin_ctzll(rref.row[r]);
        if ((v >> p) & 1) v ^= rref.row[r];
    }
    return v == 0;
}

namespace {

bool rowspace_contains_all(const Gf2Mat& rref, const Gf2Mat& rows) {
    for (int r = 0; r < rows.rows; ++r)
        if (!gf2_rowspace_contains(rref, rows.row[r])) return false;
    return true;
}

void fill_free_rec(int d, const std::vector<int>& pivots, std::vector<std::vector<int>>& free_cols,
                   size_t i, Gf2Mat& cur, std::vector<Gf2Mat>& out) {
    if (i == pivots.size()) {
        out.push_back(cur);
        return;
    }
    const auto& fc = free_cols[i];
    for (uint32_t bits = 0; bits < (uint32_t(1) << fc.size()); ++bits) {
        uint64_t row = uint64_t(1) << pivots[i];
        for (size_t k = 0; k < fc.size(); ++k)
            if ((bits >> k) & 1) row |= uint64_t(1) << fc[k];
        cur.row[i] = row;
        fill_free_rec(d, pivots, free_cols, i + 1, cur, out);
    }
}

}  // namespace

std::vector<Gf2Mat> gf2_subspaces(int d) {
    std::vector<Gf2Mat> out;
    out.push_back(Gf2Mat::zero(0, d));
    for (uint32_t pset = 1; pset < (uint32_t(1) << d); ++pset) {
        std::vector<int> pivots;
        for (int c = 0; c < d; ++c)
            if ((pset >> c) & 1) pivots.push_back(c);
        std::vector<std::vector<int>> free_cols(pivots.size());
        for (size_t i = 0; i < pivots.size(); ++i)
            for (int c = pivots[i] + 1; c < d; ++c)
                if (!((pset >> c) & 1)) free_cols[i].push_back(c);
        Gf2Mat cur = Gf2Mat::zero(static_cast<int>(pivots.size()), d);
        fill_free_rec(d, pivots, free_cols, 0, cur, out);
    }
    std::sort(out.begin(), out.end(), [](const Gf2Mat& a, const Gf2Mat& b) {
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.row < b.row;
    });
    return out;
}

int Rep::total_dim() const {
    int d = 0;
    for (int x : dims) d += x;
    return d;
}

int SubRep::total_dim() const {
    int d = 0;
    for (const auto& b : bases) d += b.rows;
    return d;
}

Rep module_to_rep(const Context& ctx, const Module& m) {
    Rep r;
    r.dims = dim_vector(ctx, m);
    // block layout: summand k occupies one coordinate at each vertex it covers
    std::vector<std::vector<int>> coord(m.summands.size(), std::vector<int>(ctx.n, -1));
    std::vector<int> used(ctx.n, 0);
    for (size_t k = 0; k < m.summands.size(); ++k)
        for (int v = m.summands[k].a; v <= m.summands[k].b; ++v)
            coord[k][v - 1] = used[v - 1]++;
    for (int v = 0; v + 1 < ctx.n; ++v) {
        Gf2Mat a = Gf2Mat::zero(r.dims[v], r.dims[v + 1]);
        for (size_t k = 0; k < m.summands.size(); ++k)
            if (coord[k][v] >= 0 && coord[k][v + 1] >= 0) a.set(coord[k][v], coord[k][v + 1], true);
        r.maps.push_back(a);
    }
    return r;
}

namespace {

// composite map from vertex a to vertex b (1-indexed, a <= b)
Gf2Mat composite(const Rep& r, int a, int b) {
    Gf2Mat c = Gf2Mat::identity(r.dims[a - 1]);
    for (int v = a; v < b; ++v) c = gf2_mul(c, r.maps[v - 1]);
    return c;
}

// multiplicities from a rank table indexed r(a,b), out-of-range = 0
Module decompose_from_ranks(const Context& ctx, const std::vector<std::vector<int>>& rk) {
    const int n = ctx.n;
    auto r = [&](int a, int b) -> int {
        if (a < 1 || b > n || a > b) return 0;
        return rk[a][b];
    };
    Module m;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            int mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            if (mult < 0) throw std::logic_error("decompose: negative multiplicity");
            for (int k = 0; k < mult; ++k) m.summands.push_back(Interval{a, b});
        }
    return m;
}

}  // namespace

Module decompose_rep(const Context& ctx, const Rep& r) {
    const int n = ctx.n;
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 1; a <= n; ++a) {
        Gf2Mat c = Gf2Mat::identity(r.dims[a - 1]);
        rk[a][a] = r.dims[a - 1];
        for (int b = a + 1; b <= n; ++b) {
            c = gf2_mul(c, r.maps[b - 2]);
            rk[a][b] = gf2_rank(c);
        }
    }
    return decompose_from_ranks(ctx, rk);
}

bool is_subrep(const Rep& r, const SubRep& s) {
    if (s.bases.size() != r.dims.size()) return false;
    for (size_t v = 0; v < r.dims.size(); ++v)
        if (s.bases[v].cols != r.dims[v]) return false;
    for (size_t v = 0; v + 1 < r.dims.size(); ++v) {
        Gf2Mat img = gf2_mul(s.bases[v], r.maps[v]);
        if (!rowspace_contains_all(s.bases[v + 1], img)) return false;
    }
    return true;
}

Module subrep_class(const Context& ctx, const Rep& r, const SubRep& s) {
    const int n = ctx.n;
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 1; a <= n; ++a) {
        Gf2Mat c = s.bases[a - 1];
        rk[a][a] = c.rows;
        for (int b = a + 1; b <= n; ++b) {
            c = gf2_mul(c, r.maps[b - 2]);
            rk[a][b] = gf2_rank(c);
        }
    }
    return decompose_from_ranks(ctx, rk);
}

Module relative_quotient_class(const Context& ctx, const Rep& r, const SubRep& outer,
                               const SubRep& inner) {
    if (!subrep_contained(inner, outer))
        throw std::invalid_argument("relative_quotient_class: inner not contained in outer");
    const int n = ctx.n;
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 1; a <= n; ++a) {
        Gf2Mat c = outer.bases[a - 1];
        for (int b = a; b <= n; ++b) {
            if (b > a) c = gf2_mul(c, r.maps[b - 2]);
            rk[a][b] = gf2_rank(gf2_stack(c, inner.bases[b - 1])) - inner.bases[b - 1].rows;
        }
    }
    return decompose_from_ranks(ctx, rk);
}

bool subrep_contained(const SubRep& inner, const SubRep& outer) {
    if (inner.bases.size() != outer.bases.size()) return false;
    for (size_t v = 0; v < inner.bases.size(); ++v)
        for (int r = 0; r < inner.bases[v].rows; ++r)
            if (!gf2_rowspace_contains(outer.bases[v], inner.bases[v].row[r])) return false;
    return true;
}

std::vector<std::pair<SubRep, Module>> subreps(const Context& ctx, const Rep& r, int dim_bound) {
    if (r.total_dim() > dim_bound)
        throw std::invalid_argument("subreps: total dimension " + std::to_string(r.total_dim()) +
                                    " exceeds bound " + std::to_string(dim_bound));
    const int n = ctx.n;
    std::vector<std::vector<Gf2Mat>> cands(n);
    for (int v = 0; v < n; ++v) cands[v] = gf2_subspaces(r.dims[v]);

    std::vector<std::pair<SubRep, Module>> out;
    SubRep cur;
    cur.bases.resize(n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.emplace_back(cur, subrep_class(ctx, r, cur));
            return;
        }
        for (const auto& cand : cands[v]) {
            if (v > 0) {
                Gf2Mat img = gf2_mul(cur.bases[v - 1], r.maps[v - 1]);
                if (!rowspace_contains_all(cand, img)) continue;
            }
            cur.bases[v] = cand;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Module quotient(const Context& ctx, const Rep& r, const SubRep& s) {
    if (!is_subrep(r, s)) throw std::invalid_argument("quotient: subspaces not arrow-invariant");
    const int n = ctx.n;
    std::vector<std::vector<int>> rk(n + 1, std::vector<int>(n + 1, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            Gf2Mat c = composite(r, a, b);
            rk[a][b] = gf2_rank(gf2_stack(c, s.bases[b - 1])) - s.bases[b - 1].rows;
        }
    return decompose_from_ranks(ctx, rk);
}

int hom_dim(const Context& ctx, const Rep& r1, const Rep& r2) {
    const int n = ctx.n;
    std::vector<int> offset(n, 0);
    int n_vars = 0;
    for (int v = 0; v < n; ++v) {
        offset[v] = n_vars;
        n_vars += r1.dims[v] * r2.dims[v];
    }
    if (n_vars == 0) return 0;
    if (n_vars > 64) throw std::invalid_argument("hom_dim: too many unknowns");
    auto var = [&](int v, int i, int j) { return offset[v] + i * r2.dims[v] + j; };

    std::vector<uint64_t> eqs;
    for (int v = 0; v + 1 < n; ++v) {
        const Gf2Mat& a = r1.maps[v];
        const Gf2Mat& b = r2.maps[v];
        // A_v F_{v+1} = F_v B_v, entrywise at (i, j)
        for (int i = 0; i < r1.dims[v]; ++i)
            for (int j = 0; j < r2.dims[v + 1]; ++j) {
                uint64_t eq = 0;
                for (int k = 0; k < r1.dims[v + 1]; ++k)
                    if (a.get(i, k)) eq ^= uint64_t(1) << var(v + 1, k, j);
                for (int k = 0; k < r2.dims[v]; ++k)
                    if (b.get(k, j)) eq ^= uint64_t(1) << var(v, i, k);
                if (eq) eqs.push_back(eq);
            }
    }
    Gf2Mat sys{static_cast<int>(eqs.size()), n_vars, eqs};
    return n_vars - gf2_rank(sys);
}

int ext_dim(const Context& ctx, const Rep& r1, const Rep& r2) {
    Module m1 = decompose_rep(ctx, r1);
    int total = 0;
    for (const auto& s : m1.summands) {
        // 0 -> P_{y+1} -> P_x -> M[x,y] -> 0 with P_i = M[i,n]
        Rep px = module_to_rep(ctx, Module{{Interval{s.a, ctx.n}}});
        int e = hom_dim(ctx, module_to_rep(ctx, Module{{s}}), r2) - hom_dim(ctx, px, r2);
        if (s.b < ctx.n) {
            Rep py = module_to_rep(ctx, Module{{Interval{s.b + 1, ctx.n}}});
            e += hom_dim(ctx, py, r2);
        }
        total += e;
    }
    return total;
}

std::vector<Ses> enumerate_ses(const Context& ctx, const Module& m, int dim_bound) {
    Rep r = module_to_rep(ctx, m);
    auto subs = subreps(ctx, r, dim_bound);
    std::vector<Ses> out;
    out.reserve(subs.size());
    for (const auto& [s, cls] : subs) out.push_back(Ses{cls, m, quotient(ctx, r, s)});
    return out;
}

}  // namespace torsion
