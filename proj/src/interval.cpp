#include "torsion/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsion {

int Module::total_dim() const {
    int d = 0;
    for (const auto& s : summands) d += s.dim();
    return d;
}

void Module::push(Interval i) {
    summands.insert(std::upper_bound(summands.begin(), summands.end(), i), i);
}

int Context::idx(Interval x) const {
    // lexicographic position of (a,b) among 1 <= a <= b <= n
    int before = (x.a - 1) * n - (x.a - 1) * (x.a - 2) / 2;
    return before + (x.b - x.a);
}

bool hom_nonzero(Interval x, Interval y) {
    return y.a <= x.a && x.a <= y.b && y.b <= x.b;
}

bool ext_nonzero(Interval x, Interval y) {
    return x.a < y.a && y.a <= x.b + 1 && x.b + 1 <= y.b;
}

Module nonsplit_middle(Interval x, Interval y) {
    if (!ext_nonzero(x, y))
        throw std::invalid_argument("nonsplit_middle: Ext^1(" + interval_str(x) + "," +
                                    interval_str(y) + ") = 0");
    Module e;
    e.push(Interval{x.a, y.b});
    if (y.a <= x.b) e.push(Interval{y.a, x.b});  // overlap summand; absent when y.a == x.b+1
    return e;
}

SubQuotients indec_subquotients(Interval x) {
    SubQuotients r;
    for (int c = x.a; c <= x.b; ++c) r.subobjects.push_back(Module{{Interval{c, x.b}}});
    r.subobjects.push_back(Module{});
    for (int c = x.b; c >= x.a; --c) r.quotients.push_back(Module{{Interval{x.a, c}}});
    r.quotients.push_back(Module{});
    return r;
}

Context make_context(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("context: n must be in 1..7");
    Context ctx;
    ctx.n = n;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) ctx.indecs.push_back(Interval{a, b});
    const int N = ctx.count();
    ctx.full_mask = (N == 32) ? ~uint32_t(0) : ((uint32_t(1) << N) - 1);
    ctx.quot_mask.assign(N, 0);
    ctx.sub_mask.assign(N, 0);
    ctx.hom_to.assign(N, 0);
    ctx.middle_mask.assign(N * N, 0);
    for (int i = 0; i < N; ++i) {
        Interval x = ctx.indecs[i];
        for (int c = x.a; c <= x.b; ++c) {
            ctx.quot_mask[i] |= uint32_t(1) << ctx.idx(Interval{x.a, c});
            ctx.sub_mask[i] |= uint32_t(1) << ctx.idx(Interval{c, x.b});
        }
        for (int j = 0; j < N; ++j) {
            if (hom_nonzero(x, ctx.indecs[j])) ctx.hom_to[i] |= uint32_t(1) << j;
            if (ext_nonzero(x, ctx.indecs[j]))
                ctx.middle_mask[i * N + j] = summand_mask(ctx, nonsplit_middle(x, ctx.indecs[j]));
        }
    }
    return ctx;
}

std::vector<int> dim_vector(const Context& ctx, const Module& m) {
    std::vector<int> d(ctx.n, 0);
    for (const auto& s : m.summands)
        for (int v = s.a; v <= s.b; ++v) ++d[v - 1];
    return d;
}

uint32_t summand_mask(const Context& ctx, const Module& m) {
    uint32_t mask = 0;
    for (const auto& s : m.summands) mask |= uint32_t(1) << ctx.idx(s);
    return mask;
}

Module module_from_mask(const Context& ctx, uint32_t mask) {
    Module m;
    for (int i = 0; i < ctx.count(); ++i)
        if (mask & (uint32_t(1) << i)) m.summands.push_back(ctx.indecs[i]);
    return m;
}

std::string interval_str(Interval x) {
    return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
}

std::string module_str(const Module& m) {
    if (m.is_zero()) return "0";
    std::string out;
    size_t i = 0;
    while (i < m.summands.size()) {
        size_t j = i;
        while (j < m.summands.size() && m.summands[j] == m.summands[i]) ++j;
        if (!out.empty()) out += '+';
        out += interval_str(m.summands[i]);
        if (j - i > 1) out += "*" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

int parse_int(std::string_view s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw std::invalid_argument("module: expected integer at position " + std::to_string(start));
    int v = 0;
    for (size_t k = start; k < pos; ++k) v = v * 10 + (s[k] - '0');
    return v;
}

void expect(std::string_view s, size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c)
        throw std::invalid_argument(std::string("module: expected '") + c + "' at position " +
                                    std::to_string(pos));
    ++pos;
}

}  // namespace

Module parse_module(const Context& ctx, std::string_view s) {
    std::string compact;
    for (char c : s)
        if (c != ' ') compact += c;
    if (compact == "0") return Module{};
    if (compact.empty()) throw std::invalid_argument("module: empty string");
    Module m;
    size_t pos = 0;
    while (true) {
        expect(compact, pos, '[');
        int a = parse_int(compact, pos);
        expect(compact, pos, ',');
        int b = parse_int(compact, pos);
        expect(compact, pos, ']');
        if (a < 1 || a > b || b > ctx.n)
            throw std::invalid_argument("module: interval [" + std::to_string(a) + "," +
                                        std::to_string(b) + "] out of range for n=" +
                                        std::to_string(ctx.n));
        int mult = 1;
        if (pos < compact.size() && compact[pos] == '*') {
            ++pos;
            mult = parse_int(compact, pos);
            if (mult < 1) throw std::invalid_argument("module: multiplicity must be >= 1");
        }
        for (int k = 0; k < mult; ++k) m.push(Interval{a, b});
        if (pos == compact.size()) break;
        expect(compact, pos, '+');
    }
    return m;
}

namespace {

void enumerate_rec(const Context& ctx, int i, int budget, Module& cur, std::vector<Module>& out) {
    if (i == ctx.count()) {
        if (!cur.is_zero()) out.push_back(cur);
        return;
    }
    int d = ctx.indecs[i].dim();
    int max_copies = budget / d;
    for (int k = 0; k <= max_copies; ++k) {
        for (int t = 0; t < k; ++t) cur.summands.push_back(ctx.indecs[i]);
        enumerate_rec(ctx, i + 1, budget - k * d, cur, out);
        for (int t = 0; t < k; ++t) cur.summands.pop_back();
    }
}

}  // namespace

std::vector<Module> enumerate_modules(const Context& ctx, int max_total_dim) {
    std::vector<Module> out;
    Module cur;
    enumerate_rec(ctx, 0, max_total_dim, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torsion
