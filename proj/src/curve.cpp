#include "planar2/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace planar2 {

TDecomp decompose_t(uint64_t t) {
    guard(t >= 3 && t % 2 == 1, "t must be odd and at least 3");
    uint64_t m = t - 1;
    TDecomp d;
    d.k = __builtin_ctzll(m);
    d.l = m >> d.k;
    internal_check(d.k >= 1 && d.l % 2 == 1, "t decomposition failed");
    return d;
}

int default_search_degree(int n) {
    int cap = std::min(4 * n, (int)FieldCtx::kMaxDegree);
    return (cap / n) * n;
}

Embedding::Embedding(const FieldCtx& sub, const FieldCtx& big) : sub_(&sub), big_(&big) {
    require(big.degree() % sub.degree() == 0, "embedding requires sub degree dividing big degree");
    int n = sub.degree();
    // Root of the small modulus inside the subfield copy of F_{2^n}.
    uint32_t modulus = sub.modulus();
    auto eval_modulus = [&](Fe x) {
        Fe r = 0;
        for (int bit = n; bit >= 0; --bit) {
            r = big.mul(r, x);
            if ((modulus >> bit) & 1) r = big.add(r, 1);
        }
        return r;
    };
    Fe xi = 0;
    if (n == big.degree()) {
        // Identity embedding when the moduli coincide; otherwise still find a
        // root by scanning.
        if (big.modulus() == modulus) xi = big.alpha();
    }
    if (xi == 0) {
        uint64_t step = big.order() / sub.order();
        Fe g = big.pow(big.alpha(), (int64_t)step);
        Fe cur = 1;
        for (uint32_t i = 0; i < sub.order(); ++i) {
            if (eval_modulus(cur) == 0) { xi = cur; break; }
            cur = big.mul(cur, g);
        }
    }
    internal_check(xi != 0 && eval_modulus(xi) == 0, "no root of the subfield modulus found");
    std::vector<Fe> xipow(n);
    xipow[0] = 1;
    for (int i = 1; i < n; ++i) xipow[i] = big.mul(xipow[i - 1], xi);
    up_.resize(sub.size());
    for (Fe x = 0; x < sub.size(); ++x) {
        Fe y = 0;
        for (int i = 0; i < n; ++i) {
            if ((x >> i) & 1) y = big.add(y, xipow[i]);
        }
        up_[x] = y;
        down_.emplace(y, x);
    }
    internal_check(down_.size() == sub.size(), "embedding is not injective");
    // Homomorphism spot check.
    Fe p = sub.alpha(), q = sub.add(p, 1);
    internal_check(lift(sub.mul(p, q)) == big.mul(lift(p), lift(q)), "embedding not multiplicative");
}

Fe Embedding::project(Fe y) const {
    auto it = down_.find(y);
    require(it != down_.end(), "element not in the embedded subfield");
    return it->second;
}

BivarPoly build_numerator_F(const FieldCtx& ctx, uint64_t t, Fe a) {
    guard(t >= 3 && t <= 65536, "t out of range (3..65536)");
    BivarPoly p = BivarPoly::zero(ctx);
    for (uint64_t j = 0; j < t; ++j) {
        if (!binomial_parity(t, j)) continue;
        p.add_term((int)j, 0, 1);  // (X+1)^t + X^t
        p.add_term(0, (int)j, 1);  // (Y+1)^t + Y^t
    }
    p.add_term(1, 0, a);
    p.add_term(0, 1, a);
    return p;
}

BivarPoly build_F(const FieldCtx& ctx, uint64_t t, Fe a) {
    BivarPoly xy = BivarPoly::term(ctx, 1, 0, 1);
    xy.add_term(0, 1, 1);
    return divide_exact(build_numerator_F(ctx, t, a), xy);
}

HomogPoly3 build_numerator_H(const FieldCtx& ctx, uint64_t t, Fe a) {
    guard(t >= 3 && t <= 65536, "t out of range (3..65536)");
    HomogPoly3 h;
    h.ctx = &ctx;
    h.deg = (int)t;
    for (uint64_t j = 0; j < t; ++j) {
        if (!binomial_parity(t, j)) continue;
        h.add_term((int)j, 0, (int)(t - j), 1);  // (X+Z)^t + X^t
        h.add_term(0, (int)j, (int)(t - j), 1);  // (Y+Z)^t + Y^t
    }
    h.add_term(1, 0, (int)t - 1, a);
    h.add_term(0, 1, (int)t - 1, a);
    return h;
}

HomogPoly3 build_H(const FieldCtx& ctx, uint64_t t, Fe a) {
    guard((t & (t - 1)) != 0, "t must not be a power of 2");
    int twoj = 1 << __builtin_ctzll(t);  // 2^j with 2^j || t
    HomogPoly3 h = divide_x_plus_y(divide_z_power(build_numerator_H(ctx, t, a), twoj));
    internal_check(dehomog_z(h) == build_F(ctx, t, a), "H(X,Y,1) does not rebuild F");
    // Symmetry in X and Y.
    for (auto& [key, c] : h.terms) {
        auto [i, j, k] = key;
        internal_check(h.coeff(j, i, k) == c, "H is not symmetric in X and Y");
    }
    return h;
}

BivarPoly build_G(const FieldCtx& ctx, uint64_t t, Fe a) { return dehomog_y(build_H(ctx, t, a)); }

BivarPoly build_numerator_G(const FieldCtx& ctx, uint64_t t, Fe a) {
    BivarPoly zx1 = BivarPoly::term(ctx, 1, 1, 1);  // X*Z
    zx1.add_term(0, 1, 1);                          // + Z
    return mul(zx1, build_G(ctx, t, a));
}

SingularScan::SingularScan(const Embedding& emb, uint64_t t, const std::vector<Fe>& targets_small,
                           int jobs)
    : emb_(&emb), t_(t) {
    const FieldCtx& big = emb.big();
    for (Fe a : targets_small) by_a_[emb.lift(a)];
    if (jobs < 1) jobs = 1;
    uint64_t size = big.size();
    std::vector<std::unordered_map<Fe, std::vector<Fe>>> local((size_t)jobs);
    auto worker = [&](int w) {
        uint64_t lo = size * w / jobs, hi = size * (w + 1) / jobs;
        auto& mine = local[w];
        for (uint64_t y = lo; y < hi; ++y) {
            Fe s = big.add(big.pow(big.add((Fe)y, 1), (int64_t)(t_ - 1)),
                           big.pow((Fe)y, (int64_t)(t_ - 1)));
            if (by_a_.count(s)) mine[s].push_back((Fe)y);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    for (auto& mine : local) {
        for (auto& [s, us] : mine) {
            auto& dst = by_a_[s];
            dst.insert(dst.end(), us.begin(), us.end());
        }
    }
    for (auto& [s, us] : by_a_) std::sort(us.begin(), us.end());
}

const std::vector<Fe>& SingularScan::candidates(Fe a_small) const {
    auto it = by_a_.find(emb_->lift(a_small));
    require(it != by_a_.end(), "a was not among the scan targets");
    return it->second;
}

namespace {

char classify_infinity(int k, Fe u, int m_num, int m_curve) {
    int p = 1 << k;
    if (u == 1) return m_num == p + 1 && m_curve == p - 1 ? 'A' : '?';
    if (m_num == p + 1 && m_curve == p) return 'B';
    if (m_num == p && m_curve == p - 1) return 'C';
    return '?';
}

}  // namespace

SingularReport singular_points(const SingularScan& scan, Fe a_small) {
    const Embedding& emb = scan.emb();
    const FieldCtx& big = emb.big();
    uint64_t t = scan.t();
    TDecomp td = decompose_t(t);
    Fe A = emb.lift(a_small);
    require(A != 0, "singular point analysis requires a != 0");

    SingularReport rep;
    rep.t = t;
    rep.k = td.k;
    rep.l = td.l;
    rep.a = a_small;
    rep.n = emb.sub().degree();
    rep.M = big.degree();
    rep.infinity_max = (long long)td.l;
    rep.affine_offdiag_max = td.l >= 3 ? (long long)(td.l - 1) * (long long)(td.l - 2) / 2 : 0;

    BivarPoly Fnum = build_numerator_F(big, t, A);
    BivarPoly F = build_F(big, t, A);
    BivarPoly Gnum = build_numerator_G(big, t, A);
    BivarPoly G = build_G(big, t, A);
    int cone_deg = (1 << td.k) + 1;

    // Points at infinity: u with u^l = 1.
    uint64_t g = std::gcd(td.l, (uint64_t)big.order());
    std::vector<Fe> roots;
    for (uint64_t i = 0; i < g; ++i) roots.push_back(big.pow(big.alpha(), (int64_t)(big.order() / g * i)));
    std::sort(roots.begin(), roots.end());
    for (Fe u : roots) {
        int mn = multiplicity_at(Gnum, u, 0);
        if (mn < 2) continue;
        SingularPointInfo info;
        info.p = ProjPoint{u, 1, 0};
        info.m_num = mn;
        info.m_curve = multiplicity_at(G, u, 0);
        info.type = classify_infinity(td.k, u, mn, info.m_curve);
        info.cone_squarefree =
            binary_form_squarefree(homogeneous_part(shift(Gnum, u, 0), cone_deg));
        rep.infinity.push_back(info);
    }

    // Affine points: candidate coordinates from the first-order condition.
    const std::vector<Fe>& cand = scan.candidates(a_small);
    for (Fe u : cand) {
        for (Fe v : cand) {
            int mn = multiplicity_at(Fnum, u, v);
            if (mn < 2) continue;
            SingularPointInfo info;
            info.p = ProjPoint{u, v, 1};
            info.m_num = mn;
            info.m_curve = multiplicity_at(F, u, v);
            info.type = u == v ? 'd' : 'o';
            info.cone_squarefree =
                binary_form_squarefree(homogeneous_part(shift(Fnum, u, v), cone_deg));
            rep.affine.push_back(info);
        }
    }
    return rep;
}

SingularReport singular_points(const FieldCtx& sub, uint64_t t, Fe a, int M, int jobs) {
    guard(M >= sub.degree() && M <= FieldCtx::kMaxDegree, "search degree out of range");
    FieldCtx big(M);
    Embedding emb(sub, big);
    SingularScan scan(emb, t, {a}, jobs);
    return singular_points(scan, a);
}

bool verify_table4(const SingularReport& rep) {
    for (const SingularPointInfo& info : rep.infinity) {
        if (info.type == '?') return false;
        if (info.p.u == 1 && info.type != 'A') return false;
        // Consistency with the numerator recurrence: the multiplicities can
        // differ only by 1 or 2.
        int d = info.m_num - info.m_curve;
        if (d != 1 && d != 2) return false;
    }
    return true;
}

bool cone_squarefree_check(const FieldCtx& ctx, uint64_t t, Fe a, const ProjPoint& p) {
    TDecomp td = decompose_t(t);
    int cone_deg = (1 << td.k) + 1;
    if (p.w == 0) {
        require(p.v == 1, "infinity points are normalised as (u,1,0)");
        BivarPoly Gnum = build_numerator_G(ctx, t, a);
        return binary_form_squarefree(homogeneous_part(shift(Gnum, p.u, 0), cone_deg));
    }
    BivarPoly Fnum = build_numerator_F(ctx, t, a);
    return binary_form_squarefree(homogeneous_part(shift(Fnum, p.u, p.v), cone_deg));
}

std::vector<Fe> b_set(const SingularScan& scan, Fe c) {
    const Embedding& emb = scan.emb();
    const FieldCtx& big = emb.big();
    uint64_t t = scan.t();
    TDecomp td = decompose_t(t);
    int64_t e1 = (int64_t)(t - (1ull << td.k));
    int64_t e2 = e1 - 1;
    std::vector<Fe> as = a_set(emb.sub(), t, c);
    std::vector<Fe> out;
    for (Fe a : as) {
        Fe A = emb.lift(a);
        if (A == 0) continue;
        BivarPoly Fnum = build_numerator_F(big, t, A);
        const std::vector<Fe>& cand = scan.candidates(a);
        bool ok = true;
        for (Fe u : cand) {
            if (!ok) break;
            for (Fe v : cand) {
                if (multiplicity_at(Fnum, u, v) < 2) continue;
                bool pass = big.pow(big.add(u, 1), e1) != big.pow(u, e1) &&
                            big.pow(big.add(u, 1), e2) != big.pow(u, e2) &&
                            big.pow(big.add(v, 1), e2) != big.pow(v, e2);
                if (!pass) { ok = false; break; }
            }
        }
        if (ok) out.push_back(a);
    }
    return out;
}

std::vector<Fe> b_set(const FieldCtx& sub, uint64_t t, Fe c, int M, int jobs) {
    guard(M >= sub.degree() && M <= FieldCtx::kMaxDegree, "search degree out of range");
    FieldCtx big(M);
    Embedding emb(sub, big);
    SingularScan scan(emb, t, a_set(sub, t, c), jobs);
    return b_set(scan, c);
}

std::map<Fe, long long> count_points_offdiag(const FieldCtx& ctx, uint64_t t, Fe c) {
    guard(ctx.degree() <= 12, "off-diagonal point scan supports n <= 12");
    std::vector<Fe> val(ctx.size());
    for (Fe u = 0; u < ctx.size(); ++u) {
        val[u] = ctx.add(ctx.pow(ctx.add(u, 1), (int64_t)t), ctx.pow(u, (int64_t)t));
    }
    std::map<Fe, long long> counts;
    for (Fe a : a_set(ctx, t, c)) {
        long long cnt = 0;
        for (Fe u = 0; u < ctx.size(); ++u) {
            for (Fe v = 0; v < ctx.size(); ++v) {
                if (u == v) continue;
                if (ctx.add(val[u], val[v]) == ctx.mul(a, ctx.add(u, v))) ++cnt;
            }
        }
        counts[a] = cnt;
    }
    return counts;
}

bool planar_curve_crosscheck(const FieldCtx& ctx, uint64_t t, Fe c) {
    bool planar = is_planar(FuncTable::monomial(ctx, t, c)).planar;
    bool all_zero = true;
    for (auto& [a, cnt] : count_points_offdiag(ctx, t, c)) {
        if (cnt != 0) { all_zero = false; break; }
    }
    return planar == all_zero;
}

SpecialFactor special_factor_l1(const FieldCtx& ctx, int k, Fe c) {
    require(k >= 1 && k <= 16, "k out of range");
    uint64_t t = (1ull << k) + 1;
    int64_t d = (int64_t)(1ull << k) - 1;
    SpecialFactor sf;
    for (Fe a : a_set(ctx, t, c)) {
        if (a == 1 || a == 0) continue;
        Fe target = ctx.add(a, 1);
        Fe b = 0;
        for (Fe cand = 1; cand < ctx.size(); ++cand) {
            if (ctx.pow(cand, d) == target) { b = cand; break; }
        }
        if (b == 0) continue;
        BivarPoly F = build_F(ctx, t, a);
        // F must be (X+Y)^{2^k-1} + (a+1).
        BivarPoly xy = BivarPoly::term(ctx, 1, 0, 1);
        xy.add_term(0, 1, 1);
        BivarPoly expect = pow(xy, (uint64_t)d);
        expect.add_term(0, 0, target);
        internal_check(F == expect, "F does not reduce to (X+Y)^{2^k-1} + a + 1");
        sf.found = true;
        sf.a = a;
        sf.b = b;
        sf.factor = xy;
        sf.factor.add_term(0, 0, b);
        sf.quotient = divide_exact(F, sf.factor);
        internal_check(mul(sf.quotient, sf.factor) == F, "factor verification failed");
        return sf;
    }
    return sf;
}

std::string singular_report_json(const SingularReport& rep) {
    std::ostringstream os;
    os << "{\"t\":" << rep.t << ",\"k\":" << rep.k << ",\"l\":" << rep.l << ",\"a\":\""
       << FieldCtx::to_hex(rep.a) << "\",\"field\":{\"n\":" << rep.n << ",\"M\":" << rep.M
       << "},\"infinity\":[";
    for (size_t i = 0; i < rep.infinity.size(); ++i) {
        const auto& p = rep.infinity[i];
        if (i) os << ",";
        os << "{\"u\":\"" << FieldCtx::to_hex(p.p.u) << "\",\"mG\":" << p.m_curve
           << ",\"mGt\":" << p.m_num << ",\"type\":\"" << p.type << "\"}";
    }
    os << "],\"affine\":[";
    for (size_t i = 0; i < rep.affine.size(); ++i) {
        const auto& p = rep.affine[i];
        if (i) os << ",";
        os << "{\"u\":\"" << FieldCtx::to_hex(p.p.u) << "\",\"v\":\"" << FieldCtx::to_hex(p.p.v)
           << "\",\"diag\":" << (p.type == 'd' ? "true" : "false") << ",\"m_curve\":" << p.m_curve
           << ",\"m_num\":" << p.m_num
           << ",\"cone_squarefree\":" << (p.cone_squarefree ? "true" : "false") << "}";
    }
    os << "],\"bounds\":{\"infinity_max\":" << rep.infinity_max
       << ",\"affine_max\":" << rep.affine_offdiag_max
       << "},\"search_complete_up_to\":" << rep.M << "}";
    return os.str();
}

}  // namespace planar2
