#include "planar2/bivar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace planar2 {

BivarPoly BivarPoly::zero(const FieldCtx& ctx) {
    BivarPoly p;
    p.ctx = &ctx;
    return p;
}

BivarPoly BivarPoly::term(const FieldCtx& ctx, int dx, int dy, Fe c) {
    BivarPoly p;
    p.ctx = &ctx;
    p.add_term(dx, dy, c);
    return p;
}

void BivarPoly::add_term(int dx, int dy, Fe c) {
    if (c == 0) return;
    auto key = std::make_pair(dx, dy);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second ^= c;
        if (it->second == 0) terms.erase(it);
    }
}

Fe BivarPoly::coeff(int dx, int dy) const {
    auto it = terms.find({dx, dy});
    return it == terms.end() ? 0 : it->second;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, e.first + e.second);
    return d;
}

std::string BivarPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest lex terms first for readability.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [dx, dy] = it->first;
        if (!first) os << " + ";
        first = false;
        bool named = false;
        if (it->second != 1 || (dx == 0 && dy == 0)) {
            os << FieldCtx::to_hex(it->second);
            named = true;
        }
        if (dx > 0) {
            if (named) os << "*";
            os << "X";
            if (dx > 1) os << "^" << dx;
            named = true;
        }
        if (dy > 0) {
            if (named) os << "*";
            os << "Y";
            if (dy > 1) os << "^" << dy;
        }
    }
    return os.str();
}

BivarPoly add(const BivarPoly& a, const BivarPoly& b) {
    require(a.ctx == b.ctx, "mixed-field polynomial arithmetic");
    BivarPoly r = a;
    for (auto& [e, c] : b.terms) r.add_term(e.first, e.second, c);
    return r;
}

BivarPoly mul(const BivarPoly& a, const BivarPoly& b) {
    require(a.ctx == b.ctx, "mixed-field polynomial arithmetic");
    BivarPoly r = BivarPoly::zero(*a.ctx);
    for (auto& [ea, ca] : a.terms) {
        for (auto& [eb, cb] : b.terms) {
            r.add_term(ea.first + eb.first, ea.second + eb.second, a.ctx->mul(ca, cb));
        }
    }
    return r;
}

BivarPoly pow(const BivarPoly& a, uint64_t e) {
    BivarPoly r = BivarPoly::term(*a.ctx, 0, 0, 1);
    BivarPoly base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

Fe eval(const BivarPoly& p, Fe x, Fe y) {
    const FieldCtx& ctx = *p.ctx;
    Fe s = 0;
    for (auto& [e, c] : p.terms) {
        s = ctx.add(s, ctx.mul(c, ctx.mul(ctx.pow(x, e.first), ctx.pow(y, e.second))));
    }
    return s;
}

BivarPoly partial(const BivarPoly& p, int axis) {
    require(axis == 0 || axis == 1, "axis must be 0 (X) or 1 (Y)");
    BivarPoly r = BivarPoly::zero(*p.ctx);
    for (auto& [e, c] : p.terms) {
        int d = axis == 0 ? e.first : e.second;
        if (d % 2 == 0) continue;  // characteristic 2
        if (axis == 0) r.add_term(e.first - 1, e.second, c);
        else r.add_term(e.first, e.second - 1, c);
    }
    return r;
}

BivarPoly divide_exact(const BivarPoly& p, const BivarPoly& q) {
    require(p.ctx == q.ctx, "mixed-field polynomial arithmetic");
    require(!q.is_zero(), "division by zero polynomial");
    const FieldCtx& ctx = *p.ctx;
    auto lead_q = *q.terms.rbegin();  // lex-largest term of the divisor
    BivarPoly rem = p;
    BivarPoly quot = BivarPoly::zero(ctx);
    Fe inv_lc = ctx.inv(lead_q.second);
    while (!rem.is_zero()) {
        auto lead_r = *rem.terms.rbegin();
        int dx = lead_r.first.first - lead_q.first.first;
        int dy = lead_r.first.second - lead_q.first.second;
        require(dx >= 0 && dy >= 0, "division not exact");
        Fe c = ctx.mul(lead_r.second, inv_lc);
        quot.add_term(dx, dy, c);
        for (auto& [e, qc] : q.terms) {
            rem.add_term(e.first + dx, e.second + dy, ctx.mul(qc, c));
        }
    }
    return quot;
}

BivarPoly shift(const BivarPoly& p, Fe u, Fe v) {
    const FieldCtx& ctx = *p.ctx;
    if (u == 0 && v == 0) return p;
    BivarPoly r = BivarPoly::zero(ctx);
    // Cache powers of u and v up to the degree of p.
    int d = std::max(p.total_degree(), 0);
    std::vector<Fe> up(d + 1), vp(d + 1);
    up[0] = vp[0] = 1;
    for (int i = 1; i <= d; ++i) {
        up[i] = ctx.mul(up[i - 1], u);
        vp[i] = ctx.mul(vp[i - 1], v);
    }
    for (auto& [e, c] : p.terms) {
        auto [i, j] = e;
        for (int s = 0; s <= i; ++s) {
            if (!binomial_parity(i, s)) continue;
            Fe cu = ctx.mul(c, up[i - s]);
            if (cu == 0) continue;
            for (int w = 0; w <= j; ++w) {
                if (!binomial_parity(j, w)) continue;
                r.add_term(s, w, ctx.mul(cu, vp[j - w]));
            }
        }
    }
    return r;
}

BivarPoly homogeneous_part(const BivarPoly& p, int d) {
    BivarPoly r = BivarPoly::zero(*p.ctx);
    for (auto& [e, c] : p.terms) {
        if (e.first + e.second == d) r.add_term(e.first, e.second, c);
    }
    return r;
}

int multiplicity_at(const BivarPoly& p, Fe u, Fe v) {
    BivarPoly s = shift(p, u, v);
    require(!s.is_zero(), "multiplicity of the zero polynomial");
    int m = INT32_MAX;
    for (auto& [e, c] : s.terms) m = std::min(m, e.first + e.second);
    return m;
}

BivarPoly tangent_cone_at(const BivarPoly& p, Fe u, Fe v) {
    BivarPoly s = shift(p, u, v);
    int m = INT32_MAX;
    for (auto& [e, c] : s.terms) m = std::min(m, e.first + e.second);
    if (s.terms.empty()) return BivarPoly::zero(*p.ctx);
    return homogeneous_part(s, m);
}

namespace {

// Univariate helpers over the same field, dense coefficient vectors
// (index = degree).
using Uni = std::vector<Fe>;

void uni_trim(Uni& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Uni uni_mod(const FieldCtx& ctx, Uni a, const Uni& b) {
    internal_check(!b.empty(), "univariate division by zero");
    Fe inv_lc = ctx.inv(b.back());
    while (a.size() >= b.size()) {
        Fe c = ctx.mul(a.back(), inv_lc);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = ctx.add(a[off + i], ctx.mul(c, b[i]));
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Uni uni_gcd(const FieldCtx& ctx, Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        Uni r = uni_mod(ctx, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Uni uni_derivative(Uni p) {
    Uni d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(i % 2 == 1 ? p[i] : 0);
    uni_trim(d);
    return d;
}

}  // namespace

bool binary_form_squarefree(const BivarPoly& form) {
    const FieldCtx& ctx = *form.ctx;
    if (form.is_zero()) return false;
    int d = form.total_degree();
    for (auto& [e, c] : form.terms) {
        require(e.first + e.second == d, "binary_form_squarefree requires a homogeneous form");
    }
    if (d <= 1) return true;
    // Factor Y^e off, then check the dehomogenisation p(X) = form(X,1)/Y^e.
    int e = INT32_MAX;
    for (auto& [ex, c] : form.terms) e = std::min(e, ex.second);
    if (e >= 2) return false;
    Uni p(d - e + 1, 0);
    for (auto& [ex, c] : form.terms) p[ex.first] = c;  // degY = d - degX >= e
    uni_trim(p);
    if (p.size() <= 2) return e <= 1;  // constant or linear dehomogenisation
    Uni dp = uni_derivative(p);
    if (dp.empty()) return false;  // p in F[X^2] is a square in characteristic 2
    Uni g = uni_gcd(ctx, p, dp);
    return g.size() == 1;
}

void HomogPoly3::add_term(int i, int j, int k, Fe c) {
    if (c == 0) return;
    require(i + j + k == deg, "homogeneity violated");
    auto key = std::make_tuple(i, j, k);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second ^= c;
        if (it->second == 0) terms.erase(it);
    }
}

Fe HomogPoly3::coeff(int i, int j, int k) const {
    auto it = terms.find({i, j, k});
    return it == terms.end() ? 0 : it->second;
}

HomogPoly3 divide_z_power(const HomogPoly3& h, int e) {
    HomogPoly3 r;
    r.ctx = h.ctx;
    r.deg = h.deg - e;
    for (auto& [key, c] : h.terms) {
        auto [i, j, k] = key;
        require(k >= e, "division not exact");
        r.add_term(i, j, k - e, c);
    }
    return r;
}

HomogPoly3 divide_x_plus_y(const HomogPoly3& h) {
    // Horner in X over F[Y,Z]: with h = sum c_i(Y,Z) X^i, the quotient by
    // X + Y is q_{i} = c_{i+1} + Y q_{i+1} and the remainder c_0 + Y q_0.
    const FieldCtx& ctx = *h.ctx;
    int dx = 0;
    for (auto& [key, c] : h.terms) dx = std::max(dx, std::get<0>(key));
    require(dx >= 1, "division not exact");
    // c[i]: map (j,k) -> coeff
    std::vector<std::map<std::pair<int, int>, Fe>> c(dx + 1), q(dx);
    for (auto& [key, co] : h.terms) {
        auto [i, j, k] = key;
        c[i][{j, k}] = co;
    }
    auto acc = [&ctx](std::map<std::pair<int, int>, Fe>& m, int j, int k, Fe v) {
        if (v == 0) return;
        auto it = m.find({j, k});
        if (it == m.end()) m.emplace(std::make_pair(j, k), v);
        else {
            it->second = ctx.add(it->second, v);
            if (it->second == 0) m.erase(it);
        }
    };
    for (int i = dx - 1; i >= 0; --i) {
        for (auto& [jk, v] : c[i + 1]) acc(q[i], jk.first, jk.second, v);
        if (i + 1 < dx) {
            for (auto& [jk, v] : q[i + 1]) acc(q[i], jk.first + 1, jk.second, v);
        }
    }
    std::map<std::pair<int, int>, Fe> rem = c[0];
    for (auto& [jk, v] : q[0]) acc(rem, jk.first + 1, jk.second, v);
    require(rem.empty(), "division not exact");
    HomogPoly3 out;
    out.ctx = h.ctx;
    out.deg = h.deg - 1;
    for (int i = 0; i < dx; ++i) {
        for (auto& [jk, v] : q[i]) out.add_term(i, jk.first, jk.second, v);
    }
    return out;
}

BivarPoly dehomog_z(const HomogPoly3& h) {
    BivarPoly p = BivarPoly::zero(*h.ctx);
    for (auto& [key, c] : h.terms) p.add_term(std::get<0>(key), std::get<1>(key), c);
    return p;
}

BivarPoly dehomog_y(const HomogPoly3& h) {
    BivarPoly p = BivarPoly::zero(*h.ctx);
    for (auto& [key, c] : h.terms) p.add_term(std::get<0>(key), std::get<2>(key), c);
    return p;
}

}  // namespace planar2
