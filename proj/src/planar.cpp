#include "planar2/planar.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace planar2 {

FuncTable FuncTable::monomial(const FieldCtx& ctx, uint64_t t, Fe c) {
    FuncTable f;
    f.ctx = &ctx;
    f.values.resize(ctx.size());
    for (Fe x = 0; x < ctx.size(); ++x) f.values[x] = ctx.mul(c, ctx.pow(x, (int64_t)t));
    f.descriptor = {t, c};
    return f;
}

FuncTable FuncTable::zero(const FieldCtx& ctx) {
    FuncTable f;
    f.ctx = &ctx;
    f.values.assign(ctx.size(), 0);
    f.descriptor = std::nullopt;
    return f;
}

FuncTable FuncTable::from_values(const FieldCtx& ctx, std::vector<Fe> values) {
    require(values.size() == ctx.size(), "function table has wrong length");
    for (Fe v : values) require(v < ctx.size(), "function table value out of range");
    FuncTable f;
    f.ctx = &ctx;
    f.values = std::move(values);
    return f;
}

FuncTable FuncTable::load(std::istream& in, const FieldCtx& ctx) {
    std::string header;
    require(static_cast<bool>(std::getline(in, header)), "empty function table file");
    std::ostringstream expect;
    expect << "planar2 n=" << ctx.degree() << " modulus=" << FieldCtx::to_hex(ctx.modulus());
    require(header == expect.str(), "function table header mismatch: " + header);
    std::vector<Fe> vals;
    vals.reserve(ctx.size());
    std::string line;
    while (vals.size() < ctx.size() && std::getline(in, line)) {
        if (line.empty()) continue;
        vals.push_back(FieldCtx::parse_hex(line.rfind("0x", 0) == 0 ? line : "0x" + line));
    }
    return from_values(ctx, std::move(vals));
}

void FuncTable::save(std::ostream& out) const {
    out << "planar2 n=" << ctx->degree() << " modulus=" << FieldCtx::to_hex(ctx->modulus()) << "\n";
    for (Fe v : values) out << FieldCtx::to_hex(v) << "\n";
}

std::vector<Fe> delta_map(const FuncTable& f, Fe eps) {
    require(eps != 0, "delta_map requires eps != 0");
    const FieldCtx& ctx = *f.ctx;
    std::vector<Fe> out(ctx.size());
    for (Fe x = 0; x < ctx.size(); ++x) {
        out[x] = ctx.add(ctx.add(f(ctx.add(x, eps)), f(x)), ctx.mul(eps, x));
    }
    return out;
}

namespace {

// Permutation check with a single pass; on failure returns one colliding pair.
bool delta_is_permutation(const FuncTable& f, Fe eps, Fe* x1, Fe* x2) {
    const FieldCtx& ctx = *f.ctx;
    static thread_local std::vector<Fe> first_preimage;
    first_preimage.assign(ctx.size(), (Fe)ctx.size());
    for (Fe x = 0; x < ctx.size(); ++x) {
        Fe y = ctx.add(ctx.add(f(ctx.add(x, eps)), f(x)), ctx.mul(eps, x));
        if (first_preimage[y] != ctx.size()) {
            if (x1) { *x1 = first_preimage[y]; *x2 = x; }
            return false;
        }
        first_preimage[y] = x;
    }
    return true;
}

}  // namespace

PlanarityReport is_planar(const FuncTable& f) {
    PlanarityReport rep;
    for (Fe eps = 1; eps < f.ctx->size(); ++eps) {
        Fe x1, x2;
        if (!delta_is_permutation(f, eps, &x1, &x2)) {
            rep.planar = false;
            rep.witnesses.emplace_back(eps, x1, x2);
        }
    }
    return rep;
}

bool is_apn(const FuncTable& f) {
    const FieldCtx& ctx = *f.ctx;
    std::vector<int> count(ctx.size());
    for (Fe eps = 1; eps < ctx.size(); ++eps) {
        std::fill(count.begin(), count.end(), 0);
        for (Fe x = 0; x < ctx.size(); ++x) {
            Fe y = ctx.add(f(ctx.add(x, eps)), f(x));
            if (++count[y] > 2) return false;
        }
    }
    return true;
}

namespace {

bool monomial_is_planar(const FieldCtx& ctx, uint64_t t, Fe c) {
    FuncTable f = FuncTable::monomial(ctx, t, c);
    for (Fe eps = 1; eps < ctx.size(); ++eps) {
        if (!delta_is_permutation(f, eps, nullptr, nullptr)) return false;  // early exit
    }
    return true;
}

MonomialFamily search_exponent(const FieldCtx& ctx, uint64_t t) {
    MonomialFamily fam{t, {}};
    // c iterated in generator-power order; first failing eps aborts a candidate.
    for (uint32_t e = 0; e < ctx.order(); ++e) {
        Fe c = ctx.exp(e);
        if (monomial_is_planar(ctx, t, c)) fam.cs.push_back(c);
    }
    return fam;
}

}  // namespace

std::vector<MonomialFamily> search_planar_monomials(int n, int jobs) {
    guard(n >= 2 && n <= 7, "exhaustive planar-monomial search supports 2 <= n <= 7");
    FieldCtx ctx(n);
    uint64_t tmax = ctx.size() - 2;
    std::vector<MonomialFamily> results(tmax);
    if (jobs <= 1) {
        for (uint64_t t = 1; t <= tmax; ++t) results[t - 1] = search_exponent(ctx, t);
    } else {
        std::atomic<uint64_t> next{1};
        auto worker = [&] {
            for (uint64_t t = next.fetch_add(1); t <= tmax; t = next.fetch_add(1)) {
                results[t - 1] = search_exponent(ctx, t);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<MonomialFamily> out;
    for (auto& fam : results) {
        if (!fam.cs.empty()) out.push_back(std::move(fam));
    }
    return out;
}

std::vector<Fe> a_set(const FieldCtx& ctx, uint64_t t, Fe c) {
    require(c != 0, "a_set requires c != 0");
    std::vector<Fe> out;
    Fe cinv = ctx.inv(c);
    for (Fe eps = 1; eps < ctx.size(); ++eps) {
        out.push_back(ctx.mul(ctx.pow(eps, 2 - (int64_t)t), cinv));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool coprime_filter_check(int n, uint64_t t) {
    if ((t & (t - 1)) == 0) return true;  // power of 2: vacuous
    FieldCtx ctx(n);
    uint64_t ord = ctx.order();
    int64_t d = ((int64_t)t - 2) % (int64_t)ord;
    if (d < 0) d += ord;
    if (std::gcd((uint64_t)d, ord) != 1) return true;
    for (uint32_t e = 0; e < ctx.order(); ++e) {
        if (monomial_is_planar(ctx, t, ctx.exp(e))) return false;
    }
    return true;
}

}  // namespace planar2
