#include "planar2/gr4.hpp"

#include <sstream>

namespace planar2 {

namespace {

using Poly4 = std::vector<int>;  // coefficients mod 4, index = degree

// Graeffe step: h with h(X^2) = (-1)^deg(f) * f(X) * f(-X) (mod 4). The odd
// coefficients of f(X)f(-X) cancel identically, so h is well defined.
Poly4 graeffe(const Poly4& f) {
    int n = (int)f.size() - 1;
    std::vector<int> prod(2 * n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            int s = (j % 2 == 0) ? f[j] : (4 - f[j]) % 4;  // f(-X)
            prod[i + j] = (prod[i + j] + f[i] * s) % 4;
        }
    }
    int sign = (n % 2 == 0) ? 1 : -1;
    Poly4 h(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        int c = prod[2 * j] % 4;
        if (sign < 0) c = (4 - c) % 4;
        h[j] = c % 4;
    }
    for (int j = 0; j < 2 * n; j += 2) {
        internal_check(prod[j + 1] % 4 == 0, "Graeffe step: odd coefficient survived");
    }
    return h;
}

std::vector<uint32_t> prime_factors_u64(uint64_t v) {
    std::vector<uint32_t> ps;
    for (uint64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            ps.push_back((uint32_t)p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) ps.push_back((uint32_t)v);
    return ps;
}

}  // namespace

RingCtx::RingCtx(const FieldCtx& field) : field_(field), n_(field.degree()) {
    guard(n_ <= kMaxDegree, "ring degree out of range (1..16)");

    // Hensel lift by Graeffe iteration to the fixed point: the unique monic
    // divisor of X^{2^n} - X over Z4 reducing to the field modulus.
    Poly4 f(n_ + 1, 0);
    for (int j = 0; j <= n_; ++j) f[j] = (field.modulus() >> j) & 1;
    Poly4 h = f;
    bool stable = false;
    for (int iter = 0; iter < 8; ++iter) {
        Poly4 next = graeffe(h);
        if (next == h) { stable = true; break; }
        h = next;
    }
    internal_check(stable, "Hensel lift did not reach a Graeffe fixed point");
    internal_check(h[n_] == 1, "lifted modulus not monic");
    for (int j = 0; j <= n_; ++j) {
        internal_check((h[j] & 1) == (int)((field.modulus() >> j) & 1),
                       "lifted modulus does not reduce to the field modulus");
        lifted_[j] = (uint8_t)h[j];
    }

    // beta = image of X.
    {
        std::array<int, 49> mono{};
        mono[1] = 1;
        beta_ = reduce_mul(mono);
    }

    // Order of beta must be exactly 2^n - 1.
    uint64_t ord = ((uint64_t)1 << n_) - 1;
    internal_check(pow(beta_, ord) == scalar(1), "beta^(2^n-1) != 1");
    for (uint32_t p : prime_factors_u64(ord)) {
        internal_check(!(pow(beta_, ord / p) == scalar(1)), "beta order too small");
    }

    // Teichmuller set: 0, beta^0, ..., beta^{2^n-2}.
    gamma_.reserve(ord + 1);
    gamma_.push_back(zero());
    gamma_idx_.emplace(pack(zero()), 0);
    RingElem cur = scalar(1);
    for (uint64_t i = 0; i < ord; ++i) {
        gamma_.push_back(cur);
        gamma_idx_.emplace(pack(cur), (uint32_t)(i + 1));
        cur = mul(cur, beta_);
    }
    internal_check(cur == scalar(1), "gamma enumeration did not close");
    internal_check(gamma_idx_.size() == ord + 1, "gamma elements not distinct");
    for (const RingElem& x : gamma_) {
        internal_check(pow(x, (uint64_t)1 << n_) == x, "gamma element fails x^(2^n) = x");
    }

    // Absolute trace on the power basis: T(X^j) = sum of Frobenius iterates.
    trace_basis_.resize(n_);
    for (int j = 0; j < n_; ++j) {
        RingElem xj{};
        xj.c[j] = 1;
        RingElem acc{}, it = xj;
        for (int i = 0; i < n_; ++i) {
            acc = add(acc, it);
            it = frobenius(it);
        }
        for (int m = 1; m < n_; ++m) internal_check(acc.c[m] == 0, "trace value not in Z4");
        trace_basis_[j] = acc.c[0];
    }

    // The iso beta -> alpha must respect oplus; spot-check against reduction
    // mod 2, which is the additive structure oplus descends to.
    for (uint64_t i = 0; i < std::min<uint64_t>(ord + 1, 64); ++i) {
        const RingElem& x = gamma_[i];
        Fe reduced = 0;
        for (int j = 0; j < n_; ++j) reduced |= (Fe)(x.c[j] & 1) << j;
        internal_check(gamma_to_field(x) == reduced, "iso beta->alpha is not reduction mod 2");
    }
}

RingElem RingCtx::scalar(int v) const {
    RingElem r{};
    r.c[0] = (uint8_t)(((v % 4) + 4) % 4);
    return r;
}

RingElem RingCtx::add(const RingElem& a, const RingElem& b) const {
    RingElem r{};
    for (int i = 0; i < n_; ++i) r.c[i] = (uint8_t)((a.c[i] + b.c[i]) & 3);
    return r;
}

RingElem RingCtx::sub(const RingElem& a, const RingElem& b) const {
    RingElem r{};
    for (int i = 0; i < n_; ++i) r.c[i] = (uint8_t)((a.c[i] - b.c[i] + 4) & 3);
    return r;
}

RingElem RingCtx::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem RingCtx::reduce_mul(const std::array<int, 49>& prod) const {
    std::array<int, 49> p = prod;
    for (int i = 48; i >= n_; --i) {
        int c = ((p[i] % 4) + 4) % 4;
        if (c == 0) continue;
        // subtract c * X^{i-n} * lifted_modulus
        for (int j = 0; j <= n_; ++j) p[i - n_ + j] -= c * (int)lifted_[j];
    }
    RingElem r{};
    for (int i = 0; i < n_; ++i) r.c[i] = (uint8_t)(((p[i] % 4) + 4) % 4);
    return r;
}

RingElem RingCtx::mul(const RingElem& a, const RingElem& b) const {
    std::array<int, 49> prod{};
    for (int i = 0; i < n_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < n_; ++j) prod[i + j] += (int)a.c[i] * b.c[j];
    }
    return reduce_mul(prod);
}

RingElem RingCtx::mul_scalar(const RingElem& a, int v) const {
    int s = ((v % 4) + 4) % 4;
    RingElem r{};
    for (int i = 0; i < n_; ++i) r.c[i] = (uint8_t)((a.c[i] * s) & 3);
    return r;
}

RingElem RingCtx::pow(const RingElem& a, uint64_t e) const {
    RingElem r = scalar(1), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool RingCtx::in_gamma(const RingElem& x) const { return gamma_idx_.count(pack(x)) != 0; }

std::optional<uint32_t> RingCtx::gamma_index(const RingElem& x) const {
    auto it = gamma_idx_.find(pack(x));
    if (it == gamma_idx_.end()) return std::nullopt;
    return it->second;
}

RingElem RingCtx::beta_pow(uint64_t e) const {
    uint64_t ord = ((uint64_t)1 << n_) - 1;
    return gamma_[1 + e % ord];
}

RingElem RingCtx::teich_sqrt(const RingElem& x) const {
    auto idx = gamma_index(x);
    require(idx.has_value(), "teich_sqrt: element not in the Teichmuller set");
    if (*idx == 0) return zero();
    uint64_t ord = ((uint64_t)1 << n_) - 1;
    uint64_t e = *idx - 1;
    // sqrt(beta^e) = beta^(e * 2^{n-1} mod 2^n-1): squaring is a bijection on Gamma.
    uint64_t half = (((uint64_t)1 << (n_ - 1)) % ord);
    return gamma_[1 + (__uint128_t)e * half % ord];
}

RingElem RingCtx::oplus(const RingElem& x, const RingElem& y) const {
    require(in_gamma(x) && in_gamma(y), "oplus: operand not in the Teichmuller set");
    RingElem s = add(add(x, y), mul_scalar(teich_sqrt(mul(x, y)), 2));
    internal_check(in_gamma(s), "oplus left the Teichmuller set");
    return s;
}

std::pair<RingElem, RingElem> RingCtx::decompose(const RingElem& y) const {
    RingElem a = y;
    for (int i = 0; i < n_; ++i) a = mul(a, a);  // y^(2^n) projects to Gamma
    RingElem d = sub(y, a);
    Fe bits = 0;
    for (int i = 0; i < n_; ++i) {
        internal_check((d.c[i] & 1) == 0, "decompose: residual not in 2R");
        bits |= (Fe)(d.c[i] >> 1) << i;
    }
    return {a, field_to_gamma(bits)};
}

RingElem RingCtx::frobenius(const RingElem& y) const {
    auto [a, b] = decompose(y);
    return add(mul(a, a), mul_scalar(mul(b, b), 2));
}

int RingCtx::trace_T(const RingElem& y) const {
    int t = 0;
    for (int j = 0; j < n_; ++j) t += (int)y.c[j] * trace_basis_[j];
    return t & 3;
}

Fe RingCtx::gamma_to_field(const RingElem& x) const {
    auto idx = gamma_index(x);
    require(idx.has_value(), "gamma_to_field: element not in the Teichmuller set");
    if (*idx == 0) return 0;
    return field_.exp(*idx - 1);
}

RingElem RingCtx::field_to_gamma(Fe a) const {
    if (a == 0) return zero();
    return gamma_[1 + field_.log(a)];
}

uint64_t RingCtx::pack(const RingElem& x) const {
    uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k |= (uint64_t)(x.c[i] & 3) << (2 * i);
    return k;
}

std::string RingCtx::to_string(const RingElem& x) const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        if (i) os << ",";
        os << (int)x.c[i];
    }
    return os.str();
}

std::string RingCtx::dump_json() const {
    uint64_t cks = 1469598103934665603ull;
    for (const RingElem& x : gamma_) {
        uint64_t k = pack(x);
        cks = fnv1a(&k, sizeof(k), cks);
    }
    std::ostringstream os;
    os << "{\"n\":" << n_ << ",\"field_modulus\":\"" << FieldCtx::to_hex(field_.modulus())
       << "\",\"lifted_modulus\":[";
    for (int j = 0; j <= n_; ++j) {
        if (j) os << ",";
        os << (int)lifted_[j];
    }
    os << "],\"beta_index_checksum\":" << cks << "}";
    return os.str();
}

}  // namespace planar2
