#include "planar2/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace planar2 {

namespace {

// Degree of a polynomial over F_2 given as a bit pattern; -1 for zero.
int poly_deg(uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

// Carry-less product of two bit-polynomials.
uint64_t poly_mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        r ^= a * (b & 1);  // a & -(b & 1) would avoid the multiply; keep it plain
        a <<= 1;
        b >>= 1;
    }
    return r;
}

uint64_t poly_mod(uint64_t a, uint64_t m) {
    int dm = poly_deg(m);
    for (int d = poly_deg(a); d >= dm; d = poly_deg(a)) {
        a ^= m << (d - dm);
    }
    return a;
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t r = 0;
    int dm = poly_deg(m);
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (poly_deg(a) >= dm) a ^= m << (poly_deg(a) - dm);
    }
    return r;
}

// f irreducible over F_2 iff it has no factor of degree <= deg(f)/2:
// gcd(f, X^{2^i} - X) = 1 for i = 1 .. deg(f)/2.
bool poly_irreducible(uint64_t f) {
    int n = poly_deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    if ((f & 1) == 0) return false;  // divisible by X
    uint64_t x2i = 2;                // X
    for (int i = 1; 2 * i <= n; ++i) {
        x2i = poly_mulmod(x2i, x2i, f);
        if (poly_gcd(f, x2i ^ 2u) != 1) return false;
    }
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t v) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; (uint64_t)p * p <= v; ++p) {
        if (v % p == 0) {
            ps.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) ps.push_back(v);
    return ps;
}

// One fixed irreducible modulus per degree; all entries are primitive, so X
// generates the multiplicative group.
const std::vector<std::pair<int, uint32_t>> kModuli = {
    {1, 0x3},        // X + 1
    {2, 0x7},        // X^2 + X + 1
    {3, 0xb},        // X^3 + X + 1
    {4, 0x13},       // X^4 + X + 1
    {5, 0x25},       // X^5 + X^2 + 1
    {6, 0x43},       // X^6 + X + 1
    {7, 0x83},       // X^7 + X + 1
    {8, 0x11d},      // X^8 + X^4 + X^3 + X^2 + 1
    {9, 0x211},      // X^9 + X^4 + 1
    {10, 0x409},     // X^10 + X^3 + 1
    {11, 0x805},     // X^11 + X^2 + 1
    {12, 0x1053},    // X^12 + X^6 + X^4 + X + 1
    {13, 0x201b},    // X^13 + X^4 + X^3 + X + 1
    {14, 0x4443},    // X^14 + X^10 + X^6 + X + 1
    {15, 0x8003},    // X^15 + X + 1
    {16, 0x1100b},   // X^16 + X^12 + X^3 + X + 1
    {17, 0x20009},   // X^17 + X^3 + 1
    {18, 0x40081},   // X^18 + X^7 + 1
    {19, 0x80027},   // X^19 + X^5 + X^2 + X + 1
    {20, 0x100009},  // X^20 + X^3 + 1
    {21, 0x200005},  // X^21 + X^2 + 1
    {22, 0x400003},  // X^22 + X + 1
    {23, 0x800021},  // X^23 + X^5 + 1
    {24, 0x1000087}, // X^24 + X^7 + X^2 + X + 1
};

}  // namespace

FieldCtx::FieldCtx(int n) {
    guard(n >= 1 && n <= kMaxDegree, "field degree out of range (1..24)");
    n_ = n;
    modulus_ = kModuli[n - 1].second;
    init();
}

FieldCtx::FieldCtx(int n, uint32_t modulus) {
    guard(n >= 1 && n <= kMaxDegree, "field degree out of range (1..24)");
    require(poly_deg(modulus) == n, "modulus degree mismatch");
    n_ = n;
    modulus_ = modulus;
    init();
}

void FieldCtx::init() {
    internal_check(poly_irreducible(modulus_), "modulus is not irreducible");

    // Generator: smallest element (as an integer) of multiplicative order 2^n-1.
    uint32_t ord = order();
    auto factors = prime_factors(ord);
    auto pow_noluts = [&](Fe a, uint64_t e) {
        Fe r = 1;
        while (e) {
            if (e & 1) r = (Fe)poly_mulmod(r, a, modulus_);
            a = (Fe)poly_mulmod(a, a, modulus_);
            e >>= 1;
        }
        return r;
    };
    for (Fe a = 1; a < size(); ++a) {
        if (pow_noluts(a, ord) != 1) continue;
        bool gen = true;
        for (uint32_t p : factors) {
            if (pow_noluts(a, ord / p) == 1) { gen = false; break; }
        }
        if (gen) { alpha_ = a; break; }
    }
    internal_check(alpha_ != 0, "no multiplicative generator found");

    if (n_ <= kLogTableMaxDegree) {
        exp_.resize(2 * ord);
        log_.assign(size(), 0);
        Fe cur = 1;
        for (uint32_t i = 0; i < ord; ++i) {
            exp_[i] = cur;
            exp_[i + ord] = cur;
            log_[cur] = i;
            cur = (Fe)poly_mulmod(cur, alpha_, modulus_);
        }
        internal_check(cur == 1, "generator order check failed");
        have_tables_ = true;
    }
}

Fe FieldCtx::mul(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    if (have_tables_) return exp_[log_[a] + log_[b]];
    return (Fe)poly_mulmod(a, b, modulus_);
}

Fe FieldCtx::inv(Fe a) const {
    require(a != 0, "inversion of zero");
    if (have_tables_) return exp_[order() - log_[a]];
    return pow(a, (int64_t)order() - 1);
}

Fe FieldCtx::pow(Fe a, int64_t e) const {
    if (a == 0) {
        require(e >= 0, "0 raised to a negative power");
        return e == 0 ? 1 : 0;
    }
    int64_t ord = order();
    e %= ord;
    if (e < 0) e += ord;
    if (have_tables_) return exp_[(uint64_t)((__int128)log_[a] * e % ord)];
    Fe r = 1;
    while (e) {
        if (e & 1) r = (Fe)poly_mulmod(r, a, modulus_);
        a = (Fe)poly_mulmod(a, a, modulus_);
        e >>= 1;
    }
    return r;
}

uint32_t FieldCtx::log(Fe a) const {
    require(a != 0, "log of zero");
    if (have_tables_) return log_[a];
    // On-demand discrete log for n > 20: baby-step only used in cold paths.
    Fe cur = 1;
    for (uint32_t i = 0; i < order(); ++i) {
        if (cur == a) return i;
        cur = (Fe)poly_mulmod(cur, alpha_, modulus_);
    }
    throw InternalError("discrete log not found");
}

Fe FieldCtx::exp(uint64_t e) const {
    if (have_tables_) return exp_[e % order()];
    return pow(alpha_, (int64_t)(e % order()));
}

bool FieldCtx::in_subfield(Fe a, int m) const {
    require(m >= 1 && n_ % m == 0, "subfield degree must divide n");
    Fe b = a;
    for (int i = 0; i < m; ++i) b = sqr(b);
    return b == a;
}

int FieldCtx::trace_abs(Fe a, int m) const {
    require(m >= 1 && n_ % m == 0, "subfield degree must divide n");
    require(in_subfield(a, m), "element not in the stated subfield");
    Fe t = 0, p = a;
    for (int i = 0; i < m; ++i) {
        t = add(t, p);
        p = sqr(p);
    }
    internal_check(t == 0 || t == 1, "subfield trace not in F_2");
    return (int)t;
}

std::vector<Fe> FieldCtx::subfield_elements(int m) const {
    require(m >= 1 && n_ % m == 0, "subfield degree must divide n");
    std::vector<Fe> out;
    out.push_back(0);
    if (m == n_) {
        for (Fe a = 1; a < size(); ++a) out.push_back(a);
        return out;
    }
    uint32_t step = order() / ((1u << m) - 1);
    for (uint32_t i = 0; i < (1u << m) - 1u; ++i) out.push_back(exp((uint64_t)i * step));
    std::sort(out.begin(), out.end());
    return out;
}

std::string FieldCtx::to_hex(Fe a) {
    std::ostringstream os;
    os << "0x" << std::hex << a;
    return os.str();
}

Fe FieldCtx::parse_hex(const std::string& s) {
    require(s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'), "expected 0x-prefixed hex");
    return (Fe)std::stoul(s.substr(2), nullptr, 16);
}

const std::vector<std::pair<int, uint32_t>>& FieldCtx::modulus_table() { return kModuli; }

std::string FieldCtx::modulus_table_text() {
    std::ostringstream os;
    for (auto& [n, m] : kModuli) os << "n=" << n << " modulus=0x" << std::hex << m << std::dec << "\n";
    return os.str();
}

uint64_t FieldCtx::modulus_table_checksum() { return fnv1a(modulus_table_text()); }

int binomial_parity(uint64_t m, uint64_t k) { return (k & m) == k ? 1 : 0; }

uint64_t fnv1a(const void* data, size_t len, uint64_t seed) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t fnv1a(const std::string& s, uint64_t seed) { return fnv1a(s.data(), s.size(), seed); }

}  // namespace planar2
