#pragma once

// Planarity and APN predicates for function tables on F_{2^n}, the
// exhaustive planar-monomial search, and the coefficient sets A_n.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <tuple>
#include <vector>

#include "planar2/gf2.hpp"

namespace planar2 {

// A function F_{2^n} -> F_{2^n} as a dense table; values[x] is the image of
// the element with bit pattern x.
struct FuncTable {
    const FieldCtx* ctx = nullptr;
    std::vector<Fe> values;
    std::optional<std::pair<uint64_t, Fe>> descriptor;  // (t, c) for x -> c x^t

    Fe operator()(Fe x) const { return values[x]; }

    static FuncTable monomial(const FieldCtx& ctx, uint64_t t, Fe c);
    static FuncTable zero(const FieldCtx& ctx);
    static FuncTable from_values(const FieldCtx& ctx, std::vector<Fe> values);

    // File format: "planar2 n=<n> modulus=0x<hex>" then 2^n hex lines.
    static FuncTable load(std::istream& in, const FieldCtx& ctx);
    void save(std::ostream& out) const;
};

// Table of x -> f(x+eps) + f(x) + eps*x; eps != 0.
std::vector<Fe> delta_map(const FuncTable& f, Fe eps);

struct PlanarityReport {
    bool planar = true;
    // For each failing eps, one colliding pair (eps, x1, x2) with x1 != x2.
    std::vector<std::tuple<Fe, Fe, Fe>> witnesses;
};

PlanarityReport is_planar(const FuncTable& f);

// True iff x -> f(x+eps) + f(x) is 2-to-1 for every eps != 0.
bool is_apn(const FuncTable& f);

struct MonomialFamily {
    uint64_t t;
    std::vector<Fe> cs;  // all c making c x^t planar, in generator-power order
};

// Exhaustive search over 1 <= t <= 2^n-2 and all c != 0; n <= 7.
// Results sorted by t, each c list in increasing generator-exponent order.
std::vector<MonomialFamily> search_planar_monomials(int n, int jobs = 1);

// A_n = { eps^(2-t) / c : eps != 0 }, sorted ascending by bit pattern.
std::vector<Fe> a_set(const FieldCtx& ctx, uint64_t t, Fe c);

// Machine check of the gcd proposition at one (n, t): if gcd(t-2, 2^n-1) = 1
// and t is not a power of 2, no c makes c x^t planar.
bool coprime_filter_check(int n, uint64_t t);

}  // namespace planar2
