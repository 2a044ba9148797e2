#pragma once

// The plane curves attached to a monomial exponent t: numerators and exact
// quotients, singular-point search over a bounded extension field,
// multiplicity/tangent-cone classification, the coefficient sets B_n, point
// counts versus planarity, and the explicit t = 2^k+1 factorization.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "planar2/bivar.hpp"
#include "planar2/planar.hpp"

namespace planar2 {

// t = 2^k * l + 1 with k >= 1 and l odd.
struct TDecomp {
    int k = 0;
    uint64_t l = 0;
};
TDecomp decompose_t(uint64_t t);

// Default search bound: the largest multiple of n not exceeding min(4n, 24).
int default_search_degree(int n);

// The subfield copy of F_{2^n} inside F_{2^M}, pinned by sending the small
// generator to a root of the small modulus.
class Embedding {
public:
    Embedding(const FieldCtx& sub, const FieldCtx& big);
    const FieldCtx& sub() const { return *sub_; }
    const FieldCtx& big() const { return *big_; }
    Fe lift(Fe x) const { return up_[x]; }
    bool in_image(Fe y) const { return down_.count(y) != 0; }
    Fe project(Fe y) const;

private:
    const FieldCtx* sub_;
    const FieldCtx* big_;
    std::vector<Fe> up_;
    std::unordered_map<Fe, Fe> down_;
};

// Curve constructions; a lives in the coefficient field ctx.
BivarPoly build_numerator_F(const FieldCtx& ctx, uint64_t t, Fe a);
BivarPoly build_F(const FieldCtx& ctx, uint64_t t, Fe a);
HomogPoly3 build_numerator_H(const FieldCtx& ctx, uint64_t t, Fe a);
HomogPoly3 build_H(const FieldCtx& ctx, uint64_t t, Fe a);
BivarPoly build_G(const FieldCtx& ctx, uint64_t t, Fe a);            // H(X,1,Z)
BivarPoly build_numerator_G(const FieldCtx& ctx, uint64_t t, Fe a);  // Z(X+1)G

// w = 1 for affine points (u,v,1); w = 0 for points at infinity, stored as
// (u,1,0).
struct ProjPoint {
    Fe u = 0, v = 0, w = 1;
    bool operator==(const ProjPoint&) const = default;
};

struct SingularPointInfo {
    ProjPoint p;
    int m_curve = 0;  // multiplicity of G (infinity) or F (affine)
    int m_num = 0;    // multiplicity of the numerator
    char type = '?';  // infinity: 'A','B','C'; affine: 'd' diagonal, 'o' off-diagonal
    bool cone_squarefree = false;
};

struct SingularReport {
    uint64_t t = 0;
    int k = 0;
    uint64_t l = 0;
    Fe a = 0;  // in F_{2^n}
    int n = 0, M = 0;
    std::vector<SingularPointInfo> infinity;
    std::vector<SingularPointInfo> affine;
    long long infinity_max = 0;        // l
    long long affine_offdiag_max = 0;  // (l-1)(l-2)/2
};

// One pass over F_{2^M} applying the first-order necessary condition
// (u+1)^{t-1} + u^{t-1} = a; candidate u lists are kept per target a. The
// target values live in the small field and are compared after lifting.
class SingularScan {
public:
    SingularScan(const Embedding& emb, uint64_t t, const std::vector<Fe>& targets_small,
                 int jobs = 1);
    const Embedding& emb() const { return *emb_; }
    uint64_t t() const { return t_; }
    // Candidates for a target a (small field); sorted ascending.
    const std::vector<Fe>& candidates(Fe a_small) const;

private:
    const Embedding* emb_;
    uint64_t t_;
    std::unordered_map<Fe, std::vector<Fe>> by_a_;  // key: lifted target
    std::vector<Fe> empty_;
};

// All singular points of H_{t,a} with coordinates in F_{2^M}, classified.
SingularReport singular_points(const SingularScan& scan, Fe a_small);
// Convenience variant building its own embedding and scan.
SingularReport singular_points(const FieldCtx& sub, uint64_t t, Fe a, int M, int jobs = 1);

// Every at-infinity point matches a multiplicity-table row, with (1,0)
// matching row A when singular; affine points match the diagonal /
// off-diagonal multiplicities when a is in B_n.
bool verify_table4(const SingularReport& rep);

// Squarefreeness of the degree-(2^k+1) homogeneous part of the shifted
// numerator at P (the splitting claim for the tangent-cone analysis).
bool cone_squarefree_check(const FieldCtx& ctx, uint64_t t, Fe a, const ProjPoint& p);

// Subset of a_set(n,t,c) whose curves have no singular point of the
// numerator violating the three inequations, searched up to F_{2^M}.
std::vector<Fe> b_set(const FieldCtx& sub, uint64_t t, Fe c, int M, int jobs = 1);
// Same using an existing scan (its targets must cover a_set(n, t, c)).
std::vector<Fe> b_set(const SingularScan& scan, Fe c);

// For each a in A_n: number of (u,v) in F_{2^n}^2 with u != v on the
// numerator curve.
std::map<Fe, long long> count_points_offdiag(const FieldCtx& ctx, uint64_t t, Fe c);
// is_planar(c x^t)  <=>  every count is zero.
bool planar_curve_crosscheck(const FieldCtx& ctx, uint64_t t, Fe c);

struct SpecialFactor {
    bool found = false;
    Fe a = 0, b = 0;
    BivarPoly factor;    // X + Y + b
    BivarPoly quotient;  // F_{t,a} / (X+Y+b)
};

// t = 2^k+1: finds a != 1 in A_n and b != 0 with a+1 = b^{2^k-1}, then
// certifies the exact division of F_{t,a} by X+Y+b.
SpecialFactor special_factor_l1(const FieldCtx& ctx, int k, Fe c = 1);

std::string singular_report_json(const SingularReport& rep);

}  // namespace planar2
