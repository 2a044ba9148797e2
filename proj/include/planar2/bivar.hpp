#pragma once

// Sparse bivariate and homogeneous trivariate polynomials over F_{2^m}.
// Exponents are kept explicitly; no zero coefficients are stored.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "planar2/gf2.hpp"

namespace planar2 {

struct BivarPoly {
    const FieldCtx* ctx = nullptr;
    std::map<std::pair<int, int>, Fe> terms;  // (degX, degY) -> nonzero coefficient

    static BivarPoly zero(const FieldCtx& ctx);
    static BivarPoly term(const FieldCtx& ctx, int dx, int dy, Fe c);

    // XOR-accumulates c into the (dx, dy) coefficient, dropping zeros.
    void add_term(int dx, int dy, Fe c);
    Fe coeff(int dx, int dy) const;
    bool is_zero() const { return terms.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool operator==(const BivarPoly& o) const { return terms == o.terms; }
    std::string to_string() const;  // e.g. "X^3*Y + 0x3*Y^2 + 0x1"
};

BivarPoly add(const BivarPoly& a, const BivarPoly& b);
BivarPoly mul(const BivarPoly& a, const BivarPoly& b);
BivarPoly pow(const BivarPoly& a, uint64_t e);
Fe eval(const BivarPoly& p, Fe x, Fe y);
// axis 0 = X, 1 = Y.
BivarPoly partial(const BivarPoly& p, int axis);
// Lex division (X > Y); throws if the remainder is nonzero.
BivarPoly divide_exact(const BivarPoly& p, const BivarPoly& q);
// p(X + u, Y + v)
BivarPoly shift(const BivarPoly& p, Fe u, Fe v);
BivarPoly homogeneous_part(const BivarPoly& p, int d);

// Multiplicity of p at (u,v): degree of the lowest nonzero homogeneous part
// of p(X+u, Y+v); 0 iff the point is not on the curve.
int multiplicity_at(const BivarPoly& p, Fe u, Fe v);
// That lowest homogeneous part (in the shifted coordinates).
BivarPoly tangent_cone_at(const BivarPoly& p, Fe u, Fe v);

// Whether a homogeneous binary form has no repeated linear factor over its
// splitting field: gcd with each partial derivative is trivial.
bool binary_form_squarefree(const BivarPoly& form);

struct HomogPoly3 {
    const FieldCtx* ctx = nullptr;
    int deg = 0;
    std::map<std::tuple<int, int, int>, Fe> terms;  // (i,j,k), i+j+k = deg

    void add_term(int i, int j, int k, Fe c);
    Fe coeff(int i, int j, int k) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const HomogPoly3& o) const { return deg == o.deg && terms == o.terms; }
};

// Exact division by Z^e; requires every term to carry Z^e.
HomogPoly3 divide_z_power(const HomogPoly3& h, int e);
// Exact division by X + Y via Horner in X; throws on nonzero remainder.
HomogPoly3 divide_x_plus_y(const HomogPoly3& h);
// H(X, Y, 1) and H(X, 1, Z) as bivariate polynomials (second variable = Z).
BivarPoly dehomog_z(const HomogPoly3& h);
BivarPoly dehomog_y(const HomogPoly3& h);

}  // namespace planar2
