#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "planar2/curve.hpp"

using namespace planar2;

TEST_CASE("bivariate polynomial basics") {
    FieldCtx ctx(4);
    BivarPoly xy = add(BivarPoly::term(ctx, 1, 0, 1), BivarPoly::term(ctx, 0, 1, 1));
    BivarPoly sq = mul(xy, xy);
    CHECK(sq.coeff(2, 0) == 1);
    CHECK(sq.coeff(0, 2) == 1);
    CHECK(sq.coeff(1, 1) == 0);  // cross terms cancel in characteristic 2
    CHECK(divide_exact(sq, xy) == xy);
    CHECK_THROWS(divide_exact(add(sq, BivarPoly::term(ctx, 0, 0, 1)), xy));

    // Evaluation and shifting agree.
    BivarPoly p = pow(add(xy, BivarPoly::term(ctx, 0, 0, ctx.alpha())), 3);
    for (Fe u = 0; u < 16; ++u) {
        for (Fe v = 0; v < 16; ++v) {
            CHECK(eval(shift(p, u, v), 0, 0) == eval(p, u, v));
            CHECK(eval(shift(p, u, v), 1, 1) == eval(p, ctx.add(u, 1), ctx.add(v, 1)));
        }
    }

    // In characteristic 2, d/dX of X^{even} vanishes.
    BivarPoly x4 = BivarPoly::term(ctx, 4, 0, 1);
    CHECK(partial(x4, 0).is_zero());
    BivarPoly x5 = BivarPoly::term(ctx, 5, 0, 1);
    CHECK(partial(x5, 0) == BivarPoly::term(ctx, 4, 0, 1));
}

TEST_CASE("multiplicity and tangent cones") {
    FieldCtx ctx(4);
    // X^2 + Y^3 at the origin: multiplicity 2, cone X^2.
    BivarPoly p = add(BivarPoly::term(ctx, 2, 0, 1), BivarPoly::term(ctx, 0, 3, 1));
    CHECK(multiplicity_at(p, 0, 0) == 2);
    CHECK(tangent_cone_at(p, 0, 0) == BivarPoly::term(ctx, 2, 0, 1));
    // Nonsingular point of X + Y^2.
    BivarPoly q = add(BivarPoly::term(ctx, 1, 0, 1), BivarPoly::term(ctx, 0, 2, 1));
    CHECK(multiplicity_at(q, 1, 1) == 1);
    // Point off the curve.
    CHECK(multiplicity_at(q, 1, 0) == 0);
}

TEST_CASE("squarefree binary forms") {
    FieldCtx ctx(4);
    BivarPoly xy = add(BivarPoly::term(ctx, 1, 0, 1), BivarPoly::term(ctx, 0, 1, 1));
    CHECK_FALSE(binary_form_squarefree(mul(xy, xy)));
    CHECK(binary_form_squarefree(xy));
    // X^3 + Y^3 = product of three distinct lines over F_4.
    BivarPoly cubes = add(BivarPoly::term(ctx, 3, 0, 1), BivarPoly::term(ctx, 0, 3, 1));
    CHECK(binary_form_squarefree(cubes));
    // X^2*Y is not squarefree; X*Y is.
    CHECK_FALSE(binary_form_squarefree(BivarPoly::term(ctx, 2, 1, 1)));
    CHECK(binary_form_squarefree(BivarPoly::term(ctx, 1, 1, 1)));
}

TEST_CASE("homogeneous trivariate helpers") {
    FieldCtx ctx(4);
    HomogPoly3 h;
    h.ctx = &ctx;
    h.deg = 2;
    h.add_term(2, 0, 0, 1);
    h.add_term(0, 2, 0, 1);  // X^2 + Y^2 = (X+Y)^2
    HomogPoly3 q = divide_x_plus_y(h);
    HomogPoly3 lin;
    lin.ctx = &ctx;
    lin.deg = 1;
    lin.add_term(1, 0, 0, 1);
    lin.add_term(0, 1, 0, 1);
    CHECK(q == lin);
    HomogPoly3 bad;
    bad.ctx = &ctx;
    bad.deg = 2;
    bad.add_term(2, 0, 0, 1);
    bad.add_term(0, 0, 2, 1);
    CHECK_THROWS(divide_x_plus_y(bad));

    HomogPoly3 withz;
    withz.ctx = &ctx;
    withz.deg = 3;
    withz.add_term(1, 0, 2, 1);
    withz.add_term(0, 1, 2, ctx.alpha());
    HomogPoly3 dz = divide_z_power(withz, 2);
    CHECK(dz.deg == 1);
    CHECK(dz.coeff(1, 0, 0) == 1);
    CHECK(dz.coeff(0, 1, 0) == ctx.alpha());
    CHECK_THROWS(divide_z_power(withz, 3));
}

TEST_CASE("exponent decomposition") {
    CHECK(decompose_t(5).k == 2);
    CHECK(decompose_t(5).l == 1);
    CHECK(decompose_t(13).k == 2);
    CHECK(decompose_t(13).l == 3);
    CHECK(decompose_t(11).k == 1);
    CHECK(decompose_t(11).l == 5);
    CHECK_THROWS(decompose_t(4));  // even
    CHECK_THROWS(decompose_t(1));  // t - 1 = 0
    CHECK(default_search_degree(6) == 24);
    CHECK(default_search_degree(5) == 20);
    CHECK(default_search_degree(7) == 21);
    CHECK(default_search_degree(4) == 16);
}

TEST_CASE("curve construction closed forms") {
    FieldCtx ctx(4);
    Fe a = 1;
    // t = 5 = 2^2 + 1: F = (X+Y)^3 + (a+1).
    BivarPoly f5 = build_F(ctx, 5, a);
    BivarPoly xy = add(BivarPoly::term(ctx, 1, 0, 1), BivarPoly::term(ctx, 0, 1, 1));
    BivarPoly expect = pow(xy, 3);  // a + 1 = 0 here
    CHECK(f5 == expect);
    Fe a2 = ctx.alpha();
    BivarPoly f5a = build_F(ctx, 5, a2);
    expect.add_term(0, 0, ctx.add(a2, 1));
    CHECK(f5a == expect);

    // t = 3 = 2^1 + 1: F = X + Y + (a+1).
    BivarPoly f3 = build_F(ctx, 3, a2);
    BivarPoly lin = xy;
    lin.add_term(0, 0, ctx.add(a2, 1));
    CHECK(f3 == lin);

    // The numerator vanishes on the diagonal for a = 1 (so X+Y divides it).
    BivarPoly num = build_numerator_F(ctx, 13, 1);
    for (Fe x = 0; x < 16; ++x) CHECK(eval(num, x, x) == 0);
    CHECK(mul(xy, build_F(ctx, 13, 1)) == num);

    // Numerator evaluations match the defining expression.
    for (Fe x = 0; x < 16; ++x) {
        for (Fe y = 0; y < 16; ++y) {
            Fe want = ctx.add(ctx.add(ctx.pow(ctx.add(x, 1), 13), ctx.pow(ctx.add(y, 1), 13)),
                              ctx.add(ctx.add(ctx.pow(x, 13), ctx.pow(y, 13)),
                                      ctx.mul(a2, ctx.add(x, y))));
            CHECK(eval(build_numerator_F(ctx, 13, a2), x, y) == want);
        }
    }
}

TEST_CASE("projective curve H and its dehomogenizations") {
    FieldCtx ctx(4);
    for (uint64_t t : {5ull, 13ull, 11ull}) {
        for (Fe a : {(Fe)1, ctx.alpha()}) {
            HomogPoly3 h = build_H(ctx, t, a);
            CHECK(dehomog_z(h) == build_F(ctx, t, a));
        }
    }
    // Guards: t a power of two has no curve.
    CHECK_THROWS_AS(build_H(ctx, 4, 1), GuardError);
    CHECK_THROWS_AS(build_F(ctx, 2, 1), GuardError);
    // G relates to its numerator by Z(X+1).
    uint64_t t = 13;
    Fe a = ctx.alpha();
    BivarPoly g = build_G(ctx, t, a);
    BivarPoly gnum = build_numerator_G(ctx, t, a);
    BivarPoly zx1 = mul(BivarPoly::term(ctx, 0, 1, 1),
                        add(BivarPoly::term(ctx, 1, 0, 1), BivarPoly::term(ctx, 0, 0, 1)));
    CHECK(mul(zx1, g) == gnum);
}

TEST_CASE("embedding") {
    FieldCtx sub(3);
    FieldCtx big(6);
    Embedding emb(sub, big);
    CHECK(emb.lift(0) == 0);
    CHECK(emb.lift(1) == 1);
    for (Fe x = 0; x < 8; ++x) {
        CHECK(emb.in_image(emb.lift(x)));
        CHECK(emb.project(emb.lift(x)) == x);
        for (Fe y = 0; y < 8; ++y) {
            CHECK(emb.lift(sub.mul(x, y)) == big.mul(emb.lift(x), emb.lift(y)));
            CHECK(emb.lift(sub.add(x, y)) == big.add(emb.lift(x), emb.lift(y)));
        }
    }
    CHECK_THROWS(Embedding(sub, FieldCtx(7)));  // 3 does not divide 7
}

TEST_CASE("singular points of t = 13 over F_64, searched in F_4096") {
    FieldCtx sub(6);
    uint64_t t = 13;  // k = 2, l = 3
    FieldCtx big(12);
    Embedding emb(sub, big);
    SingularReport rep = singular_points(sub, t, 1, 12);
    CHECK(rep.k == 2);
    CHECK(rep.l == 3);
    CHECK(rep.infinity_max == 3);
    CHECK(rep.affine_offdiag_max == 1);
    CHECK(verify_table4(rep));
    CHECK((long long)rep.infinity.size() <= rep.infinity_max);
    // u = 1 is an l-th root of unity and must be a type-A singular point.
    bool found_u1 = false;
    for (const auto& p : rep.infinity) {
        CHECK(p.p.w == 0);
        if (p.p.u == 1) {
            found_u1 = true;
            CHECK(p.type == 'A');
            CHECK(p.m_num == (1 << rep.k) + 1);
            CHECK(p.m_curve == (1 << rep.k) - 1);
        } else {
            CHECK((p.type == 'B' || p.type == 'C'));
        }
        // Point coordinates live in the big field; re-check the cone there.
        CHECK(cone_squarefree_check(big, t, emb.lift(1), p.p) == p.cone_squarefree);
    }
    CHECK(found_u1);
    long long offdiag = 0;
    for (const auto& p : rep.affine) {
        CHECK(p.p.w == 1);
        if (p.type == 'o') ++offdiag;
        // The affine multiplicity lemma.
        if (p.type == 'd') {
            CHECK(p.m_num == (1 << rep.k));
            CHECK(p.m_curve == (1 << rep.k) - 1);
        } else {
            CHECK(p.m_num == (1 << rep.k));
            CHECK(p.m_curve == (1 << rep.k));
        }
        // Re-derive the numerator multiplicity directly in the big field.
        BivarPoly num = build_numerator_F(big, t, emb.lift(1));
        CHECK(multiplicity_at(num, p.p.u, p.p.v) == p.m_num);
    }
    CHECK(offdiag <= rep.affine_offdiag_max);

    // JSON shape.
    std::string js = singular_report_json(rep);
    CHECK(js.find("\"t\":13") != std::string::npos);
    CHECK(js.find("\"infinity\"") != std::string::npos);
    CHECK(js.find("\"bounds\"") != std::string::npos);
}

TEST_CASE("b_set is a subset of a_set") {
    FieldCtx sub(6);
    auto bs = b_set(sub, 13, 1, 12);
    auto as = a_set(sub, 13, 1);
    CHECK(!bs.empty());
    CHECK(bs.size() <= as.size());
    for (Fe b : bs) {
        CHECK(std::find(as.begin(), as.end(), b) != as.end());
    }
    CHECK(std::is_sorted(bs.begin(), bs.end()));
}

TEST_CASE("point counts versus planarity") {
    // t = 5 on F_16: planar for the right c, and then every curve in the
    // family has no off-diagonal rational point.
    FieldCtx ctx(4);
    CHECK(planar_curve_crosscheck(ctx, 5, 1));
    CHECK(planar_curve_crosscheck(ctx, 3, 1));  // non-planar side of the equivalence
    auto counts5 = count_points_offdiag(ctx, 5, 1);
    bool all_zero = true;
    for (auto& [a, c] : counts5) {
        if (c != 0) all_zero = false;
    }
    CHECK(all_zero == is_planar(FuncTable::monomial(ctx, 5, 1)).planar);
    auto counts3 = count_points_offdiag(ctx, 3, 1);
    bool any3 = false;
    for (auto& [a, c] : counts3) {
        if (c != 0) any3 = true;
    }
    CHECK(any3);  // x^3 is not planar on F_16
}

TEST_CASE("special factorization at l = 1") {
    FieldCtx ctx(6);
    SpecialFactor sf = special_factor_l1(ctx, 2);  // t = 5
    REQUIRE(sf.found);
    CHECK(sf.a != 1);
    CHECK(sf.b != 0);
    CHECK(ctx.add(sf.a, 1) == ctx.pow(sf.b, 3));  // a + 1 = b^{2^k - 1}
    BivarPoly f = build_F(ctx, 5, sf.a);
    CHECK(mul(sf.factor, sf.quotient) == f);
    // The factor is X + Y + b.
    CHECK(sf.factor.coeff(1, 0) == 1);
    CHECK(sf.factor.coeff(0, 1) == 1);
    CHECK(sf.factor.coeff(0, 0) == sf.b);
}
