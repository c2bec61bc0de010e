#include <gtest/gtest.h>

#include <random>

#include "qv/crossed.hpp"

using namespace qv;

namespace {

CrossedParams p2() { return CrossedParams({Q(2, 3), Q(5, 7)}); }
CrossedParams p3() { return CrossedParams({Q(1), Q(2), Q(-4)}); }

SElement random_element(const CrossedParams& p, std::mt19937& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> c(-3, 3), d(0, maxdeg), e(0, p.m - 1);
    SElement r(p);
    for (int i = 0; i < 3; ++i) r.add({e(rng), d(rng), d(rng)}, Q(c(rng)));
    return r;
}

SElement random_corner(const CrossedParams& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), d(0, 2), t(-1, 1);
    SElement r(p);
    for (int i = 0; i < 3; ++i) {
        int b = d(rng), s = t(rng);
        int a = b + s * p.m;
        if (a < 0) continue;
        r.add({0, a, b}, Q(c(rng)));
    }
    return r;
}

}  // namespace

TEST(Crossed, CommutatorIsTau) {
    for (auto p : {p2(), p3(), CrossedParams({Q(3)})}) {
        SElement x = SElement::x(p), y = SElement::y(p);
        EXPECT_EQ(x * y - y * x, SElement::tau(p));
        for (int i = 0; i < p.m; ++i) {
            EXPECT_EQ(SElement::e(p, i) * x, x * SElement::e(p, i + 1));
            EXPECT_EQ(SElement::e(p, i) * y, y * SElement::e(p, i - 1));
        }
    }
}

TEST(Crossed, NoRewriteWhenAlreadyNormal) {
    CrossedParams p({Q(1)});
    EXPECT_EQ(SElement::mono(p, 0, 1, 0) * SElement::mono(p, 0, 0, 1), SElement::mono(p, 0, 1, 1));
}

TEST(Crossed, AssociativityAndUnit) {
    std::mt19937 rng(3);
    for (auto p : {p2(), p3()}) {
        SElement one = SElement::one(p);
        for (int i = 0; i < 25; ++i) {
            auto u = random_element(p, rng), v = random_element(p, rng), w = random_element(p, rng);
            EXPECT_EQ((u * v) * w, u * (v * w));
            EXPECT_EQ(u * one, u);
            EXPECT_EQ(one * u, u);
        }
    }
}

TEST(Crossed, CornerProjection) {
    auto p = p2();
    EXPECT_EQ(corner_project(SElement::mono(p, 0, 1, 1)), SElement::mono(p, 0, 1, 1));
    EXPECT_TRUE(corner_project(SElement::mono(p, 0, 1, 0)).is_zero());
    EXPECT_EQ(corner_project(SElement::mono(p, 0, 3, 1)), SElement::mono(p, 0, 3, 1));
    std::mt19937 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto u = random_element(p, rng), v = random_element(p, rng);
        auto cu = corner_project(u);
        EXPECT_EQ(corner_project(cu), cu);
        EXPECT_TRUE(in_corner(cu));
        auto cv = corner_project(v);
        EXPECT_EQ(corner_project(cu * SElement::e(p, 0) * cv * SElement::e(p, 0)), cu * cv);
    }
}

TEST(Crossed, PhiOnGenerators) {
    auto p = p2();
    PhiMap phi(p);
    Poly v = phi.v();
    EXPECT_EQ(phi(SElement::mono(p, 0, 1, 1)), GwaElement::poly(v, p.sum() * hvar()));
    EXPECT_EQ(phi(e_y_n_x_n(p, 2)), GwaElement::poly(v, sigma_shift(v, 1)));
    EXPECT_EQ(phi(SElement::e(p, 0)), GwaElement::scalar(v, Q(1)));
    EXPECT_EQ(phi(SElement::mono(p, 0, 2, 0)), GwaElement::a(v));
    EXPECT_EQ(phi(SElement::mono(p, 0, 0, 2)), GwaElement::b(v));
    EXPECT_THROW(phi(SElement::mono(p, 0, 1, 0)), std::invalid_argument);
}

TEST(Crossed, PhiMultiplicative) {
    std::mt19937 rng(17);
    for (auto p : {p2(), p3()}) {
        PhiMap phi(p);
        for (int i = 0; i < 100; ++i) {
            auto u = random_corner(p, rng), v = random_corner(p, rng);
            EXPECT_EQ(phi(u * v), phi(u) * phi(v));
        }
    }
}

TEST(Crossed, RecursionForDiagonalImages) {
    // f_B = f_{B-1} ((sum tau) h - tau_{-1} - ... - tau_{-(B-1)})
    for (auto p : {p2(), p3()}) {
        PhiMap phi(p);
        for (int B = 1; B <= 7; ++B) {
            Q s = 0;
            for (int j = 1; j < B; ++j) s += p.t(-j);
            EXPECT_EQ(phi.f(B), phi.f(B - 1) * (p.sum() * hvar() - Poly(s)));
        }
    }
}

TEST(Crossed, DiagonalImagesMatchClosedForm) {
    for (auto p : {p2(), CrossedParams({Q(1), Q(1)}), CrossedParams({Q(-3), Q(1, 2)})}) {
        PhiMap phi(p);
        for (int n = 0; n <= 10; ++n) EXPECT_EQ(phi(e_y_n_x_n(p, n)).piece(0), f_closed_form(n, p.tau[0], p.tau[1]));
    }
}

TEST(Crossed, VIsImageOfBa) {
    for (auto p : {p2(), p3(), CrossedParams({Q(1), Q(2), Q(3), Q(5)})}) {
        PhiMap phi(p);
        // b a = v(h) in the corner: e x^m y^m
        SElement ba = SElement::mono(p, 0, 0, p.m) * SElement::mono(p, 0, p.m, 0);
        EXPECT_EQ(phi(ba), GwaElement::poly(phi.v(), phi.v()));
    }
}

TEST(Crossed, GeneratorAutomorphismsAreValid) {
    for (auto p : {p2(), p3()})
        for (int k = 1; k <= 2; ++k)
            for (Q lam : {Q(1), Q(-1, 2)}) {
                EXPECT_TRUE(verify_s_automorphism(s_theta(p, lam)));
                EXPECT_TRUE(verify_s_automorphism(s_psi(p, k, lam)));
                EXPECT_TRUE(verify_s_automorphism(s_phi(p, k, lam)));
            }
}

TEST(Crossed, ThetaFixesYX) {
    auto p = p2();
    auto u = SElement::mono(p, 0, 1, 1);
    EXPECT_EQ(apply_s_automorphism(s_theta(p, Q(5)), u), u);
    EXPECT_EQ(apply_s_automorphism(s_psi(p, 1, Q(3)), SElement::y(p)), SElement::y(p));
}

TEST(Crossed, AutomorphismsPreserveProducts) {
    std::mt19937 rng(21);
    auto p = p2();
    std::vector<SAutomorphism> gens{s_theta(p, Q(2)), s_psi(p, 1, Q(1)), s_phi(p, 2, Q(-1, 3))};
    for (auto& s : gens)
        for (int i = 0; i < 10; ++i) {
            auto u = random_element(p, rng, 2), v = random_element(p, rng, 2);
            EXPECT_EQ(apply_s_automorphism(s, u * v), apply_s_automorphism(s, u) * apply_s_automorphism(s, v));
        }
}

TEST(Crossed, WordsActGeneratorByGenerator) {
    std::mt19937 rng(2);
    auto p = p2();
    auto s = s_psi(p, 1, Q(1)), t = s_phi(p, 1, Q(2));
    for (int i = 0; i < 5; ++i) {
        auto u = random_element(p, rng, 2);
        EXPECT_EQ(apply_word({s, t}, u), apply_s_automorphism(s, apply_s_automorphism(t, u)));
        EXPECT_EQ(apply_word({}, u), u);
    }
}

TEST(Crossed, HscaleValidity) {
    // two vertices: the inverse shifted by one in either direction is the same condition
    auto p = p2();
    std::vector<Q> c{Q(2), Q(3)};
    EXPECT_TRUE(verify_s_automorphism(s_hscale(p, c, {Q(1) / c[1], Q(1) / c[0]})));
    EXPECT_FALSE(verify_s_automorphism(s_hscale(p, c, c)));
    // three vertices: with scalars multiplied on the left, d_i = 1/c_{i-1}
    auto q = p3();
    std::vector<Q> c3{Q(2), Q(3), Q(5)};
    std::vector<Q> dm{Q(1) / c3[2], Q(1) / c3[0], Q(1) / c3[1]};
    std::vector<Q> dp{Q(1) / c3[1], Q(1) / c3[2], Q(1) / c3[0]};
    EXPECT_TRUE(verify_s_automorphism(s_hscale(q, c3, dm)));
    EXPECT_FALSE(verify_s_automorphism(s_hscale(q, c3, dp)));
}

TEST(Crossed, HscaleWithUnitProductActsTriviallyOnCorner) {
    auto p = p2();
    std::vector<Q> c{Q(2), Q(1, 2)};
    EXPECT_TRUE(hscale_trivial_on_corner(p, c, {Q(1) / c[1], Q(1) / c[0]}));
    std::vector<Q> c2{Q(2), Q(3)};
    EXPECT_FALSE(hscale_trivial_on_corner(p, c2, {Q(1) / c2[1], Q(1) / c2[0]}));
    auto q = p3();
    std::vector<Q> c3{Q(2), Q(3), Q(1, 6)};
    EXPECT_TRUE(hscale_trivial_on_corner(q, c3, {Q(1) / c3[2], Q(1) / c3[0], Q(1) / c3[1]}));
}

TEST(Crossed, CorrespondenceWithGwaGenerators) {
    for (auto p : {p2(), CrossedParams({Q(1), Q(1)}), p3()})
        for (int k = 1; k <= 2; ++k)
            for (Q lam : {Q(1), Q(1, 2), Q(-3)}) EXPECT_TRUE(rho_correspondence_check(p, k, lam));
}

TEST(Crossed, PsiImageIdentityUsesMinusKLambda) {
    auto p = p2();
    for (int k = 1; k <= 3; ++k)
        for (Q lam : {Q(1), Q(2, 5)}) {
            EXPECT_TRUE(psi_image_identity(p, k, lam, -Q(k) * lam));
            EXPECT_FALSE(psi_image_identity(p, k, lam, lam));
            EXPECT_FALSE(psi_image_identity(p, k, lam, Q(k) * lam));
        }
}
