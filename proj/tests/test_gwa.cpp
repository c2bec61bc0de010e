#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qv/gwa.hpp"

using namespace qv;

namespace {

Poly v12() { return v_from_tau({Q(1), Q(2)}); }

GwaElement random_element(const Poly& v, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), deg(-2, 2);
    GwaElement r(v);
    for (int i = 0; i < 3; ++i) {
        Poly p(Q(c(rng)));
        p = p + Q(c(rng)) * hvar();
        r.add(deg(rng), p);
    }
    return r;
}

// a^s b^u built one generator at a time
GwaElement word(const Poly& v, const std::string& w) {
    GwaElement r = GwaElement::scalar(v, Q(1));
    for (char ch : w) r = r * (ch == 'a' ? GwaElement::a(v) : GwaElement::b(v));
    return r;
}

}  // namespace

TEST(Gwa, VFromTauByHand) {
    // 9 (h + 1/3)(h + 1)
    Poly h = hvar();
    EXPECT_EQ(v12(), Q(9) * h * h + Q(12) * h + Poly(Q(3)));
    EXPECT_THROW(v_from_tau({Q(1), Q(-1)}), std::domain_error);
}

TEST(Gwa, DefiningRelations) {
    Poly v = v12();
    GwaElement a = GwaElement::a(v), b = GwaElement::b(v), h = GwaElement::h(v);
    GwaElement one = GwaElement::scalar(v, Q(1));
    EXPECT_EQ(b * a, GwaElement::poly(v, v));
    EXPECT_EQ(a * b, GwaElement::poly(v, sigma_shift(v, 1)));
    EXPECT_EQ(a * h, (h - one) * a);
    EXPECT_EQ(b * h, (h + one) * b);
}

TEST(Gwa, CorrectionAgainstGeneratorWords) {
    Poly v = v12();
    // a^2 b^3 = b (a b)(a b)... evaluated letter by letter
    for (std::string w : {"aab", "abb", "aabbb", "bbaaa", "bba", "baa", "aaabb"}) {
        int s = 0, u = 0;
        for (char ch : w) (ch == 'a' ? s : u)++;
        GwaElement lhs = GwaElement::a(v).pow(s) * GwaElement::b(v).pow(u);
        if (w[0] == 'b') lhs = GwaElement::b(v).pow(u) * GwaElement::a(v).pow(s);
        EXPECT_EQ(lhs, word(v, w)) << w;
    }
    // a^2 b^2 = v(h-1) v(h-2)
    EXPECT_EQ(word(v, "aabb"), GwaElement::poly(v, sigma_shift(v, 1) * sigma_shift(v, 2)));
    // b^2 a^2 = v(h) v(h+1)
    EXPECT_EQ(word(v, "bbaa"), GwaElement::poly(v, v * v.shift(Q(1))));
}

TEST(Gwa, AssociativeOnRandomTriples) {
    std::mt19937 rng(11);
    Poly v = v12();
    for (int i = 0; i < 30; ++i) {
        auto x = random_element(v, rng), y = random_element(v, rng), z = random_element(v, rng);
        EXPECT_EQ((x * y) * z, x * (y * z));
    }
}

TEST(Gwa, BJGeneratorsPreserveRelations) {
    for (auto tau : std::vector<std::vector<Q>>{{Q(1), Q(2)}, {Q(2, 3), Q(-5, 7)}, {Q(1), Q(1), Q(3)}}) {
        Poly v = v_from_tau(tau);
        for (int k = 1; k <= 3; ++k)
            for (Q lam : {Q(1), Q(-2), Q(1, 3)}) {
                EXPECT_TRUE(verify_gwa_automorphism(bj_automorphism(BJKind::Theta, k, lam, v)));
                EXPECT_TRUE(verify_gwa_automorphism(bj_automorphism(BJKind::Psi, k, lam, v)));
                EXPECT_TRUE(verify_gwa_automorphism(bj_automorphism(BJKind::Phi, k, lam, v)));
            }
    }
}

TEST(Gwa, PhiWithLeftCoefficientFailsForLargerK) {
    Poly v = v12();
    Q lam(1);
    int k = 2;
    GwaElement A = GwaElement::a(v), B = GwaElement::b(v), H = GwaElement::h(v);
    GwaElement na = A;
    Poly d = v;
    for (int i = 1; i <= 2; ++i) {
        d = delta_k(d, k);
        na += GwaElement::poly(v, (qpow(-lam, i) / factorial(i)) * d) * B.pow(i * k - 1);
    }
    GwaAutomorphism left{na, H + Q(k) * lam * B.pow(k), B, "left"};
    EXPECT_FALSE(verify_gwa_automorphism(left));
}

TEST(Gwa, PsiInverse) {
    Poly v = v12();
    for (int k = 1; k <= 2; ++k) {
        auto s = bj_automorphism(BJKind::Psi, k, Q(2), v);
        auto t = bj_automorphism(BJKind::Psi, k, Q(-2), v);
        auto c = gwa_compose(s, t);
        EXPECT_EQ(c.a, GwaElement::a(v));
        EXPECT_EQ(c.h, GwaElement::h(v));
        EXPECT_EQ(c.b, GwaElement::b(v));
    }
}

TEST(Gwa, AutomorphismIsMultiplicative) {
    std::mt19937 rng(5);
    Poly v = v12();
    auto s = bj_automorphism(BJKind::Phi, 2, Q(1, 2), v);
    for (int i = 0; i < 10; ++i) {
        auto x = random_element(v, rng), y = random_element(v, rng);
        EXPECT_EQ(apply_gwa(s, x * y), apply_gwa(s, x) * apply_gwa(s, y));
    }
}

TEST(Gwa, DeltaIsTwistedDerivation) {
    Poly h = hvar();
    Poly f = h * h + Poly(Q(1)), g = h * h * h - Q(2) * h;
    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(delta_k(f * g, k), delta_k(f, k) * g + sigma_shift(f, k) * delta_k(g, k));
}

TEST(Gwa, FClosedFormSmallCases) {
    Q t0(1), t1(2);
    Poly h = hvar();
    EXPECT_EQ(f_closed_form(0, t0, t1), Poly(Q(1)));
    EXPECT_EQ(f_closed_form(1, t0, t1), Q(3) * h);
    EXPECT_EQ(f_closed_form(2, t0, t1), sigma_shift(v12(), 1));
}

TEST(Gwa, ShiftExamples) {
    Poly h = hvar();
    EXPECT_EQ(sigma_shift(h, 1), h - Poly(Q(1)));
    EXPECT_TRUE(delta_k(Poly(Q(5)), 3).is_zero());
    EXPECT_EQ(delta_k(h * h, 1), Q(-2) * h + Poly(Q(1)));
    Poly v = v12();
    GwaElement a = GwaElement::a(v), hh = GwaElement::h(v);
    EXPECT_EQ(hh * a, a * (hh + GwaElement::scalar(v, Q(1))));
}

TEST(Gwa, PowerProductRules) {
    Poly v = v12();
    GwaElement a = GwaElement::a(v), b = GwaElement::b(v);
    Poly p = Poly({Q(2), Q(-1), Q(1, 2)}, 'h');
    for (int t = 1; t <= 5; ++t) {
        Poly ab(Q(1)), ba(Q(1));
        for (int i = 1; i <= t; ++i) ab = ab * sigma_shift(v, i);
        for (int i = 0; i < t; ++i) ba = ba * v.shift(Q(i));
        EXPECT_EQ(a.pow(t) * b.pow(t), GwaElement::poly(v, ab));
        EXPECT_EQ(b.pow(t) * a.pow(t), GwaElement::poly(v, ba));
        EXPECT_EQ(GwaElement::poly(v, p) * a.pow(t), GwaElement(v, t, p.shift(Q(t))));
        EXPECT_EQ(GwaElement::poly(v, p) * b.pow(t), GwaElement(v, -t, p.shift(Q(-t))));
    }
}

TEST(Gwa, GradingLaw) {
    std::mt19937 rng(21);
    Poly v = v12();
    GwaElement H = GwaElement::h(v);
    for (int i = 0; i < 20; ++i) {
        auto x = random_element(v, rng), y = random_element(v, rng);
        std::set<int> sums;
        for (auto& [s, p] : x.graded())
            for (auto& [t, q] : y.graded()) sums.insert(s + t);
        GwaElement xy = x * y;
        for (auto& [t, p] : xy.graded()) EXPECT_TRUE(sums.count(t));
        for (auto& [t, p] : x.graded()) {
            GwaElement c(v, t, p);
            EXPECT_EQ(H * c - c * H, Q(t) * c);
        }
    }
}

TEST(Gwa, GeneratorExamples) {
    Poly v = v12();
    for (int k = 1; k <= 3; ++k) {
        auto s = bj_automorphism(BJKind::Psi, k, Q(0), v);
        EXPECT_EQ(s.a, GwaElement::a(v));
        EXPECT_EQ(s.h, GwaElement::h(v));
        EXPECT_EQ(s.b, GwaElement::b(v));
    }
    Q lam(2), mu(-1, 3);
    auto c = gwa_compose(bj_automorphism(BJKind::Theta, 1, lam, v), bj_automorphism(BJKind::Theta, 1, mu, v));
    auto d = bj_automorphism(BJKind::Theta, 1, lam * mu, v);
    EXPECT_EQ(c.a, d.a);
    EXPECT_EQ(c.h, d.h);
    EXPECT_EQ(c.b, d.b);
    EXPECT_EQ(d.a, (lam * lam * mu * mu) * GwaElement::a(v));
    GwaElement one = GwaElement::scalar(v, Q(1));
    GwaAutomorphism bad{GwaElement::a(v), GwaElement::h(v) + one, GwaElement::b(v), "h+1"};
    EXPECT_FALSE(verify_gwa_automorphism(bad));
    auto psi = bj_automorphism(BJKind::Psi, 2, Q(3), v);
    EXPECT_EQ(psi.h, GwaElement::h(v) - Q(6) * GwaElement::a(v).pow(2));
}
