#include <gtest/gtest.h>

#include "qv/identities.hpp"

using namespace qv;

namespace {

Poly z() { return Poly::x('z'); }
Poly zc(long c) { return Poly(Q(c), 'z'); }

// expand (z + s)(z + s - 1)... directly from its roots
Poly falling(long s, int n) {
    Poly r = zc(1);
    for (int i = 0; i < n; ++i) r = r * (z() + zc(s - i));
    return r;
}

}  // namespace

TEST(Identities, SmallFValues) {
    EXPECT_EQ(F_bruteforce(2, 0), Q(2) * (z() + zc(1)));
    EXPECT_EQ(F_bruteforce(2, 2), falling(2, 3));
    EXPECT_EQ(F_closed(2, 0), Q(2) * (z() + zc(1)));
    EXPECT_EQ(F_closed(1, 0), z());
    EXPECT_TRUE(F_closed(3, 6).is_zero());
    EXPECT_TRUE(F_closed(3, 5).is_zero());
}

TEST(Identities, FClosedFormsUpToEight) {
    for (int k = 2; k <= 8; ++k)
        for (int L = 0; L <= 2 * k + 1; ++L) {
            auto c = F_check(k, L);
            EXPECT_TRUE(c.pass) << c.name << " " << k << "," << L << ": " << c.lhs << " vs " << c.rhs;
        }
}

TEST(Identities, FVanishesOutsideRange) {
    for (int k = 2; k <= 6; ++k) {
        for (int l = k; l <= k + 2; ++l) EXPECT_TRUE(F_bruteforce(k, 2 * l).is_zero());
        for (int l = k - 1; l <= k + 1; ++l) EXPECT_TRUE(F_bruteforce(k, 2 * l + 1).is_zero());
    }
}

TEST(Identities, FDegreeAndLead) {
    for (int k = 2; k <= 6; ++k)
        for (int l = 0; l <= k - 1; ++l) {
            Poly f = F_bruteforce(k, 2 * l);
            EXPECT_EQ(f.deg(), 2 * l + 1);
            EXPECT_EQ(f.lead(), binom(k + l, 2 * l + 1));
            if (l <= k - 2) EXPECT_EQ(F_bruteforce(k, 2 * l + 1).deg(), 2 * l + 2);
        }
}

TEST(Identities, DisplayedEvenSumMatchesMatrixForm) {
    for (int k = 2; k <= 6; ++k)
        for (int l = 0; l <= k; ++l) EXPECT_EQ(F_even_displayed(k, l), F_bruteforce(k, 2 * l));
}

TEST(Identities, HAlternatingSum) {
    for (int k = 2; k <= 10; ++k)
        for (int l = 0; l <= k; ++l) {
            EXPECT_TRUE(H_check(k, l).pass) << k << "," << l;
            EXPECT_TRUE(H_difference_claims(k, l)) << k << "," << l;
        }
    EXPECT_EQ(H_sum(2, 0), zc(1));
    EXPECT_EQ(H_sum(3, 1), Q(6) * falling(0, 2));
}

TEST(Identities, RecursionAndShift) {
    for (int k = 2; k <= 7; ++k)
        for (int l = 0; l <= k; ++l) {
            EXPECT_TRUE(Fhat_recursion_check(k, l).pass) << k << "," << l;
            EXPECT_TRUE(Hhat_shift_check(k, l).pass) << k << "," << l;
        }
}

TEST(Identities, FactorialInTelescopedLineIsWrong) {
    EXPECT_NE(Hhat_factorial_variant(2, 0), Hhat(2, 0));
    EXPECT_NE(Hhat_factorial_variant(3, 1), Hhat(3, 1));
}

TEST(Identities, DifferenceOfFalling) {
    for (long s = -3; s <= 3; ++s)
        for (int n = 1; n <= 6; ++n) EXPECT_TRUE(delta_pochhammer_check(s, n).pass);
}

TEST(Identities, BasisChangeDiagonalizes) {
    for (int k = 1; k <= 6; ++k) {
        auto C = basis_change_C(k), Ci = basis_change_Cinv(k);
        EXPECT_EQ(C * Ci, MatP::identity(k));
        EXPECT_EQ(Ci * C, MatP::identity(k));
        EXPECT_EQ(C * y0x0_action(k) * Ci, eigen_diagonal(k));
    }
}

TEST(Identities, CornerImageOfDiagonalWords) {
    Q t0(2, 3), t1(5, 7);
    for (int n = 0; n <= 10; ++n) EXPECT_TRUE(corner_diagonal_check(n, t0, t1).pass) << n;
    auto one = corner_diagonal_check(1, t0, t1);
    EXPECT_EQ(one.lhs, Poly({Q(0), t0 + t1}, 'h'));
    Poly v = v_from_tau({t0, t1});
    EXPECT_EQ(corner_diagonal_check(2, t0, t1).lhs, v.shift(Q(-1)));
}
