#include <gtest/gtest.h>

#include <random>

#include "qv/fixed_points.hpp"
#include "qv/index_sets.hpp"
#include "qv/kappa.hpp"
#include "qv/search.hpp"

using namespace qv;

namespace {

const Q T0(2, 3), T1(5, 7);

std::set<int> vals(const std::vector<IndexEntry>& v) { return IndexSets::values(v); }

template <class T>
bool kappa_matches(const QuiverPoint<T>& p, std::vector<T> closed, int L) {
    auto A = kappa_diagonal(p, L);
    closed.resize(A.size(), Scalar<T>::zero());
    return A == closed;
}

template <class T>
bool off_diagonal_zero(const QuiverPoint<T>& p, int L) {
    for (auto& [lq, x] : kappa_bruteforce(p, L))
        if (lq.first != lq.second && x != Scalar<T>::zero()) return false;
    return true;
}

}  // namespace

TEST(IndexSets, KThreeMembers) {
    auto s = build_index_sets(3);
    EXPECT_EQ(vals(s.S1), (std::set<int>{2, 6}));
    EXPECT_EQ(vals(s.S2), (std::set<int>{1, 3, 4, 9}));
    EXPECT_EQ(vals(s.S3), (std::set<int>{5}));
    EXPECT_EQ(vals(s.S4), (std::set<int>{7, 8}));
    EXPECT_EQ(vals(s.T1), (std::set<int>{2}));
    EXPECT_EQ(vals(s.T2), (std::set<int>{1, 4}));
    EXPECT_EQ(vals(s.T3), (std::set<int>{5, 6}));
    EXPECT_EQ(vals(s.T4), (std::set<int>{3}));
    EXPECT_EQ(set_meet(vals(s.T3), vals(s.S1)), (std::set<int>{6}));
}

TEST(IndexSets, PartitionsUpToFifty) {
    for (int k = 1; k <= 50; ++k) {
        auto s = build_index_sets(k);
        EXPECT_TRUE(check_S_partition(s).ok()) << k;
        EXPECT_TRUE(check_T_partition(s).ok()) << k;
        EXPECT_TRUE(check_intersections(s).ok()) << k;
    }
}

TEST(IndexSets, DiagonalMembersLieInTheirSets) {
    for (int k = 1; k <= 20; ++k) {
        auto s = build_index_sets(k);
        for (auto& [x, i] : s.S3d) EXPECT_TRUE(vals(s.S3).count(x));
        for (auto& [x, i] : s.S4d) EXPECT_TRUE(vals(s.S4).count(x));
        for (auto& [x, i] : s.T3d) EXPECT_TRUE(vals(s.T3).count(x));
        for (auto& [x, i] : s.T4d) EXPECT_TRUE(vals(s.T4).count(x));
    }
}

TEST(Quiver, DimensionAndMembership) {
    EXPECT_EQ(variety_dimension({2, 4}, 1), 0);
    EXPECT_EQ(variety_dimension({6, 9}, 1), 0);
    EXPECT_EQ(variety_dimension({3}, 0), 6);
    for (int k = 1; k <= 3; ++k)
        for (int n = k * k; n <= 12; ++n) EXPECT_EQ(variety_dimension({n - k, n}, 1), 2 * (n - k * k));
    EXPECT_TRUE(in_L_epsilon(0, 0, 0));
    EXPECT_TRUE(in_L_epsilon(1, 2, 1));
    EXPECT_FALSE(in_L_epsilon(0, 2, 0));
    EXPECT_TRUE(in_L_epsilon(4, 6, 0));
    EXPECT_FALSE(in_L_epsilon(2, 5, 1));
}

TEST(Quiver, EmptyPointAndInstability) {
    QPointQ e({0, 0}, 0, {T0, T1});
    EXPECT_TRUE(on_variety(e));
    EXPECT_TRUE(check_stability(e));
    auto p = fixed_point_rect(2, 1, T0, T1);
    auto q = p;
    q.v = Matrix<Q>(q.v.rows(), 1);
    EXPECT_FALSE(check_stability(q));
    auto r = p;
    r.X[0](0, 0) += Q(1);
    EXPECT_FALSE(on_variety(r));
}

TEST(Quiver, GroupActionPreservesVariety) {
    std::mt19937_64 rng(7);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 2}}) {
        auto p = fixed_point_rect(n, k, T0, T1);
        auto word = random_word(rng, 5);
        EXPECT_TRUE(on_variety(apply_generators(word, p))) << word_label(word);
    }
    auto p = fixed_point_rect(3, 1, T0, T1);
    EXPECT_EQ(group_action({GenKind::Theta, 1, Q(1)}, p), p);
    for (auto kind : {GenKind::Psi, GenKind::Phi, GenKind::Theta}) {
        Generator g{kind, 2, Q(-3, 2)};
        EXPECT_EQ(group_action(g.inverse(), group_action(g, p)), p);
    }
}

TEST(Quiver, ThetaScalesKappaTable) {
    std::mt19937_64 rng(11);
    auto p = apply_generators(random_word(rng, 3), fixed_point_rect(3, 1, T0, T1));
    Q lam(-3, 2);
    auto a = kappa_bruteforce(p, 4), b = kappa_bruteforce(group_action({GenKind::Theta, 1, lam}, p), 4);
    for (auto& [lq, x] : a) EXPECT_EQ(b[lq], x * qpow(lam, lq.second - lq.first));
}

TEST(Quiver, RotationCyclesBack) {
    auto p = fixed_point_rect(5, 2, T0, T1);
    EXPECT_EQ(rotate_indices(rotate_indices(p)), p);
    auto r = rotate_indices(p);
    EXPECT_TRUE(on_variety(r));
    EXPECT_EQ(r.frame, 0);
    QPointQ t({1, 2, 3}, 2, {Q(1), Q(2), Q(3)});
    EXPECT_EQ(rotate_indices(rotate_indices(rotate_indices(t))), t);
}

TEST(Quiver, CommutationIdentityFullRange) {
    std::mt19937_64 rng(3);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {5, 2}}) {
        auto p = apply_generators(random_word(rng, 3), fixed_point_rect(n, k, T0, T1));
        for (int l = 1; l <= 4; ++l) EXPECT_TRUE(form1_residual(p, l, l).is_zero()) << l;
    }
}

TEST(Quiver, CommutationIdentityShortRangeFails) {
    auto p = fixed_point_rect(5, 2, T0, T1);
    EXPECT_FALSE(form1_residual(p, 1, 0).is_zero());
    EXPECT_FALSE(form1_residual(p, 2, 1).is_zero());
}

TEST(Quiver, ParityAndTInsertion) {
    std::mt19937_64 rng(5);
    auto p = apply_generators(random_word(rng, 4), fixed_point_rect(3, 1, T0, T1));
    auto tab = kappa_bruteforce(p, 6);
    for (auto& [lq, x] : tab)
        if ((lq.first - lq.second) % 2 != 0) EXPECT_EQ(x, 0);
    std::vector<std::vector<std::pair<int, int>>> words{{{1, 2}, {1, 0}}, {{2, 1}, {0, 1}}, {{1, 1}, {2, 2}},
                                                        {{0, 2}, {3, 1}}, {{2, 0}, {1, 2}, {1, 0}}};
    for (auto& w : words) {
        Q plain = word_value(p, w);
        for (int j = 0; j < static_cast<int>(w.size()); ++j) {
            Q withT = word_value(p, w, j);
            EXPECT_TRUE(withT == T0 * plain || withT == T1 * plain) << j;
        }
    }
    EXPECT_EQ(word_value(p, {{1, 0}, {0, 2}}), 0);
    EXPECT_EQ(word_value(p, {{1, 0}, {0, 2}}, 0), 0);
}

TEST(FixedPoints, SquareKOne) {
    auto p = fixed_point_square(1, T0, T1);
    EXPECT_EQ(p.dims, (std::vector<int>{0, 1}));
    EXPECT_EQ((p.w * p.v)(0, 0), T1);
    auto tab = kappa_bruteforce(p, 3);
    for (auto& [lq, x] : tab) EXPECT_EQ(x, lq == std::make_pair(0, 0) ? T1 : Q(0));
}

TEST(FixedPoints, SymbolicSquare) {
    auto [a, b] = symbolic_tau();
    for (int k = 1; k <= 4; ++k) {
        auto p = fixed_point_square(k, a, b);
        EXPECT_EQ(p.dims, (std::vector<int>{k * k - k, k * k}));
        EXPECT_TRUE(on_variety(p)) << k;
        EXPECT_TRUE(check_stability(p)) << k;
        EXPECT_TRUE(trace_constraint(p)) << k;
    }
}

TEST(FixedPoints, SymbolicRectAndSwapped) {
    auto [a, b] = symbolic_tau();
    for (int k = 1; k <= 3; ++k)
        for (int n = k * k; n <= std::min(12, k * k + 3); ++n) {
            auto p = fixed_point_rect(n, k, a, b);
            EXPECT_TRUE(on_variety(p) && check_stability(p) && trace_constraint(p)) << n << "," << k;
            auto s = fixed_point_swapped(n, k, a, b);
            EXPECT_EQ(s.dims, (std::vector<int>{n, n - k}));
            EXPECT_EQ(s.frame, 0);
            EXPECT_TRUE(on_variety(s) && check_stability(s) && trace_constraint(s)) << n << "," << k;
        }
    EXPECT_EQ(fixed_point_rect(4, 2, a, b), fixed_point_square(2, a, b));
    EXPECT_THROW(fixed_point_rect(3, 2, T0, T1), std::invalid_argument);
}

TEST(Kappa, ClosedFormExamples) {
    EXPECT_EQ(kappa_closed_form(1, 1, Family::Rect, T0, T1), std::vector<Q>{-T1});
    EXPECT_EQ(kappa_closed_form(2, 1, Family::Rect, T0, T1)[0], -(T0 + 2 * T1));
    for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(kappa_closed_form(k * k, k, Family::Rect, T0, T1), kappa_square(k, T1, Q(T0 + T1)));
}

TEST(Kappa, SymbolicAgreement) {
    auto [a, b] = symbolic_tau();
    for (int k = 1; k <= 3; ++k)
        for (int n = k * k; n <= std::min(12, k * k + 2); ++n) {
            auto p = fixed_point_rect(n, k, a, b);
            EXPECT_TRUE(off_diagonal_zero(p, 2 * k + 2));
            EXPECT_TRUE(kappa_matches(p, kappa_closed_form(n, k, Family::Rect, a, b), 2 * k + 3)) << n << "," << k;
            auto s = fixed_point_swapped(n, k, a, b);
            EXPECT_TRUE(kappa_matches(s, kappa_closed_form(n, k, Family::Swapped, a, b), 2 * k + 3))
                << n << "," << k;
        }
}

TEST(Kappa, BlockProductAtFixedPoints) {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {4, 2}, {6, 2}, {9, 3}}) {
        auto p = fixed_point_rect(n, k, T0, T1);
        for (int l = 0; l <= 6; ++l) EXPECT_TRUE(block_product_check(p, l)) << n << "," << k << "," << l;
        auto s = fixed_point_swapped(n, k, T0, T1);
        for (int l = 0; l <= 6; ++l) EXPECT_TRUE(block_product_check(s, l)) << n << "," << k << "," << l;
    }
}

TEST(Kappa, BlockProductGapAtOrbitPoint) {
    std::vector<Generator> word{{GenKind::Phi, 1, Q(-1)}, {GenKind::Psi, 1, Q(1)}, {GenKind::Phi, 1, Q(-1)}};
    auto p = apply_generators(word, fixed_point_rect(2, 1, T0, T1));
    ASSERT_TRUE(on_variety(p));
    auto tab = kappa_bruteforce(p, 3);
    for (int l = 0; l <= 2; ++l) EXPECT_TRUE(block_product_check(p, l));
    Q drop = tab[std::make_pair(2, 0)] * tab[std::make_pair(0, 2)];
    EXPECT_NE(drop, 0);
    EXPECT_EQ(tab[std::make_pair(3, 3)] - block_product_formula(p, 3), -drop);
}

TEST(Search, AscendingKappaAtKOne) {
    for (int n = 2; n <= 4; ++n) {
        auto closed = kappa_closed_form(n, 1, Family::Ascending, T0, T1);
        auto sw = kappa_closed_form(n, 1, Family::AscSwapped, T0, T1);
        bool hit = false, hit_sw = false;
        for (auto& [g, p] : fixed_point_survey({n - 1, n}, 0, {T0, T1}, n + 1, 1)) {
            EXPECT_TRUE(on_variety(p) && check_stability(p));
            EXPECT_TRUE(off_diagonal_zero(p, 2 * n));
            hit = hit || kappa_matches(p, closed, 2 * n + 1);
        }
        for (auto& [g, p] : fixed_point_survey({n - 1, n}, 0, {T1, T0}, n + 1, 1)) {
            auto r = rotate_indices(p);
            EXPECT_EQ(r.dims, (std::vector<int>{n, n - 1}));
            EXPECT_EQ(r.frame, 1);
            hit_sw = hit_sw || kappa_matches(r, sw, 2 * n + 1);
        }
        EXPECT_TRUE(hit) << n;
        EXPECT_TRUE(hit_sw) << n;
    }
    auto r = fixed_point_search({1, 2}, 0, {T0, T1}, 1);
    ASSERT_TRUE(r.point.has_value());
    EXPECT_TRUE(kappa_matches(*r.point, kappa_closed_form(2, 1, Family::Ascending, T0, T1), 5));
}
