#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <random>
#include <string>
#include <vector>

#include "quiver.hpp"

namespace qv {

// a C*-grading: for every vertex, the weight of each basis vector
struct Grading {
    std::vector<std::vector<int>> weight;
};

struct SearchResult {
    std::optional<QPointQ> point;
    int gradings_tried = 0;
    int draws = 0;
    std::string note;
};

namespace detail {

// all ways to spread n vectors over the given weights, each weight used as a contiguous run
inline void spread(int n, const std::vector<int>& ws, size_t pos, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (pos == ws.size()) {
        if (n == 0) out.push_back(cur);
        return;
    }
    for (int c = 0; c <= n; ++c) {
        for (int i = 0; i < c; ++i) cur.push_back(ws[pos]);
        spread(n - c, ws, pos + 1, cur, out);
        for (int i = 0; i < c; ++i) cur.pop_back();
    }
}

inline bool contiguous_support(const Grading& g) {
    std::set<int> s;
    for (auto& v : g.weight) s.insert(v.begin(), v.end());
    if (s.empty()) return true;
    return *s.rbegin() - *s.begin() + 1 == static_cast<int>(s.size());
}

inline Q random_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    int x = d(rng);
    if (x == 0) x = 6;
    return Q(x);
}

}  // namespace detail

// gradings with weights in [-R, R]; vertex i carries weights congruent to frame - i mod m;
// the framing vertex carries weight 0
inline std::vector<Grading> enumerate_gradings(const std::vector<int>& dims, int frame, int R) {
    int m = static_cast<int>(dims.size());
    std::vector<std::vector<std::vector<int>>> per;
    for (int i = 0; i < m; ++i) {
        std::vector<int> ws;
        for (int w = -R; w <= R; ++w)
            if ((((frame - i - w) % m) + m) % m == 0) ws.push_back(w);
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        detail::spread(dims[i], ws, 0, cur, out);
        per.push_back(out);
    }
    std::vector<Grading> all;
    std::vector<size_t> idx(m, 0);
    while (true) {
        Grading g;
        for (int i = 0; i < m; ++i) g.weight.push_back(per[i][idx[i]]);
        bool has0 = false;
        for (int w : g.weight[frame]) has0 |= w == 0;
        if (has0 && detail::contiguous_support(g)) all.push_back(g);
        int i = 0;
        while (i < m && ++idx[i] == per[i].size()) idx[i++] = 0;
        if (i == m) break;
    }
    return all;
}

// Solve XY - YX - vw = -T for (Y, w) with X, v fixed and graded.  A C*-fixed point has X raising
// the weight by one and Y lowering it by one; v and w live on weight zero of the framing vertex.
inline std::optional<QPointQ> search_grading(const std::vector<int>& dims, int frame, const std::vector<Q>& tau,
                                             const Grading& g, std::mt19937_64& rng, int draws, int* used = nullptr) {
    int m = static_cast<int>(dims.size());
    QPointQ base(dims, frame, tau);
    int N = base.total();
    std::vector<int> wt;
    for (int i = 0; i < m; ++i) wt.insert(wt.end(), g.weight[i].begin(), g.weight[i].end());
    std::vector<std::pair<int, int>> yvars;
    for (int i = 0; i < m; ++i) {
        int r0 = base.offset(base.nx(i)), c0 = base.offset(i);
        for (int r = 0; r < dims[base.nx(i)]; ++r)
            for (int c = 0; c < dims[i]; ++c)
                if (wt[r0 + r] == wt[c0 + c] - 1) yvars.push_back({r0 + r, c0 + c});
    }
    std::vector<int> wvars;
    int f0 = base.offset(frame);
    for (int c = 0; c < dims[frame]; ++c)
        if (wt[f0 + c] == 0) wvars.push_back(f0 + c);
    int ny = static_cast<int>(yvars.size());
    int nv = ny + static_cast<int>(wvars.size());
    MatQ T = base.bigT();
    std::uniform_int_distribution<int> coin(0, 3);
    for (int draw = 0; draw < draws; ++draw) {
        if (used) ++*used;
        MatQ X(N, N);
        for (int i = 0; i < m; ++i) {
            int r0 = base.offset(i), c0 = base.offset(base.nx(i));
            for (int r = 0; r < dims[i]; ++r)
                for (int c = 0; c < dims[base.nx(i)]; ++c)
                    if (wt[r0 + r] == wt[c0 + c] + 1 && (draw == 0 || coin(rng)))
                        X(r0 + r, c0 + c) = detail::random_q(rng);
        }
        MatQ V(N, 1);
        for (int u : wvars) V(u, 0) = detail::random_q(rng);
        MatQ A(N * N, nv + 1);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                int row = r * N + c;
                for (int u = 0; u < ny; ++u) {
                    auto [yr, yc] = yvars[u];
                    Q coef = 0;
                    if (yc == c) coef += X(r, yr);
                    if (yr == r) coef -= X(yc, c);
                    A(row, u) = coef;
                }
                for (size_t u = 0; u < wvars.size(); ++u)
                    if (wvars[u] == c) A(row, ny + static_cast<int>(u)) = -V(r, 0);
                A(row, nv) = T(r, c);
            }
        auto K = kernel_basis(A);
        std::vector<Q> sol(nv + 1, Q(0));
        for (auto& kv : K) {
            Q c = detail::random_q(rng);
            for (int i = 0; i <= nv; ++i) sol[i] += c * kv[i];
        }
        if (sol[nv] == 0) continue;
        Q s = sol[nv];
        MatQ Y(N, N), Wr(1, N);
        for (int u = 0; u < ny; ++u) Y(yvars[u].first, yvars[u].second) = sol[u] / s;
        for (size_t u = 0; u < wvars.size(); ++u) Wr(0, wvars[u]) = sol[ny + u] / s;
        QPointQ p = base;
        p.set_from_bigX(X);
        p.set_from_bigY(Y);
        p.v = V.block(f0, 0, dims[frame], 1);
        p.w = Wr.block(0, f0, 1, dims[frame]);
        if (on_variety(p) && check_stability(p)) return p;
    }
    return std::nullopt;
}

// all stable graded solutions found, one per grading with weights in [-R, R]
inline std::vector<std::pair<Grading, QPointQ>> fixed_point_survey(const std::vector<int>& dims, int frame,
                                                                   const std::vector<Q>& tau, int R,
                                                                   unsigned long seed, int draws = 8) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Grading, QPointQ>> out;
    for (auto& g : enumerate_gradings(dims, frame, R))
        if (auto p = search_grading(dims, frame, tau, g, rng, draws)) out.push_back({g, *p});
    return out;
}

// first stable graded solution, smallest weight bound first; failure is a value
inline SearchResult fixed_point_search(const std::vector<int>& dims, int frame, const std::vector<Q>& tau,
                                       unsigned long seed, int draws = 8) {
    SearchResult res;
    QPointQ base(dims, frame, tau);
    int N = base.total();
    if (N == 0) {
        res.point = base;
        res.note = "empty data";
        return res;
    }
    std::mt19937_64 rng(seed);
    for (int R = 1; R <= N + 1; ++R)
        for (auto& g : enumerate_gradings(dims, frame, R)) {
            ++res.gradings_tried;
            if (auto p = search_grading(dims, frame, tau, g, rng, draws, &res.draws)) {
                res.point = *p;
                res.note = "found at weight bound " + std::to_string(R);
                return res;
            }
        }
    res.note = "no stable graded solution found";
    return res;
}

}  // namespace qv
