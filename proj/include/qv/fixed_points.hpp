#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "index_sets.hpp"
#include "quiver.hpp"

namespace qv {

// gamma + alpha * a + beta * b with a = tau_1, b = tau_0 + tau_1
struct Lin {
    Q alpha = 0, beta = 0, gamma = 0;
    Lin() = default;
    Lin(const Q& al, const Q& be, const Q& ga = Q(0)) : alpha(al), beta(be), gamma(ga) {}
    Lin& operator+=(const Lin& o) {
        alpha += o.alpha;
        beta += o.beta;
        gamma += o.gamma;
        return *this;
    }
    friend Lin operator-(const Lin& x) { return {-x.alpha, -x.beta, -x.gamma}; }
    bool has_a() const { return alpha != 0; }
};

inline Lin B_(const Q& c) { return {Q(0), c}; }
inline Lin AB(long ca, const Q& cb) { return {Q(ca), cb}; }
inline Lin ONE() { return {Q(0), Q(0), Q(1)}; }

// sparse matrix with 1-based indices, entries linear in (a, b)
struct LinMatrix {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, Lin> e;
    LinMatrix() = default;
    LinMatrix(int r, int c) : rows(r), cols(c) {}
    void add(int r, int c, const Lin& x) {
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
        e[{r, c}] += x;
    }
    template <class T>
    Matrix<T> instantiate(const T& a, const T& b) const {
        Matrix<T> M(rows, cols);
        for (auto& [rc, x] : e) M(rc.first - 1, rc.second - 1) =
                Scalar<T>::from(x.alpha) * a + Scalar<T>::from(x.beta) * b + Scalar<T>::from(x.gamma);
        return M;
    }
};

// nilpotent data on two vertices, framing at vertex 1
struct LinPoint {
    int n0 = 0, n1 = 0;
    LinMatrix X0, X1, Y0, Y1, v, w;

    template <class T>
    QuiverPoint<T> instantiate(const T& tau0, const T& tau1) const {
        T a = tau1, b = tau0 + tau1;
        QuiverPoint<T> p({n0, n1}, 1, {tau0, tau1});
        p.X[0] = X0.instantiate(a, b);
        p.X[1] = X1.instantiate(a, b);
        p.Y[0] = Y0.instantiate(a, b);
        p.Y[1] = Y1.instantiate(a, b);
        p.v = v.instantiate(a, b);
        p.w = w.instantiate(a, b);
        return p;
    }
};

inline LinPoint square_lin(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int n0 = k * k - k, n1 = k * k;
    LinPoint P;
    P.n0 = n0;
    P.n1 = n1;
    P.X0 = LinMatrix(n0, n1);
    P.X1 = LinMatrix(n1, n0);
    P.Y0 = LinMatrix(n1, n0);
    P.Y1 = LinMatrix(n0, n1);
    P.v = LinMatrix(n1, 1);
    P.w = LinMatrix(1, n1);
    auto S = build_index_sets(k);
    auto& Y1 = P.Y1;
    auto& Y0 = P.Y0;
    auto co_pos = [&](int i, int j) { return AB(1, Q(2 * (k - i + j - 1))); };

    // columns of Y1
    for (auto [c, i, j] : S.S1) {
        Y1.add(i * i + 1 - j, c, B_(Q(2 * j - 1)));
        for (int l = 1; l <= (i - j + 1) / 2; ++l) Y1.add((i - l + 1) * (i - l + 1) - i - j + 1, c, co_pos(i, j));
        for (int l = 1; l <= (i - j) / 2; ++l) Y1.add((i - l) * (i - l + 1) - i - j + 1, c, co_pos(i, j));
    }
    for (auto [c, i, j] : S.S2) {
        if (j != 0) Y1.add(i * (i + 1) - j + 1, c, B_(Q(2 * j)));
        for (int l = 1; l <= (i - j + 1) / 2; ++l) Y1.add((i - l + 1) * (i - l + 2) - i - j, c, co_pos(i, j));
        for (int l = 1; l <= (i - j) / 2; ++l) Y1.add((i - l + 1) * (i - l + 1) - i - j, c, co_pos(i, j));
    }
    for (auto [c, i, j] : S.S3) {
        Y1.add(i * i - j + 1, c, -AB(1, Q(2 * k - 2 * i - 1)));
        for (int l = 0; l <= k - i - 1; ++l) Y1.add((i + l + 1) * (i + l + 1) - i - j + 1, c, -co_pos(i, j));
        for (int l = 0; l <= k - i - 2; ++l) Y1.add((i + l + 1) * (i + l + 2) - i - j + 1, c, -co_pos(i, j));
    }
    for (auto [c, i, j] : S.S4) {
        Y1.add(i * (i + 1) - j + 1, c, -AB(1, Q(2 * (k - i - 1))));
        for (int l = 0; l <= k - i - 2; ++l) Y1.add((i + l + 1) * (i + l + 2) - i - j, c, -co_pos(i, j));
        for (int l = 0; l <= k - i - 2; ++l) Y1.add((i + l + 2) * (i + l + 2) - i - j, c, -co_pos(i, j));
    }
    // columns of Y0
    for (auto [c, i, j] : S.T1) {
        Y0.add(c, c, AB(1, Q(2 * j - 1)));
        for (int l = 1; l <= (i - j + 1) / 2; ++l) Y0.add((i - l + 1) * (i - l + 2) - i - j, c, co_pos(i, j));
        for (int l = 1; l <= (i - j) / 2; ++l) Y0.add((i - l + 1) * (i - l + 1) - i - j, c, co_pos(i, j));
    }
    for (auto [c, i, j] : S.T2) {
        Y0.add(c, c, AB(1, Q(2 * j)));
        for (int l = 1; l <= (i - j + 1) / 2; ++l) Y0.add((i - l + 2) * (i - l + 2) - i - j - 1, c, co_pos(i, j));
        for (int l = 1; l <= (i - j) / 2; ++l) Y0.add((i - l + 1) * (i - l + 2) - i - j - 1, c, co_pos(i, j));
    }
    for (auto [c, i, j] : S.T3) {
        Y0.add(c, c, B_(Q(-(2 * k - 2 * i - 1))));
        for (int l = 0; l <= k - i - 1; ++l) Y0.add((i + l + 1) * (i + l + 2) - i - j, c, -co_pos(i, j));
        for (int l = 0; l <= k - i - 2; ++l) Y0.add((i + l + 2) * (i + l + 2) - i - j, c, -co_pos(i, j));
    }
    for (auto [c, i, j] : S.T4) {
        Y0.add(c, c, B_(Q(-2 * (k - i - 1))));
        for (int l = 0; l <= k - i - 2; ++l) Y0.add((i + l + 2) * (i + l + 2) - i - j - 1, c, -co_pos(i, j));
        for (int l = 0; l <= k - i - 2; ++l) Y0.add((i + l + 2) * (i + l + 3) - i - j - 1, c, -co_pos(i, j));
    }
    for (int r = 1; r <= n0; ++r) P.X0.add(r, r, ONE());
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= 2 * i; ++j) P.X1.add(i * i + j, i * (i - 1) + j, ONE());
    for (int l = k / 2 + 1; l <= k; ++l) {
        P.v.add(l * (l + 1) - k, 1, ONE());
        P.w.add(1, l * (l + 1) - k, AB(1, Q(4 * (k - l))));
    }
    for (int l = (k + 1) / 2 + 1; l <= k; ++l) {
        P.v.add(l * l - k, 1, ONE());
        P.w.add(1, l * l - k, AB(1, Q(4 * k - 4 * l + 2)));
    }
    return P;
}

// the square data padded by d = n - k^2 rows and columns
inline LinPoint rect_lin(int n, int k) {
    if (k < 1 || n < k * k) throw std::invalid_argument("need n >= k^2 >= 1");
    LinPoint S = square_lin(k);
    int d = n - k * k;
    if (d == 0) return S;
    auto sets = build_index_sets(k);
    LinPoint P;
    P.n0 = n - k;
    P.n1 = n;
    P.X0 = LinMatrix(P.n0, P.n1);
    P.X1 = LinMatrix(P.n1, P.n0);
    P.Y0 = LinMatrix(P.n1, P.n0);
    P.Y1 = LinMatrix(P.n0, P.n1);
    P.v = LinMatrix(P.n1, 1);
    P.w = LinMatrix(1, P.n1);
    Lin shift = B_(Q(-d));
    for (auto& [rc, c] : S.Y0.e) {
        auto [r, q] = rc;
        Lin x = c;
        if ((sets.T3d.count(q) || sets.T4d.count(q)) && x.has_a()) x += shift;
        P.Y0.add(r + d, q + d, x);
    }
    for (auto& [rc, c] : S.Y1.e) {
        auto [r, q] = rc;
        Lin x = c;
        if (x.has_a()) {
            auto i3 = sets.S3d.find(q);
            auto i4 = sets.S4d.find(q);
            if (i3 != sets.S3d.end() && r != i3->second * i3->second - i3->second + 1) x += shift;
            if (i4 != sets.S4d.end() && r != i4->second * i4->second + 1) x += shift;
        }
        P.Y1.add(r + d, q + d, x);
    }
    for (int s = 1; s <= d; ++s) {
        P.Y0.add(s, s, AB(1, Q(s - 1)));
        if (s > 1) P.Y1.add(s - 1, s, B_(Q(s - 1)));
        P.X1.add(s + 1, s, ONE());
    }
    for (int r = 1; r <= P.n0; ++r) P.X0.add(r, r, ONE());
    for (auto& [rc, c] : S.X1.e) P.X1.add(rc.first + d, rc.second + d, c);
    int W = k * k / 4 + 1 + d;
    P.Y1.add(d, d + 1, B_(Q(d)));
    for (int f = d + 1; f != W;) {
        P.Y0.add(f, f, B_(Q(d)));
        int nxt = -1;
        for (int r = 1; r <= P.n1 && nxt < 0; ++r)
            if (P.X1.e.count({r, f})) nxt = r;
        if (nxt < 0) throw std::logic_error("broken chain in padded construction");
        P.Y1.add(f, nxt, B_(Q(d)));
        f = nxt;
    }
    for (auto& [rc, c] : S.v.e) P.v.add(rc.first + d, 1, c);
    for (auto& [rc, c] : S.w.e) P.w.add(1, rc.second + d, c);
    P.w.add(1, W, B_(Q(d)));
    return P;
}

// tau given as (tau_0, tau_1); the symbolic mode uses (1 - z, z)
template <class T>
QuiverPoint<T> fixed_point_square(int k, const T& tau0, const T& tau1) {
    return square_lin(k).instantiate(tau0, tau1);
}

template <class T>
QuiverPoint<T> fixed_point_rect(int n, int k, const T& tau0, const T& tau1) {
    return rect_lin(n, k).instantiate(tau0, tau1);
}

// point of the (n, n-k) variety framed at vertex 0: rotate a rect point built with tau reversed
template <class T>
QuiverPoint<T> fixed_point_swapped(int n, int k, const T& tau0, const T& tau1) {
    return rotate_indices(fixed_point_rect(n, k, tau1, tau0));
}

inline std::pair<Poly, Poly> symbolic_tau() {
    Poly z = Poly::x('z');
    return {Poly(Q(1), 'z') - z, z};
}

}  // namespace qv
