#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "quiver.hpp"

namespace qv {

// a tangent vector has the shape of its base point; tau is carried but unused
using TangentVector = QPointQ;
using Covector = std::vector<Q>;

inline int ambient_dim(const QPointQ& p) {
    int s = 0;
    for (int i = 0; i < p.m; ++i) s += 2 * p.dims[i] * p.dims[p.nx(i)];
    return s + 2 * p.dims[p.frame];
}

// coordinates: X_0..X_{m-1}, Y_0..Y_{m-1} row-major, then v, then w
inline std::vector<Q> pack(const QPointQ& t) {
    std::vector<Q> out;
    auto put = [&](const MatQ& M) {
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) out.push_back(M(i, j));
    };
    for (auto& M : t.X) put(M);
    for (auto& M : t.Y) put(M);
    put(t.v);
    put(t.w);
    return out;
}

inline TangentVector unpack(const QPointQ& base, const std::vector<Q>& c) {
    if (static_cast<int>(c.size()) != ambient_dim(base)) throw std::invalid_argument("coordinate length mismatch");
    TangentVector t(base.dims, base.frame, base.tau);
    size_t pos = 0;
    auto take = [&](MatQ& M) {
        for (int i = 0; i < M.rows(); ++i)
            for (int j = 0; j < M.cols(); ++j) M(i, j) = c[pos++];
    };
    for (auto& M : t.X) take(M);
    for (auto& M : t.Y) take(M);
    take(t.v);
    take(t.w);
    return t;
}

inline void check_shape(const QPointQ& p, const TangentVector& t) {
    if (p.dims != t.dims || p.frame != t.frame) throw std::invalid_argument("tangent shape mismatch");
}

// dX Y + X dY - dY X - Y dX - dv w - v dw
inline MatQ dmu_apply(const QPointQ& p, const TangentVector& t) {
    check_shape(p, t);
    auto X = p.bigX(), Y = p.bigY(), dX = t.bigX(), dY = t.bigY();
    return dX * Y + X * dY - dY * X - Y * dX - t.bigV() * p.bigW() - p.bigV() * t.bigW();
}

// the diagonal blocks of dmu_apply, as rows indexed by block entries
inline std::vector<std::vector<Q>> dmu_rows(const QPointQ& p) {
    int A = ambient_dim(p), N = p.total();
    std::vector<std::vector<Q>> cols;
    std::vector<Q> e(A, Q(0));
    for (int c = 0; c < A; ++c) {
        e[c] = 1;
        auto R = dmu_apply(p, unpack(p, e));
        e[c] = 0;
        std::vector<Q> col;
        for (int i = 0; i < p.m; ++i)
            for (int r = 0; r < p.dims[i]; ++r)
                for (int s = 0; s < p.dims[i]; ++s) col.push_back(R(p.offset(i) + r, p.offset(i) + s));
        cols.push_back(std::move(col));
    }
    (void)N;
    size_t nr = cols.empty() ? 0 : cols[0].size();
    std::vector<std::vector<Q>> rows(nr, std::vector<Q>(A));
    for (int c = 0; c < A; ++c)
        for (size_t r = 0; r < nr; ++r) rows[r][c] = cols[c][r];
    return rows;
}

// infinitesimal gauge action of every elementary matrix in the product of gl(n_i)
inline std::vector<TangentVector> gauge_directions(const QPointQ& p) {
    std::vector<TangentVector> out;
    for (int i = 0; i < p.m; ++i)
        for (int a = 0; a < p.dims[i]; ++a)
            for (int b = 0; b < p.dims[i]; ++b) {
                std::vector<MatQ> xi;
                for (int j = 0; j < p.m; ++j) xi.emplace_back(p.dims[j], p.dims[j]);
                xi[i](a, b) = 1;
                TangentVector t(p.dims, p.frame, p.tau);
                for (int j = 0; j < p.m; ++j) {
                    int n = p.nx(j);
                    t.X[j] = xi[j] * p.X[j] - p.X[j] * xi[n];
                    t.Y[j] = xi[n] * p.Y[j] - p.Y[j] * xi[j];
                }
                t.v = xi[p.frame] * p.v;
                t.w = -(p.w * xi[p.frame]);
                out.push_back(std::move(t));
            }
    return out;
}

// differential of w (Y + cX)^N v in ambient coordinates
inline Covector invariant_gradient(const QPointQ& p, const Q& c, int N) {
    auto M = p.bigY() + c * p.bigX();
    std::vector<std::vector<Q>> L{p.bigW().row(0)}, R{p.bigV().col(0)};
    for (int j = 1; j <= N; ++j) {
        L.push_back(vec_mat(L.back(), M));
        R.push_back(mat_vec(M, R.back()));
    }
    auto pair_at = [&](int r, int s) {
        Q acc = 0;
        for (int j = 0; j < N; ++j) acc += L[j][r] * R[N - 1 - j][s];
        return acc;
    };
    Covector g;
    for (int i = 0; i < p.m; ++i)
        for (int a = 0; a < p.dims[i]; ++a)
            for (int b = 0; b < p.dims[p.nx(i)]; ++b) g.push_back(c * pair_at(p.offset(i) + a, p.offset(p.nx(i)) + b));
    for (int i = 0; i < p.m; ++i)
        for (int a = 0; a < p.dims[p.nx(i)]; ++a)
            for (int b = 0; b < p.dims[i]; ++b) g.push_back(pair_at(p.offset(p.nx(i)) + a, p.offset(i) + b));
    int o = p.offset(p.frame), nk = p.dims[p.frame];
    for (int a = 0; a < nk; ++a) g.push_back(L[N][o + a]);
    for (int a = 0; a < nk; ++a) g.push_back(R[N][o + a]);
    return g;
}

inline Q pairing(const Covector& g, const std::vector<Q>& t) {
    Q s = 0;
    for (size_t i = 0; i < g.size(); ++i) s += g[i] * t[i];
    return s;
}

// lift to polynomials in t: p + t * d
inline QPointP lift(const QPointQ& p, const TangentVector& d) {
    auto c = [](const Q& x) { return Poly(x, 't'); };
    QPointP r = p.map<Poly>(c);
    auto tp = Poly::x('t');
    for (int i = 0; i < p.m; ++i) {
        r.X[i] = r.X[i] + tp * d.X[i].map<Poly>(c);
        r.Y[i] = r.Y[i] + tp * d.Y[i].map<Poly>(c);
    }
    r.v = r.v + tp * d.v.map<Poly>(c);
    r.w = r.w + tp * d.w.map<Poly>(c);
    return r;
}

// coefficient of t^1 in every entry
inline TangentVector linear_part(const QPointP& q, const QPointQ& shape) {
    auto c1 = [](const Poly& x) { return x[1]; };
    TangentVector t(shape.dims, shape.frame, shape.tau);
    for (int i = 0; i < shape.m; ++i) {
        t.X[i] = q.X[i].map<Q>(c1);
        t.Y[i] = q.Y[i].map<Q>(c1);
    }
    t.v = q.v.map<Q>(c1);
    t.w = q.w.map<Q>(c1);
    return t;
}

// Tr(dX_1 dY_2 - dX_2 dY_1)
inline Q omega(const TangentVector& a, const TangentVector& b) {
    return (a.bigX() * b.bigY() - b.bigX() * a.bigY()).trace();
}

struct SpanReport {
    int ambient = 0, dmu_rank = 0, gauge_rank = 0, tangent_dim = 0, gradient_rank = 0;
    long expected = 0;
    bool pass = false;
};

// exponents for the invariant family: 2n on two vertices, n on one
inline std::vector<int> invariant_exponents(const QPointQ& p, int count) {
    std::vector<int> out;
    for (int n = 1; n <= count; ++n) out.push_back(p.m == 1 ? n : p.m * n);
    return out;
}

// 0, 1, -1, 2, -2, ...
inline std::vector<Q> distinct_constants(int count) {
    std::vector<Q> out;
    for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
        out.push_back(Q(i));
        if (i > 0 && static_cast<int>(out.size()) < count) out.push_back(Q(-i));
    }
    return out;
}

// gradients of w(Y + cX)^N v restricted to ker(dmu), against tangent and gauge dimensions
inline SpanReport span_check(const QPointQ& p, int exponent_count = -1) {
    SpanReport r;
    r.ambient = ambient_dim(p);
    r.expected = variety_dimension(p.dims, p.frame);
    RowSpace rs(r.ambient);
    auto rows = dmu_rows(p);
    for (auto& row : rows) rs.add(row);
    r.dmu_rank = rs.dim();
    r.tangent_dim = r.ambient - r.dmu_rank;
    RowSpace gs(r.ambient);
    for (auto& g : gauge_directions(p)) gs.add(pack(g));
    r.gauge_rank = gs.dim();
    int target = r.tangent_dim - r.gauge_rank;
    if (exponent_count < 0) exponent_count = p.total() + 1;
    for (int N : invariant_exponents(p, exponent_count)) {
        if (rs.dim() - r.dmu_rank >= target) break;
        for (auto& c : distinct_constants(N + 1)) {
            rs.add(invariant_gradient(p, c, N));
            if (rs.dim() - r.dmu_rank >= target) break;
        }
    }
    r.gradient_rank = rs.dim() - r.dmu_rank;
    r.pass = r.gradient_rank == target && target == r.expected;
    return r;
}

using PointMap = std::function<QPointP(const QPointP&)>;

inline PointMap generator_map(const Generator& g) {
    return [g](const QPointP& q) { return group_action(g, q); };
}

// (X, Y) -> (sX, Y); not symplectic unless s = 1
inline PointMap scale_x_map(const Q& s) {
    return [s](const QPointP& q) {
        QPointP r = q;
        for (auto& M : r.X) M = Poly(s, 't') * M;
        return r;
    };
}

inline TangentVector push_forward(const PointMap& f, const QPointQ& p, const TangentVector& t) {
    return linear_part(f(lift(p, t)), p);
}

inline bool symplectic_check(const QPointQ& p, const PointMap& f, const TangentVector& t1, const TangentVector& t2) {
    check_shape(p, t1);
    check_shape(p, t2);
    return omega(push_forward(f, p, t1), push_forward(f, p, t2)) == omega(t1, t2);
}

inline bool symplectic_check(const QPointQ& p, const Generator& g, const TangentVector& t1, const TangentVector& t2) {
    return symplectic_check(p, generator_map(g), t1, t2);
}

// w (X + a Y^q)^N v over polynomial entries
inline Poly conjugated_hamiltonian(const QPointP& q, const Q& a, int qexp, int N) {
    auto M = q.bigX() + Poly(a, 't') * q.bigY().pow(qexp);
    return (q.bigW() * M.pow(N) * q.bigV())(0, 0);
}

// velocity at t = 0 of the flow (x + a y^q, y)(x, y + t x^{N-1})(x - a y^q, y) acting on points
inline TangentVector conjugated_flow_velocity(const QPointQ& p, const Q& a, int qexp, int N) {
    auto c = [](const Q& x) { return Poly(x, 't'); };
    QPointP q = p.map<Poly>(c);
    auto X = q.bigX(), Y = q.bigY();
    Poly A(a, 't');
    X = X + A * Y.pow(qexp);
    Y = Y - Poly::x('t') * X.pow(N - 1);
    X = X - A * Y.pow(qexp);
    q.set_from_bigX(X);
    q.set_from_bigY(Y);
    return linear_part(q, p);
}

// omega(V, .) = m / (N sum tau) dH on ker(dmu), with H = w (X + a Y^{m n1 - 1})^{m n2} v
inline bool hamiltonian_flow_check(const QPointQ& p, const Q& a, int n1, int n2) {
    int qexp = p.m * n1 - 1, N = p.m * n2;
    if (qexp < 0 || N < 1) throw std::invalid_argument("exponents must be positive");
    Q s = 0;
    for (auto& t : p.tau) s += t;
    if (s == 0) throw std::invalid_argument("sum of tau is zero");
    Q kappa = Q(p.m) / (Q(N) * s);
    auto V = conjugated_flow_velocity(p, a, qexp, N);
    if (!dmu_apply(p, V).is_zero()) return false;
    int A = ambient_dim(p);
    Covector cov(A);
    std::vector<Q> e(A, Q(0));
    for (int c = 0; c < A; ++c) {
        e[c] = 1;
        auto t = unpack(p, e);
        e[c] = 0;
        Q dH = conjugated_hamiltonian(lift(p, t), a, qexp, N)[1];
        cov[c] = omega(V, t) - kappa * dH;
    }
    RowSpace rs(A);
    for (auto& row : dmu_rows(p)) rs.add(row);
    return rs.contains(cov);
}

// Calogero-Moser point: X = diag(x), Y_ij = tau / (x_i - x_j) off the diagonal, Y_ii = p_i
inline QPointQ calogero_point(const std::vector<Q>& xs, const std::vector<Q>& ps, const Q& tau) {
    int n = static_cast<int>(xs.size());
    QPointQ P({n}, 0, {tau});
    for (int i = 0; i < n; ++i) {
        P.X[0](i, i) = xs[i];
        P.Y[0](i, i) = ps[i];
        P.v(i, 0) = 1;
        P.w(0, i) = tau;
        for (int j = 0; j < n; ++j)
            if (i != j) {
                if (xs[i] == xs[j]) throw std::invalid_argument("eigenvalues must be distinct");
                P.Y[0](i, j) = tau / (xs[i] - xs[j]);
            }
    }
    return P;
}

}  // namespace qv
