#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qv {

// Points of the cyclic quiver variety.  X_i : n_i x n_{i+1}, Y_i : n_{i+1} x n_i,
// framing at vertex k with v : n_k x 1 and w : 1 x n_k.
template <class T>
struct QuiverPoint {
    int m = 1;
    std::vector<int> dims;
    int frame = 0;
    std::vector<T> tau;
    std::vector<Matrix<T>> X, Y;
    Matrix<T> v, w;

    QuiverPoint() = default;
    QuiverPoint(std::vector<int> d, int k, std::vector<T> t)
        : m(static_cast<int>(d.size())), dims(std::move(d)), frame(k), tau(std::move(t)) {
        if (m < 1 || static_cast<int>(tau.size()) != m || k < 0 || k >= m)
            throw std::invalid_argument("bad dimension data");
        for (int i = 0; i < m; ++i) {
            X.emplace_back(dims[i], dims[nx(i)]);
            Y.emplace_back(dims[nx(i)], dims[i]);
        }
        v = Matrix<T>(dims[k], 1);
        w = Matrix<T>(1, dims[k]);
    }

    int nx(int i) const { return (i + 1) % m; }
    int total() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    int offset(int i) const {
        int s = 0;
        for (int j = 0; j < i; ++j) s += dims[j];
        return s;
    }

    Matrix<T> bigX() const {
        Matrix<T> B(total(), total());
        for (int i = 0; i < m; ++i) add_block(B, offset(i), offset(nx(i)), X[i]);
        return B;
    }
    Matrix<T> bigY() const {
        Matrix<T> B(total(), total());
        for (int i = 0; i < m; ++i) add_block(B, offset(nx(i)), offset(i), Y[i]);
        return B;
    }
    Matrix<T> bigV() const {
        Matrix<T> B(total(), 1);
        B.set_block(offset(frame), 0, v);
        return B;
    }
    Matrix<T> bigW() const {
        Matrix<T> B(1, total());
        B.set_block(0, offset(frame), w);
        return B;
    }
    Matrix<T> bigT() const {
        Matrix<T> B(total(), total());
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < dims[i]; ++r) B(offset(i) + r, offset(i) + r) = tau[i];
        return B;
    }
    // replace X (or Y) blocks from a big matrix of the same block pattern
    void set_from_bigX(const Matrix<T>& B) {
        for (int i = 0; i < m; ++i) X[i] = B.block(offset(i), offset(nx(i)), dims[i], dims[nx(i)]);
    }
    void set_from_bigY(const Matrix<T>& B) {
        for (int i = 0; i < m; ++i) Y[i] = B.block(offset(nx(i)), offset(i), dims[nx(i)], dims[i]);
    }

    template <class U, class F>
    QuiverPoint<U> map(F f) const {
        std::vector<U> t;
        for (auto& x : tau) t.push_back(f(x));
        QuiverPoint<U> r(dims, frame, t);
        for (int i = 0; i < m; ++i) {
            r.X[i] = X[i].template map<U>(f);
            r.Y[i] = Y[i].template map<U>(f);
        }
        r.v = v.template map<U>(f);
        r.w = w.template map<U>(f);
        return r;
    }

    friend bool operator==(const QuiverPoint& a, const QuiverPoint& b) {
        return a.dims == b.dims && a.frame == b.frame && a.tau == b.tau && a.X == b.X && a.Y == b.Y && a.v == b.v &&
               a.w == b.w;
    }

private:
    // for m = 1 the X and Y blocks sit on the diagonal
    static void add_block(Matrix<T>& B, int r0, int c0, const Matrix<T>& b) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) B(r0 + i, c0 + j) += b(i, j);
    }
};

using QPointQ = QuiverPoint<Q>;
using QPointP = QuiverPoint<Poly>;

// XY - YX + T - vw
template <class T>
Matrix<T> moment_map_residual(const QuiverPoint<T>& p) {
    auto X = p.bigX(), Y = p.bigY();
    return X * Y - Y * X + p.bigT() - p.bigV() * p.bigW();
}

template <class T>
bool on_variety(const QuiverPoint<T>& p) {
    return moment_map_residual(p).is_zero();
}

// sum tau_i n_i = w v
template <class T>
bool trace_constraint(const QuiverPoint<T>& p) {
    T s = Scalar<T>::zero();
    for (int i = 0; i < p.m; ++i) s += Scalar<T>::from(Q(p.dims[i])) * p.tau[i];
    T wv = (p.w * p.v)(0, 0);
    if (p.dims[p.frame] == 0) wv = Scalar<T>::zero();
    return s == wv;
}

// the smallest subspace containing v and closed under every arrow is everything
inline bool check_stability(const QPointQ& p) {
    int N = p.total();
    if (N == 0) return true;
    auto X = p.bigX(), Y = p.bigY();
    RowSpace span(N);
    std::vector<std::vector<Q>> queue{p.bigV().col(0)};
    while (!queue.empty()) {
        auto u = std::move(queue.back());
        queue.pop_back();
        if (!span.add(u)) continue;
        if (span.dim() == N) return true;
        queue.push_back(mat_vec(X, u));
        queue.push_back(mat_vec(Y, u));
    }
    return span.dim() == N;
}

inline QPointQ specialize_point(const QPointP& p, const Q& z) {
    return p.map<Q>([&](const Poly& e) { return e.eval(z); });
}

// full closure at one rational value certifies it for generic z
inline bool check_stability(const QPointP& p) {
    for (Q z : {Q(7, 13), Q(-11, 5), Q(29, 3)})
        if (check_stability(specialize_point(p, z))) return true;
    return false;
}

// dimension of the variety for given data
inline long variety_dimension(const std::vector<int>& dims, int frame) {
    int m = static_cast<int>(dims.size());
    long nk = dims[frame];
    if (m == 1) return 2 * nk;
    if (m == 2) {
        long d = dims[0] - dims[1];
        return 2 * (nk - d * d);
    }
    long sq = 0, cross = 0;
    for (int i = 0; i < m; ++i) {
        sq += static_cast<long>(dims[i]) * dims[i];
        for (int j = i + 1; j < m; ++j) cross += static_cast<long>(dims[i]) * dims[j];
    }
    return 2 * (nk - (sq - cross));
}

// membership of (n0, n1) in L_eps
inline bool in_L_epsilon(int n0, int n1, int eps) {
    if (n0 < 0 || n1 < 0) return false;
    if (n1 >= n0) {
        int k = n1 - n0, n = n1;
        return eps == 0 ? n >= k * k + k : n >= k * k;
    }
    int k = n0 - n1, n = n0;
    return eps == 0 ? n >= k * k : n >= k * k + k;
}

enum class GenKind { Theta, Psi, Phi };

struct Generator {
    GenKind kind;
    int k = 1;
    Q lambda;
    std::string label() const {
        std::string l = lambda.get_str();
        switch (kind) {
            case GenKind::Theta: return "theta(" + l + ")";
            case GenKind::Psi: return "psi(" + std::to_string(k) + "," + l + ")";
            case GenKind::Phi: return "phi(" + std::to_string(k) + "," + l + ")";
        }
        return "?";
    }
    Generator inverse() const {
        if (kind == GenKind::Theta) return {kind, k, Q(1) / lambda};
        return {kind, k, -lambda};
    }
};

// sigma.(X, Y) is the inverse automorphism evaluated at the matrices
template <class T>
QuiverPoint<T> group_action(const Generator& g, const QuiverPoint<T>& p) {
    QuiverPoint<T> r = p;
    T s = Scalar<T>::zero();
    for (auto& t : p.tau) s += t;
    auto X = p.bigX(), Y = p.bigY();
    T lam = Scalar<T>::from(g.lambda);
    switch (g.kind) {
        case GenKind::Theta:
            if (g.lambda == 0) throw std::invalid_argument("theta needs nonzero lambda");
            r.set_from_bigX(lam * X);
            r.set_from_bigY(Scalar<T>::from(Q(1) / g.lambda) * Y);
            break;
        case GenKind::Psi:
            r.set_from_bigX(X + (Scalar<T>::from(Q(g.k) * g.lambda) * s) * Y.pow(g.k * p.m - 1));
            break;
        case GenKind::Phi:
            r.set_from_bigY(Y - (Scalar<T>::from(Q(g.k) * g.lambda) * s) * X.pow(g.k * p.m - 1));
            break;
    }
    return r;
}

// X_i -> X_{i+1}, Y_i -> Y_{i+1}; framing index drops by one, tau rotates
template <class T>
QuiverPoint<T> rotate_indices(const QuiverPoint<T>& p) {
    int m = p.m;
    std::vector<int> d(m);
    std::vector<T> t(m);
    for (int i = 0; i < m; ++i) {
        d[i] = p.dims[(i + 1) % m];
        t[i] = p.tau[(i + 1) % m];
    }
    QuiverPoint<T> r(d, (p.frame - 1 + m) % m, t);
    for (int i = 0; i < m; ++i) {
        r.X[i] = p.X[(i + 1) % m];
        r.Y[i] = p.Y[(i + 1) % m];
    }
    r.v = p.v;
    r.w = p.w;
    return r;
}

// (l, q) -> w Y^l X^q v
template <class T>
std::map<std::pair<int, int>, T> kappa_bruteforce(const QuiverPoint<T>& p, int L) {
    auto X = p.bigX(), Y = p.bigY();
    std::vector<std::vector<T>> R{p.bigV().col(0)}, Lr{p.bigW().row(0)};
    for (int i = 1; i <= L; ++i) {
        R.push_back(mat_vec(X, R.back()));
        Lr.push_back(vec_mat(Lr.back(), Y));
    }
    std::map<std::pair<int, int>, T> out;
    for (int l = 0; l <= L; ++l)
        for (int q = 0; q <= L; ++q) out[{l, q}] = dot(Lr[l], R[q]);
    return out;
}

// coefficients A_1..A_L of kappa = 1 + sum A_l y^{-l} x^{-l}, A_l = -w Y^{l-1} X^{l-1} v
template <class T>
std::vector<T> kappa_diagonal(const QuiverPoint<T>& p, int L) {
    auto tab = kappa_bruteforce(p, L - 1);
    std::vector<T> A;
    for (int l = 1; l <= L; ++l) A.push_back(-tab[{l - 1, l - 1}]);
    return A;
}

// block-product formula for w Y^l X^l v on two vertices; j is the unframed vertex
template <class T>
T block_product_formula(const QuiverPoint<T>& p, int l) {
    if (p.m != 2) throw std::invalid_argument("two vertices only");
    int k = p.frame, j = 1 - k;
    int n = p.dims[k];
    Matrix<T> YX = p.Y[j] * p.X[j];
    Matrix<T> P = Matrix<T>::identity(n);
    T b = p.tau[0] + p.tau[1];
    for (int q = 0; q <= (l - 1) / 2 && l >= 1; ++q) P = P * (YX + Matrix<T>::scalar(n, Scalar<T>::from(Q(q)) * b));
    for (int q = 1; q <= l / 2; ++q)
        P = P * (YX + Matrix<T>::scalar(n, Scalar<T>::from(Q(q)) * p.tau[j] + Scalar<T>::from(Q(q - 1)) * p.tau[k]));
    if (n == 0) return Scalar<T>::zero();
    return (p.w * P * p.v)(0, 0);
}

template <class T>
bool block_product_check(const QuiverPoint<T>& p, int l) {
    auto tab = kappa_bruteforce(p, l);
    return tab[{l, l}] == block_product_formula(p, l);
}

// short generator words with small parameters; the word is applied right to left
inline std::vector<Generator> random_word(std::mt19937_64& rng, int len, int kmax = 2) {
    static const int nums[] = {-2, -1, 1, 2};
    std::vector<Generator> w;
    for (int i = 0; i < len; ++i) {
        GenKind kind = GenKind(rng() % 3);
        int k = 1 + static_cast<int>(rng() % kmax);
        Q lam = canon(Q(nums[rng() % 4], 1 + static_cast<int>(rng() % 2)));
        w.push_back({kind, k, lam});
    }
    return w;
}

template <class T>
QuiverPoint<T> apply_generators(const std::vector<Generator>& word, QuiverPoint<T> p) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) p = group_action(*it, p);
    return p;
}

inline std::string word_label(const std::vector<Generator>& word) {
    std::string s;
    for (auto& g : word) s += (s.empty() ? "" : " ") + g.label();
    return s.empty() ? "id" : s;
}

// (YX)Y^l - Y^l(YX) + sum Y^i T Y^{l-i} - sum Y^i vw Y^{l-i}, i from 1 to top;
// top = l closes the induction, top = l - 1 is the shorter range
template <class T>
Matrix<T> form1_residual(const QuiverPoint<T>& p, int l, int top) {
    auto X = p.bigX(), Y = p.bigY(), Tm = p.bigT();
    auto VW = p.bigV() * p.bigW();
    auto C = Y * X;
    Matrix<T> R = C * Y.pow(l) - Y.pow(l) * C;
    for (int i = 1; i <= top; ++i) {
        int e = top == l ? l - i : l - i - 1;
        R = R + Y.pow(i) * Tm * Y.pow(e) - Y.pow(i) * VW * Y.pow(e);
    }
    return R;
}

// w Y^{k_1} X^{l_1} ... Y^{k_t} X^{l_t} v, with T inserted between Y^{k_j} and X^{l_j} when tpos = j
template <class T>
T word_value(const QuiverPoint<T>& p, const std::vector<std::pair<int, int>>& word, int tpos = -1) {
    auto X = p.bigX(), Y = p.bigY();
    Matrix<T> M = p.bigW();
    for (int j = 0; j < static_cast<int>(word.size()); ++j) {
        M = M * Y.pow(word[j].first);
        if (j == tpos) M = M * p.bigT();
        M = M * X.pow(word[j].second);
    }
    M = M * p.bigV();
    return M(0, 0);
}

}  // namespace qv
