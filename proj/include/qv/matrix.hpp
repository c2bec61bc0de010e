#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace qv {

template <class T>
struct Scalar;

template <>
struct Scalar<Q> {
    static Q zero() { return Q(0); }
    static Q one() { return Q(1); }
    static bool is_zero(const Q& x) { return x == 0; }
    static Q from(const Q& x) { return x; }
    static Q exact_div(const Q& a, const Q& b) { return a / b; }
    static void normalize(std::vector<Q>& v) {
        Z g = 0, l = 1;
        for (auto& x : v) {
            if (x == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        if (g == 0) return;
        Q s(l, g);
        for (auto& x : v) x *= s;
    }
    static std::string str(const Q& x) { return x.get_str(); }
};

template <>
struct Scalar<Poly> {
    static Poly zero() { return Poly(Q(0)); }
    static Poly one() { return Poly(Q(1)); }
    static bool is_zero(const Poly& x) { return x.is_zero(); }
    static Poly from(const Q& x) { return Poly(x); }
    static Poly exact_div(const Poly& a, const Poly& b) { return a.exact_div(b); }
    static void normalize(std::vector<Poly>& v) {
        Poly g(Q(0));
        for (auto& x : v)
            if (!x.is_zero()) g = poly_gcd(g, x);
        if (g.is_zero()) return;
        for (auto& x : v) x = x.exact_div(g);
    }
    static std::string str(const Poly& x) { return x.str(); }
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, Scalar<T>::zero()) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix size");
    }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar<T>::one();
        return m;
    }
    static Matrix scalar(int n, const T& s) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!Scalar<T>::is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (Scalar<T>::is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j)
                    if (!Scalar<T>::is_zero(b(k, j))) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }

    Matrix pow(int e) const {
        if (r_ != c_) throw std::invalid_argument("power of non-square matrix");
        Matrix r = identity(r_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(int r0, int c0, const Matrix& b) {
        for (int i = 0; i < b.r_; ++i)
            for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    T trace() const {
        T s = Scalar<T>::zero();
        for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
        return s;
    }

    template <class U, class F>
    Matrix<U> map(F f) const {
        Matrix<U> m(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    std::vector<T> row(int i) const { return std::vector<T>(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }
    std::vector<T> col(int j) const {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int ncols) {
        Matrix m(static_cast<int>(rows.size()), ncols);
        for (int i = 0; i < m.r_; ++i)
            for (int j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
        return m;
    }
    static Matrix column(const std::vector<T>& v) {
        Matrix m(static_cast<int>(v.size()), 1);
        for (int i = 0; i < m.r_; ++i) m(i, 0) = v[i];
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;

    void same_shape(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }
};

using MatQ = Matrix<Q>;
using MatP = Matrix<Poly>;

// Bareiss elimination in place; returns pivot columns. Divisions are exact.
template <class T>
std::vector<int> bareiss_echelon(Matrix<T>& m) {
    std::vector<int> piv;
    T prev = Scalar<T>::one();
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!Scalar<T>::is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            for (int j = c + 1; j < m.cols(); ++j)
                m(i, j) = Scalar<T>::exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
            m(i, c) = Scalar<T>::zero();
        }
        // rows above r stay as they are; entries left of c in rows below are zero already
        prev = m(r, c);
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class T>
int rank_fraction_free(Matrix<T> m) {
    return static_cast<int>(bareiss_echelon(m).size());
}

// right kernel basis, each vector content-normalized
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m) {
    auto piv = bareiss_echelon(m);
    int n = m.cols();
    std::vector<char> is_piv(n, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<T>> out;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> x(n, Scalar<T>::zero());
        x[f] = Scalar<T>::one();
        for (int i = static_cast<int>(piv.size()) - 1; i >= 0; --i) {
            int pc = piv[i];
            T s = Scalar<T>::zero();
            for (int j = pc + 1; j < n; ++j)
                if (!Scalar<T>::is_zero(x[j]) && !Scalar<T>::is_zero(m(i, j))) s += m(i, j) * x[j];
            if (Scalar<T>::is_zero(s)) continue;
            T d = m(i, pc);
            for (auto& e : x) e = d * e;
            x[pc] = -s;
        }
        Scalar<T>::normalize(x);
        out.push_back(std::move(x));
    }
    return out;
}

// incremental row space over Q, kept in reduced form
class RowSpace {
public:
    explicit RowSpace(int n) : n_(n) {}
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    // true iff v was independent of the current span
    bool add(std::vector<Q> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < n_; ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p < 0) return false;
        Q inv = Q(1) / v[p];
        for (auto& x : v)
            if (x != 0) x *= inv;
        for (auto& r : rows_) {
            Q f = r[p];
            if (f == 0) continue;
            for (int j = 0; j < n_; ++j)
                if (v[j] != 0) r[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    bool contains(std::vector<Q> v) const {
        reduce(v);
        for (auto& x : v)
            if (x != 0) return false;
        return true;
    }

private:
    int n_;
    std::vector<std::vector<Q>> rows_;
    std::vector<int> pivots_;

    void reduce(std::vector<Q>& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            Q f = v[pivots_[i]];
            if (f == 0) continue;
            const auto& r = rows_[i];
            for (int j = 0; j < n_; ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
    }
};

template <class T>
std::vector<T> mat_vec(const Matrix<T>& m, const std::vector<T>& v) {
    std::vector<T> r(m.rows(), Scalar<T>::zero());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!Scalar<T>::is_zero(m(i, j)) && !Scalar<T>::is_zero(v[j])) r[i] += m(i, j) * v[j];
    return r;
}

template <class T>
std::vector<T> vec_mat(const std::vector<T>& v, const Matrix<T>& m) {
    std::vector<T> r(m.cols(), Scalar<T>::zero());
    for (int i = 0; i < m.rows(); ++i) {
        if (Scalar<T>::is_zero(v[i])) continue;
        for (int j = 0; j < m.cols(); ++j)
            if (!Scalar<T>::is_zero(m(i, j))) r[j] += v[i] * m(i, j);
    }
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = Scalar<T>::zero();
    for (size_t i = 0; i < a.size(); ++i)
        if (!Scalar<T>::is_zero(a[i]) && !Scalar<T>::is_zero(b[i])) s += a[i] * b[i];
    return s;
}

inline MatQ specialize(const MatP& m, const Q& z) {
    return m.map<Q>([&](const Poly& p) { return p.eval(z); });
}

}  // namespace qv
