#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qv {

// dense univariate polynomial over Q; constants are compatible with any tag
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Q(c)) {}
    Poly(long c) : Poly(Q(c)) {}
    Poly(const Q& c, char var = 'h') : var_(var) {
        if (c != 0) c_.push_back(canon(c));
    }
    Poly(std::vector<Q> coeffs, char var) : var_(var), c_(std::move(coeffs)) { trim(); }

    static Poly x(char var = 'h') { return Poly({Q(0), Q(1)}, var); }
    // x + s
    static Poly lin(const Q& s, char var = 'h') { return Poly({s, Q(1)}, var); }

    char var() const { return var_; }
    Poly& retag(char v) {
        var_ = v;
        return *this;
    }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // zero polynomial -> -1
    bool is_zero() const { return c_.empty(); }
    bool is_const() const { return c_.size() <= 1; }
    const std::vector<Q>& coeffs() const { return c_; }
    Q operator[](int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Q(0); }
    Q lead() const { return c_.empty() ? Q(0) : c_.back(); }
    Q const_term() const { return c_.empty() ? Q(0) : c_[0]; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && (a.is_const() || a.var_ == b.var_); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        var_ = join(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        var_ = join(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) {
        *this = *this * o;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        r.var_ = a.join(b);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Q(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Q& s, Poly p) {
        if (s == 0) return Poly(Q(0), p.var_);
        for (auto& q : p.c_) q *= s;
        return p;
    }
    friend Poly operator*(Poly p, const Q& s) { return s * p; }

    Poly pow(int e) const {
        Poly r(Q(1), var_), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Q eval(const Q& x) const {
        Q r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }
    // p(q(x))
    Poly compose(const Poly& q) const {
        Poly r(Q(0), q.var_);
        for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly(c_[i], q.var_);
        return r;
    }
    // p(x + s)
    Poly shift(const Q& s) const {
        if (is_const() || s == 0) return *this;
        return compose(lin(s, var_));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Q(1) / lead()) * *this;
    }

    // quotient and remainder
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        char v = join(d);
        Poly r = *this;
        r.var_ = v;
        std::vector<Q> q(std::max(0, deg() - d.deg() + 1), Q(0));
        Q il = Q(1) / d.lead();
        while (!r.is_zero() && r.deg() >= d.deg()) {
            int s = r.deg() - d.deg();
            Q f = r.lead() * il;
            q[s] = f;
            for (int i = 0; i <= d.deg(); ++i) r.c_[i + s] -= f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q), v), r};
    }
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }
    bool divides(const Poly& p) const {
        if (is_zero()) return p.is_zero();
        return p.divmod(*this).second.is_zero();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            const Q& q = c_[i];
            if (q == 0) continue;
            Q a = abs(q);
            if (!first) os << (q < 0 ? " - " : " + ");
            else if (q < 0) os << "-";
            first = false;
            if (i == 0 || a != 1) os << a.get_str();
            if (i > 0) {
                if (a != 1) os << "*";
                os << var_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        for (auto& q : c_) out.push_back(to_str(q));
        return out;
    }

private:
    char var_ = 'h';
    std::vector<Q> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        for (auto& q : c_) q.canonicalize();
    }
    char join(const Poly& o) const {
        if (is_const()) return o.var_;
        if (o.is_const() || o.var_ == var_) return var_;
        throw std::invalid_argument(std::string("indeterminate mismatch: ") + var_ + " vs " + o.var_);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

inline Poly poly_gcd(Poly a, Poly b) {
    if (!a.is_const() && !b.is_const() && a.var() != b.var())
        throw std::invalid_argument("gcd of polynomials in different indeterminates");
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(Q(0), a.var());
    return (a * b).exact_div(poly_gcd(a, b)).monic();
}

// (base)_n = base (base-1) ... (base-n+1)
inline Poly pochhammer_lower(const Poly& base, int n) {
    Poly r(Q(1), base.var());
    for (int i = 0; i < n; ++i) r = r * (base - Poly(Q(i), base.var()));
    return r;
}

// p(x+1) - p(x)
inline Poly finite_difference(const Poly& p) { return p.shift(Q(1)) - p; }

}  // namespace qv
