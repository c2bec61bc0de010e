#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"
#include "ratfunc.hpp"

namespace qv {

inline Poly hvar() { return Poly::x('h'); }

// p(h - k)
inline Poly sigma_shift(const Poly& p, int k) { return p.shift(Q(-k)); }
inline Poly delta_k(const Poly& p, int k) { return sigma_shift(p, k) - p; }

// v(h) attached to tau_0..tau_{m-1}
inline Poly v_from_tau(const std::vector<Q>& tau) {
    Q s = 0;
    for (auto& t : tau) s += t;
    if (s == 0) throw std::domain_error("degenerate parameters: sum of tau is zero");
    Poly v(qpow(s, static_cast<long>(tau.size())), 'h');
    Q partial = 0;
    for (auto& t : tau) {
        partial += t;
        v = v * Poly::lin(partial / s);
    }
    return v;
}

// D_s D_t = D_{s+t} r(h), where D_s = a^s (s > 0), b^{-s} (s < 0)
inline Poly gwa_correction(const Poly& v, int s, int t) {
    Poly r(Q(1));
    if (s > 0 && t < 0) {
        int u = -t;
        if (s >= u)
            for (int i = 1; i <= u; ++i) r = r * sigma_shift(v, i);
        else
            for (int i = 1; i <= s; ++i) r = r * sigma_shift(v, i + (u - s));
    } else if (s < 0 && t > 0) {
        int u = -s;
        if (u >= t)
            for (int i = 0; i < t; ++i) r = r * v.shift(Q(i));
        else
            for (int i = 0; i < u; ++i) r = r * v.shift(Q(i + (t - u)));
    }
    return r;
}

class GwaElement {
public:
    GwaElement() = default;
    explicit GwaElement(Poly v) : v_(std::move(v)) {}
    GwaElement(Poly v, int t, const Poly& p) : v_(std::move(v)) {
        if (!p.is_zero()) g_[t] = p;
    }

    static GwaElement a(const Poly& v) { return GwaElement(v, 1, Poly(Q(1))); }
    static GwaElement b(const Poly& v) { return GwaElement(v, -1, Poly(Q(1))); }
    static GwaElement h(const Poly& v) { return GwaElement(v, 0, hvar()); }
    static GwaElement poly(const Poly& v, const Poly& p) { return GwaElement(v, 0, p); }
    static GwaElement scalar(const Poly& v, const Q& c) { return GwaElement(v, 0, Poly(c)); }

    const Poly& v() const { return v_; }
    const std::map<int, Poly>& graded() const { return g_; }
    Poly piece(int t) const {
        auto it = g_.find(t);
        return it == g_.end() ? Poly(Q(0)) : it->second;
    }
    bool is_zero() const { return g_.empty(); }

    friend bool operator==(const GwaElement& x, const GwaElement& y) { return x.v_ == y.v_ && x.g_ == y.g_; }
    friend bool operator!=(const GwaElement& x, const GwaElement& y) { return !(x == y); }

    GwaElement& operator+=(const GwaElement& o) {
        check(o);
        for (auto& [t, p] : o.g_) add(t, p);
        return *this;
    }
    GwaElement& operator-=(const GwaElement& o) {
        check(o);
        for (auto& [t, p] : o.g_) add(t, -p);
        return *this;
    }
    friend GwaElement operator+(GwaElement x, const GwaElement& y) { return x += y; }
    friend GwaElement operator-(GwaElement x, const GwaElement& y) { return x -= y; }
    friend GwaElement operator*(const Q& c, GwaElement x) {
        GwaElement r(x.v_);
        for (auto& [t, p] : x.g_) r.add(t, c * p);
        return r;
    }
    friend GwaElement operator*(const GwaElement& x, const GwaElement& y) {
        x.check(y);
        GwaElement r(x.v_);
        for (auto& [s, p] : x.g_)
            for (auto& [t, q] : y.g_) r.add(s + t, gwa_correction(x.v_, s, t) * p.shift(Q(t)) * q);
        return r;
    }
    GwaElement pow(int e) const {
        GwaElement r = scalar(v_, Q(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    void add(int t, const Poly& p) {
        if (p.is_zero()) return;
        auto it = g_.find(t);
        if (it == g_.end()) {
            g_[t] = p;
            return;
        }
        it->second += p;
        if (it->second.is_zero()) g_.erase(it);
    }

    std::string str() const {
        if (g_.empty()) return "0";
        std::string s;
        for (auto& [t, p] : g_) {
            if (!s.empty()) s += " + ";
            if (t > 0) s += "a^" + std::to_string(t) + "*";
            if (t < 0) s += "b^" + std::to_string(-t) + "*";
            s += "(" + p.str() + ")";
        }
        return s;
    }

private:
    Poly v_;
    std::map<int, Poly> g_;

    void check(const GwaElement& o) const {
        if (v_ != o.v_) throw std::invalid_argument("elements of different generalized Weyl algebras");
    }
};

// p(H) for an element H, by Horner
inline GwaElement eval_poly_at(const Poly& p, const GwaElement& H) {
    GwaElement r(H.v());
    for (int i = p.deg(); i >= 0; --i) r = r * H + GwaElement::scalar(H.v(), p[i]);
    return r;
}

struct GwaAutomorphism {
    GwaElement a, h, b;
    std::string label;
};

inline GwaElement apply_gwa(const GwaAutomorphism& s, const GwaElement& u) {
    GwaElement r(u.v());
    for (auto& [t, p] : u.graded()) {
        GwaElement lead = t > 0 ? s.a.pow(t) : s.b.pow(-t);
        r += lead * eval_poly_at(p, s.h);
    }
    return r;
}

inline GwaAutomorphism gwa_identity(const Poly& v) {
    return {GwaElement::a(v), GwaElement::h(v), GwaElement::b(v), "id"};
}

inline GwaAutomorphism gwa_compose(const GwaAutomorphism& s, const GwaAutomorphism& r) {
    // (s o r)(g) = s(r(g))
    return {apply_gwa(s, r.a), apply_gwa(s, r.h), apply_gwa(s, r.b), s.label + "*" + r.label};
}

enum class BJKind { Theta, Psi, Phi };

// a^n (n >= 1) or b^n, with polynomial coefficient on the left moved right
inline GwaElement poly_times_power(const Poly& v, const Poly& p, int t) {
    GwaElement D = t >= 0 ? GwaElement::a(v).pow(t) : GwaElement::b(v).pow(-t);
    return GwaElement::poly(v, p) * D;
}

inline GwaAutomorphism bj_automorphism(BJKind kind, int k, const Q& lambda, const Poly& v) {
    int m = v.deg();
    if (m < 1) throw std::invalid_argument("deg v must be positive");
    GwaElement A = GwaElement::a(v), H = GwaElement::h(v), B = GwaElement::b(v);
    std::string tag = "(" + std::to_string(k) + "," + lambda.get_str() + ")";
    switch (kind) {
        case BJKind::Theta: {
            if (lambda == 0) throw std::invalid_argument("Theta needs nonzero lambda");
            Q lm = qpow(lambda, m);
            return {lm * A, H, (Q(1) / lm) * B, "Theta(" + lambda.get_str() + ")"};
        }
        case BJKind::Psi: {
            GwaElement nb = B;
            Poly d = v;
            for (int i = 1; i <= m; ++i) {
                d = delta_k(d, k);
                nb += poly_times_power(v, (qpow(lambda, i) / factorial(i)) * d, i * k - 1);
            }
            return {A, H - Q(k) * lambda * A.pow(k), nb, "Psi" + tag};
        }
        case BJKind::Phi: {
            GwaElement na = A;
            Poly d = v;
            for (int i = 1; i <= m; ++i) {
                d = delta_k(d, k);
                // coefficient sits to the right of b^{ik-1}
                na += B.pow(i * k - 1) * GwaElement::poly(v, (qpow(-lambda, i) / factorial(i)) * d);
            }
            return {na, H + Q(k) * lambda * B.pow(k), B, "Phi" + tag};
        }
    }
    throw std::logic_error("unknown generator");
}

inline bool verify_gwa_automorphism(const GwaAutomorphism& s) {
    const Poly& v = s.a.v();
    GwaElement one = GwaElement::scalar(v, Q(1));
    if (s.a * s.h != (s.h - one) * s.a) return false;
    if (s.b * s.h != (s.h + one) * s.b) return false;
    if (s.b * s.a != eval_poly_at(v, s.h)) return false;
    if (s.a * s.b != eval_poly_at(sigma_shift(v, 1), s.h)) return false;
    return true;
}

// closed form of phi(e y^n x^n) for two vertices
inline Poly f_closed_form(int n, const Q& tau0, const Q& tau1) {
    Poly v = v_from_tau({tau0, tau1});
    Poly r(Q(1));
    if (n == 0) return r;
    if (n % 2 == 0) {
        int k = n / 2;
        for (int i = 1; i <= k; ++i) r = r * sigma_shift(v, i);
        return r;
    }
    int k = (n + 1) / 2;
    r = (tau0 + tau1) * Poly::lin(Q(-k + 1));
    for (int i = 1; i <= k - 1; ++i) r = r * sigma_shift(v, i);
    return r;
}

}  // namespace qv
