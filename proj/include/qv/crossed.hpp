#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwa.hpp"

namespace qv {

struct CrossedParams {
    int m = 1;
    std::vector<Q> tau;

    CrossedParams() = default;
    CrossedParams(std::vector<Q> t) : m(static_cast<int>(t.size())), tau(std::move(t)) {
        if (m < 1) throw std::invalid_argument("need at least one vertex");
        if (sum() == 0) throw std::domain_error("degenerate parameters: sum of tau is zero");
    }
    Q sum() const {
        Q s = 0;
        for (auto& t : tau) s += t;
        return s;
    }
    int mod(int i) const { return ((i % m) + m) % m; }
    const Q& t(int i) const { return tau[mod(i)]; }
    friend bool operator==(const CrossedParams& a, const CrossedParams& b) { return a.tau == b.tau; }
};

// key: idempotent index, y-degree, x-degree
using SKey = std::array<int, 3>;

// element of the crossed product in the normal form sum e_i y^a x^b
class SElement {
public:
    SElement() = default;
    explicit SElement(CrossedParams p) : p_(std::move(p)) {}

    static SElement mono(const CrossedParams& p, int i, int a, int b, const Q& c = Q(1)) {
        SElement s(p);
        s.add({p.mod(i), a, b}, c);
        return s;
    }
    static SElement e(const CrossedParams& p, int i) { return mono(p, i, 0, 0); }
    static SElement one(const CrossedParams& p) {
        SElement s(p);
        for (int i = 0; i < p.m; ++i) s.add({i, 0, 0}, Q(1));
        return s;
    }
    static SElement x(const CrossedParams& p) {
        SElement s(p);
        for (int i = 0; i < p.m; ++i) s.add({i, 0, 1}, Q(1));
        return s;
    }
    static SElement y(const CrossedParams& p) {
        SElement s(p);
        for (int i = 0; i < p.m; ++i) s.add({i, 1, 0}, Q(1));
        return s;
    }
    // tau as an element of the group algebra
    static SElement tau(const CrossedParams& p) {
        SElement s(p);
        for (int i = 0; i < p.m; ++i) s.add({i, 0, 0}, p.tau[i]);
        return s;
    }

    const CrossedParams& params() const { return p_; }
    const std::map<SKey, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Q coeff(int i, int a, int b) const {
        auto it = t_.find({p_.mod(i), a, b});
        return it == t_.end() ? Q(0) : it->second;
    }

    void add(const SKey& k, const Q& c) {
        if (c == 0) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, canon(c));
            return;
        }
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }

    friend bool operator==(const SElement& u, const SElement& v) { return u.t_ == v.t_; }
    friend bool operator!=(const SElement& u, const SElement& v) { return !(u == v); }

    SElement& operator+=(const SElement& o) {
        check(o);
        for (auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    SElement& operator-=(const SElement& o) {
        check(o);
        for (auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    friend SElement operator+(SElement u, const SElement& v) { return u += v; }
    friend SElement operator-(SElement u, const SElement& v) { return u -= v; }
    friend SElement operator*(const Q& c, const SElement& u) {
        SElement r(u.p_);
        for (auto& [k, x] : u.t_) r.add(k, c * x);
        return r;
    }

    friend SElement operator*(const SElement& u, const SElement& v) { return s_mul(u, v); }

    friend SElement s_mul(const SElement& u, const SElement& v) {
        u.check(v);
        SElement r(u.p_);
        for (auto& [ku, cu] : u.t_)
            for (auto& [kv, cv] : v.t_) {
                SElement w = monomial_product(u.p_, ku, kv);
                for (auto& [kw, cw] : w.t_) r.add(kw, cu * cv * cw);
            }
        return r;
    }

    SElement pow(int e) const {
        SElement r = one(p_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // x * u
    SElement left_x() const {
        SElement r(p_);
        for (auto& [k, c] : t_) {
            auto [l, p, q] = k;
            int l1 = p_.mod(l - 1);
            r.add({l1, p, q + 1}, c);
            if (p > 0) {
                Q s = 0;
                for (int j = 0; j < p; ++j) s += p_.t(l1 - j);
                r.add({l1, p - 1, q}, c * s);
            }
        }
        return r;
    }
    // y * u
    SElement left_y() const {
        SElement r(p_);
        for (auto& [k, c] : t_) r.add({p_.mod(k[0] + 1), k[1] + 1, k[2]}, c);
        return r;
    }
    // e_i * u
    SElement left_e(int i) const {
        SElement r(p_);
        for (auto& [k, c] : t_)
            if (k[0] == p_.mod(i)) r.add(k, c);
        return r;
    }
    // u * e_j : e_i y^a x^b e_j survives iff i = a - b + j
    SElement right_e(int j) const {
        SElement r(p_);
        for (auto& [k, c] : t_)
            if (k[0] == p_.mod(k[1] - k[2] + j)) r.add(k, c);
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto& [k, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.get_str() + ")e" + std::to_string(k[0]);
            if (k[1]) s += " y^" + std::to_string(k[1]);
            if (k[2]) s += " x^" + std::to_string(k[2]);
        }
        return s;
    }

private:
    CrossedParams p_;
    std::map<SKey, Q> t_;

    void check(const SElement& o) const {
        if (!(p_ == o.p_)) throw std::invalid_argument("crossed product parameter mismatch");
    }

    static SElement monomial_product(const CrossedParams& p, const SKey& a, const SKey& b) {
        SElement w = mono(p, b[0], b[1], b[2]);
        for (int i = 0; i < a[2]; ++i) w = w.left_x();
        for (int i = 0; i < a[1]; ++i) w = w.left_y();
        return w.left_e(a[0]);
    }
};

inline SElement corner_project(const SElement& u) { return u.left_e(0).right_e(0); }

inline bool in_corner(const SElement& u) {
    int m = u.params().m;
    for (auto& [k, c] : u.terms())
        if (k[0] != 0 || ((k[1] - k[2]) % m + m) % m != 0) return false;
    return true;
}

inline SElement e_y_n_x_n(const CrossedParams& p, int n) { return SElement::mono(p, 0, n, n); }

// corner algebra -> A(v)
class PhiMap {
public:
    explicit PhiMap(CrossedParams p) : p_(std::move(p)), v_(v_from_tau(p_.tau)) {}

    const Poly& v() const { return v_; }
    const CrossedParams& params() const { return p_; }

    // phi(e0 y^n x^n), via the triangular expansion in powers of e0 y x
    const Poly& f(int n) {
        while (static_cast<int>(f_.size()) <= n) {
            int B = static_cast<int>(f_.size());
            if (B == 0) {
                f_.push_back(Poly(Q(1)));
                pw_.push_back(SElement::e(p_, 0));
                continue;
            }
            SElement eyx = SElement::mono(p_, 0, 1, 1);
            pw_.push_back(pw_.back() * eyx);
            const SElement& P = pw_.back();
            Poly sh = p_.sum() * hvar();
            Poly r = sh.pow(B);
            for (auto& [k, c] : P.terms()) {
                if (k[0] != 0 || k[1] != k[2]) throw std::logic_error("power of e y x left the diagonal");
                if (k[1] == B) {
                    if (c != 1) throw std::logic_error("unexpected leading coefficient");
                    continue;
                }
                r -= c * f_[k[1]];
            }
            f_.push_back(r);
        }
        return f_[n];
    }

    GwaElement operator()(const SElement& u) {
        if (!in_corner(u)) throw std::invalid_argument("element is not in the e0 corner");
        GwaElement r(v_);
        int m = p_.m;
        for (auto& [k, c] : u.terms()) {
            int a = k[1], b = k[2];
            if (a >= b) {
                int t = (a - b) / m;
                r.add(t, c * f(b));
            } else {
                int t = (b - a) / m;
                r.add(-t, c * f(a).shift(Q(-t)));
            }
        }
        return r;
    }

private:
    CrossedParams p_;
    Poly v_;
    std::vector<Poly> f_;
    std::vector<SElement> pw_;
};

// automorphisms given by images of x and y; idempotents fixed
struct SAutomorphism {
    SElement ix, iy;
    std::string label;
};

// sum_i c_i e_i
inline SElement group_elem(const CrossedParams& p, const std::vector<Q>& c) {
    SElement s(p);
    for (int i = 0; i < p.m; ++i) s.add({i, 0, 0}, c[i]);
    return s;
}

inline SAutomorphism s_theta(const CrossedParams& p, const Q& lam) {
    return {(Q(1) / lam) * SElement::x(p), lam * SElement::y(p), "theta(" + lam.get_str() + ")"};
}
// x -> x - k lam (sum tau) y^{km-1}
inline SAutomorphism s_psi(const CrossedParams& p, int k, const Q& lam) {
    SElement yk = SElement::y(p).pow(k * p.m - 1);
    return {SElement::x(p) - (Q(k) * lam * p.sum()) * yk, SElement::y(p),
            "psi(" + std::to_string(k) + "," + lam.get_str() + ")"};
}
// y -> y + k lam (sum tau) x^{km-1}
inline SAutomorphism s_phi(const CrossedParams& p, int k, const Q& lam) {
    SElement xk = SElement::x(p).pow(k * p.m - 1);
    return {SElement::x(p), SElement::y(p) + (Q(k) * lam * p.sum()) * xk,
            "phi(" + std::to_string(k) + "," + lam.get_str() + ")"};
}
// x -> (sum c_i e_i) x, y -> (sum d_i e_i) y
inline SAutomorphism s_hscale(const CrossedParams& p, const std::vector<Q>& c, const std::vector<Q>& d) {
    return {group_elem(p, c) * SElement::x(p), group_elem(p, d) * SElement::y(p), "hscale"};
}

inline SElement apply_s_automorphism(const SAutomorphism& s, const SElement& u) {
    const CrossedParams& p = u.params();
    SElement r(p);
    int maxa = 0, maxb = 0;
    for (auto& [k, c] : u.terms()) {
        maxa = std::max(maxa, k[1]);
        maxb = std::max(maxb, k[2]);
    }
    std::vector<SElement> yp{SElement::one(p)}, xp{SElement::one(p)};
    for (int i = 1; i <= maxa; ++i) yp.push_back(yp.back() * s.iy);
    for (int i = 1; i <= maxb; ++i) xp.push_back(xp.back() * s.ix);
    for (auto& [k, c] : u.terms()) r += c * (SElement::e(p, k[0]) * yp[k[1]] * xp[k[2]]);
    return r;
}

// composite applied right to left: word {s1, s2} acts as s1(s2(u))
inline SElement apply_word(const std::vector<SAutomorphism>& word, SElement u) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) u = apply_s_automorphism(*it, u);
    return u;
}

// images satisfy e_i x1 = x1 e_{i+1}, e_i y1 = y1 e_{i-1}, x1 y1 - y1 x1 = tau
inline bool verify_s_automorphism(const SAutomorphism& s) {
    const CrossedParams& p = s.ix.params();
    for (int i = 0; i < p.m; ++i) {
        if (s.ix.left_e(i) != s.ix.right_e(i + 1)) return false;
        if (s.iy.left_e(i) != s.iy.right_e(i - 1)) return false;
    }
    return s.ix * s.iy - s.iy * s.ix == SElement::tau(p);
}

inline std::vector<SElement> corner_generators(const CrossedParams& p) {
    return {SElement::mono(p, 0, p.m, 0), SElement::mono(p, 0, 0, p.m), SElement::mono(p, 0, 1, 1)};
}

inline bool intertwines(PhiMap& phi, const SAutomorphism& s, const GwaAutomorphism& S) {
    for (auto& g : corner_generators(phi.params()))
        if (phi(apply_s_automorphism(s, g)) != apply_gwa(S, phi(g))) return false;
    return true;
}

// phi o sigma = rho(sigma) o phi on corner generators, for theta, psi and phi families
inline bool rho_correspondence_check(const CrossedParams& p, int k, const Q& lam) {
    PhiMap phi(p);
    const Poly& v = phi.v();
    if (lam != 0 && !intertwines(phi, s_theta(p, lam), bj_automorphism(BJKind::Theta, k, lam, v))) return false;
    if (!intertwines(phi, s_psi(p, k, lam), bj_automorphism(BJKind::Psi, k, lam, v))) return false;
    if (!intertwines(phi, s_phi(p, k, lam), bj_automorphism(BJKind::Phi, k, lam, v))) return false;
    return true;
}

// e0 (x + c (sum tau) y^{mk-1})^m against b + sum lam^i/i! Delta_k^i(v) a^{ik-1}
inline bool psi_image_identity(const CrossedParams& p, int k, const Q& lam, const Q& c) {
    PhiMap phi(p);
    SElement base = SElement::x(p) + (c * p.sum()) * SElement::y(p).pow(k * p.m - 1);
    SElement lhs = SElement::e(p, 0) * base.pow(p.m);
    GwaAutomorphism S = bj_automorphism(BJKind::Psi, k, lam, phi.v());
    return phi(lhs) == S.b;
}

// hscale elements with product of the c_i equal to 1 act trivially on the corner
inline bool hscale_trivial_on_corner(const CrossedParams& p, const std::vector<Q>& c, const std::vector<Q>& d) {
    SAutomorphism s = s_hscale(p, c, d);
    for (auto& g : corner_generators(p))
        if (apply_s_automorphism(s, g) != g) return false;
    return true;
}

}  // namespace qv
