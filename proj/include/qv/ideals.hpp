#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "crossed.hpp"
#include "gwa.hpp"
#include "kappa.hpp"
#include "quiver.hpp"
#include "ratfunc.hpp"

namespace qv {

// l(h) = h + tau_0/(tau_0 + tau_1)
inline Poly l_poly(const Q& tau0, const Q& tau1) { return Poly::lin(tau0 / (tau0 + tau1)); }

// prod_{i=1}^{2k-1-e} l(h-i) * l(h - n + (k-e)(k-1))
inline Poly s_poly(int n, int k, int e, const Poly& l) {
    Poly r(Q(1));
    for (int i = 1; i <= 2 * k - 1 - e; ++i) r = r * l.shift(Q(-i));
    return r * l.shift(Q(-n + (k - e) * (k - 1)));
}

// same with (h-i) in place of l(h-i)
inline Poly s_prime_poly(int n, int k, int e, const Poly& l) {
    Poly r(Q(1));
    for (int i = 1; i <= 2 * k - 1 - e; ++i) r = r * Poly::lin(Q(-i));
    return r * l.shift(Q(-n + (k - e) * (k - 1)));
}

inline bool part_a(Family f) { return f == Family::Rect || f == Family::Ascending; }

// (n - k, n; eps) for part (a), (n, n - k; eps) for part (b)
struct IdealLabel {
    int n = 0, k = 0, eps = 0;
    Family family = Family::Ascending;

    std::vector<int> dims() const {
        if (part_a(family)) return {n - k, n};
        return {n, n - k};
    }
    std::string str() const {
        auto d = dims();
        return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + ";" + std::to_string(eps) + ")";
    }
    friend bool operator<(const IdealLabel& x, const IdealLabel& y) {
        return std::tie(x.eps, x.n, x.k, x.family) < std::tie(y.eps, y.n, y.k, y.family);
    }
};

inline Family family_of(int eps, bool a) {
    if (a) return eps ? Family::Rect : Family::Ascending;
    return eps ? Family::AscSwapped : Family::Swapped;
}

// k = 0 sits in both halves of L_eps; eps = 1 uses (b), where the exponent stays nonnegative
inline IdealLabel label_of(int n0, int n1, int eps) {
    if (!in_L_epsilon(n0, n1, eps)) throw std::invalid_argument("dimension vector outside L_eps");
    IdealLabel L;
    L.eps = eps;
    bool a = n0 < n1 || (n0 == n1 && eps == 0);
    L.n = a ? n1 : n0;
    L.k = a ? n1 - n0 : n0 - n1;
    L.family = family_of(eps, a);
    return L;
}

// all labels with k <= kmax and n <= nmax
inline std::vector<IdealLabel> label_grid(int kmax, int nmax) {
    std::vector<IdealLabel> out;
    for (int eps = 0; eps <= 1; ++eps)
        for (int n0 = 0; n0 <= nmax; ++n0)
            for (int n1 = 0; n1 <= nmax; ++n1) {
                int k = n0 > n1 ? n0 - n1 : n1 - n0;
                if (k > kmax || !in_L_epsilon(n0, n1, eps)) continue;
                out.push_back(label_of(n0, n1, eps));
            }
    return out;
}

// a^N A(v) + s(h) A(v)
struct FractionalIdeal {
    Poly v;
    int N = 0;
    Poly s;
    IdealLabel label;

    bool is_unit() const { return N == 0 || s.deg() == 0; }
    std::string str() const { return "a^" + std::to_string(N) + " A + (" + s.str() + ") A"; }
};

inline FractionalIdeal unit_ideal(const Poly& v) { return {v, 0, Poly(Q(1)), IdealLabel{}}; }

inline FractionalIdeal ideal_of(const IdealLabel& L, const Q& tau0, const Q& tau1) {
    Poly v = v_from_tau({tau0, tau1});
    Poly l = l_poly(tau0, tau1);
    FractionalIdeal P;
    P.v = v;
    P.label = L;
    int n = L.n, k = L.k, e = L.eps;
    if (part_a(L.family)) {
        P.N = n - (k - e) * (k - 1);
        P.s = s_poly(n, k, e, l).monic();
    } else {
        P.N = n - (k + e - 1) * (k - 1) + 1;
        P.s = s_prime_poly(n, k, 1 - e, l).monic();
    }
    if (P.N < 0) throw std::logic_error("negative generator power");
    if (n == 0 && k == 0 && e == 0) P.s = Poly(Q(1));
    if (n == 0 && k == 0 && e == 1) {
        // e_1 S e_0 placed in the corner by e_0 y: generated by e_0 y^2 and e_0 y x
        CrossedParams cp({tau0, tau1});
        PhiMap phi(cp);
        GwaElement g = phi(SElement::mono(cp, 0, 2, 0));
        if (g.graded().size() != 1 || g.graded().begin()->second.deg() != 0)
            throw std::logic_error("unexpected image of e_0 y^2");
        P.N = g.graded().begin()->first;
        P.s = phi(SElement::mono(cp, 0, 1, 1)).piece(0).monic();
    }
    return P;
}

template <class T>
bool is_nilpotent(const Matrix<T>& M) {
    if (M.rows() == 0) return true;
    return M.pow(M.rows()).is_zero();
}

// the two-generator ideal attached to a C*-fixed point of a two-vertex variety
inline FractionalIdeal omega_ideal(const QPointQ& p) {
    if (p.m != 2) throw std::invalid_argument("two vertices only");
    if (!is_nilpotent(p.bigX()) || !is_nilpotent(p.bigY())) throw std::invalid_argument("point is not nilpotent");
    return ideal_of(label_of(p.dims[0], p.dims[1], p.frame), p.tau[0], p.tau[1]);
}

// f_N + sum_l A_l f_{N-l} against b^N s, N = 2k - e; part (b) is read with tau reversed and e = 1 - eps
struct KeyIdentity {
    IdealLabel label;
    int N = 0;
    Poly lhs, rhs;
    bool reversed = false;
    bool pass = false;
};

inline KeyIdentity key_identity(const IdealLabel& L, const std::vector<Q>& A, const Q& tau0, const Q& tau1) {
    if (L.k < 1) throw std::invalid_argument("the identity needs k >= 1");
    KeyIdentity r;
    r.label = L;
    r.reversed = !part_a(L.family);
    int e = r.reversed ? 1 - L.eps : L.eps;
    Q t0 = r.reversed ? tau1 : tau0, t1 = r.reversed ? tau0 : tau1;
    r.N = 2 * L.k - e;
    if (static_cast<int>(A.size()) < r.N) throw std::invalid_argument("too few kappa coefficients");
    PhiMap phi(CrossedParams({t0, t1}));
    r.lhs = phi.f(r.N);
    for (int j = 1; j <= r.N; ++j) r.lhs += A[j - 1] * phi.f(r.N - j);
    r.rhs = qpow(t0 + t1, r.N) * s_poly(L.n, L.k, e, l_poly(t0, t1));
    r.pass = r.lhs == r.rhs;
    return r;
}

// kappa read off the point by brute force
inline KeyIdentity key_identity(const QPointQ& p) {
    IdealLabel L = label_of(p.dims[0], p.dims[1], p.frame);
    int e = part_a(L.family) ? L.eps : 1 - L.eps;
    return key_identity(L, kappa_diagonal(p, 2 * L.k - e), p.tau[0], p.tau[1]);
}

inline KeyIdentity key_identity_closed(const IdealLabel& L, const Q& tau0, const Q& tau1) {
    return key_identity(L, kappa_closed_form(L.n, L.k, L.family, tau0, tau1), tau0, tau1);
}

// x^t r(h) with x = a for t > 0 and b for t < 0, r rational
struct RMono {
    int t = 0;
    RatFunc r;
};

inline RMono rmul(const Poly& v, const RMono& x, const RMono& y) {
    return {x.t + y.t, RatFunc(gwa_correction(v, x.t, y.t)) * x.r.shift(Q(y.t)) * y.r};
}

// degree t piece, as the generator of a C[h]-submodule of C(h) times x^t
struct GradedComponent {
    int t = 0;
    RatFunc gen;
    // zeros plus poles, so 0 exactly when the component is x^t C[h]
    int degree() const { return gen.num().deg() + gen.den().deg(); }
};

// P ∩ D(t) = a^N D(t - N) + s(h) D(t)
inline GradedComponent ideal_graded_component(const FractionalIdeal& P, int t) {
    Poly q = gwa_correction(P.v, P.N, t - P.N);
    Poly st = P.s.shift(Q(t));
    return {t, RatFunc(poly_gcd(q, st))};
}

// E(t) = {c x^t : c a^N in P and c s in P}
inline GradedComponent endo_graded_component(const FractionalIdeal& P, int t) {
    Poly corr = gwa_correction(P.v, t, P.N);
    RatFunc g1 = ideal_graded_component(P, t + P.N).gen;
    RatFunc g0 = ideal_graded_component(P, t).gen;
    RatFunc c1 = (g1 / RatFunc(corr)).shift(Q(-P.N));
    RatFunc c2 = g0 / RatFunc(P.s);
    return {t, intersect_modules(c1, c2)};
}

using EndoTable = std::map<int, GradedComponent>;

inline EndoTable endo_table(const FractionalIdeal& P, int tmin, int tmax) {
    EndoTable E;
    for (int t = tmin; t <= tmax; ++t) E[t] = endo_graded_component(P, t);
    return E;
}

// gen(E(s)) gen(E(t)) lies in E(s + t) wherever all three are tabulated, and E(0) = C[h]
inline bool endo_closure(const Poly& v, const EndoTable& E, std::vector<std::pair<int, int>>* bad = nullptr) {
    bool ok = E.count(0) && E.at(0).gen == RatFunc(Poly(Q(1)));
    for (auto& [s, es] : E)
        for (auto& [t, et] : E) {
            auto it = E.find(s + t);
            if (it == E.end()) continue;
            RMono pr = rmul(v, {s, es.gen}, {t, et.gen});
            if ((pr.r / it->second.gen).is_poly()) continue;
            ok = false;
            if (bad) bad->push_back({s, t});
        }
    return ok;
}

enum class SReading { Literal, IdealGenerator };

inline std::string reading_name(SReading r) { return r == SReading::Literal ? "s_{n,2k}" : "ideal generator"; }

// the printed five-case tables; Literal takes s_{n,2k}, IdealGenerator takes the ideal's own s
inline GradedComponent endo_closed_form(const IdealLabel& L, int t, const Q& tau0, const Q& tau1,
                                        SReading reading = SReading::Literal) {
    int n = L.n, k = L.k, e = L.eps;
    if (!in_L_epsilon(L.dims()[0], L.dims()[1], e)) throw std::invalid_argument("outside L_eps");
    Poly l = l_poly(tau0, tau1);
    Poly s = reading == SReading::Literal ? s_poly(n, k, 0, l) : ideal_of(L, tau0, tau1).s;
    int thr, lshift;
    if (part_a(L.family)) {
        thr = n - k * (k - e + 1);
        lshift = -n + (k - e) * (k - 1);
    } else {
        thr = n - k * (k + e) + 1;
        lshift = -n + (k + e - 1) * (k - 1);
    }
    Poly one(Q(1));
    if (t == 0) return {t, RatFunc(one)};
    if (t > 0) {
        if (t >= thr + 1) return {t, RatFunc(one)};
        return {t, RatFunc(l.shift(Q(lshift + t)))};
    }
    RatFunc ratio(s.shift(Q(t)), s);
    if (t >= -thr) return {t, (ratio * RatFunc(l.shift(Q(-n + (k - e) * (k - 1))))).monic()};
    return {t, ratio.monic()};
}

struct Discrepancy {
    int t;
    RatFunc definitional, closed;
};

struct CrosscheckResult {
    IdealLabel label;
    SReading reading;
    std::vector<Discrepancy> mismatches;
    bool agree() const { return mismatches.empty(); }
    // smallest |t| first, negative before positive
    const Discrepancy* witness() const {
        const Discrepancy* w = nullptr;
        for (auto& d : mismatches)
            if (!w || std::abs(d.t) < std::abs(w->t)) w = &d;
        return w;
    }
};

inline CrosscheckResult endo_crosscheck(const IdealLabel& L, const Q& tau0, const Q& tau1, SReading reading,
                                        int tmax) {
    FractionalIdeal P = ideal_of(L, tau0, tau1);
    CrosscheckResult r{L, reading, {}};
    for (int t = -tmax; t <= tmax; ++t) {
        RatFunc d = endo_graded_component(P, t).gen;
        RatFunc c = endo_closed_form(L, t, tau0, tau1, reading).gen;
        if (!(d == c)) r.mismatches.push_back({t, d, c});
    }
    return r;
}

// w with b'a' = w(h), a' = a gen(E(1)), b' = b gen(E(-1)), provided every tabulated E(t)
// is the corresponding power of a' or b'
inline std::optional<Poly> recognize_gwa(const Poly& v, const EndoTable& E) {
    if (!E.count(1) || !E.count(-1) || !E.count(0)) return std::nullopt;
    if (!(E.at(0).gen == RatFunc(Poly(Q(1))))) return std::nullopt;
    RMono ap{1, E.at(1).gen}, bp{-1, E.at(-1).gen};
    RatFunc w = rmul(v, bp, ap).r;
    if (!w.is_poly()) return std::nullopt;
    RatFunc ab = rmul(v, ap, bp).r;
    if (!(ab == w.shift(Q(-1)))) return std::nullopt;
    RMono pa{0, RatFunc(Poly(Q(1)))}, pb = pa;
    for (int t = 1; E.count(t) || E.count(-t); ++t) {
        pa = rmul(v, pa, ap);
        pb = rmul(v, pb, bp);
        if (E.count(t) && !(E.at(t).gen == pa.r.monic())) return std::nullopt;
        if (E.count(-t) && !(E.at(-t).gen == pb.r.monic())) return std::nullopt;
    }
    return w.as_poly();
}

// p(h) = c q(h + beta) for some nonzero c and rational beta
inline bool equal_up_to_scalar_shift(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    int d = p.deg();
    if (d != q.deg()) return false;
    if (d == 0) return true;
    Poly pm = p.monic(), qm = q.monic();
    Q beta = (pm[d - 1] - qm[d - 1]) / Q(d);
    return pm == qm.shift(beta);
}

// w_1 = h l(h - 2k - 1) for (k^2, k^2 + k; 0), w_2 = h l(h - 2k) for (k^2 - k, k^2; 1)
inline Poly expected_endo_w(int k, int eps, const Q& tau0, const Q& tau1) {
    Poly l = l_poly(tau0, tau1);
    return Poly::x() * l.shift(Q(eps ? -2 * k : -2 * k - 1));
}

inline IdealLabel recognition_label(int k, int eps) {
    return eps ? IdealLabel{k * k, k, 1, Family::Rect} : IdealLabel{k * k + k, k, 0, Family::Ascending};
}

using EndoProfile = std::map<int, int>;

inline EndoProfile endo_profile(const EndoTable& E) {
    EndoProfile pr;
    for (auto& [t, c] : E) pr[t] = c.degree();
    return pr;
}

// a nonzero degree on t = -1, 0, 1 rules out a graded isomorphism with A(v)
inline bool nontriviality_certificate(const EndoProfile& pr) {
    for (int t = -1; t <= 1; ++t)
        if (!pr.count(t)) throw std::invalid_argument("profile must cover degrees -1, 0, 1");
    for (int t = -1; t <= 1; ++t)
        if (pr.at(t) != 0) return true;
    return false;
}

}  // namespace qv
