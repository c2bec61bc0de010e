#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crossed.hpp"
#include "fixed_points.hpp"
#include "flex.hpp"
#include "gwa.hpp"
#include "ideals.hpp"
#include "identities.hpp"
#include "index_sets.hpp"
#include "kappa.hpp"
#include "quiver.hpp"
#include "report.hpp"
#include "search.hpp"

namespace qv {

struct RunConfig {
    std::vector<std::string> suites{"all"};
    std::optional<int> kmax, nmax, lmax;
    Q tau0 = canon(Q(3, 5)), tau1 = canon(Q(2, 7));
    bool symbolic = true;
    unsigned long seed = 1;
};

struct Ctx {
    int k = 0, n = 0, l = 0;
    Q tau0, tau1;
    bool symbolic = true;
    unsigned long seed = 1;
    int ordinal = 0;
    std::mt19937_64 rng() const {
        std::seed_seq s{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32), static_cast<unsigned>(ordinal)};
        return std::mt19937_64(s);
    }
};

struct Bound {
    int def = 0, min = 0, cap = 0;
};

struct SuiteDef {
    std::string name;
    Bound k;
    std::optional<Bound> n, l;
    void (*run)(Recorder&, const Ctx&);
};

namespace suites {

inline std::string mode_name(bool symbolic) { return symbolic ? "symbolic-z" : "numeric"; }

inline std::string fam_id(Family f) {
    switch (f) {
        case Family::Rect: return "rect";
        case Family::Swapped: return "swapped";
        case Family::Ascending: return "ascending";
        case Family::AscSwapped: return "ascending-swapped";
    }
    return "?";
}

inline std::string label_id(const IdealLabel& L) {
    auto d = L.dims();
    return "n0=" + pad(d[0]) + "/n1=" + pad(d[1]) + "/eps=" + std::to_string(L.eps);
}

inline json label_params(const IdealLabel& L) {
    auto d = L.dims();
    return json{{"n0", d[0]}, {"n1", d[1]}, {"eps", L.eps}, {"n", L.n}, {"k", L.k}, {"family", fam_id(L.family)}};
}

inline Outcome identity_outcome(const IdentityCase& c) {
    return verdict(c.pass, json{{"lhs", jv(c.lhs)}, {"rhs", jv(c.rhs)}});
}

// ---------------------------------------------------------------- appendix

inline void appendix(Recorder& R, const Ctx& c) {
    int K = c.k;
    for (int k = 2; k <= K; ++k)
        for (int L = 0; L <= 2 * k + 1; ++L)
            R.add("F/k=" + pad(k) + "/L=" + pad(L), json{{"k", k}, {"L", L}},
                  [=] { return identity_outcome(F_check(k, L)); });
    for (int k = 2; k <= K + 2; ++k)
        for (int l = 0; l <= k; ++l) {
            R.add("H/k=" + pad(k) + "/l=" + pad(l), json{{"k", k}, {"l", l}},
                  [=] { return identity_outcome(H_check(k, l)); });
            R.add("H-differences/k=" + pad(k) + "/l=" + pad(l), json{{"k", k}, {"l", l}}, [=] {
                Poly H = H_sum(k, l);
                json w = json::array();
                for (int i = 0; i <= 2 * l + 1; ++i) w.push_back(jv(delta_power(H, i).eval(Q(0))));
                return verdict(H_difference_claims(k, l), json{{"delta_at_zero", w}});
            });
        }
    for (int k = 2; k + 1 <= K; ++k)
        for (int l = 0; l <= k; ++l)
            R.add("F-recursion/k=" + pad(k) + "/l=" + pad(l), json{{"k", k}, {"l", l}},
                  [=] { return identity_outcome(Fhat_recursion_check(k, l)); });
    for (int k = 2; k <= K; ++k)
        for (int l = 0; l <= k; ++l)
            R.add("Hhat-shift/k=" + pad(k) + "/l=" + pad(l), json{{"k", k}, {"l", l}},
                  [=] { return identity_outcome(Hhat_shift_check(k, l)); });
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}})
        R.add("Hhat-factorial-line-rejected/k=" + pad(k) + "/l=" + pad(l), json{{"k", k}, {"l", l}}, [=] {
            Poly bad = Hhat_factorial_variant(k, l), good = Hhat(k, l);
            return verdict(bad != good, json{{"factorial_line", jv(bad)}, {"Hhat", jv(good)}});
        });
    for (long s = -3; s <= 3; ++s)
        for (int n = 1; n <= 6; ++n)
            R.add("delta-pochhammer/s=" + pad(static_cast<int>(s)) + "/n=" + pad(n), json{{"s", s}, {"n", n}},
                  [=] { return identity_outcome(delta_pochhammer_check(s, n)); });
    for (int k = 1; k <= K; ++k)
        R.add("eigenbasis/k=" + pad(k), json{{"k", k}}, [=] {
            auto C = basis_change_C(k), Ci = basis_change_Cinv(k);
            bool inv = C * Ci == MatP::identity(k) && Ci * C == MatP::identity(k);
            auto D = C * y0x0_action(k) * Ci;
            return verdict(inv && D == eigen_diagonal(k),
                           json{{"inverse", inv}, {"offending", first_nonzero(D - eigen_diagonal(k))}});
        });
}

// ---------------------------------------------------------------- index sets

inline json partition_witness(const PartitionReport& r) {
    return json{{"distinct_values", r.distinct_values}, {"disjoint", r.disjoint}, {"cardinality", r.cardinality},
                {"covers", r.covers}};
}

inline void index_sets(Recorder& R, const Ctx& c) {
    for (int k = 1; k <= c.k; ++k) {
        auto s = std::make_shared<IndexSets>(build_index_sets(k));
        std::string base = "k=" + pad(k, 3) + "/";
        R.add(base + "S-partition", json{{"k", k}}, [=] {
            auto r = check_S_partition(*s);
            return verdict(r.ok(), partition_witness(r));
        });
        R.add(base + "T-partition", json{{"k", k}}, [=] {
            auto r = check_T_partition(*s);
            return verdict(r.ok(), partition_witness(r));
        });
        R.add(base + "intersections", json{{"k", k}}, [=] {
            auto r = check_intersections(*s);
            return verdict(r.ok(), json{{"T3_S1", r.t3s1}, {"T4_S2", r.t4s2}, {"T3_split", r.t3_split},
                                        {"T4_split", r.t4_split}, {"union", r.union_identity}});
        });
        R.add(base + "diagonal-members", json{{"k", k}}, [=] {
            json bad = json::array();
            auto test = [&](const std::map<int, int>& d, const std::vector<IndexEntry>& fam, const char* name) {
                auto vals = IndexSets::values(fam);
                for (auto& [x, i] : d)
                    if (!vals.count(x)) bad.push_back(json{{"set", name}, {"value", x}, {"i", i}});
            };
            test(s->S3d, s->S3, "S3");
            test(s->S4d, s->S4, "S4");
            test(s->T3d, s->T3, "T3");
            test(s->T4d, s->T4, "T4");
            return verdict(bad.empty(), bad);
        });
    }
}

// ---------------------------------------------------------------- fixed points and kappa

struct PointSpec {
    Family family;
    int n, k;
    std::string id() const { return fam_id(family) + "/n=" + pad(n) + "/k=" + pad(k); }
    json params() const { return json{{"family", fam_id(family)}, {"n", n}, {"k", k}}; }
};

// square points are the rect points with n = k^2
inline std::vector<PointSpec> constructed_points(int K, int N) {
    std::vector<PointSpec> out;
    for (int k = 1; k <= K; ++k) {
        out.push_back({Family::Rect, k * k, k});
        for (int n = k * k + 1; n <= N; ++n) out.push_back({Family::Rect, n, k});
        for (int n = k * k; n <= N; ++n) out.push_back({Family::Swapped, n, k});
    }
    return out;
}

template <class T>
QuiverPoint<T> build_point(const PointSpec& s, const T& a, const T& b) {
    if (s.family == Family::Rect) return s.n == s.k * s.k ? fixed_point_square(s.k, a, b) : fixed_point_rect(s.n, s.k, a, b);
    return fixed_point_swapped(s.n, s.k, a, b);
}

template <class T>
Outcome point_outcome(const QuiverPoint<T>& p) {
    bool var = on_variety(p), st = check_stability(p), tr = trace_constraint(p);
    json w{{"on_variety", var}, {"stable", st}, {"trace", tr}};
    if (!var) w["residual"] = first_nonzero(moment_map_residual(p));
    return verdict(var && st && tr, w);
}

template <class T>
Outcome kappa_outcome(const QuiverPoint<T>& p, std::vector<T> closed, int L) {
    auto A = kappa_diagonal(p, L);
    closed.resize(A.size(), Scalar<T>::zero());
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i] != closed[i])
            return verdict(false, json{{"l", i + 1}, {"bruteforce", jv(A[i])}, {"closed_form", jv(closed[i])}});
    return {};
}

template <class T>
Outcome off_diagonal_outcome(const QuiverPoint<T>& p, int L) {
    for (auto& [lq, x] : kappa_bruteforce(p, L))
        if (lq.first != lq.second && x != Scalar<T>::zero())
            return verdict(false, json{{"l", lq.first}, {"q", lq.second}, {"value", jv(x)}});
    return {};
}

template <class T>
Outcome block_product_outcome(const QuiverPoint<T>& p, int lmax) {
    for (int l = 0; l <= lmax; ++l) {
        auto tab = kappa_bruteforce(p, l);
        T bf = tab[{l, l}], fo = block_product_formula(p, l);
        if (bf != fo) return verdict(false, json{{"l", l}, {"bruteforce", jv(bf)}, {"formula", jv(fo)}});
    }
    return {};
}

template <class T>
void fixed_points_typed(Recorder& R, const Ctx& c, const T& a, const T& b) {
    for (auto& s : constructed_points(c.k, c.n)) {
        json pr = s.params();
        pr["mode"] = mode_name(c.symbolic);
        R.add(s.id(), pr, [=] {
            auto p = build_point(s, a, b);
            auto d = s.family == Family::Rect ? std::vector<int>{s.n - s.k, s.n} : std::vector<int>{s.n, s.n - s.k};
            if (p.dims != d) return verdict(false, json{{"dims", p.dims}});
            return point_outcome(p);
        });
    }
}

// graded solutions on the k = 1 ascending varieties, found by search at numeric tau
inline std::vector<std::pair<Family, int>> searched_specs(int N) {
    std::vector<std::pair<Family, int>> out;
    for (int n = 2; n <= std::min(N, 4); ++n) {
        out.push_back({Family::Ascending, n});
        out.push_back({Family::AscSwapped, n});
    }
    return out;
}

inline std::vector<QPointQ> searched_points(Family f, int n, const Q& t0, const Q& t1, unsigned long seed) {
    std::vector<QPointQ> out;
    if (f == Family::Ascending) {
        for (auto& [g, p] : fixed_point_survey({n - 1, n}, 0, {t0, t1}, n + 1, seed)) out.push_back(p);
    } else {
        for (auto& [g, p] : fixed_point_survey({n - 1, n}, 0, {t1, t0}, n + 1, seed)) out.push_back(rotate_indices(p));
    }
    return out;
}

inline void fixed_points(Recorder& R, const Ctx& c) {
    if (c.symbolic) {
        auto [a, b] = symbolic_tau();
        fixed_points_typed<Poly>(R, c, a, b);
    } else {
        fixed_points_typed<Q>(R, c, c.tau0, c.tau1);
    }
    for (auto [f, n] : searched_specs(c.n)) {
        auto pts = std::make_shared<std::vector<QPointQ>>(searched_points(f, n, c.tau0, c.tau1, c.seed));
        std::string base = "search/" + fam_id(f) + "/n=" + pad(n) + "/k=01";
        R.add(base + "/found", json{{"family", fam_id(f)}, {"n", n}, {"k", 1}, {"mode", "numeric"}},
              [=] { return verdict(!pts->empty(), json{{"points", 0}}); });
        for (size_t i = 0; i < pts->size(); ++i)
            R.add(base + "/point=" + pad(static_cast<int>(i)),
                  json{{"family", fam_id(f)}, {"n", n}, {"k", 1}, {"mode", "numeric"}},
                  [=] { return point_outcome((*pts)[i]); });
    }
}

template <class T>
void kappa_typed(Recorder& R, const Ctx& c, const T& a, const T& b) {
    for (auto& s : constructed_points(c.k, c.n)) {
        json pr = s.params();
        pr["mode"] = mode_name(c.symbolic);
        auto p = std::make_shared<QuiverPoint<T>>(build_point(s, a, b));
        int L = 2 * s.k + 3;
        R.add("diagonal/" + s.id(), pr, [=] {
            return kappa_outcome(*p, kappa_closed_form(s.n, s.k, s.family, a, b), L);
        });
        if (s.family == Family::Rect && s.n == s.k * s.k)
            R.add("square-form/k=" + pad(s.k), json{{"k", s.k}, {"mode", mode_name(c.symbolic)}}, [=] {
                auto sq = kappa_square<T>(s.k, b, T(a + b));
                auto cf = kappa_closed_form(s.n, s.k, Family::Rect, a, b);
                return verdict(sq == cf, json{{"square", jv(sq)}, {"rect", jv(cf)}});
            });
        R.add("off-diagonal/" + s.id(), pr, [=] { return off_diagonal_outcome(*p, 2 * s.k + 2); });
        json pl = pr;
        pl["lmax"] = c.l;
        pl["point"] = "fixed";
        R.add("block-product/fixed/" + s.id(), pl, [=, l = c.l] { return block_product_outcome(*p, l); });
    }
}

inline void kappa(Recorder& R, const Ctx& c) {
    if (c.symbolic) {
        auto [a, b] = symbolic_tau();
        kappa_typed<Poly>(R, c, a, b);
    } else {
        kappa_typed<Q>(R, c, c.tau0, c.tau1);
    }
    for (auto [f, n] : searched_specs(c.n)) {
        auto pts = std::make_shared<std::vector<QPointQ>>(searched_points(f, n, c.tau0, c.tau1, c.seed));
        json pr{{"family", fam_id(f)}, {"n", n}, {"k", 1}, {"mode", "numeric"}};
        std::string base = fam_id(f) + "/n=" + pad(n) + "/k=01";
        R.add("diagonal/search/" + base, pr, [=] {
            auto closed = kappa_closed_form(n, 1, f, c.tau0, c.tau1);
            json seen = json::array();
            for (auto& p : *pts) {
                if (kappa_outcome(p, closed, 2 * n + 1).status == Status::Pass) return Outcome{};
                seen.push_back(jv(kappa_diagonal(p, 2 * n + 1)));
            }
            return verdict(false, json{{"closed_form", jv(closed)}, {"found", seen}});
        });
        R.add("off-diagonal/search/" + base, pr, [=] {
            for (auto& p : *pts) {
                auto o = off_diagonal_outcome(p, 2 * n);
                if (o.status != Status::Pass) return o;
            }
            return Outcome{};
        });
    }
    // random orbit points on every constructed variety
    auto rng = c.rng();
    for (auto& s : constructed_points(c.k, c.n)) {
        auto base = std::make_shared<QPointQ>(build_point(s, c.tau0, c.tau1));
        for (int i = 0; i < 5; ++i) {
            auto word = random_word(rng, 3);
            json pr = s.params();
            pr["mode"] = "numeric";
            pr["lmax"] = c.l;
            pr["point"] = word_label(word);
            R.add("block-product/orbit/" + s.id() + "/draw=" + std::to_string(i), pr, [=, l = c.l] {
                auto p = apply_generators(word, *base);
                if (!on_variety(p)) return verdict(false, json{{"error", "orbit point left the variety"}});
                return block_product_outcome(p, l);
            });
        }
    }
}

// ---------------------------------------------------------------- gwa

inline GwaElement random_gwa(const Poly& v, std::mt19937_64& rng) {
    GwaElement r(v);
    for (int i = 0; i < 3; ++i) {
        Poly p(Q(static_cast<int>(rng() % 7) - 3));
        p = p + Q(static_cast<int>(rng() % 7) - 3) * hvar();
        r.add(static_cast<int>(rng() % 5) - 2, p);
    }
    return r;
}

inline bool same_automorphism(const GwaAutomorphism& s, const GwaAutomorphism& t) {
    return s.a == t.a && s.h == t.h && s.b == t.b;
}

inline std::string bj_name(BJKind k) {
    switch (k) {
        case BJKind::Theta: return "Theta";
        case BJKind::Psi: return "Psi";
        case BJKind::Phi: return "Phi";
    }
    return "?";
}

inline void gwa(Recorder& R, const Ctx& c) {
    auto rng = c.rng();
    std::vector<std::pair<std::string, std::vector<Q>>> taus{{"m=2", {c.tau0, c.tau1}},
                                                              {"m=3", {c.tau0, c.tau1, Q(1)}}};
    const std::vector<Q> lams{Q(1), canon(Q(-1, 2)), Q(3)};
    for (auto& [mname, tau] : taus) {
        Poly v = v_from_tau(tau);
        for (BJKind kind : {BJKind::Theta, BJKind::Psi, BJKind::Phi})
            for (int k = 1; k <= c.k; ++k)
                for (size_t li = 0; li < lams.size(); ++li) {
                    Q lam = lams[li];
                    R.add("bj-relations/" + mname + "/" + bj_name(kind) + "/k=" + pad(k) + "/lambda=" + pad(li),
                          json{{"deg_v", v.deg()}, {"kind", bj_name(kind)}, {"k", k}, {"lambda", jv(lam)}},
                          [=] { return verdict(verify_gwa_automorphism(bj_automorphism(kind, k, lam, v))); });
                }
    }
    Poly v = v_from_tau({c.tau0, c.tau1});
    R.add("theta-composition", json{{"lambda", "2/1"}, {"mu", "-1/3"}}, [=] {
        auto s = bj_automorphism(BJKind::Theta, 1, Q(2), v), t = bj_automorphism(BJKind::Theta, 1, canon(Q(-1, 3)), v);
        return verdict(same_automorphism(gwa_compose(s, t), bj_automorphism(BJKind::Theta, 1, canon(Q(-2, 3)), v)));
    });
    for (int k = 1; k <= c.k; ++k) {
        R.add("psi-zero-is-identity/k=" + pad(k), json{{"k", k}},
              [=] { return verdict(same_automorphism(bj_automorphism(BJKind::Psi, k, Q(0), v), gwa_identity(v))); });
        R.add("psi-inverse/k=" + pad(k), json{{"k", k}, {"lambda", "2/1"}}, [=] {
            auto s = bj_automorphism(BJKind::Psi, k, Q(2), v), t = bj_automorphism(BJKind::Psi, k, Q(-2), v);
            return verdict(same_automorphism(gwa_compose(s, t), gwa_identity(v)));
        });
        R.add("phi-inverse/k=" + pad(k), json{{"k", k}, {"lambda", "2/1"}}, [=] {
            auto s = bj_automorphism(BJKind::Phi, k, Q(2), v), t = bj_automorphism(BJKind::Phi, k, Q(-2), v);
            return verdict(same_automorphism(gwa_compose(s, t), gwa_identity(v)));
        });
    }
    R.add("negative/h-shift-rejected", json::object(), [=] {
        GwaAutomorphism bad{GwaElement::a(v), GwaElement::h(v) + GwaElement::scalar(v, Q(1)), GwaElement::b(v), "h+1"};
        return verdict(!verify_gwa_automorphism(bad));
    });
    for (int k = 2; k <= c.k; ++k)
        R.add("negative/phi-left-coefficient-rejected/k=" + pad(k), json{{"k", k}, {"lambda", "1/1"}}, [=] {
            GwaElement A = GwaElement::a(v), B = GwaElement::b(v), H = GwaElement::h(v), na = A;
            Poly d = v;
            for (int i = 1; i <= v.deg(); ++i) {
                d = delta_k(d, k);
                na += GwaElement::poly(v, (qpow(Q(-1), i) / factorial(i)) * d) * B.pow(i * k - 1);
            }
            return verdict(!verify_gwa_automorphism({na, H + Q(k) * B.pow(k), B, "left"}));
        });
    for (int s = -5; s <= 5; ++s)
        for (int t = -5; t <= 5; ++t)
            R.add("power-product/s=" + pad(s) + "/t=" + pad(t), json{{"s", s}, {"t", t}}, [=] {
                auto D = [&](int u) {
                    return u >= 0 ? GwaElement::a(v).pow(u) : GwaElement::b(v).pow(-u);
                };
                GwaElement lhs = D(s) * D(t), rhs = D(s + t) * GwaElement::poly(v, gwa_correction(v, s, t));
                return verdict(lhs == rhs, json{{"correction", jv(gwa_correction(v, s, t))}});
            });
    for (int i = 0; i < 30; ++i) {
        auto x = random_gwa(v, rng), y = random_gwa(v, rng), z = random_gwa(v, rng);
        R.add("associativity/draw=" + pad(i), json{{"draw", i}}, [=] { return verdict((x * y) * z == x * (y * z)); });
    }
    for (BJKind kind : {BJKind::Theta, BJKind::Psi, BJKind::Phi})
        for (int i = 0; i < 5; ++i) {
            auto x = random_gwa(v, rng), y = random_gwa(v, rng);
            int k = 1 + i % c.k;
            R.add("multiplicative/" + bj_name(kind) + "/draw=" + pad(i), json{{"kind", bj_name(kind)}, {"k", k}}, [=] {
                auto s = bj_automorphism(kind, k, canon(Q(1, 2)), v);
                return verdict(apply_gwa(s, x * y) == apply_gwa(s, x) * apply_gwa(s, y));
            });
        }
}

// ---------------------------------------------------------------- crossed product

inline SElement random_corner(const CrossedParams& p, std::mt19937_64& rng) {
    SElement r(p);
    for (int i = 0; i < 3; ++i) {
        int b = static_cast<int>(rng() % 3), s = static_cast<int>(rng() % 3) - 1;
        int a = b + s * p.m;
        if (a < 0) continue;
        r.add({0, a, b}, Q(static_cast<int>(rng() % 7) - 3));
    }
    return r;
}

inline void crossed(Recorder& R, const Ctx& c) {
    auto rng = c.rng();
    CrossedParams p2({c.tau0, c.tau1}), p3({c.tau0, c.tau1, Q(1)});
    for (auto [mname, p] : std::vector<std::pair<std::string, CrossedParams>>{{"m=2", p2}, {"m=3", p3}}) {
        auto phi = std::make_shared<PhiMap>(p);
        for (int i = 0; i < 100; ++i) {
            auto u = random_corner(p, rng), w = random_corner(p, rng);
            R.add("phi-multiplicative/" + mname + "/draw=" + pad(i, 3), json{{"m", p.m}, {"draw", i}},
                  [=] { return verdict((*phi)(u * w) == (*phi)(u) * (*phi)(w)); });
        }
        for (int k = 1; k <= c.k; ++k)
            for (Q lam : {Q(1), canon(Q(-1, 2))}) {
                json pr{{"m", p.m}, {"k", k}, {"lambda", jv(lam)}};
                std::string tag = mname + "/k=" + pad(k) + "/lambda=" + jv(lam).get<std::string>();
                R.add("s-automorphism/theta/" + tag, pr, [=] { return verdict(verify_s_automorphism(s_theta(p, lam))); });
                R.add("s-automorphism/psi/" + tag, pr, [=] { return verdict(verify_s_automorphism(s_psi(p, k, lam))); });
                R.add("s-automorphism/phi/" + tag, pr, [=] { return verdict(verify_s_automorphism(s_phi(p, k, lam))); });
                R.add("correspondence/" + tag, pr, [=] { return verdict(rho_correspondence_check(p, k, lam)); });
            }
    }
    for (int n = 0; n <= c.n; ++n)
        R.add("corner-diagonal-words/n=" + pad(n), json{{"n", n}},
              [=] { return identity_outcome(corner_diagonal_check(n, c.tau0, c.tau1)); });
    for (int k = 1; k <= c.k; ++k)
        for (Q lam : {Q(1), canon(Q(2, 5))}) {
            json pr{{"k", k}, {"lambda", jv(lam)}};
            std::string tag = "/k=" + pad(k) + "/lambda=" + jv(lam).get<std::string>();
            R.add("psi-image/minus-k-lambda" + tag, pr,
                  [=] { return verdict(psi_image_identity(p2, k, lam, -Q(k) * lam)); });
            R.add("psi-image/plus-lambda-rejected" + tag, pr,
                  [=] { return verdict(!psi_image_identity(p2, k, lam, lam)); });
        }
    R.add("hscale/m=2/valid", json{{"c", {"2/1", "3/1"}}},
          [=] { return verdict(verify_s_automorphism(s_hscale(p2, {Q(2), Q(3)}, {canon(Q(1, 3)), canon(Q(1, 2))}))); });
    R.add("hscale/m=2/invalid", json{{"c", {"2/1", "3/1"}}},
          [=] { return verdict(!verify_s_automorphism(s_hscale(p2, {Q(2), Q(3)}, {Q(2), Q(3)}))); });
    std::vector<Q> c3{Q(2), Q(3), Q(5)};
    R.add("hscale/m=3/valid", json{{"c", {"2/1", "3/1", "5/1"}}, {"d", "1/c_{i-1}"}}, [=] {
        return verdict(verify_s_automorphism(s_hscale(p3, c3, {Q(1) / c3[2], Q(1) / c3[0], Q(1) / c3[1]})));
    });
    R.add("hscale/m=3/invalid", json{{"c", {"2/1", "3/1", "5/1"}}, {"d", "1/c_{i+1}"}}, [=] {
        return verdict(!verify_s_automorphism(s_hscale(p3, c3, {Q(1) / c3[1], Q(1) / c3[2], Q(1) / c3[0]})));
    });
    R.add("hscale/unit-product-trivial", json{{"c", {"2/1", "1/2"}}}, [=] {
        std::vector<Q> cc{Q(2), canon(Q(1, 2))};
        return verdict(hscale_trivial_on_corner(p2, cc, {Q(1) / cc[1], Q(1) / cc[0]}));
    });
    R.add("hscale/non-unit-product-nontrivial", json{{"c", {"2/1", "3/1"}}}, [=] {
        std::vector<Q> cc{Q(2), Q(3)};
        return verdict(!hscale_trivial_on_corner(p2, cc, {Q(1) / cc[1], Q(1) / cc[0]}));
    });
}

// ---------------------------------------------------------------- endomorphism rings

inline std::optional<QPointQ> constructed_for(const IdealLabel& L, const Q& t0, const Q& t1) {
    if (L.k < 1 || L.n < L.k * L.k) return std::nullopt;
    if (L.family == Family::Rect) return fixed_point_rect(L.n, L.k, t0, t1);
    if (L.family == Family::Swapped) return fixed_point_swapped(L.n, L.k, t0, t1);
    return std::nullopt;
}

inline void endo(Recorder& R, const Ctx& c) {
    Q t0 = c.tau0, t1 = c.tau1;
    for (auto& L : label_grid(c.k, c.n)) {
        std::string id = label_id(L);
        json pr = label_params(L);
        auto P = std::make_shared<FractionalIdeal>(ideal_of(L, t0, t1));
        auto pt = constructed_for(L, t0, t1);
        R.add("omega-ideal/" + id, pr, [=] {
            if (!pt) return skipped("no constructed point for this family");
            auto O = omega_ideal(*pt);
            return verdict(O.N == P->N && O.s == P->s,
                           json{{"omega", {{"N", O.N}, {"s", jv(O.s)}}}, {"label", {{"N", P->N}, {"s", jv(P->s)}}}});
        });
        if (L.k >= 1) {
            R.add("key-identity/closed-kappa/" + id, pr, [=] {
                auto r = key_identity_closed(L, t0, t1);
                return verdict(r.pass, json{{"lhs", jv(r.lhs)}, {"rhs", jv(r.rhs)}});
            });
            R.add("key-identity/point-kappa/" + id, pr, [=] {
                if (!pt) return skipped("no constructed point for this family");
                auto r = key_identity(*pt);
                return verdict(r.pass, json{{"lhs", jv(r.lhs)}, {"rhs", jv(r.rhs)}});
            });
        }
        R.add("closure/" + id, pr, [=] {
            EndoTable E = endo_table(*P, -8, 8);
            if (!(E.at(0).gen == RatFunc(Poly(Q(1))))) return verdict(false, json{{"E0", jv(E.at(0).gen)}});
            for (int s = -4; s <= 4; ++s)
                for (int t = -4; t <= 4; ++t) {
                    RMono pr2 = rmul(P->v, {s, E.at(s).gen}, {t, E.at(t).gen});
                    if (!(pr2.r / E.at(s + t).gen).is_poly())
                        return verdict(false, json{{"s", s}, {"t", t}, {"product", jv(pr2.r)},
                                                   {"component", jv(E.at(s + t).gen)}});
                }
            return Outcome{};
        });
        R.add("certificate/" + id, pr, [=] {
            EndoTable E = endo_table(*P, -1, 1);
            auto prof = endo_profile(E);
            bool trivial = L.n == 0 && L.k == 0 && L.eps == 0;
            bool cert = nontriviality_certificate(prof);
            json w{{"profile", {prof.at(-1), prof.at(0), prof.at(1)}}, {"expected", !trivial}};
            return verdict(cert == !trivial, w);
        });
    }
    for (int k = 1; k <= std::max(3, c.k); ++k)
        for (int eps = 0; eps <= 1; ++eps) {
            IdealLabel L = recognition_label(k, eps);
            json pr = label_params(L);
            R.add("recognition/k=" + pad(k) + "/eps=" + std::to_string(eps), pr, [=] {
                FractionalIdeal P = ideal_of(L, t0, t1);
                auto w = recognize_gwa(P.v, endo_table(P, -6, 6));
                Poly expect = expected_endo_w(k, eps, t0, t1);
                if (!w) return verdict(false, json{{"error", "components are not powers of a' and b'"}});
                bool ok = equal_up_to_scalar_shift(*w, expect) && !equal_up_to_scalar_shift(*w, P.v);
                return verdict(ok, json{{"w", jv(*w)}, {"expected", jv(expect)}, {"v", jv(P.v)}});
            });
        }
}

inline void endo_crosscheck(Recorder& R, const Ctx& c) {
    for (auto& L : label_grid(c.k, c.n))
        for (SReading rd : {SReading::Literal, SReading::IdealGenerator}) {
            std::string rname = rd == SReading::Literal ? "literal" : "ideal-generator";
            json pr = label_params(L);
            pr["reading"] = rname;
            pr["tmax"] = 8;
            R.add(rname + "/" + label_id(L), pr, [=] {
                auto r = qv::endo_crosscheck(L, c.tau0, c.tau1, rd, 8);
                if (r.agree()) return Outcome{};
                auto* w = r.witness();
                json ts = json::array();
                for (auto& d : r.mismatches) ts.push_back(d.t);
                return Outcome{Status::Discrepancy, json{{"n", L.n}, {"k", L.k}, {"eps", L.eps}, {"t", w->t},
                                                         {"definitional", jv(w->definitional)},
                                                         {"closed_form", jv(w->closed)},
                                                         {"mismatched_t", ts}}};
            });
        }
}

// ---------------------------------------------------------------- flexibility

inline std::vector<Q> random_coords(std::mt19937_64& rng, int n) {
    std::vector<Q> out;
    for (int i = 0; i < n; ++i)
        out.push_back(canon(Q(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3))));
    return out;
}

struct FlexPoint {
    std::string id;
    json params;
    std::optional<QPointQ> point;
};

inline std::vector<FlexPoint> flex_points(const Ctx& c) {
    std::vector<FlexPoint> out;
    Q t0 = c.tau0, t1 = c.tau1;
    auto dims_json = [](const std::vector<int>& d, int frame) { return json{{"dims", d}, {"frame", frame}}; };
    for (int k = 1; k <= c.k; ++k)
        for (int n = k * k; n <= k * k + 3; ++n) {
            PointSpec r{Family::Rect, n, k}, s{Family::Swapped, n, k};
            out.push_back({r.id(), r.params(), build_point(r, t0, t1)});
            out.push_back({s.id(), s.params(), build_point(s, t0, t1)});
        }
    auto searched = [&](const std::string& name, std::vector<int> dims, int frame) {
        if (dims.size() == 2 && variety_dimension(dims, frame) > 6) return;
        std::vector<Q> tau = dims.size() == 1 ? std::vector<Q>{t0} : std::vector<Q>{t0, t1};
        auto r = fixed_point_search(dims, frame, tau, c.seed);
        std::string id = name + "/dims=";
        for (int d : dims) id += pad(d);
        id += "/frame=" + std::to_string(frame);
        out.push_back({id, dims_json(dims, frame), r.point});
    };
    for (int n = 2; n <= 5; ++n) {
        searched("ascending", {n - 1, n}, 0);
        searched("ascending-swapped", {n, n - 1}, 1);
    }
    for (int n = 1; n <= 3; ++n) {
        searched("diagonal", {n, n}, 0);
        searched("diagonal", {n, n}, 1);
    }
    for (int n = 1; n <= c.n; ++n) searched("calogero-moser", {n}, 0);
    return out;
}

inline void flex(Recorder& R, const Ctx& c) {
    auto rng = c.rng();
    auto span_outcome = [](const QPointQ& p) {
        auto r = span_check(p);
        return verdict(r.pass, json{{"ambient", r.ambient}, {"dmu_rank", r.dmu_rank}, {"gauge_rank", r.gauge_rank},
                                    {"tangent_dim", r.tangent_dim}, {"gradient_rank", r.gradient_rank},
                                    {"expected", r.expected}});
    };
    for (auto& fp : flex_points(c)) {
        auto base = std::make_shared<std::optional<QPointQ>>(fp.point);
        R.add("span/" + fp.id + "/fixed", fp.params, [=] {
            if (!*base) return verdict(false, json{{"error", "no fixed point found"}});
            return span_outcome(**base);
        });
        int kmax = (*base && (*base)->m == 2) ? 2 : 1;
        for (int i = 0; i < 5; ++i) {
            auto word = random_word(rng, 3, kmax);
            json pr = fp.params;
            pr["word"] = word_label(word);
            R.add("span/" + fp.id + "/orbit-" + std::to_string(i), pr, [=] {
                if (!*base) return verdict(false, json{{"error", "no fixed point found"}});
                auto p = apply_generators(word, **base);
                if (!on_variety(p)) return verdict(false, json{{"error", "orbit point left the variety"}});
                return span_outcome(p);
            });
        }
    }
    for (int n = 1; n <= c.n; ++n) {
        std::vector<Q> xs, ps;
        for (int i = 0; i < n; ++i) {
            xs.push_back(Q(i + 1));
            ps.push_back(canon(Q(2 * i - 1, 3)));
        }
        auto p = calogero_point(xs, ps, c.tau0);
        R.add("span/calogero-moser-diagonal/n=" + pad(n), json{{"n", n}}, [=] { return span_outcome(p); });
    }
    std::vector<std::pair<std::string, QPointQ>> sym_points{
        {"rect/n=03/k=01", fixed_point_rect(3, 1, c.tau0, c.tau1)},
        {"swapped/n=03/k=01", fixed_point_swapped(3, 1, c.tau0, c.tau1)},
        {"rect/n=05/k=02", fixed_point_rect(5, 2, c.tau0, c.tau1)},
        {"calogero-moser/n=03", calogero_point({Q(1), Q(2), Q(3)}, {Q(0), Q(1), Q(-1)}, c.tau0)}};
    {
        auto w = random_word(rng, 3);
        sym_points.push_back({"rect/n=03/k=01/orbit", apply_generators(w, fixed_point_rect(3, 1, c.tau0, c.tau1))});
    }
    for (auto& [pid, p] : sym_points) {
        auto t1 = unpack(p, random_coords(rng, ambient_dim(p)));
        auto t2 = unpack(p, random_coords(rng, ambient_dim(p)));
        for (GenKind kind : {GenKind::Theta, GenKind::Psi, GenKind::Phi})
            for (int k = 1; k <= 2; ++k) {
                Generator g{kind, k, canon(Q(-3, 2))};
                R.add("symplectic/" + pid + "/" + g.label(), json{{"point", pid}, {"generator", g.label()}},
                      [=] { return verdict(symplectic_check(p, g, t1, t2), json{{"omega", jv(omega(t1, t2))}}); });
            }
        R.add("symplectic/" + pid + "/negative-scale-x", json{{"point", pid}, {"map", "X -> 2X"}}, [=] {
            if (omega(t1, t2) == 0) return skipped("tangent pair is omega-isotropic");
            return verdict(!symplectic_check(p, scale_x_map(Q(2)), t1, t2));
        });
    }
    std::vector<std::pair<std::string, QPointQ>> ham_points{
        {"rect/n=02/k=01", fixed_point_rect(2, 1, c.tau0, c.tau1)},
        {"calogero-moser/n=02", calogero_point({Q(1), Q(2)}, {canon(Q(-1, 3)), canon(Q(1, 3))}, c.tau0)}};
    {
        auto w = random_word(rng, 2);
        ham_points.push_back({"rect/n=03/k=01/orbit", apply_generators(w, fixed_point_rect(3, 1, c.tau0, c.tau1))});
    }
    for (auto& [pid, p] : ham_points)
        for (Q a : {Q(0), Q(1), canon(Q(-1, 2))})
            for (int n1 = 1; n1 <= 2; ++n1)
                for (int n2 = 1; n2 <= 2; ++n2)
                    R.add("hamiltonian/" + pid + "/a=" + jv(a).get<std::string>() + "/n1=" + std::to_string(n1) +
                              "/n2=" + std::to_string(n2),
                          json{{"point", pid}, {"a", jv(a)}, {"n1", n1}, {"n2", n2}},
                          [=] { return verdict(hamiltonian_flow_check(p, a, n1, n2)); });
}

}  // namespace suites

inline const std::vector<SuiteDef>& suite_table() {
    static const std::vector<SuiteDef> t{
        {"appendix", {8, 2, 12}, std::nullopt, std::nullopt, suites::appendix},
        {"index-sets", {50, 1, 400}, std::nullopt, std::nullopt, suites::index_sets},
        {"fixed-points", {5, 1, 6}, Bound{12, 1, 20}, std::nullopt, suites::fixed_points},
        {"kappa", {4, 1, 5}, Bound{12, 1, 16}, Bound{6, 0, 10}, suites::kappa},
        {"gwa", {3, 1, 5}, std::nullopt, std::nullopt, suites::gwa},
        {"crossed", {2, 1, 4}, Bound{10, 0, 16}, std::nullopt, suites::crossed},
        {"endo", {2, 1, 3}, Bound{6, 0, 9}, std::nullopt, suites::endo},
        {"endo-crosscheck", {2, 0, 3}, Bound{6, 0, 9}, std::nullopt, suites::endo_crosscheck},
        {"flex", {2, 1, 3}, Bound{4, 1, 5}, std::nullopt, suites::flex},
    };
    return t;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto& s : suite_table()) out.push_back(s.name);
    return out;
}

inline std::vector<const SuiteDef*> select_suites(const std::vector<std::string>& names) {
    std::vector<const SuiteDef*> out;
    std::set<std::string> seen;
    for (auto& nm : names) {
        bool all = nm == "all", hit = false;
        for (auto& s : suite_table())
            if (all || s.name == nm) {
                hit = true;
                if (seen.insert(s.name).second) out.push_back(&s);
            }
        if (!hit) throw std::invalid_argument("unknown suite: " + nm);
    }
    return out;
}

inline int resolve(const std::string& suite, const char* flag, const Bound& b, const std::optional<int>& given) {
    int v = given.value_or(b.def);
    if (v < b.min || v > b.cap)
        throw std::invalid_argument(std::string("--") + flag + " " + std::to_string(v) + " outside [" +
                                    std::to_string(b.min) + ", " + std::to_string(b.cap) + "] for suite " + suite);
    return v;
}

struct RunResult {
    json config;
    std::vector<CaseRecord> records;
    int exit_code() const { return summarize(records).fail ? 1 : 0; }
};

// throws std::invalid_argument for usage errors
inline RunResult run(const RunConfig& cfg) {
    if (cfg.tau0 + cfg.tau1 == 0) throw std::invalid_argument("tau0 + tau1 must be nonzero");
    auto sel = select_suites(cfg.suites);
    std::vector<Ctx> ctxs;
    json bounds = json::object();
    for (auto* s : sel) {
        Ctx c;
        c.k = resolve(s->name, "kmax", s->k, cfg.kmax);
        c.n = s->n ? resolve(s->name, "nmax", *s->n, cfg.nmax) : 0;
        c.l = s->l ? resolve(s->name, "lmax", *s->l, cfg.lmax) : 0;
        c.tau0 = canon(cfg.tau0);
        c.tau1 = canon(cfg.tau1);
        c.symbolic = cfg.symbolic;
        c.seed = cfg.seed;
        c.ordinal = static_cast<int>(s - suite_table().data());
        json b{{"kmax", c.k}};
        if (s->n) b["nmax"] = c.n;
        if (s->l) b["lmax"] = c.l;
        bounds[s->name] = b;
        ctxs.push_back(c);
    }
    RunResult res;
    json names = json::array();
    for (auto* s : sel) names.push_back(s->name);
    res.config = json{{"suites", names},     {"tau0", jv(cfg.tau0)},  {"tau1", jv(cfg.tau1)},
                      {"mode", suites::mode_name(cfg.symbolic)}, {"seed", cfg.seed}, {"bounds", bounds}};
    for (size_t i = 0; i < sel.size(); ++i) {
        Recorder R(sel[i]->name);
        sel[i]->run(R, ctxs[i]);
        for (auto& r : R.records()) res.records.push_back(std::move(r));
    }
    sort_records(res.records);
    return res;
}

}  // namespace qv
