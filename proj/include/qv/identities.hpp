#pragma once

#include <string>
#include <vector>

#include "crossed.hpp"
#include "gwa.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace qv {

struct IdentityCase {
    std::string name;
    std::vector<int> params;
    Poly lhs, rhs;
    bool pass = false;
};

inline IdentityCase make_case(std::string name, std::vector<int> params, Poly lhs, Poly rhs) {
    bool ok = lhs == rhs;
    return {std::move(name), std::move(params), std::move(lhs), std::move(rhs), ok};
}

namespace ident {

inline Poly zv() { return Poly::x('z'); }
inline Poly zc(const Q& c) { return Poly(c, 'z'); }
// (z + s)_n
inline Poly pz(long s, int n) {
    if (n < 0) return zc(Q(0));
    return pochhammer_lower(zv() + zc(Q(s)), n);
}
// (x)_n for an integer x
inline Q pint(long x, int n) {
    Q r = 1;
    for (int i = 0; i < n; ++i) r *= Q(x - i);
    return r;
}

}  // namespace ident

// change-of-basis entries with b = 1 and a = z
inline Poly c_entry(int k, int i, int j) {
    using namespace ident;
    if (i > j) return zc(Q(0));
    if (i == j) return zc(Q(1));
    return (Q(1) / factorial(j - i)) * pz(2L * (k - i), j - i);
}

inline Poly d_entry(int k, int i, int j) {
    using namespace ident;
    if (i > j) return zc(Q(0));
    if (i == j) return zc(Q(1));
    Q s = ((j - i) % 2 ? Q(-1) : Q(1)) / factorial(j - i);
    return s * (zv() + zc(Q(2L * (k - i)))) * pz(2L * k - i - j - 1, j - i - 1);
}

// the j-dependent factor of w Y^L X^L v in the eigenbasis, b = 1
inline Poly eigen_factor(int k, int j, int L) {
    using namespace ident;
    int l = L / 2;
    if (L % 2 == 0) return pint(k - j, l) * pz(k - j - 1, l);
    return -pint(k - j, l + 1) * pz(k - j - 1, l);
}

// triple sum over m, i <= j <= m of d_ij c_jm (z + 2(k-m)) times the eigen factor
inline Poly F_bruteforce(int k, int L) {
    using namespace ident;
    Poly tot = zc(Q(0));
    for (int m = 1; m <= k; ++m) {
        Poly wm = zv() + zc(Q(2L * (k - m)));
        for (int i = 1; i <= m; ++i)
            for (int j = i; j <= m; ++j) tot += d_entry(k, i, j) * c_entry(k, j, m) * wm * eigen_factor(k, j, L);
    }
    return tot;
}

// the even sum with d_ij c_jm multiplied out, as displayed
inline Poly F_even_displayed(int k, int l) {
    using namespace ident;
    Poly tot = zc(Q(0));
    for (int m = 2; m <= k; ++m)
        for (int i = 1; i <= m - 1; ++i)
            for (int j = i; j <= m; ++j) {
                Q s = ((j - i) % 2 ? Q(-1) : Q(1)) / (factorial(j - i) * factorial(m - j));
                tot += s * (zv() + zc(Q(2L * (k - m)))) * (zv() + zc(Q(2L * (k - i)))) *
                       pz(2L * k - i - j - 1, m - i - 1) * (pint(k - j, l) * pz(k - j - 1, l));
            }
    for (int m = 1; m <= k; ++m) tot += (zv() + zc(Q(2L * (k - m)))) * pint(k - m, l) * pz(k - m - 1, l);
    return tot;
}

inline Poly F_closed(int k, int L) {
    using namespace ident;
    int l = L / 2;
    if (L % 2 == 0) {
        if (l > k - 1) return zc(Q(0));
        return binom(k + l, 2 * l + 1) * pz(k + l - 1, 2 * l + 1);
    }
    if (l > k - 2) return zc(Q(0));
    return -binom(k + l, 2 * l + 2) * pz(k + l, 2 * l + 2);
}

// alternating sum with z shifted by s
inline Poly H_sum(int k, int l, long s = 0) {
    using namespace ident;
    Poly tot = zc(Q(0));
    for (int j = 0; j <= k; ++j) {
        Q c = (j % 2 ? Q(-1) : Q(1)) * pint(k - j, l) / (factorial(k - j) * factorial(j));
        tot += c * pz(s + k - j - l, k + l);
    }
    return tot;
}

inline Poly H_closed(int k, int l) {
    return (factorial(k + l) / (factorial(2 * l) * factorial(k - l))) * ident::pz(0, 2 * l);
}

// the double sum whose product with (z + 2k) is F_{k+1} - F_k
inline Poly Hhat(int k, int l) {
    using namespace ident;
    Poly tot = zc(Q(0));
    for (int m = 1; m <= k; ++m)
        for (int j = 0; j <= m; ++j) {
            Q c = (j % 2 ? Q(-1) : Q(1)) / (factorial(j) * factorial(m - j));
            tot += c * (zv() + zc(Q(2L * (k - m)))) * pz(2L * k - j - 1, m - 1) * pint(k - j, l) * pz(k - j - 1, l);
        }
    return tot + pint(k, l) * pz(k - 1, l);
}

// the middle line of the telescoped form with (k-j)! where (k-j)_l belongs
inline Poly Hhat_factorial_variant(int k, int l) {
    using namespace ident;
    Poly tot = zc(Q(0));
    for (int m = 1; m <= k; ++m)
        for (int j = 0; j <= m; ++j) {
            Q c = (j % 2 ? Q(-1) : Q(1)) / (factorial(m - j) * factorial(j));
            tot += c * pz(2L * k - j - 1, m) * factorial(k - j) * pz(k - j - 1, l);
        }
    for (int m = 1; m <= k; ++m)
        for (int j = 0; j <= m - 1; ++j) {
            Q c = (j % 2 ? Q(-1) : Q(1)) / (factorial(m - j - 1) * factorial(j));
            tot -= c * pz(2L * k - j - 1, m - 1) * pint(k - j, l) * pz(k - j - 1, l);
        }
    return tot + pint(k, l) * pz(k - 1, l);
}

inline Poly delta_power(Poly p, int i) {
    for (int r = 0; r < i; ++r) p = finite_difference(p);
    return p;
}

inline IdentityCase F_check(int k, int L) {
    return make_case(L % 2 ? "F_odd" : "F_even", {k, L}, F_bruteforce(k, L), F_closed(k, L));
}

inline IdentityCase H_check(int k, int l) { return make_case("H", {k, l}, H_sum(k, l), H_closed(k, l)); }

inline IdentityCase Fhat_recursion_check(int k, int l) {
    using namespace ident;
    return make_case("Fhat_relation", {k, l}, F_bruteforce(k + 1, 2 * l) - F_bruteforce(k, 2 * l),
                     (zv() + zc(Q(2L * k))) * Hhat(k, l));
}

inline IdentityCase Hhat_shift_check(int k, int l) {
    return make_case("Fhat_relation", {k, l, 1}, Hhat(k, l), H_sum(k, l, k + l - 1));
}

// the finite-difference claims: vanishing at 0 below 2l, constant at 2l, zero above
inline bool H_difference_claims(int k, int l) {
    Poly H = H_sum(k, l);
    for (int i = 0; i < 2 * l; ++i)
        if (delta_power(H, i).eval(Q(0)) != 0) return false;
    if (delta_power(H, 2 * l) != Poly(factorial(k + l) / factorial(k - l), 'z')) return false;
    return delta_power(H, 2 * l + 1).is_zero();
}

inline IdentityCase delta_pochhammer_check(long s, int n) {
    using namespace ident;
    return make_case("delta_pochhammer", {static_cast<int>(s), n}, finite_difference(pz(s, n)),
                     Q(n) * pz(s, n - 1));
}

// phi(e y^n x^n) computed in the crossed product against the closed form
inline IdentityCase corner_diagonal_check(int n, const Q& tau0, const Q& tau1) {
    PhiMap phi(CrossedParams({tau0, tau1}));
    return make_case("corner_f_n", {n}, phi.f(n), f_closed_form(n, tau0, tau1));
}

// change of basis matrices and the action of Y_0 X_0 on the f-tilde basis (row i = image of f~_i)
inline MatP basis_change_C(int k) {
    MatP C(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) C(i - 1, j - 1) = c_entry(k, i, j);
    return C;
}
inline MatP basis_change_Cinv(int k) {
    MatP D(k, k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) D(i - 1, j - 1) = d_entry(k, i, j);
    return D;
}
inline MatP y0x0_action(int k) {
    using namespace ident;
    MatP A(k, k);
    for (int i = 1; i <= k; ++i) {
        A(i - 1, i - 1) = zc(Q(-(k - i)));
        for (int s = i + 1; s <= k; ++s) A(i - 1, s - 1) = -(zv() + zc(Q(2L * (k - i))));
    }
    return A;
}
inline MatP eigen_diagonal(int k) {
    MatP D(k, k);
    for (int i = 1; i <= k; ++i) D(i - 1, i - 1) = Poly(Q(-(k - i)), 'z');
    return D;
}

}  // namespace qv
