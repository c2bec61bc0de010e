#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace qv {

// which family of fixed points a kappa series belongs to
enum class Family {
    Rect,        // (n-k, n) framed at vertex 1, n >= k^2
    Swapped,     // (n, n-k) framed at vertex 0, n >= k^2
    Ascending,   // (n-k, n) framed at vertex 0, n >= k^2 + k
    AscSwapped,  // (n, n-k) framed at vertex 1, n >= k^2 + k
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Rect: return "rect";
        case Family::Swapped: return "swapped";
        case Family::Ascending: return "ascending";
        case Family::AscSwapped: return "asc-swapped";
    }
    return "?";
}

// s tau_0 + (s+1) tau_1 = s b + a
template <class T>
T kfac(long s, const T& a, const T& b) {
    return Scalar<T>::from(Q(s)) * b + a;
}

// A_1..A_{2k-1} for the (k^2-k, k^2) point
template <class T>
std::vector<T> kappa_square(int k, const T& a, const T& b) {
    std::vector<T> A;
    for (int L = 1; L <= 2 * k - 1; ++L) {
        T p = Scalar<T>::one();
        if (L % 2 == 1) {
            int l = (L + 1) / 2;
            for (int r = 1; r <= 2 * l - 1; ++r) p = p * kfac(k + l - r - 1, a, b);
            A.push_back(Scalar<T>::from(-binom(k + l - 1, 2 * l - 1)) * p);
        } else {
            int l = L / 2;
            for (int r = 0; r <= 2 * l - 1; ++r) p = p * kfac(k + l - r - 1, a, b);
            A.push_back(Scalar<T>::from(binom(k + l - 1, 2 * l)) * p);
        }
    }
    return A;
}

// A_1..A_{2k-1} for the padded (n-k, n) point
template <class T>
std::vector<T> kappa_rect(int n, int k, const T& a, const T& b) {
    if (k < 1 || n < k * k) throw std::invalid_argument("need n >= k^2 >= 1");
    Q d(n - k * k);
    std::vector<T> A;
    for (int L = 1; L <= 2 * k - 1; ++L) {
        T p = Scalar<T>::one();
        if (L % 2 == 1) {
            int l = (L - 1) / 2;
            for (int r = 2; r <= 2 * l + 1; ++r) p = p * kfac(k + l - r, a, b);
            T last = kfac(k + l - 1, a, b) + Scalar<T>::from(d * Q(2 * l + 1) / Q(k + l)) * b;
            A.push_back(Scalar<T>::from(-binom(k + l, 2 * l + 1)) * p * last);
        } else {
            int l = (L - 2) / 2;
            for (int r = 1; r <= 2 * l + 1; ++r) p = p * kfac(k + l - r, a, b);
            T last = kfac(k + l, a, b) + Scalar<T>::from(d * Q(2 * l + 2) / Q(k + l)) * b;
            A.push_back(Scalar<T>::from(binom(k + l, 2 * l + 2)) * p * last);
        }
    }
    return A;
}

// B_1..B_{2k} for the (n-k, n) point framed at vertex 0
template <class T>
std::vector<T> kappa_ascending(int n, int k, const T& a, const T& b) {
    if (k < 0 || n < k * k + k) throw std::invalid_argument("need n >= k^2 + k");
    Q d(n - k * k - k);
    std::vector<T> B;
    for (int L = 1; L <= 2 * k; ++L) {
        T p = Scalar<T>::one();
        if (L % 2 == 1) {
            int l = (L + 1) / 2;
            for (int r = 2; r <= 2 * l - 1; ++r) p = p * kfac(k + l - r, a, b);
            T last = kfac(k + l - 1, a, b) + Scalar<T>::from(d * Q(2 * l - 1) / Q(k + l - 1)) * b;
            B.push_back(Scalar<T>::from(-binom(k + l - 1, 2 * l - 1)) * p * last);
        } else {
            int l = L / 2;
            for (int r = 1; r <= 2 * l - 1; ++r) p = p * kfac(k + l - r - 1, a, b);
            T last = kfac(k + l - 1, a, b) + Scalar<T>::from(d * Q(2 * l) / Q(k + l)) * b;
            B.push_back(Scalar<T>::from(binom(k + l, 2 * l)) * p * last);
        }
    }
    return B;
}

// closed-form kappa coefficients for a family, with tau given as (tau_0, tau_1)
template <class T>
std::vector<T> kappa_closed_form(int n, int k, Family f, const T& tau0, const T& tau1) {
    T b = tau0 + tau1;
    switch (f) {
        case Family::Rect: return kappa_rect(n, k, tau1, b);
        case Family::Swapped: return kappa_rect(n, k, tau0, b);
        case Family::Ascending: return kappa_ascending(n, k, tau1, b);
        case Family::AscSwapped: return kappa_ascending(n, k, tau0, b);
    }
    throw std::logic_error("unknown family");
}

}  // namespace qv
