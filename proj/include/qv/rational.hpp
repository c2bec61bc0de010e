#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qv {

using Q = mpq_class;
using Z = mpz_class;

inline Q canon(Q q) {
    q.canonicalize();
    return q;
}

inline std::string to_str(const Q& q) {
    // always "p/q" so reports are uniform
    Q c = canon(q);
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Q parse_q(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline Q factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Q(r);
}

inline Q binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Q(0);
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(r);
}

inline Q qpow(const Q& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to negative power");
        return qpow(Q(1) / base, -e);
    }
    Q r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace qv
