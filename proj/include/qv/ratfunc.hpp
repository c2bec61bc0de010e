#pragma once

#include "poly.hpp"

namespace qv {

// num/den with den monic and gcd(num, den) = 1
class RatFunc {
public:
    RatFunc() : num_(Q(0)), den_(Q(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly(Q(1), p.var())) {}
    RatFunc(const Poly& n, const Poly& d) : num_(n), den_(d) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.deg() == 0; }
    Poly as_poly() const {
        if (!is_poly()) throw std::domain_error("rational function is not a polynomial");
        return num_;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc shift(const Q& s) const { return RatFunc(num_.shift(s), den_.shift(s)); }
    RatFunc monic() const { return RatFunc(num_.monic(), den_); }

    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Q(1), den_.var());
            return;
        }
        Poly g = poly_gcd(num_, den_);
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
        Q l = den_.lead();
        num_ = (Q(1) / l) * num_;
        den_ = (Q(1) / l) * den_;
    }
};

// f1 C[h] ∩ f2 C[h] for nonzero rational f1, f2; returned monic
inline RatFunc intersect_modules(const RatFunc& f1, const RatFunc& f2) {
    return RatFunc(poly_lcm(f1.num(), f2.num()), poly_gcd(f1.den(), f2.den())).monic();
}

// f1 C[h] + f2 C[h]
inline RatFunc sum_modules(const RatFunc& f1, const RatFunc& f2) {
    if (f1.is_zero()) return f2.monic();
    if (f2.is_zero()) return f1.monic();
    return RatFunc(poly_gcd(f1.num(), f2.num()), poly_lcm(f1.den(), f2.den())).monic();
}

}  // namespace qv
