#pragma once

#include <complex>
#include <map>
#include <string>
#include <gmpxx.h>

#include "qaff/error.hpp"

namespace qaff {

// Sparse univariate polynomial with arbitrary-precision integer coefficients.
// Exponents are nonnegative; zero coefficients are never stored, so the zero
// polynomial is the empty term map.
class ZPoly {
public:
    using Terms = std::map<long, mpz_class>;

    ZPoly() = default;
    explicit ZPoly(const mpz_class& c) {
        if (c != 0) terms_[0] = c;
    }
    static ZPoly monomial(long e, const mpz_class& c = 1) {
        ZPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    long low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    const mpz_class& leading_coeff() const {
        static const mpz_class zero = 0;
        return terms_.empty() ? zero : terms_.rbegin()->second;
    }
    mpz_class coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(long e, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ZPoly operator-() const {
        ZPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    ZPoly operator+(const ZPoly& o) const {
        ZPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    ZPoly operator-(const ZPoly& o) const {
        ZPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    ZPoly operator*(const ZPoly& o) const {
        ZPoly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    bool operator==(const ZPoly& o) const { return terms_ == o.terms_; }

    // Multiply by c * t^e.
    ZPoly shifted_scaled(long e, const mpz_class& c) const {
        ZPoly r;
        if (c == 0) return r;
        for (const auto& [e1, c1] : terms_) r.terms_[e1 + e] = c1 * c;
        return r;
    }

    // Substitute t -> t^k, k >= 1.
    ZPoly stretch(long k) const {
        ZPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
        return r;
    }
    // Inverse of stretch; every exponent must be divisible by k.
    ZPoly contract(long k) const {
        ZPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e / k] = c;
        return r;
    }
    // gcd of all exponents (0 for constants).
    long exponent_gcd() const {
        long g = 0;
        for (const auto& [e, c] : terms_) g = std::gcd(g, e);
        return g;
    }

    // Positive gcd of coefficients; 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    void divexact_int(const mpz_class& d) {
        for (auto& [e, c] : terms_) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
            c = q;
        }
    }

    // Exact polynomial division; requires that o divides *this.
    ZPoly divexact(const ZPoly& o) const {
        require(!o.is_zero(), "DivisionByZero", "polynomial division by zero");
        ZPoly rem = *this, quot;
        const long dg = o.degree();
        const mpz_class& lc = o.leading_coeff();
        while (!rem.is_zero() && rem.degree() >= dg) {
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), rem.leading_coeff().get_mpz_t(), lc.get_mpz_t());
            long e = rem.degree() - dg;
            quot.add_term(e, q);
            rem = rem - o.shifted_scaled(e, q);
        }
        require(rem.is_zero(), "InternalError", "divexact with nonzero remainder");
        return quot;
    }

    // Primitive pseudo-remainder of *this by o.
    ZPoly prem(const ZPoly& o) const {
        ZPoly rem = *this;
        const long dg = o.degree();
        const mpz_class& lc = o.leading_coeff();
        while (!rem.is_zero() && rem.degree() >= dg) {
            mpz_class c = rem.leading_coeff();
            long e = rem.degree() - dg;
            ZPoly scaled;
            for (const auto& [e1, c1] : rem.terms_) scaled.terms_[e1] = c1 * lc;
            rem = scaled - o.shifted_scaled(e, c);
        }
        mpz_class ct = rem.content();
        if (ct > 1) rem.divexact_int(ct);
        return rem;
    }

    // Primitive gcd with positive leading coefficient, times the coefficient
    // content gcd.
    static ZPoly gcd(ZPoly a, ZPoly b) {
        if (a.is_zero()) return normal_sign(b);
        if (b.is_zero()) return normal_sign(a);
        mpz_class ca = a.content(), cb = b.content(), cg;
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        // Monomial operands only share a power of t and the content.
        if (a.is_monomial() || b.is_monomial()) {
            long e = std::min(a.low_degree(), b.low_degree());
            return ZPoly::monomial(e, cg);
        }
        a.divexact_int(ca);
        b.divexact_int(cb);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            ZPoly r = a.prem(b);
            a = std::move(b);
            b = std::move(r);
        }
        a = normal_sign(a);
        for (auto& [e, c] : a.terms_) c *= cg;
        ZPoly r;
        r.terms_ = std::move(a.terms_);
        return r;
    }

    std::complex<double> eval(const std::complex<double>& t) const {
        std::complex<double> s = 0.0;
        for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(t, double(e));
        return s;
    }
    // Exact evaluation at t = 1 (coefficient sum).
    mpz_class eval_one() const {
        mpz_class s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

private:
    static ZPoly normal_sign(ZPoly p) {
        if (!p.is_zero() && p.leading_coeff() < 0) return -p;
        return p;
    }

    Terms terms_;
};

} // namespace qaff
