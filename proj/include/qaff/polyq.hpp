#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaff/series.hpp"

namespace qaff {

// Dense polynomial in a formal variable (z or v) with QRat coefficients.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(const QRat& c) : c_{c} { trim(); }
    explicit PolyQ(std::vector<QRat> c) : c_(std::move(c)) { trim(); }
    static PolyQ variable() { return PolyQ({QRat(0), QRat(1)}); }
    // 1 - c*x, the ubiquitous spectral factor.
    static PolyQ one_minus(const QRat& c) { return PolyQ({QRat(1), -c}); }

    long degree() const { return long(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    QRat coeff(long k) const { return (k >= 0 && k < long(c_.size())) ? c_[size_t(k)] : QRat(); }
    const std::vector<QRat>& coeffs() const { return c_; }

    PolyQ operator-() const {
        PolyQ r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    PolyQ operator+(const PolyQ& o) const {
        std::vector<QRat> c(std::max(c_.size(), o.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < c_.size()) c[k] += c_[k];
            if (k < o.c_.size()) c[k] += o.c_[k];
        }
        return PolyQ(std::move(c));
    }
    PolyQ operator-(const PolyQ& o) const { return *this + (-o); }
    PolyQ operator*(const PolyQ& o) const {
        if (is_zero() || o.is_zero()) return PolyQ();
        std::vector<QRat> c(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
        }
        return PolyQ(std::move(c));
    }
    PolyQ operator*(const QRat& x) const {
        PolyQ r = *this;
        for (auto& y : r.c_) y *= x;
        r.trim();
        return r;
    }
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    // Division with remainder over the field QRat.
    std::pair<PolyQ, PolyQ> divrem(const PolyQ& o) const {
        require(!o.is_zero(), "DivisionByZero", "polynomial division by zero");
        PolyQ rem = *this;
        std::vector<QRat> quot;
        long dg = o.degree();
        QRat lc = o.c_.back().inverse();
        while (!rem.is_zero() && rem.degree() >= dg) {
            long e = rem.degree() - dg;
            QRat f = rem.c_.back() * lc;
            if (long(quot.size()) < e + 1) quot.resize(e + 1);
            quot[size_t(e)] = f;
            for (long j = 0; j <= dg; ++j) rem.c_[size_t(e + j)] -= f * o.c_[size_t(j)];
            rem.trim();
        }
        return {PolyQ(std::move(quot)), rem};
    }

    static PolyQ gcd(PolyQ a, PolyQ b) {
        while (!b.is_zero()) {
            PolyQ r = a.divrem(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a * a.c_.back().inverse(); // monic
        return a;
    }

    QRat eval(const QRat& x) const {
        QRat r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    std::complex<double> eval_num(const std::complex<double>& q0, const std::complex<double>& x0) const {
        std::complex<double> r = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + it->eval(q0);
        return r;
    }

    // Substitute x -> c*x.
    PolyQ scale_variable(const QRat& c) const {
        PolyQ r = *this;
        QRat p(1);
        for (size_t k = 1; k < r.c_.size(); ++k) {
            p *= c;
            r.c_[k] *= p;
        }
        r.trim();
        return r;
    }

    QSeries to_series(const std::string& var, long order) const {
        QSeries s(var, order);
        for (long k = 0; k <= order && k <= degree(); ++k) s.coeff(k) = c_[size_t(k)];
        return s;
    }

    std::string to_latex(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QRat> c_;
};

// Reduced fraction of PolyQ. Canonical form: num/den coprime, and den is
// normalized so that den(0) = 1 when possible, otherwise den is monic.
class RatFun {
public:
    RatFun() : num_(), den_(QRat(1)) {}
    explicit RatFun(const PolyQ& num) : num_(num), den_(QRat(1)) {}
    RatFun(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        require(!den_.is_zero(), "DivisionByZero", "zero denominator");
        reduce();
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    RatFun operator-(const RatFun& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    RatFun operator*(const RatFun& o) const { return {num_ * o.num_, den_ * o.den_}; }
    RatFun operator/(const RatFun& o) const {
        require(!o.is_zero(), "DivisionByZero", "division by zero rational function");
        return {num_ * o.den_, den_ * o.num_};
    }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun inverse() const {
        require(!is_zero(), "DivisionByZero", "inverse of zero");
        return {den_, num_};
    }
    RatFun scale_variable(const QRat& c) const { return {num_.scale_variable(c), den_.scale_variable(c)}; }

    QSeries to_series(const std::string& var, long order) const {
        require(!den_.coeff(0).is_zero(), "PoleAtOrigin", "rational function has a pole at 0");
        return num_.to_series(var, order) / den_.to_series(var, order);
    }
    std::complex<double> eval_num(const std::complex<double>& q0, const std::complex<double>& x0) const {
        auto d = den_.eval_num(q0, x0);
        require(std::abs(d) > 1e-300, "DenominatorVanishesAtPoint", "rational function pole at evaluation point");
        return num_.eval_num(q0, x0) / d;
    }

    std::string to_latex(const std::string& var) const;

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = PolyQ(QRat(1));
            return;
        }
        PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        QRat c = den_.coeff(0).is_zero() ? den_.coeffs().back() : den_.coeff(0);
        QRat ci = c.inverse();
        num_ = num_ * ci;
        den_ = den_ * ci;
    }

    PolyQ num_, den_;
};

// Pade-style rational reconstruction from a truncated series. Returns the
// unique P/Q with deg <= max_deg matching every available coefficient, or
// nullopt when no such function exists at that bound. Exact linear algebra
// over the QRat field; requires order >= 2*max_deg + 1.
std::optional<RatFun> rational_reconstruct(const QSeries& s, long max_deg);

// Exact solve of A x = b over QRat; nullopt when A is singular.
std::optional<QVec> qmat_solve(QMat a, QVec b);

} // namespace qaff
