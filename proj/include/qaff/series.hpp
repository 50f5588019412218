#pragma once

#include <string>
#include <vector>

#include "qaff/qrat.hpp"

namespace qaff {

// Truncated formal power series in one named variable over QRat.
// A series of order K stores exactly K+1 coefficients. Binary operations
// follow the min-K rule: the result is truncated to the smaller order and
// never silently extended. Mixing distinct variable names is an error.
class QSeries {
public:
    QSeries() : var_("z"), c_(1) {}
    QSeries(std::string var, long order) : var_(std::move(var)), c_(order + 1) {
        require(order >= 0, "InvalidArgument", "series order must be >= 0");
    }
    static QSeries constant(const QRat& x, std::string var, long order) {
        QSeries s(std::move(var), order);
        s.c_[0] = x;
        return s;
    }
    static QSeries variable(std::string var, long order) {
        QSeries s(std::move(var), order);
        if (order >= 1) s.c_[1] = QRat(1);
        return s;
    }

    const std::string& var() const { return var_; }
    long order() const { return long(c_.size()) - 1; }
    const QRat& coeff(long k) const { return c_[size_t(k)]; }
    QRat& coeff(long k) { return c_[size_t(k)]; }
    const std::vector<QRat>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    QSeries truncated(long order) const {
        require(order <= this->order(), "InvalidArgument", "cannot extend a truncated series");
        QSeries r(var_, order);
        for (long k = 0; k <= order; ++k) r.c_[k] = c_[k];
        return r;
    }

    QSeries operator-() const {
        QSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    QSeries operator+(const QSeries& o) const {
        long K = common_order(o);
        QSeries r(var_, K);
        for (long k = 0; k <= K; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }
    QSeries operator-(const QSeries& o) const {
        long K = common_order(o);
        QSeries r(var_, K);
        for (long k = 0; k <= K; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }
    QSeries operator*(const QSeries& o) const {
        long K = common_order(o);
        QSeries r(var_, K);
        for (long i = 0; i <= K; ++i) {
            if (c_[i].is_zero()) continue;
            for (long j = 0; i + j <= K; ++j) {
                if (o.c_[j].is_zero()) continue;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }
    QSeries operator*(const QRat& x) const {
        QSeries r = *this;
        for (auto& y : r.c_) y *= x;
        return r;
    }
    QSeries operator/(const QSeries& o) const { return *this * o.inverse(); }
    bool operator==(const QSeries& o) const { return var_ == o.var_ && c_ == o.c_; }

    QSeries inverse() const {
        require(!c_[0].is_zero(), "DivisionByZero", "series with zero constant term is not invertible");
        long K = order();
        QSeries r(var_, K);
        QRat u = c_[0].inverse();
        r.c_[0] = u;
        for (long k = 1; k <= K; ++k) {
            QRat s;
            for (long j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
            r.c_[k] = -u * s;
        }
        return r;
    }

    QSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QSeries r = constant(QRat(1), var_, order());
        QSeries base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // Substitute var -> c * var.
    QSeries scale_variable(const QRat& c) const {
        QSeries r = *this;
        QRat p(1);
        for (long k = 1; k <= order(); ++k) {
            p *= c;
            r.c_[k] *= p;
        }
        return r;
    }

    std::vector<std::complex<double>> eval_coeffs(const std::complex<double>& q0) const {
        std::vector<std::complex<double>> v(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].eval(q0);
        return v;
    }

private:
    long common_order(const QSeries& o) const {
        require(var_ == o.var_, "VariableMismatch", "series in " + var_ + " combined with series in " + o.var_);
        return std::min(order(), o.order());
    }

    std::string var_;
    std::vector<QRat> c_;
};

inline QSeries operator*(const QRat& x, const QSeries& s) { return s * x; }

// exp of a series with zero constant term, to the same truncation order.
QSeries series_exp(const QSeries& s);
// log of a series with constant term one; inverse of series_exp.
QSeries series_log(const QSeries& s);

} // namespace qaff
