#pragma once

#include <complex>
#include <numeric>
#include <string>

#include <Eigen/Core>

#include "qaff/zpoly.hpp"

namespace qaff {

// Element of the field Q(q^{1/L}): a reduced fraction of integer polynomials
// in t = q^{1/L}. The exponent lattice L is dynamic; it is merged on mixed
// arithmetic and contracted back to the least denominator actually present.
//
// Canonical form: num/den coprime, jointly content-free, den leading
// coefficient positive, L minimal. Equality is structural.
class QRat {
public:
    QRat() : num_(), den_(mpz_class(1)), lattice_(1) {}
    QRat(long n) : num_(mpz_class(n)), den_(mpz_class(1)), lattice_(1) {}
    QRat(const mpz_class& n) : num_(n), den_(mpz_class(1)), lattice_(1) {}
    QRat(const mpq_class& r) : num_(r.get_num()), den_(r.get_den()), lattice_(1) {}
    QRat(ZPoly num, ZPoly den, long lattice) : num_(std::move(num)), den_(std::move(den)), lattice_(lattice) {
        require(!den_.is_zero(), "DivisionByZero", "zero denominator in QRat");
        normalize();
    }

    // q itself, and rational powers q^{e}.
    static QRat q() { return q_pow(mpq_class(1)); }
    static QRat q_pow(const mpq_class& e) {
        mpq_class r = e;
        r.canonicalize();
        long den = r.get_den().get_si();
        long num = r.get_num().get_si();
        if (num >= 0) return QRat(ZPoly::monomial(num), ZPoly(mpz_class(1)), den);
        return QRat(ZPoly(mpz_class(1)), ZPoly::monomial(-num), den);
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    long lattice() const { return lattice_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    // True when the value is c * q^e (monomial numerator and denominator).
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    QRat operator-() const {
        QRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QRat operator+(const QRat& o) const {
        QRat a = *this, b = o;
        long L = align(a, b);
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, L);
    }
    QRat operator-(const QRat& o) const {
        QRat a = *this, b = o;
        long L = align(a, b);
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, L);
    }
    QRat operator*(const QRat& o) const {
        if (is_zero() || o.is_zero()) return QRat();
        QRat a = *this, b = o;
        long L = align(a, b);
        return QRat(a.num_ * b.num_, a.den_ * b.den_, L);
    }
    QRat operator/(const QRat& o) const {
        require(!o.is_zero(), "DivisionByZero", "QRat division by zero");
        if (is_zero()) return QRat();
        QRat a = *this, b = o;
        long L = align(a, b);
        return QRat(a.num_ * b.den_, a.den_ * b.num_, L);
    }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }
    bool operator==(const QRat& o) const {
        return lattice_ == o.lattice_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat inverse() const {
        require(!is_zero(), "DivisionByZero", "inverse of zero");
        return QRat(den_, num_, lattice_);
    }
    QRat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QRat r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Substitute q -> q^k, k >= 1 (used to evaluate matrix entries at q^r).
    QRat subs_q_power(long k) const {
        require(k >= 1, "InvalidArgument", "subs_q_power needs k >= 1");
        return QRat(num_.stretch(k), den_.stretch(k), lattice_);
    }

    // Numeric evaluation with the principal branch of q^{1/L}.
    std::complex<double> eval(const std::complex<double>& q0) const {
        std::complex<double> t0 = std::exp(std::log(q0) / double(lattice_));
        std::complex<double> d = den_.eval(t0);
        require(std::abs(d) > 1e-300, "DenominatorVanishesAtPoint", "QRat denominator vanishes at evaluation point");
        return num_.eval(t0) / d;
    }

    // Exact specialization at q = 1 (entries must be regular there, e.g.
    // Laurent polynomials).
    mpq_class eval_one() const {
        mpz_class d = den_.eval_one();
        require(d != 0, "DenominatorVanishesAtPoint", "QRat denominator vanishes at q = 1");
        mpq_class r(num_.eval_one(), d);
        r.canonicalize();
        return r;
    }

    // The rational exponent when the value is exactly +-c*q^e; requires
    // is_monomial().
    mpq_class monomial_exponent() const {
        require(is_monomial(), "InvalidArgument", "not a q-monomial");
        mpq_class e(num_.low_degree() - den_.low_degree(), lattice_);
        e.canonicalize();
        return e;
    }

    std::string to_string() const;
    std::string to_latex() const;

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = ZPoly(mpz_class(1));
            lattice_ = 1;
            return;
        }
        ZPoly g = ZPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long eg = std::gcd(num_.exponent_gcd(), den_.exponent_gcd());
        if (eg == 0) {
            lattice_ = 1;
        } else {
            long c = std::gcd(eg, lattice_);
            if (c > 1) {
                num_ = num_.contract(c);
                den_ = den_.contract(c);
                lattice_ /= c;
            }
        }
    }

    // Rescale both operands onto the common exponent lattice; returns it.
    static long align(QRat& a, QRat& b) {
        if (a.lattice_ == b.lattice_) return a.lattice_;
        long L = std::lcm(a.lattice_, b.lattice_);
        a.num_ = a.num_.stretch(L / a.lattice_);
        a.den_ = a.den_.stretch(L / a.lattice_);
        b.num_ = b.num_.stretch(L / b.lattice_);
        b.den_ = b.den_.stretch(L / b.lattice_);
        a.lattice_ = b.lattice_ = L;
        return L;
    }

    ZPoly num_, den_;
    long lattice_;
};

inline QRat operator*(long n, const QRat& x) { return QRat(n) * x; }
inline QRat operator+(long n, const QRat& x) { return QRat(n) + x; }
inline QRat operator-(long n, const QRat& x) { return QRat(n) - x; }

// q-integer [m]_{q^d} = (q^{dm} - q^{-dm}) / (q^d - q^{-d}), a Laurent
// polynomial in q.
QRat q_int(long m, long d = 1);
QRat q_factorial(long m, long d = 1);
QRat q_binomial(long m, long r, long d = 1);

std::string format_exponent(const mpq_class& e);

// Dense matrices over the exact scalar.
using QMat = Eigen::Matrix<QRat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<QRat, Eigen::Dynamic, 1>;

// Exact inverse by Gaussian elimination over the QRat field.
QMat qmat_inverse(const QMat& m);
QMat qmat_identity(Eigen::Index n);
bool qmat_is_zero(const QMat& m);

} // namespace qaff

namespace Eigen {
template <>
struct NumTraits<qaff::QRat> {
    using Real = qaff::QRat;
    using NonInteger = qaff::QRat;
    using Literal = qaff::QRat;
    using Nested = qaff::QRat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 64,
    };
    static inline Real epsilon() { return qaff::QRat(); }
    static inline Real dummy_precision() { return qaff::QRat(); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
