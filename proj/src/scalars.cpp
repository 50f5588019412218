#include "qaff/polyq.hpp"
#include "qaff/series.hpp"

#include <sstream>

namespace qaff {

QSeries series_exp(const QSeries& s) {
    require(s.coeff(0).is_zero(), "NonzeroConstantTerm", "series_exp needs zero constant term");
    const long K = s.order();
    QSeries e(s.var(), K);
    e.coeff(0) = QRat(1);
    // e' = s' e  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
    for (long k = 1; k <= K; ++k) {
        QRat acc;
        for (long j = 1; j <= k; ++j) {
            if (s.coeff(j).is_zero()) continue;
            acc += QRat(j) * s.coeff(j) * e.coeff(k - j);
        }
        e.coeff(k) = acc * QRat(mpq_class(1, k));
    }
    return e;
}

QSeries series_log(const QSeries& s) {
    require(s.coeff(0).is_one(), "NonzeroConstantTerm", "series_log needs constant term one");
    const long K = s.order();
    QSeries l(s.var(), K);
    // s' = l' s  =>  k s_k = sum_{j=1..k} j l_j s_{k-j}
    for (long k = 1; k <= K; ++k) {
        QRat acc = QRat(k) * s.coeff(k);
        for (long j = 1; j < k; ++j) {
            if (l.coeff(j).is_zero()) continue;
            acc -= QRat(j) * l.coeff(j) * s.coeff(k - j);
        }
        l.coeff(k) = acc * QRat(mpq_class(1, k));
    }
    return l;
}

std::optional<QVec> qmat_solve(QMat a, QVec b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            std::swap(b(pivot), b(col));
        }
        QRat p = a(col, col).inverse();
        for (Eigen::Index j = col; j < n; ++j) a(col, j) *= p;
        b(col) *= p;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            QRat f = a(r, col);
            for (Eigen::Index j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b(r) -= f * b(col);
        }
    }
    return b;
}

std::optional<RatFun> rational_reconstruct(const QSeries& s, long max_deg) {
    require(s.order() + 1 >= 2 * max_deg + 2, "InsufficientOrder",
            "rational_reconstruct needs at least 2*max_deg + 2 coefficients");
    const long K = s.order();
    for (long d = 0; d <= max_deg; ++d) {
        // Denominator 1 + q_1 x + ... + q_d x^d from the linear section
        // sum_j q_j s_{m-j} = 0, m = d+1 .. 2d.
        std::vector<QRat> den(size_t(d) + 1);
        den[0] = QRat(1);
        if (d > 0) {
            QMat a(d, d);
            QVec rhs(d);
            for (long row = 0; row < d; ++row) {
                long m = d + 1 + row;
                for (long j = 1; j <= d; ++j) a(row, j - 1) = s.coeff(m - j);
                rhs(row) = -s.coeff(m);
            }
            auto sol = qmat_solve(a, rhs);
            if (!sol) continue;
            for (long j = 1; j <= d; ++j) den[size_t(j)] = (*sol)(j - 1);
        }
        PolyQ q(den);
        // Numerator from the product truncated at degree d.
        std::vector<QRat> num(size_t(d) + 1);
        for (long m = 0; m <= d; ++m) {
            QRat acc;
            for (long j = 0; j <= std::min(m, d); ++j) acc += q.coeff(j) * s.coeff(m - j);
            num[size_t(m)] = acc;
        }
        RatFun cand(PolyQ(num), q);
        // Candidate must reproduce every coefficient we were given.
        if (cand.to_series(s.var(), K) == s) return cand;
    }
    return std::nullopt;
}

namespace {

std::string poly_latex(const PolyQ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= p.degree(); ++k) {
        const QRat& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_latex();
        if (k == 0) {
            os << cs;
            continue;
        }
        if (c.is_one())
            ;
        else if (cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos)
            os << "\\left(" << cs << "\\right)";
        else
            os << cs;
        os << var;
        if (k > 1) os << "^{" << k << "}";
    }
    return os.str();
}

} // namespace

std::string PolyQ::to_latex(const std::string& var) const { return poly_latex(*this, var); }

std::string RatFun::to_latex(const std::string& var) const {
    if (den_.degree() == 0 && den_.coeff(0).is_one()) return poly_latex(num_, var);
    return "\\frac{" + poly_latex(num_, var) + "}{" + poly_latex(den_, var) + "}";
}

} // namespace qaff
