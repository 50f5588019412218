#include "qaff/qrat.hpp"

#include <sstream>

namespace qaff {

QRat q_int(long m, long d) {
    // [m]_{q^d} = q^{d(m-1)} + q^{d(m-3)} + ... + q^{d(1-m)}
    if (m == 0) return QRat();
    long am = m < 0 ? -m : m;
    ZPoly num;
    for (long j = 0; j < am; ++j) num.add_term(2 * d * j, 1);
    QRat r(num, ZPoly::monomial(d * (am - 1)), 1);
    return m < 0 ? -r : r;
}

QRat q_factorial(long m, long d) {
    QRat r(1);
    for (long j = 1; j <= m; ++j) r *= q_int(j, d);
    return r;
}

QRat q_binomial(long m, long r, long d) {
    if (r < 0 || r > m) return QRat();
    return q_factorial(m, d) / (q_factorial(r, d) * q_factorial(m - r, d));
}

std::string format_exponent(const mpq_class& e) {
    mpq_class r = e;
    r.canonicalize();
    return r.get_str();
}

namespace {

// Print a polynomial in q, shifting exponents by -off/L so that monomial
// denominators render as Laurent polynomials.
std::string poly_to_string(const ZPoly& p, long off, long L, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        mpq_class e(it->first - off, L);
        e.canonicalize();
        const mpz_class& c = it->second;
        mpz_class ac = abs(c);
        if (!first) os << (c < 0 ? (latex ? " - " : "-") : (latex ? " + " : "+"));
        else if (c < 0) os << "-";
        first = false;
        if (e == 0) {
            os << ac.get_str();
            continue;
        }
        if (ac != 1) os << ac.get_str() << (latex ? "" : "*");
        if (e == 1) {
            os << "q";
        } else if (latex) {
            os << "q^{" << e.get_str() << "}";
        } else {
            os << "q^" << e.get_str();
        }
    }
    return os.str();
}

std::string render(const ZPoly& num, const ZPoly& den, long L, bool latex) {
    if (den.is_monomial()) {
        std::string s = poly_to_string(num, den.low_degree(), L, latex);
        const mpz_class& dc = den.leading_coeff();
        if (dc == 1) return s;
        return (latex ? "\\frac{" + s + "}{" + dc.get_str() + "}" : "(" + s + ")/" + dc.get_str());
    }
    std::string n = poly_to_string(num, 0, L, latex);
    std::string d = poly_to_string(den, 0, L, latex);
    if (latex) return "\\frac{" + n + "}{" + d + "}";
    return "(" + n + ")/(" + d + ")";
}

} // namespace

std::string QRat::to_string() const { return render(num_, den_, lattice_, false); }
std::string QRat::to_latex() const { return render(num_, den_, lattice_, true); }

QMat qmat_identity(Eigen::Index n) {
    QMat m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = QRat(i == j ? 1 : 0);
    return m;
}

bool qmat_is_zero(const QMat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

QMat qmat_inverse(const QMat& m) {
    const Eigen::Index n = m.rows();
    require(m.cols() == n, "InvalidArgument", "inverse of non-square matrix");
    QMat a = m, inv = qmat_identity(n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        require(pivot >= 0, "SingularMatrix", "matrix is not invertible");
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            inv.row(pivot).swap(inv.row(col));
        }
        QRat p = a(col, col).inverse();
        for (Eigen::Index j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            QRat f = a(r, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace qaff
