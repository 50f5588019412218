#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "qaff/qrat.hpp"

namespace qaff {

// Weight in the fundamental-weight basis. Rational coordinates are allowed;
// they show up in exponent bookkeeping for the scalar prefactors.
struct WeightVector {
    std::vector<mpq_class> w;

    WeightVector() = default;
    explicit WeightVector(int rank) : w(size_t(rank)) {}

    int rank() const { return int(w.size()); }
    mpq_class& operator[](int i) { return w[size_t(i) - 1]; } // 1-based node index
    const mpq_class& operator[](int i) const { return w[size_t(i) - 1]; }

    WeightVector operator+(const WeightVector& o) const {
        WeightVector r = *this;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] += o.w[k];
        return r;
    }
    WeightVector operator-(const WeightVector& o) const {
        WeightVector r = *this;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] -= o.w[k];
        return r;
    }
    WeightVector operator-() const {
        WeightVector r = *this;
        for (auto& x : r.w) x = -x;
        return r;
    }
    WeightVector operator*(const mpq_class& c) const {
        WeightVector r = *this;
        for (auto& x : r.w) x *= c;
        return r;
    }
    bool operator==(const WeightVector& o) const { return w == o.w; }
    bool operator<(const WeightVector& o) const { return w < o.w; }
    bool is_zero() const {
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }

    static WeightVector fundamental(int i, int rank) {
        WeightVector r(rank);
        r[i] = 1;
        return r;
    }

    std::string to_string() const;
    std::string to_latex() const;
};

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Finite-type Cartan datum: the integer Cartan matrix, its symmetrizers, and
// the Kac labels of the corresponding untwisted affine diagram as metadata.
struct CartanDatum {
    CartanType type;
    int rank = 0;
    Eigen::MatrixXi C;            // Cartan matrix, 0-based storage
    std::vector<long> d;          // symmetrizers, relatively prime
    std::vector<long> kac_labels; // coefficients of the highest root

    int cartan(int i, int j) const { return C(i - 1, j - 1); } // 1-based
    long sym(int i) const { return d[size_t(i) - 1]; }
    QRat qi(int i) const { return QRat::q_pow(mpq_class(sym(i))); }

    // alpha_i in the fundamental-weight basis (column i of C).
    WeightVector simple_root(int i) const {
        WeightVector r(rank);
        for (int j = 1; j <= rank; ++j) r[j] = cartan(j, i);
        return r;
    }

    std::string label() const { return std::string(1, char(type)) + std::to_string(rank); }
};

// Quantum Cartan matrices and their exact inverses.
struct QuantumCartan {
    QMat Cq, Bq, Cq_inv, Bq_inv;

    // \tilde{C}_{i,j}(q^r), 1-based indices.
    QRat ct_at_power(int i, int j, long r) const { return Cq_inv(i - 1, j - 1).subs_q_power(r); }
};

CartanDatum build_cartan(CartanType type, int rank);
CartanDatum build_cartan(const std::string& label); // e.g. "B2"

QuantumCartan quantum_cartan(const CartanDatum& cd);

// Inverse of the integer Cartan matrix over the rationals.
std::vector<std::vector<mpq_class>> cartan_inverse(const CartanDatum& cd);

// Unique nonnegative integers with omega - lambda = sum_i ht_i alpha_i.
// Throws NotInRootCone otherwise.
std::vector<long> ht_decompose(const CartanDatum& cd, const WeightVector& omega, const WeightVector& lambda);

} // namespace qaff
