#include "qaff/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qaff {

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) os << ",";
        os << w[k].get_str();
    }
    os << ")";
    return os.str();
}

std::string WeightVector::to_latex() const {
    // Combination of fundamental weights, e.g. "\omega_1 - \omega_2"; "0" when
    // trivial.
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0) continue;
        mpq_class c = w[k];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        mpq_class a = abs(c);
        if (a != 1) os << a.get_str();
        os << "\\omega_" << (k + 1);
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void link(Eigen::MatrixXi& C, int i, int j) { // simple edge, 0-based
    C(i, j) = -1;
    C(j, i) = -1;
}

std::vector<long> highest_root_marks(const Eigen::MatrixXi& C) {
    const int n = int(C.rows());
    using Root = std::vector<int>;
    std::set<Root> roots;
    std::vector<Root> queue;
    for (int i = 0; i < n; ++i) {
        Root a(n, 0);
        a[i] = 1;
        roots.insert(a);
        queue.push_back(a);
    }
    // Orbit of the simple roots under simple reflections.
    while (!queue.empty()) {
        Root x = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += C(i, j) * x[j];
            Root y = x;
            y[i] -= int(pairing);
            if (roots.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<long> best;
    long best_ht = -1;
    for (const auto& r : roots) {
        long ht = std::accumulate(r.begin(), r.end(), 0L);
        if (ht > best_ht) {
            best_ht = ht;
            best.assign(r.begin(), r.end());
        }
    }
    return best;
}

} // namespace

CartanDatum build_cartan(CartanType type, int rank) {
    const int n = rank;
    auto bad = [&](const std::string& why) { fail("InvalidType", why); };
    Eigen::MatrixXi C = Eigen::MatrixXi::Zero(n, n);
    std::vector<long> d(size_t(n), 1);
    if (n < 1) bad("rank must be positive");
    for (int i = 0; i < n; ++i) C(i, i) = 2;
    switch (type) {
        case CartanType::A:
            for (int i = 0; i + 1 < n; ++i) link(C, i, i + 1);
            break;
        case CartanType::B:
            // Nodes 1..n-1 long, node n short.
            if (n < 2) bad("B requires rank >= 2");
            for (int i = 0; i + 1 < n; ++i) link(C, i, i + 1);
            C(n - 1, n - 2) = -2;
            for (int i = 0; i + 1 < n; ++i) d[size_t(i)] = 2;
            break;
        case CartanType::C:
            // Nodes 1..n-1 short, node n long.
            if (n < 2) bad("C requires rank >= 2");
            for (int i = 0; i + 1 < n; ++i) link(C, i, i + 1);
            C(n - 2, n - 1) = -2;
            d[size_t(n) - 1] = 2;
            break;
        case CartanType::D:
            if (n < 4) bad("D requires rank >= 4");
            for (int i = 0; i + 2 < n; ++i) link(C, i, i + 1);
            link(C, n - 3, n - 1);
            break;
        case CartanType::E:
            // Chain 1..n-1 with node n attached to node 3.
            if (n < 6 || n > 8) bad("E requires rank 6, 7 or 8");
            for (int i = 0; i + 2 < n; ++i) link(C, i, i + 1);
            link(C, 2, n - 1);
            break;
        case CartanType::F:
            // Nodes 1,2 long, nodes 3,4 short.
            if (n != 4) bad("F requires rank 4");
            link(C, 0, 1);
            link(C, 1, 2);
            link(C, 2, 3);
            C(2, 1) = -2;
            d[0] = d[1] = 2;
            break;
        case CartanType::G:
            // Node 1 long (d=3), node 2 short.
            if (n != 2) bad("G requires rank 2");
            C(0, 1) = -1;
            C(1, 0) = -3;
            d[0] = 3;
            break;
        default:
            bad("unknown type");
    }
    CartanDatum cd{type, n, C, d, highest_root_marks(C)};
    // DC symmetric, d relatively prime: sanity of the tables above.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            require(d[size_t(i)] * C(i, j) == d[size_t(j)] * C(j, i), "InternalError", "DC not symmetric");
    long g = 0;
    for (long x : d) g = std::gcd(g, x);
    require(g == 1, "InternalError", "symmetrizers not relatively prime");
    return cd;
}

CartanDatum build_cartan(const std::string& label) {
    require(label.size() >= 2, "InvalidType", "expected a label like A2 or B2");
    char t = char(std::toupper(label[0]));
    require(t >= 'A' && t <= 'G' && t != 'E' + 1, "InvalidType", "unknown series " + label);
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        fail("InvalidType", "bad rank in " + label);
    }
    return build_cartan(CartanType(t), rank);
}

QuantumCartan quantum_cartan(const CartanDatum& cd) {
    const int n = cd.rank;
    QuantumCartan qc;
    qc.Cq = QMat(n, n);
    qc.Bq = QMat(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            qc.Cq(i - 1, j - 1) = (i == j) ? q_int(2, cd.sym(i)) : q_int(cd.cartan(i, j));
            qc.Bq(i - 1, j - 1) = q_int(cd.sym(i)) * qc.Cq(i - 1, j - 1);
        }
    }
    qc.Cq_inv = qmat_inverse(qc.Cq);
    qc.Bq_inv = qmat_inverse(qc.Bq);
    return qc;
}

std::vector<std::vector<mpq_class>> cartan_inverse(const CartanDatum& cd) {
    const int n = cd.rank;
    // Gauss-Jordan over the rationals.
    std::vector<std::vector<mpq_class>> a;
    a.resize(size_t(n));
    for (auto& row : a) row.resize(size_t(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = cd.C(i, j);
        a[size_t(i)][size_t(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[size_t(r)][size_t(col)] != 0) {
                pivot = r;
                break;
            }
        require(pivot >= 0, "InternalError", "Cartan matrix singular");
        std::swap(a[size_t(pivot)], a[size_t(col)]);
        mpq_class p = a[size_t(col)][size_t(col)];
        for (int j = 0; j < 2 * n; ++j) a[size_t(col)][size_t(j)] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            mpq_class f = a[size_t(r)][size_t(col)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j) a[size_t(r)][size_t(j)] -= f * a[size_t(col)][size_t(j)];
        }
    }
    std::vector<std::vector<mpq_class>> inv;
    inv.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        inv[size_t(i)].resize(size_t(n));
        for (int j = 0; j < n; ++j) inv[size_t(i)][size_t(j)] = a[size_t(i)][size_t(n + j)];
    }
    return inv;
}

std::vector<long> ht_decompose(const CartanDatum& cd, const WeightVector& omega, const WeightVector& lambda) {
    require(omega.rank() == cd.rank && lambda.rank() == cd.rank, "InvalidArgument", "rank mismatch");
    WeightVector x = omega - lambda;
    auto inv = cartan_inverse(cd);
    std::vector<long> ht(size_t(cd.rank));
    for (int i = 1; i <= cd.rank; ++i) {
        mpq_class h = 0;
        for (int j = 1; j <= cd.rank; ++j) h += inv[size_t(i - 1)][size_t(j - 1)] * x[j];
        require(h.get_den() == 1, "NotInRootCone", "omega - lambda is not in the root lattice");
        require(h >= 0, "NotInRootCone", "omega - lambda is not in the nonnegative root cone");
        ht[size_t(i - 1)] = long(h.get_num().get_si());
    }
    return ht;
}

} // namespace qaff
