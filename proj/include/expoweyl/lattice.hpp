#pragma once

#include <numeric>
#include <vector>

#include "expoweyl/scalar.hpp"

namespace expoweyl {

/// Integer coordinate vector relative to the fixed Z-basis of the additive
/// subgroup A.
using LatticeVector = std::vector<long long>;

inline LatticeVector lattice_add(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lattice: dimension mismatch");
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticeVector lattice_neg(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool lattice_is_zero(const LatticeVector& a) {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

/// gcd of the coordinates; 0 iff v = 0
inline long long content(const LatticeVector& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

/// Square integer matrix with |det| = 1, stored row-major.
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(std::vector<std::vector<long long>> entries)
        : entries_(std::move(entries)) {
        const std::size_t n = entries_.size();
        for (const auto& row : entries_)
            if (row.size() != n) throw std::invalid_argument("UnimodularMatrix: not square");
        long long d = det();
        if (d != 1 && d != -1)
            throw std::invalid_argument("UnimodularMatrix: determinant must be +-1");
    }

    static UnimodularMatrix identity(std::size_t n) {
        std::vector<std::vector<long long>> e(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
        return UnimodularMatrix(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    long long operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const std::vector<std::vector<long long>>& rows() const { return entries_; }

    long long det() const {
        // fraction-free Bareiss on a copy
        auto m = entries_;
        const std::size_t n = m.size();
        long long prev = 1;
        long long sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                std::size_t p = k + 1;
                while (p < n && m[p][k] == 0) ++p;
                if (p == n) return 0;
                std::swap(m[p], m[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return n == 0 ? 1 : sign * m[n - 1][n - 1];
    }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const {
        if (size() != o.size()) throw std::invalid_argument("UnimodularMatrix: size mismatch");
        const std::size_t n = size();
        std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) r[i][j] += entries_[i][k] * o.entries_[k][j];
        return UnimodularMatrix(std::move(r));
    }

    UnimodularMatrix inverse() const {
        // adjugate over det in {+-1}
        const std::size_t n = size();
        long long d = det();
        std::vector<std::vector<long long>> r(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // cofactor C_ji
                std::vector<std::vector<long long>> minor;
                for (std::size_t a = 0; a < n; ++a) {
                    if (a == j) continue;
                    std::vector<long long> row;
                    for (std::size_t b = 0; b < n; ++b)
                        if (b != i) row.push_back(entries_[a][b]);
                    minor.push_back(std::move(row));
                }
                long long c = minor_det(minor);
                if ((i + j) % 2 == 1) c = -c;
                r[i][j] = c * d; // d in {+-1}: division == multiplication
            }
        return UnimodularMatrix(std::move(r));
    }

    bool operator==(const UnimodularMatrix& o) const { return entries_ == o.entries_; }

private:
    std::vector<std::vector<long long>> entries_;

    static long long minor_det(const std::vector<std::vector<long long>>& m) {
        const std::size_t n = m.size();
        if (n == 0) return 1;
        if (n == 1) return m[0][0];
        long long d = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (m[0][j] == 0) continue;
            std::vector<std::vector<long long>> sub;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<long long> row;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                sub.push_back(std::move(row));
            }
            long long s = (j % 2 == 0) ? 1 : -1;
            d += s * m[0][j] * minor_det(sub);
        }
        return d;
    }
};

inline LatticeVector apply_matrix(const UnimodularMatrix& M, const LatticeVector& v) {
    if (M.size() != v.size()) throw std::invalid_argument("apply_matrix: dimension mismatch");
    LatticeVector r(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += M(i, j) * v[j];
    return r;
}

/// Completes a primitive vector to a Z-basis: returns M with M e1 = v and
/// det M = +-1, built from extended-gcd elementary steps.
inline UnimodularMatrix complete_to_basis(const LatticeVector& v) {
    if (!is_primitive(v)) throw std::invalid_argument("complete_to_basis: vector not primitive");
    const std::size_t n = v.size();
    auto M = UnimodularMatrix::identity(n).rows();
    LatticeVector w = v;
    // invariant: v = M w; reduce w to e1 by det-1 row operations on (0, i)
    for (std::size_t i = 1; i < n; ++i) {
        long long a = w[0], b = w[i];
        if (b == 0 && a != 0) continue;
        // extended gcd: s a + t b = g
        long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            long long q = old_r / r;
            std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
            std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
            std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
        }
        long long g = old_r;
        if (g < 0) {
            g = -g;
            old_s = -old_s;
            old_t = -old_t;
        }
        // R = [[s, t], [-b/g, a/g]] acts on rows (0, i) of w with det 1;
        // apply R to w and R^{-1} = [[a/g, -t], [b/g, s]] to columns of M
        long long ag = (g == 0) ? 1 : a / g, bg = (g == 0) ? 0 : b / g;
        w[0] = g;
        w[i] = 0;
        for (std::size_t row = 0; row < n; ++row) {
            long long m0 = M[row][0], mi = M[row][i];
            M[row][0] = m0 * ag + mi * bg;
            M[row][i] = -m0 * old_t + mi * old_s;
        }
    }
    if (w[0] < 0) {
        // v was a negative multiple of e1: flip the first column
        for (std::size_t row = 0; row < n; ++row) M[row][0] = -M[row][0];
    }
    return UnimodularMatrix(std::move(M));
}

/// The additive subgroup A: rank plus the embedding of its Z-basis into the
/// scalar field. embed[0] must be 1 (Z is contained in A).
struct LatticeBasis {
    std::size_t rank = 0;
    std::vector<FieldScalar> embed;

    LatticeBasis() = default;
    LatticeBasis(std::size_t r, std::vector<FieldScalar> e) : rank(r), embed(std::move(e)) {
        if (rank == 0 || embed.size() != rank)
            throw std::invalid_argument("LatticeBasis: rank/embedding mismatch");
        FieldScalar one(embed[0].table(), Rational(1));
        if (!(embed[0] == one))
            throw std::invalid_argument("LatticeBasis: embed[0] must be 1");
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j)
                if (embed[i] == embed[j])
                    throw std::invalid_argument("LatticeBasis: embedding entries must be distinct");
    }

    /// image of a lattice vector in the scalar field
    FieldScalar embedding(const LatticeVector& v) const {
        if (v.size() != rank) throw std::invalid_argument("LatticeBasis: dimension mismatch");
        FieldScalar r(embed[0].table(), Rational(0));
        for (std::size_t i = 0; i < rank; ++i)
            if (v[i] != 0) r += embed[i] * FieldScalar(embed[0].table(), Rational(v[i]));
        return r;
    }
};

} // namespace expoweyl
