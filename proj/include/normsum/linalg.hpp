#ifndef NORMSUM_LINALG_HPP
#define NORMSUM_LINALG_HPP

#include <cstdint>
#include <vector>

#include "normsum/errors.hpp"
#include "normsum/types.hpp"

namespace normsum {

// Fraction-free (Bareiss) determinant; exact over any integral-domain scalar
// with exact division (BigInt in practice).
template <class Derived>
typename Derived::Scalar exact_det(const Eigen::MatrixBase<Derived>& m_in) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = m_in;
    const Index n = a.rows();
    if (n != a.cols()) throw Error("exact_det: square matrix required");
    if (n == 0) return Scalar(1);
    Scalar sign(1), prev(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Index piv = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != Scalar(0)) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Scalar(0);
            a.row(k).swap(a.row(piv));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Scalar num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev;  // exact by Bareiss
            }
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// --- Dense linear algebra over Z/p (p prime, entries in [0, p)) ---

using ModMatrix = DenseMatrix<std::int64_t>;

inline ModMatrix mod_reduce(const IntMatrix& m, std::int64_t p) {
    ModMatrix r(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            BigInt v = m(i, j) % p;
            if (v < 0) v += p;
            r(i, j) = v.convert_to<std::int64_t>();
        }
    return r;
}

inline ModMatrix mod_mat_mul(const ModMatrix& a, const ModMatrix& b, std::int64_t p) {
    ModMatrix r = ModMatrix::Zero(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (Index j = 0; j < b.cols(); ++j)
                r(i, j) = (r(i, j) + mod_mul(a(i, k), b(k, j), p)) % p;
        }
    return r;
}

// Row echelon in place; returns rank. Records pivot columns if requested.
inline int mod_row_echelon(ModMatrix& a, std::int64_t p, std::vector<Index>* pivot_cols = nullptr) {
    Index rows = a.rows(), cols = a.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (a(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        a.row(r).swap(a.row(piv));
        std::int64_t inv = mod_inv(a(r, c) % p, p);
        for (Index j = c; j < cols; ++j) a(r, j) = mod_mul(a(r, j), inv, p);
        for (Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            std::int64_t f = a(i, c);
            for (Index j = c; j < cols; ++j)
                a(i, j) = ((a(i, j) - mod_mul(f, a(r, j), p)) % p + p) % p;
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return static_cast<int>(r);
}

inline int mod_rank(ModMatrix a, std::int64_t p) { return mod_row_echelon(a, p); }

inline std::int64_t mod_det(ModMatrix a, std::int64_t p) {
    Index n = a.rows();
    std::int64_t det = 1 % p;
    for (Index c = 0; c < n; ++c) {
        Index piv = -1;
        for (Index i = c; i < n; ++i)
            if (a(i, c) % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            a.row(c).swap(a.row(piv));
            det = p - det;
        }
        det = mod_mul(det, a(c, c), p);
        std::int64_t inv = mod_inv(a(c, c), p);
        for (Index i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            std::int64_t f = mod_mul(a(i, c), inv, p);
            for (Index j = c; j < n; ++j)
                a(i, j) = ((a(i, j) - mod_mul(f, a(c, j), p)) % p + p) % p;
        }
    }
    return det % p;
}

// Row indices that are NOT pivot rows of the column space of m (i.e. a set of
// coordinates whose span is a complement of the column space).
inline std::vector<Index> complement_rows(const ModMatrix& m, std::int64_t p) {
    ModMatrix t = m.transpose();  // column space of m = row space of t
    std::vector<Index> pivots;
    mod_row_echelon(t, p, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.rows()), false);
    for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> out;
    for (Index i = 0; i < m.rows(); ++i)
        if (!is_pivot[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

// Column-style Hermite normal form of the lattice spanned by the columns of a
// (full rank k assumed; a is k x n with n >= k). Result is k x k lower
// triangular with positive diagonal.
inline IntMatrix hnf_column_basis(IntMatrix a) {
    const Index k = a.rows();
    Index n = a.cols();
    for (Index row = 0; row < k; ++row) {
        // clear columns > row using gcd steps on row `row`
        for (Index j = row + 1; j < n; ++j) {
            while (a(row, j) != 0) {
                if (a(row, row) == 0) {
                    a.col(row).swap(a.col(j));
                    continue;
                }
                BigInt q = a(row, j) / a(row, row);
                a.col(j) -= (q * a.col(row)).eval();
                if (a(row, j) != 0) a.col(row).swap(a.col(j));
            }
        }
        if (a(row, row) == 0) throw Error("hnf_column_basis: rank deficient");
        if (a(row, row) < 0) a.col(row) = -a.col(row);
        // reduce earlier columns mod the diagonal
        for (Index j = 0; j < row; ++j) {
            BigInt q = a(row, j) / a(row, row);
            if (a(row, j) - q * a(row, row) < 0) q -= 1;
            a.col(j) -= (q * a.col(row)).eval();
        }
    }
    return a.leftCols(a.rows());
}

// Membership of x in the lattice with lower-triangular column basis h.
inline bool lattice_contains(const IntMatrix& h, const IntVector& x) {
    IntVector r = x;
    const Index k = h.rows();
    for (Index i = 0; i < k; ++i) {
        if (r(i) % h(i, i) != 0) return false;
        BigInt c = r(i) / h(i, i);
        r -= (c * h.col(i)).eval();
    }
    return r.isZero(0);
}

}  // namespace normsum

#endif
