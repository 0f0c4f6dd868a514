#include "workbench/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

namespace workbench {

namespace {

BigInt bm_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Row/column operations tracked through U and V.
void swap_rows(IntMat& S, IntMat& U, int i, int j) {
    S.row(i).swap(S.row(j));
    U.row(i).swap(U.row(j));
}
void swap_cols(IntMat& S, IntMat& V, int i, int j) {
    S.col(i).swap(S.col(j));
    V.col(i).swap(V.col(j));
}
void add_row(IntMat& S, IntMat& U, int dst, int src, const BigInt& c) {
    S.row(dst) += c * S.row(src);
    U.row(dst) += c * U.row(src);
}
void add_col(IntMat& S, IntMat& V, int dst, int src, const BigInt& c) {
    S.col(dst) += c * S.col(src);
    V.col(dst) += c * V.col(src);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
    const int rows = static_cast<int>(A.rows());
    const int cols = static_cast<int>(A.cols());
    SmithResult r;
    r.S = A;
    r.U = IntMat::Identity(rows, rows);
    r.V = IntMat::Identity(cols, cols);
    IntMat& S = r.S;

    int k = 0;
    const int limit = std::min(rows, cols);
    while (k < limit) {
        // Find a pivot: nonzero entry of minimal absolute value in the
        // remaining block.
        int pi = -1, pj = -1;
        BigInt best(0);
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (S(i, j) != 0 &&
                    (pi < 0 || bm_abs(S(i, j)) < best)) {
                    pi = i; pj = j; best = bm_abs(S(i, j));
                }
        if (pi < 0) break;  // remaining block is zero
        swap_rows(S, r.U, k, pi);
        swap_cols(S, r.V, k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (S(i, k) == 0) continue;
                BigInt q = S(i, k) / S(k, k);
                add_row(S, r.U, i, k, -q);
                if (S(i, k) != 0) {  // remainder smaller than pivot
                    swap_rows(S, r.U, k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (S(k, j) == 0) continue;
                BigInt q = S(k, j) / S(k, k);
                add_col(S, r.V, j, k, -q);
                if (S(k, j) != 0) {
                    swap_cols(S, r.V, k, j);
                    clean = false;
                }
            }
        }
        // Enforce divisibility of later entries by the pivot.
        for (int i = k + 1; i < rows && clean; ++i)
            for (int j = k + 1; j < cols; ++j)
                if (S(i, j) % S(k, k) != 0) {
                    add_row(S, r.U, k, i, 1);
                    clean = false;
                    break;
                }
        if (!clean) continue;  // re-run elimination at the same k
        if (S(k, k) < 0) {
            S.row(k) *= -1;
            r.U.row(k) *= -1;
        }
        ++k;
    }
    return r;
}

int lattice_rank(const IntMat& A) {
    SmithResult r = smith_normal_form(A);
    int rank = 0;
    for (int i = 0; i < std::min(r.S.rows(), r.S.cols()); ++i)
        if (r.S(i, i) != 0) ++rank;
    return rank;
}

IntMat integer_kernel(const IntMat& A) {
    SmithResult r = smith_normal_form(A);
    int rank = 0;
    const int limit = static_cast<int>(std::min(r.S.rows(), r.S.cols()));
    for (int i = 0; i < limit; ++i)
        if (r.S(i, i) != 0) ++rank;
    // A * V has zero columns from `rank` onward; those columns of V span
    // the kernel, and they extend to a basis, so the kernel is saturated.
    return r.V.rightCols(r.V.cols() - rank);
}

QuotientInfo quotient_structure(const IntMat& A) {
    SmithResult r = smith_normal_form(A);
    QuotientInfo q;
    int rank = 0;
    const int limit = static_cast<int>(std::min(r.S.rows(), r.S.cols()));
    for (int i = 0; i < limit; ++i)
        if (r.S(i, i) != 0) {
            ++rank;
            if (r.S(i, i) > 1) q.torsion.push_back(r.S(i, i));
        }
    q.free_rank = static_cast<int>(A.rows()) - rank;
    return q;
}

bool quotient_is_free(const IntMat& A) {
    return quotient_structure(A).torsion.empty();
}

bool in_integer_span(const IntMat& A, const IntVec& b) {
    SmithResult r = smith_normal_form(A);
    // Solve S y = U b. Spelled as a loop: Eigen's scalar-promoting
    // operator* overload set chokes on cpp_int's container constructor.
    IntVec c = IntVec::Zero(r.U.rows());
    for (int i = 0; i < r.U.rows(); ++i)
        for (int j = 0; j < r.U.cols(); ++j) c(i) += r.U(i, j) * b(j);
    const int limit = static_cast<int>(std::min(r.S.rows(), r.S.cols()));
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i < limit && r.S(i, i) != 0) {
            if (c(i) % r.S(i, i) != 0) return false;
        } else if (c(i) != 0) {
            return false;
        }
    }
    return true;
}

bool solve_linear(const RatMat& A, const RatVec& b, RatVec& x) {
    const int rows = static_cast<int>(A.rows());
    const int cols = static_cast<int>(A.cols());
    RatMat M(rows, cols + 1);
    M.leftCols(cols) = A;
    M.col(cols) = b;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (M(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        M.row(r).swap(M.row(p));
        Rational inv = M(r, c);
        for (int j = c; j <= cols; ++j) M(r, j) /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            Rational f = M(i, c);
            for (int j = c; j <= cols; ++j) M(i, j) -= f * M(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (M(i, cols) != 0) return false;
    x = RatVec::Zero(cols);
    for (int i = 0; i < r; ++i) x(pivot_col[i]) = M(i, cols);
    return true;
}

}  // namespace workbench
