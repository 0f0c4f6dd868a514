#include "workbench/lattice.hpp"

#include <doctest.h>
#include <random>

using namespace workbench;

namespace {

IntMat random_int_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A(i, j) = d(rng);
    return A;
}

BigInt det_int(const IntMat& A) {
    // Bareiss fraction-free elimination.
    IntMat M = A;
    const int n = static_cast<int>(M.rows());
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            M.row(k).swap(M.row(p));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

}  // namespace

TEST_CASE("smith normal form, randomized") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
        IntMat A = random_int_matrix(rng, rows, cols, 9);
        SmithResult r = smith_normal_form(A);
        CHECK(r.U * A * r.V == r.S);
        // Unimodularity.
        CHECK((det_int(r.U) == 1 || det_int(r.U) == -1));
        CHECK((det_int(r.V) == 1 || det_int(r.V) == -1));
        // Diagonal with divisibility chain.
        for (int i = 0; i < r.S.rows(); ++i)
            for (int j = 0; j < r.S.cols(); ++j)
                if (i != j) CHECK(r.S(i, j) == 0);
        int lim = static_cast<int>(std::min(r.S.rows(), r.S.cols()));
        for (int i = 0; i + 1 < lim; ++i) {
            CHECK(r.S(i, i) >= 0);
            if (r.S(i, i) != 0 && r.S(i + 1, i + 1) != 0)
                CHECK(r.S(i + 1, i + 1) % r.S(i, i) == 0);
            if (r.S(i, i) == 0) CHECK(r.S(i + 1, i + 1) == 0);
        }
    }
}

TEST_CASE("known quotient structures") {
    // Z^2 / span{(2,0),(0,3)} = Z/2 x Z/3 = Z/6.
    IntMat A(2, 2);
    A << 2, 0, 0, 3;
    QuotientInfo q = quotient_structure(A);
    CHECK(q.torsion == std::vector<BigInt>{6});
    CHECK(q.free_rank == 0);

    // Z^2 / span{(1,1)} is free of rank 1.
    IntMat B(2, 1);
    B << 1, 1;
    q = quotient_structure(B);
    CHECK(q.torsion.empty());
    CHECK(q.free_rank == 1);
    CHECK(quotient_is_free(B));

    // Z^2 / span{(2,0)} has torsion Z/2 plus free rank 1.
    IntMat C(2, 1);
    C << 2, 0;
    q = quotient_structure(C);
    CHECK(q.torsion == std::vector<BigInt>{2});
    CHECK(q.free_rank == 1);
}

TEST_CASE("integer kernel is saturated") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        IntMat A = random_int_matrix(rng, 2 + trial % 3, 3 + trial % 3, 6);
        IntMat K = integer_kernel(A);
        CHECK((A * K).isZero());
        CHECK(static_cast<int>(K.cols()) ==
              static_cast<int>(A.cols()) - lattice_rank(A));
        // Saturation: Z^cols / kernel is torsion-free.
        if (K.cols() > 0) CHECK(quotient_is_free(K));
    }
}

TEST_CASE("integer span membership") {
    IntMat A(2, 2);
    A << 2, 0, 0, 3;
    IntVec b(2);
    b << 4, 3;
    CHECK(in_integer_span(A, b));
    b << 1, 0;
    CHECK(!in_integer_span(A, b));
    b << 0, 0;
    CHECK(in_integer_span(A, b));
}
