#ifndef WORKBENCH_LATTICE_HPP_
#define WORKBENCH_LATTICE_HPP_

#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "workbench/scalars.hpp"

// Boost 1.74's is_byte_container probes member begin()/end() in a way that
// hard-errors (not SFINAE) on Eigen matrix types, breaking every product of
// cpp_int matrices. Short-circuit the trait for Eigen types.
namespace boost::multiprecision::detail {
template <typename C>
    requires requires {
        typename C::Scalar;
        typename C::StorageKind;
    }
struct is_byte_container<C> : public std::false_type {};
}  // namespace boost::multiprecision::detail

namespace workbench {

using IntMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Smith normal form: U * A * V = S with U, V unimodular and S diagonal,
/// diagonal entries nonnegative with s_i | s_{i+1}.
struct SmithResult {
    IntMat U, S, V;
};

SmithResult smith_normal_form(const IntMat& A);

/// Rank over Q.
int lattice_rank(const IntMat& A);

/// Columns form a basis of the saturated integer kernel {x : A x = 0}.
IntMat integer_kernel(const IntMat& A);

/// Structure of Z^rows(A) / column-span(A): the nontrivial torsion
/// invariant factors (entries > 1) followed by nothing; free rank is
/// reported separately.
struct QuotientInfo {
    std::vector<BigInt> torsion;  // invariant factors > 1
    int free_rank = 0;
};

QuotientInfo quotient_structure(const IntMat& A);

/// True when the quotient Z^rows / col-span(A) is torsion-free.
bool quotient_is_free(const IntMat& A);

/// Does the integer vector b lie in the column span of A over Z?
bool in_integer_span(const IntMat& A, const IntVec& b);

/// Exact Gaussian elimination: finds some x with A x = b over Q.
/// Returns false when the system is inconsistent.
bool solve_linear(const RatMat& A, const RatVec& b, RatVec& x);

}  // namespace workbench

#endif  // WORKBENCH_LATTICE_HPP_
