#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <vector>

#include "repext/errors.hpp"

namespace repext {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using bigint = boost::multiprecision::cpp_int;

inline constexpr double kDefaultTol = 1e-9;

// ---------------------------------------------------------------------------
// complex dense helpers

// U = A (A*A)^{-1/2} via Hermitian eigendecomposition of A*A. Throws
// numeric_error when the smallest singular value of A is below tol.
CMat polar_unitary(const CMat& A, double tol = kDefaultTol);

// Orthonormal (Frobenius) basis of {T : TM = MT for all M in mats}, as the
// null space of the stacked maps T -> MT - TM. Always contains a multiple
// of the identity.
std::vector<CMat> joint_commutant(const std::vector<CMat>& mats, double tol = kDefaultTol);

// Hermitian eigendecomposition; eigenvalues ascending, eigenvector columns
// orthonormal. Throws numeric_error if ||A - A*|| > tol.
struct HermitianEig {
    Eigen::VectorXd values;
    CMat vectors;
};
HermitianEig eig_hermitian(const CMat& A, double tol = kDefaultTol);

double unitary_residual(const CMat& U);

// ---------------------------------------------------------------------------
// exact integer linear algebra

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<bigint> data; // row-major

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}
    bigint& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const bigint& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    static IntMat identity(int n);
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const = default;
};

// U M V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
    IntMat U;
    IntMat D;
    IntMat V;
};
SmithResult smith_normal_form(const IntMat& M);

// Lattice basis of {y : y M = 0} (integer row vectors), read off the SNF.
std::vector<std::vector<bigint>> integer_left_kernel(const IntMat& M);

// Solves B b = a (mod 1) over the reals, with the solvability decided
// exactly: a solution exists iff y.a is an integer (within tol*(1+|y|_1))
// for every integer left-kernel vector y of B. Returns the solution vector
// or nullopt.
std::optional<std::vector<double>> solve_mod_one(const IntMat& B,
                                                 const std::vector<double>& a,
                                                 double tol = kDefaultTol);

} // namespace repext
