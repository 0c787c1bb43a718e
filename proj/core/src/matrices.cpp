#include "repext/matrices.hpp"

#include <algorithm>
#include <cmath>

namespace repext {

double unitary_residual(const CMat& U) {
    return (U.adjoint() * U - CMat::Identity(U.rows(), U.cols())).norm();
}

CMat polar_unitary(const CMat& A, double tol) {
    if (A.rows() != A.cols()) throw input_error("polar_unitary: matrix not square");
    Eigen::SelfAdjointEigenSolver<CMat> es(A.adjoint() * A);
    const auto& lam = es.eigenvalues();
    if (lam(0) < tol * tol)
        throw numeric_error("polar_unitary: smallest singular value below tolerance");
    CVec inv_sqrt(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        inv_sqrt(i) = 1.0 / std::sqrt(lam(i));
    return A * es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
}

std::vector<CMat> joint_commutant(const std::vector<CMat>& mats, double tol) {
    if (mats.empty()) throw input_error("joint_commutant: no matrices");
    const Eigen::Index d = mats[0].rows();
    for (const auto& M : mats)
        if (M.rows() != d || M.cols() != d)
            throw input_error("joint_commutant: dimension mismatch");

    // vec(MT - TM) = (I (x) M - M^T (x) I) vec(T), column-major vec
    CMat K(static_cast<Eigen::Index>(mats.size()) * d * d, d * d);
    K.setZero();
    for (std::size_t m = 0; m < mats.size(); ++m) {
        const CMat& M = mats[m];
        for (Eigen::Index col = 0; col < d; ++col)
            for (Eigen::Index row = 0; row < d; ++row) {
                // T has a 1 at (row, col): contributes M.col(row) to column col of MT,
                // and -M.row(col) to row `row` of TM
                Eigen::Index tcol = col * d + row;
                Eigen::Index base = static_cast<Eigen::Index>(m) * d * d;
                for (Eigen::Index i = 0; i < d; ++i) {
                    K(base + col * d + i, tcol) += M(i, row);
                    K(base + i * d + row, tcol) -= M(col, i);
                }
            }
    }
    Eigen::JacobiSVD<CMat> svd(K, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 1.0);
    std::vector<CMat> basis;
    for (Eigen::Index i = sv.size() - 1; i >= 0; --i) {
        if (sv(i) > cutoff) break;
        CVec v = svd.matrixV().col(i);
        basis.push_back(Eigen::Map<const CMat>(v.data(), d, d));
    }
    return basis;
}

HermitianEig eig_hermitian(const CMat& A, double tol) {
    if (A.rows() != A.cols()) throw input_error("eig_hermitian: matrix not square");
    if ((A - A.adjoint()).norm() > tol)
        throw input_error("eig_hermitian: matrix not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMat> es(A);
    return {es.eigenvalues(), es.eigenvectors()};
}

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw input_error("IntMat: shape mismatch in product");
    IntMat R(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                R.at(i, j) += at(i, k) * o.at(k, j);
        }
    return R;
}

SmithResult smith_normal_form(const IntMat& M) {
    SmithResult r{IntMat::identity(M.rows), M, IntMat::identity(M.cols)};
    IntMat& D = r.D;
    IntMat& U = r.U;
    IntMat& V = r.V;
    const int rows = M.rows, cols = M.cols;

    auto row_add = [&](int dst, int src, const bigint& f) {
        for (int j = 0; j < cols; ++j) D.at(dst, j) += f * D.at(src, j);
        for (int j = 0; j < rows; ++j) U.at(dst, j) += f * U.at(src, j);
    };
    auto col_add = [&](int dst, int src, const bigint& f) {
        for (int i = 0; i < rows; ++i) D.at(i, dst) += f * D.at(i, src);
        for (int i = 0; i < cols; ++i) V.at(i, dst) += f * V.at(i, src);
    };
    auto row_swap = [&](int a, int b) {
        for (int j = 0; j < cols; ++j) std::swap(D.at(a, j), D.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(D.at(i, a), D.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(V.at(i, a), V.at(i, b));
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < cols; ++j) D.at(a, j) = -D.at(a, j);
        for (int j = 0; j < rows; ++j) U.at(a, j) = -U.at(a, j);
    };

    const int nmin = std::min(rows, cols);
    for (int t = 0; t < nmin; ++t) {
        // Rosser-style elimination: re-pick the globally smallest nonzero
        // entry of the trailing block as the pivot on every pass. This keeps
        // the quotients (and hence the entry sizes) small; a fixed pivot per
        // step makes the entries blow up doubly exponentially.
        while (true) {
            int pr = -1, pc = -1;
            bigint best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    bigint a = abs(D.at(i, j));
                    if (a != 0 && (pr < 0 || a < best)) {
                        best = a;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break; // trailing block is zero
            if (pr != t) row_swap(t, pr);
            if (pc != t) col_swap(t, pc);

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (D.at(i, t) == 0) continue;
                bigint q = D.at(i, t) / D.at(t, t);
                if (q != 0) row_add(i, t, -q);
                if (D.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (D.at(t, j) == 0) continue;
                bigint q = D.at(t, j) / D.at(t, t);
                if (q != 0) col_add(j, t, -q);
                if (D.at(t, j) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (D.at(t, t) < 0) row_negate(t);
    }

    // enforce the divisibility chain
    for (int t = 0; t + 1 < nmin; ++t) {
        for (int s = t + 1; s < nmin; ++s) {
            if (D.at(t, t) == 0 && D.at(s, s) != 0) {
                row_swap(t, s);
                col_swap(t, s);
            }
            if (D.at(t, t) == 0 || D.at(s, s) % D.at(t, t) == 0) continue;
            // fold d_s into position t: gcd goes to t, lcm to s
            col_add(t, s, 1);
            bool clean = false;
            while (!clean) {
                clean = true;
                bigint q = D.at(s, t) / D.at(t, t);
                row_add(s, t, -q);
                if (D.at(s, t) != 0) {
                    row_swap(t, s);
                    clean = false;
                    continue;
                }
                q = D.at(t, s) / D.at(t, t);
                col_add(s, t, -q);
                if (D.at(t, s) != 0) {
                    col_swap(t, s);
                    clean = false;
                }
            }
            if (D.at(t, t) < 0) row_negate(t);
            if (D.at(s, s) < 0) row_negate(s);
        }
    }
    return r;
}

std::vector<std::vector<bigint>> integer_left_kernel(const IntMat& M) {
    SmithResult snf = smith_normal_form(M);
    std::vector<std::vector<bigint>> basis;
    const int nmin = std::min(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i) {
        if (i < nmin && snf.D.at(i, i) != 0) continue;
        std::vector<bigint> y(M.rows);
        for (int j = 0; j < M.rows; ++j) y[j] = snf.U.at(i, j);
        basis.push_back(std::move(y));
    }
    return basis;
}

std::optional<std::vector<double>> solve_mod_one(const IntMat& B,
                                                 const std::vector<double>& a,
                                                 double tol) {
    if (static_cast<int>(a.size()) != B.rows)
        throw input_error("solve_mod_one: rhs length mismatch");
    SmithResult snf = smith_normal_form(B);
    const int nmin = std::min(B.rows, B.cols);

    auto dist_to_int = [](double x) { return std::abs(x - std::round(x)); };

    // a' = U a; rows with zero diagonal are exactly the left-kernel pairings
    std::vector<double> ap(B.rows, 0.0);
    for (int i = 0; i < B.rows; ++i) {
        double norm1 = 0.0;
        for (int j = 0; j < B.rows; ++j) {
            double u = snf.U.at(i, j).convert_to<double>();
            ap[i] += u * a[j];
            norm1 += std::abs(u);
        }
        bool kernel_row = (i >= nmin) || (snf.D.at(i, i) == 0);
        if (kernel_row && dist_to_int(ap[i]) > tol * (1.0 + norm1)) return std::nullopt;
    }

    std::vector<double> c(B.cols, 0.0);
    for (int i = 0; i < nmin; ++i)
        if (snf.D.at(i, i) != 0)
            c[i] = ap[i] / snf.D.at(i, i).convert_to<double>();
    std::vector<double> b(B.cols, 0.0);
    for (int i = 0; i < B.cols; ++i)
        for (int j = 0; j < B.cols; ++j)
            b[i] += snf.V.at(i, j).convert_to<double>() * c[j];
    return b;
}

} // namespace repext
