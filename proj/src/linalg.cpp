#include "qchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qchan {

bool is_finite(const Matrix& m) {
    return m.allFinite();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, m.norm());
    return (m - m.adjoint()).norm() <= tol * scale;
}

void require_finite(const Matrix& m, const char* what) {
    if (!is_finite(m)) throw ValidationError(std::string(what) + ": non-finite entries");
}

void require_hermitian(const Matrix& m, const char* what, double tol) {
    require_finite(m, what);
    if (!is_hermitian(m, tol)) throw ValidationError(std::string(what) + ": not Hermitian");
}

void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols()) throw ValidationError(std::string(what) + ": matrix is not square");
}

EigResult hermitian_eig(const Matrix& h) {
    require_hermitian(h, "hermitian_eig");
    // Work on the symmetrized matrix so tiny non-Hermitian noise cannot leak
    // into complex eigenvalues.
    Matrix hs = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hs);
    if (solver.info() != Eigen::Success) {
        throw NumericError("hermitian_eig: eigensolver did not converge (dim " +
                           std::to_string(h.rows()) + ")");
    }
    const Eigen::Index n = h.rows();
    EigResult out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen sorts ascending; flip to descending.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

double trace_norm(const Matrix& m) {
    require_square(m, "trace_norm");
    require_finite(m, "trace_norm");
    if (is_hermitian(m, 1e-12)) {
        Matrix hs = (m + m.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(hs, Eigen::EigenvaluesOnly);
        return solver.eigenvalues().cwiseAbs().sum();
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

Matrix matrix_power_psd(const Matrix& a, double s) {
    if (s < 0.0 || s > 1.0) throw ValidationError("matrix_power_psd: exponent outside [0,1]");
    EigResult eig = hermitian_eig(a);
    const double lmax = eig.values.size() > 0 ? eig.values(0) : 0.0;
    if (lmax < -kEpsPsd) throw ValidationError("matrix_power_psd: input not PSD");
    const double cutoff = std::max(lmax, 0.0) * kEpsRank;
    RealVector powered(eig.values.size());
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
        double v = eig.values(i);
        powered(i) = v > cutoff ? std::pow(v, s) : 0.0;
    }
    return eig.vectors * powered.asDiagonal() * eig.vectors.adjoint();
}

Matrix support_projector(const Matrix& a) {
    return matrix_power_psd(a, 0.0);
}

Matrix psd_clip(const Matrix& a) {
    EigResult eig = hermitian_eig(a);
    RealVector clipped = eig.values.cwiseMax(0.0);
    return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    require_finite(a, "tensor");
    require_finite(b, "tensor");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index ia = 0; ia < a.rows(); ++ia)
        for (Eigen::Index ja = 0; ja < a.cols(); ++ja)
            out.block(ia * b.rows(), ja * b.cols(), b.rows(), b.cols()) = a(ia, ja) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep) {
    require_square(m, "partial_trace");
    if (dim_a <= 0 || dim_b <= 0 || m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw ValidationError("partial_trace: dimension mismatch");
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                for (int b = 0; b < dim_b; ++b)
                    out(i, j) += m(i * dim_b + b, j * dim_b + b);
        return out;
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int a = 0; a < dim_a; ++a)
                out(i, j) += m(a * dim_b + i, a * dim_b + j);
    return out;
}

Matrix identity_matrix(int d) {
    return Matrix::Identity(d, d);
}

Vector max_entangled_vec(int d) {
    if (d <= 0) throw ValidationError("max_entangled_vec: dimension must be positive");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) v(i * d + i) = amp;
    return v;
}

Matrix max_entangled_state(int d) {
    Vector v = max_entangled_vec(d);
    return v * v.adjoint();
}

}  // namespace qchan
