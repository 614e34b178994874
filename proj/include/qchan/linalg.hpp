#pragma once

#include <complex>
#include <Eigen/Dense>

#include "qchan/errors.hpp"

namespace qchan {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared across the library.
inline constexpr double kEpsHerm = 1e-9;    // Hermiticity defect, relative
inline constexpr double kEpsPsd = 1e-9;     // allowed negative eigenvalue
inline constexpr double kEpsTrace = 1e-9;   // trace-one defect
inline constexpr double kEpsRank = 1e-10;   // support cutoff, relative to largest eigenvalue
inline constexpr double kEpsCptp = 1e-8;    // trace-preservation defect

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
// Columns of `vectors` are the matching orthonormal eigenvectors.
struct EigResult {
    RealVector values;
    Matrix vectors;
};

bool is_finite(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kEpsHerm);
void require_finite(const Matrix& m, const char* what);
void require_hermitian(const Matrix& m, const char* what, double tol = kEpsHerm);
void require_square(const Matrix& m, const char* what);

EigResult hermitian_eig(const Matrix& h);

// Sum of singular values. Requires a square matrix.
double trace_norm(const Matrix& m);

// A^s for PSD A with the support convention 0^s = 0 for every s in [0,1],
// so A^0 is the support projector. Eigenvalues below kEpsRank * lambda_max
// are treated as zero.
Matrix matrix_power_psd(const Matrix& a, double s);

// Projector onto the support of a PSD matrix (kEpsRank cutoff).
Matrix support_projector(const Matrix& a);

// Clip negative eigenvalues to zero.
Matrix psd_clip(const Matrix& a);

// Kronecker product, subsystem A on the left:
// out((ia*rb+ib),(ja*cb+jb)) = a(ia,ja) * b(ib,jb).
Matrix tensor(const Matrix& a, const Matrix& b);

enum class Subsystem { A, B };

// Partial trace of an operator on A (dim_a) tensor B (dim_b), keeping `keep`.
Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep);

Matrix identity_matrix(int d);

// Normalized maximally entangled vector (1/sqrt(d)) sum_i |i>|i> on d x d.
Vector max_entangled_vec(int d);
Matrix max_entangled_state(int d);

inline Matrix projector(const Vector& v) { return v * v.adjoint(); }

}  // namespace qchan
