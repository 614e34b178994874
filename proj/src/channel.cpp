#include "qchan/channel.hpp"

#include <cmath>
#include <string>

namespace qchan {

DensityOperator DensityOperator::from_matrix(Matrix m) {
    require_hermitian(m, "DensityOperator");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    double lmin = solver.eigenvalues().minCoeff();
    if (lmin < -kEpsPsd * std::max(1.0, solver.eigenvalues().maxCoeff()))
        throw ValidationError("DensityOperator: negative eigenvalue " + std::to_string(lmin));
    double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kEpsTrace)
        throw ValidationError("DensityOperator: trace " + std::to_string(tr) + " != 1");
    return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::unchecked(Matrix m) {
    return DensityOperator(std::move(m));
}

DensityOperator pure_state(const Vector& v) {
    double n = v.norm();
    if (n < 1e-12) throw ValidationError("pure_state: zero vector");
    Vector u = v / n;
    return DensityOperator::unchecked(u * u.adjoint());
}

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::string name)
    : kraus_(std::move(kraus)), name_(std::move(name)) {
    if (kraus_.empty()) throw ValidationError("KrausChannel: empty Kraus list");
    dim_out_ = static_cast<int>(kraus_[0].rows());
    dim_in_ = static_cast<int>(kraus_[0].cols());
    if (dim_in_ <= 0 || dim_out_ <= 0) throw ValidationError("KrausChannel: empty operator");
    for (std::size_t i = 0; i < kraus_.size(); ++i) {
        if (kraus_[i].rows() != dim_out_ || kraus_[i].cols() != dim_in_)
            throw ValidationError("KrausChannel: operator " + std::to_string(i) +
                                  " has inconsistent shape");
        require_finite(kraus_[i], "KrausChannel");
    }
}

CptpVerdict validate_cptp(const KrausChannel& ch, double tol) {
    Matrix sum = Matrix::Zero(ch.dim_in(), ch.dim_in());
    for (const Matrix& k : ch.kraus()) sum += k.adjoint() * k;
    double defect = trace_norm(sum - identity_matrix(ch.dim_in()));
    return CptpVerdict{defect <= tol, defect};
}

void require_cptp(const KrausChannel& ch, double tol) {
    CptpVerdict v = validate_cptp(ch, tol);
    if (!v.valid)
        throw ValidationError("channel '" + ch.name() + "' is not trace preserving: defect " +
                              std::to_string(v.defect));
}

Matrix apply_matrix(const KrausChannel& ch, const Matrix& rho) {
    if (rho.rows() != ch.dim_in() || rho.cols() != ch.dim_in())
        throw ValidationError("apply: state dimension " + std::to_string(rho.rows()) +
                              " != channel input dimension " + std::to_string(ch.dim_in()));
    Matrix out = Matrix::Zero(ch.dim_out(), ch.dim_out());
    for (const Matrix& k : ch.kraus()) out += k * rho * k.adjoint();
    return out;
}

Matrix apply_extended_matrix(const KrausChannel& ch, const Matrix& rho, int dim_ancilla) {
    const int din = ch.dim_in();
    const int dout = ch.dim_out();
    if (dim_ancilla <= 0 || rho.rows() != static_cast<Eigen::Index>(dim_ancilla) * din ||
        rho.cols() != rho.rows())
        throw ValidationError("apply_extended: state dimension is not ancilla * dim_in");
    // Blockwise action: rho = (B_ab) with din x din blocks, out_ab = sum K B_ab K^dag.
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim_ancilla) * dout,
                              static_cast<Eigen::Index>(dim_ancilla) * dout);
    for (int a = 0; a < dim_ancilla; ++a) {
        for (int b = 0; b < dim_ancilla; ++b) {
            Matrix block = rho.block(a * din, b * din, din, din);
            Matrix obl = Matrix::Zero(dout, dout);
            for (const Matrix& k : ch.kraus()) obl += k * block * k.adjoint();
            out.block(a * dout, b * dout, dout, dout) = obl;
        }
    }
    return out;
}

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho) {
    Matrix out = apply_matrix(ch, rho.matrix());
    return DensityOperator::unchecked((out + out.adjoint()) / 2.0);
}

DensityOperator apply_extended(const KrausChannel& ch, const DensityOperator& rho) {
    if (rho.dim() % ch.dim_in() != 0)
        throw ValidationError("apply_extended: state dimension not divisible by dim_in");
    int danc = rho.dim() / ch.dim_in();
    Matrix out = apply_extended_matrix(ch, rho.matrix(), danc);
    return DensityOperator::unchecked((out + out.adjoint()) / 2.0);
}

DensityOperator choi_state(const KrausChannel& ch) {
    Matrix phi = max_entangled_state(ch.dim_in());
    return DensityOperator::unchecked(apply_extended_matrix(ch, phi, ch.dim_in()));
}

ChannelPair::ChannelPair(KrausChannel first_, KrausChannel second_)
    : first(std::move(first_)), second(std::move(second_)) {
    if (first.dim_in() != second.dim_in() || first.dim_out() != second.dim_out())
        throw ValidationError("ChannelPair: dimension mismatch between '" + first.name() +
                              "' and '" + second.name() + "'");
}

}  // namespace qchan
