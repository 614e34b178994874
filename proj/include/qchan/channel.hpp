#pragma once

#include <string>
#include <vector>

#include "qchan/linalg.hpp"

namespace qchan {

// Density operator with validated invariants: Hermitian, eigenvalues >= -eps,
// unit trace. Use from_matrix for checked construction.
class DensityOperator {
  public:
    static DensityOperator from_matrix(Matrix m);
    // Skips the eigenvalue check; for internal use on operators that are
    // PSD by construction.
    static DensityOperator unchecked(Matrix m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }

  private:
    explicit DensityOperator(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

DensityOperator pure_state(const Vector& v);

// Quantum operation in Kraus form. Shape invariants are enforced on
// construction; trace preservation is checked separately (validate_cptp).
class KrausChannel {
  public:
    KrausChannel(std::vector<Matrix> kraus, std::string name = "");

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    int kraus_count() const { return static_cast<int>(kraus_.size()); }
    const std::vector<Matrix>& kraus() const { return kraus_; }
    const std::string& name() const { return name_; }

  private:
    int dim_in_ = 0;
    int dim_out_ = 0;
    std::vector<Matrix> kraus_;
    std::string name_;
};

struct CptpVerdict {
    bool valid = false;
    double defect = 0.0;  // ||sum K_i^dag K_i - I||_1
};

CptpVerdict validate_cptp(const KrausChannel& ch, double tol = kEpsCptp);
void require_cptp(const KrausChannel& ch, double tol = kEpsCptp);

// Matrix-level cores. The extended form applies I_anc (x) K_i with the
// ancilla as the left tensor factor.
Matrix apply_matrix(const KrausChannel& ch, const Matrix& rho);
Matrix apply_extended_matrix(const KrausChannel& ch, const Matrix& rho, int dim_ancilla);

DensityOperator apply(const KrausChannel& ch, const DensityOperator& rho);
DensityOperator apply_extended(const KrausChannel& ch, const DensityOperator& rho);

// Choi state (I (x) ch)(Phi) on dim_in (x) dim_out, trace one.
DensityOperator choi_state(const KrausChannel& ch);

// Two channels under comparison; equal input and output dimensions required.
struct ChannelPair {
    ChannelPair(KrausChannel first_, KrausChannel second_);
    KrausChannel first;
    KrausChannel second;
    int dim_in() const { return first.dim_in(); }
    int dim_out() const { return first.dim_out(); }
};

}  // namespace qchan
