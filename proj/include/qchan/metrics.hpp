#pragma once

#include <vector>

#include "qchan/channel.hpp"

namespace qchan {

// Strictly positive weights summing to one. Degenerate priors are rejected.
class PriorDistribution {
  public:
    explicit PriorDistribution(std::vector<double> weights);
    static PriorDistribution uniform(int n);

    int size() const { return static_cast<int>(w_.size()); }
    double operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& weights() const { return w_; }

  private:
    std::vector<double> w_;
};

struct Povm {
    std::vector<Matrix> elements;
};

// Each element PSD within kEpsPsd and the elements sum to I within tol.
void validate_povm(const Povm& povm, double tol = 1e-8);

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

double trace_distance_matrix(const Matrix& rho, const Matrix& sigma);
double fidelity_matrix(const Matrix& rho, const Matrix& sigma);

struct HelstromResult {
    double p_err = 0.0;
    Povm povm;  // element 0 guesses hypothesis 0
};

// Minimal average error for two states: (1 - ||pi0 rho0 - pi1 rho1||_1) / 2,
// achieved by projecting onto the positive / non-positive eigenspaces of
// pi0 rho0 - pi1 rho1.
HelstromResult helstrom_error(const DensityOperator& rho0, const DensityOperator& rho1,
                              const PriorDistribution& priors);
double helstrom_p_err(const Matrix& rho0, const Matrix& rho1, double pi0, double pi1);

// Largest trace of a common semidefinite lower bound:
//   max { Tr X : 0 <= X <= A, 0 <= X <= B }.
// Strictly positive exactly when the supports of A and B intersect
// nontrivially. Solved exactly for rank-one arguments, by a direct
// construction for near-equal arguments, and by an interior-point method
// otherwise; `gap` bounds the distance to the true optimum.
struct CommonPartResult {
    double value = 0.0;
    Matrix witness;  // feasible X with Tr X ~= value
    double gap = 0.0;
};

CommonPartResult common_part(const Matrix& a, const Matrix& b);

// max_{0<=s<=1} -log Tr rho^s sigma^(1-s), with the support convention of
// matrix_power_psd. `infinite` is set when the supports are orthogonal.
struct ChernoffResult {
    double value = 0.0;
    double s_star = 0.0;
    bool infinite = false;
};

ChernoffResult state_chernoff(const DensityOperator& rho, const DensityOperator& sigma);
ChernoffResult state_chernoff_matrix(const Matrix& rho, const Matrix& sigma);

// Discrimination error bracket for >= 2 hypotheses. Two states reduce to
// helstrom_error exactly; otherwise `upper` is the error of the pretty-good
// measurement and `lower` = upper / 2 (the standard PGM guarantee).
struct MultiErrorResult {
    double lower = 0.0;
    double upper = 0.0;
    Povm povm;
};

MultiErrorResult multi_error(const std::vector<DensityOperator>& states,
                             const PriorDistribution& priors);

// Error of a specific measurement: sum_i pi_i sum_{j != i} Tr[M_j rho_i].
double povm_error(const Povm& povm, const std::vector<Matrix>& states,
                  const PriorDistribution& priors);

}  // namespace qchan
