#pragma once

#include <cstdint>
#include <random>

#include "qchan/linalg.hpp"

namespace qchan {

// Deterministic random stream. Gaussian variates use an explicit Box-Muller
// transform so results are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Substream for worker `index`, independent of scheduling.
    static Rng derive(std::uint64_t master_seed, std::uint64_t index);

    double uniform();                  // [0, 1)
    double normal();                   // standard Gaussian
    std::uint64_t next_u64() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Vector random_unit_vector(int dim, Rng& rng);
Matrix random_hermitian(int dim, Rng& rng);
Matrix random_unitary(int dim, Rng& rng);
// Random density operator of the given rank (0 = full rank).
Matrix random_density(int dim, Rng& rng, int rank = 0);

}  // namespace qchan
