#include "qchan/random.hpp"

#include <cmath>

namespace qchan {

namespace {

// splitmix64 step, used to mix (seed, index) into a substream seed.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t state = master_seed;
    std::uint64_t a = splitmix64(state);
    state ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix64(state);
    return Rng(a ^ (b + index));
}

double Rng::uniform() {
    // 53-bit mantissa in [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Vector random_unit_vector(int dim, Rng& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
    double n = v.norm();
    while (n < 1e-12) {
        for (int i = 0; i < dim; ++i) v(i) = Complex(rng.normal(), rng.normal());
        n = v.norm();
    }
    return v / n;
}

Matrix random_hermitian(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    return (g + g.adjoint()) / 2.0;
}

Matrix random_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix phases so the distribution is Haar.
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

Matrix random_density(int dim, Rng& rng, int rank) {
    if (rank <= 0 || rank > dim) rank = dim;
    Matrix g(dim, rank);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

}  // namespace qchan
