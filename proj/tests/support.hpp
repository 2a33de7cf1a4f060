#pragma once

// Random generators and independent oracles shared by the test binaries.

#include "hyperent/entanglement.hpp"
#include "hyperent/linalg.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace hyperent::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_complex(rng);
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    const ComplexMatrix g = random_matrix(n, n, rng);
    return (g + g.adjoint()) * Complex{0.5};
}

// Gram-Schmidt on the columns of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t prev = 0; prev < k; ++prev) {
            Complex overlap{0.0, 0.0};
            for (std::size_t i = 0; i < n; ++i)
                overlap += std::conj(m(i, prev)) * m(i, k);
            for (std::size_t i = 0; i < n; ++i)
                m(i, k) -= overlap * m(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            norm += std::norm(m(i, k));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i)
            m(i, k) /= norm;
    }
    return m;
}

inline PureState random_pure_state(BipartiteDims dims, Rng& rng) {
    std::vector<Complex> amps(dims.total());
    for (auto& a : amps)
        a = random_complex(rng);
    return PureState::normalized(std::move(amps), dims);
}

inline PureState random_product_state(BipartiteDims dims, Rng& rng) {
    std::vector<Complex> u(dims.a), v(dims.b);
    for (auto& x : u)
        x = random_complex(rng);
    for (auto& x : v)
        x = random_complex(rng);
    std::vector<Complex> amps(dims.total());
    for (std::size_t i = 0; i < dims.a; ++i)
        for (std::size_t j = 0; j < dims.b; ++j)
            amps[dims.index(i, j)] = u[i] * v[j];
    return PureState::normalized(std::move(amps), dims);
}

inline PureState apply_local(const PureState& psi, const ComplexMatrix& ua, const ComplexMatrix& ub) {
    return PureState(kron(ua, ub).apply(psi.amplitudes()), psi.dims());
}

// The 6x6 Hamiltonian written out entry by entry, basis
// |⇑↑>, |⇑↓>, |0↑>, |0↓>, |⇓↑>, |⇓↓>.
inline ComplexMatrix explicit_hamiltonian(double c, double d) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix h(6, 6);
    h(0, 0) = 0.5 + c / 2 + d;
    h(1, 1) = -0.5 - c / 2 + d;
    h(1, 2) = r;
    h(2, 1) = r;
    h(2, 2) = c / 2;
    h(3, 3) = -c / 2;
    h(3, 4) = r;
    h(4, 3) = r;
    h(4, 4) = -0.5 + c / 2 - d;
    h(5, 5) = 0.5 - c / 2 - d;
    return h;
}

// Nonzero pattern shared by H and its Gibbs state: diagonal plus the
// (1,2) and (3,4) blocks.
inline bool in_block_pattern(std::size_t i, std::size_t j) {
    if (i == j)
        return true;
    const auto lo = std::min(i, j);
    const auto hi = std::max(i, j);
    return (lo == 1 && hi == 2) || (lo == 3 && hi == 4);
}

// |φ1> = -sqrt(1/3)|0↓> + sqrt(2/3)|⇓↑>
inline PureState phi1() {
    std::vector<Complex> a(6);
    a[3] = -std::sqrt(1.0 / 3.0);
    a[4] = std::sqrt(2.0 / 3.0);
    return PureState(std::move(a), kNuclearElectronDims);
}

// |φ2> = -sqrt(2/3)|⇑↓> + sqrt(1/3)|0↑>
inline PureState phi2() {
    std::vector<Complex> a(6);
    a[1] = -std::sqrt(2.0 / 3.0);
    a[2] = std::sqrt(1.0 / 3.0);
    return PureState(std::move(a), kNuclearElectronDims);
}

inline DensityMatrix equal_mixture_phi() {
    const std::vector<PureState> states{phi1(), phi2()};
    const std::vector<double> w{0.5, 0.5};
    return DensityMatrix::mixture(states, w);
}

// Pure-state negativity from the 2x2 electron reduced state, whose Schmidt
// spectrum has the closed form (1 ± sqrt(1 - 4 det)) / 2. Uses no eigensolver.
inline double two_level_schmidt_negativity(const PureState& psi) {
    const ComplexMatrix rb = psi.reduced(Factor::second);
    const double det = (rb(0, 0) * rb(1, 1) - rb(0, 1) * rb(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
    const double l1 = 0.5 * (1.0 + disc);
    const double l2 = std::max(0.0, 0.5 * (1.0 - disc));
    const double s = std::sqrt(l1) + std::sqrt(l2);
    return 0.5 * (s * s - 1.0);
}

} // namespace hyperent::testing
