#include "doctest.h"

#include "hyperent/spin_model.hpp"
#include "support.hpp"

#include <cmath>

using namespace hyperent;
using namespace hyperent::testing;

TEST_CASE("spin-1/2 operators are half the Pauli matrices") {
    const auto s = spin_operators(SpinQuantumNumber::half());
    CHECK(max_abs_diff(s.sz, ComplexMatrix::diagonal({0.5, -0.5})) == 0.0);
    CHECK(max_abs_diff(s.sx, ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}}) < 1e-15);
    CHECK(max_abs_diff(s.sy, ComplexMatrix{{0.0, Complex(0, -0.5)}, {Complex(0, 0.5), 0.0}}) < 1e-15);
}

TEST_CASE("spin-1 operators") {
    const auto s = spin_operators(SpinQuantumNumber::one());
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(s.sz, ComplexMatrix::diagonal({1, 0, -1})) == 0.0);
    CHECK(max_abs_diff(s.sx, ComplexMatrix{{0, r, 0}, {r, 0, r}, {0, r, 0}}) < 1e-15);
    const auto casimir = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
    CHECK(max_abs_diff(casimir, ComplexMatrix::identity(3) * Complex{2.0}) < 1e-12);
}

TEST_CASE("commutation and Casimir relations for several spins") {
    const Complex i{0.0, 1.0};
    for (unsigned two_j : {1u, 2u, 3u, 4u}) {
        CAPTURE(two_j);
        const SpinQuantumNumber j(two_j);
        const auto s = spin_operators(j);
        CHECK(s.sx.rows() == j.dim());
        CHECK(max_abs_diff(commutator(s.sx, s.sy), i * s.sz) < 1e-12);
        CHECK(max_abs_diff(commutator(s.sy, s.sz), i * s.sx) < 1e-12);
        CHECK(max_abs_diff(commutator(s.sz, s.sx), i * s.sy) < 1e-12);
        const auto casimir = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
        CHECK(max_abs_diff(casimir, ComplexMatrix::identity(j.dim()) * Complex{j.j() * (j.j() + 1)}) < 1e-12);
        for (std::size_t k = 0; k < j.dim(); ++k)
            CHECK(s.sz(k, k).real() == doctest::Approx(j.j() - static_cast<double>(k)));
    }
}

TEST_CASE("spin 0 is a 1x1 zero") {
    const auto s = spin_operators(SpinQuantumNumber(0));
    CHECK(s.sz == ComplexMatrix::zeros(1));
}

TEST_CASE("Hamiltonian matches the explicit 6x6 matrix") {
    const auto h = build_hamiltonian({.c = 0.7, .d = -0.3});
    CHECK(h(0, 0).real() == doctest::Approx(0.5 + 0.35 - 0.3));
    CHECK(h(1, 2).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(h(2, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    Rng rng(99);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = u(rng);
        const double d = u(rng);
        const auto built = build_hamiltonian({.c = c, .d = d});
        const auto expected = explicit_hamiltonian(c, d);
        CHECK(max_abs_diff(built, expected) < 1e-12);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                if (!in_block_pattern(i, j))
                    CHECK(built(i, j) == Complex{});
        CHECK(std::abs(built.trace()) < 1e-12);
        CHECK(built.is_hermitian(0.0));
    }
}

TEST_CASE("zero-field spectrum is the F = 1/2 doublet and F = 3/2 quartet") {
    // I.S = [F(F+1) - 2 - 3/4] / 2: F = 1/2 gives -1, F = 3/2 gives 1/2.
    const auto e = hermitian_eigenvalues(build_hamiltonian({}));
    const double expected[] = {-1, -1, 0.5, 0.5, 0.5, 0.5};
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(e[k] == doctest::Approx(expected[k]).epsilon(1e-13));
}

TEST_CASE("coupling constant scales the exchange term") {
    const auto e = hermitian_eigenvalues(build_hamiltonian({.j_coupling = 2.0}));
    CHECK(e.front() == doctest::Approx(-2.0));
    CHECK(e.back() == doctest::Approx(1.0));
}

TEST_CASE("spectrum is symmetric under a global spin flip") {
    Rng rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = u(rng);
        const double d = u(rng);
        const auto a = hermitian_eigenvalues(build_hamiltonian({.c = c, .d = d}));
        const auto b = hermitian_eigenvalues(build_hamiltonian({.c = -c, .d = -d}));
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(std::abs(a[k] - b[k]) < 1e-11);
    }
}

TEST_CASE("physical to reduced field mapping") {
    const auto zero = physical_to_reduced(0.0, 0.0);
    CHECK(zero.c == 0.0);
    CHECK(zero.d == 0.0);

    const auto r = physical_to_reduced(1e-3, 1e-3);
    CHECK(r.c > 0.0);
    CHECK(r.d < 0.0);
    // 2 mu_B / (0.822 mu_N) is a few thousand: the m_p / m_e scale.
    const double ratio = std::abs(r.c / r.d);
    CHECK(ratio > 1e3);
    CHECK(ratio < 1e4);

    // k_B T = h * 228 MHz
    CHECK(reduced_temperature_unit_kelvin() == doctest::Approx(10.94e-3).epsilon(1e-3));
    // 1 mT on the electron: 2 * 9.274e-24 * 1e-3 / (6.626e-34 * 2.28e8)
    CHECK(r.c == doctest::Approx(0.12277).epsilon(1e-3));
}
