#include "hyperent/spin_model.hpp"

#include <cmath>

namespace hyperent {

SpinOperators spin_operators(SpinQuantumNumber j) {
    const std::size_t n = j.dim();
    const double jj = j.j() * (j.j() + 1.0);

    // Raising operator: S+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, row k holds m = j - k.
    ComplexMatrix raise(n, n);
    for (std::size_t k = 1; k < n; ++k) {
        const double m = j.j() - static_cast<double>(k);
        raise(k - 1, k) = std::sqrt(jj - m * (m + 1.0));
    }
    const ComplexMatrix lower = raise.adjoint();

    SpinOperators ops;
    ops.sx = (raise + lower) * Complex{0.5, 0.0};
    ops.sy = (raise - lower) * Complex{0.0, -0.5};
    ops.sz = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
        ops.sz(k, k) = j.j() - static_cast<double>(k);
    return ops;
}

ComplexMatrix build_hamiltonian(const FieldParams& params) {
    const SpinOperators nuc = spin_operators(SpinQuantumNumber::one());
    const SpinOperators ele = spin_operators(SpinQuantumNumber::half());
    const auto id_nuc = ComplexMatrix::identity(nuc.sz.rows());
    const auto id_ele = ComplexMatrix::identity(ele.sz.rows());

    ComplexMatrix h = kron(nuc.sx, ele.sx) + kron(nuc.sy, ele.sy) + kron(nuc.sz, ele.sz);
    h *= params.j_coupling;
    h += kron(id_nuc, ele.sz) * Complex{params.c};
    h += kron(nuc.sz, id_ele) * Complex{params.d};
    return h;
}

ReducedFields physical_to_reduced(double b1_tesla, double b2_tesla) {
    using namespace physical;
    const double c = kElectronG * kBohrMagneton * b1_tesla;
    const double d = -(kLithiumMoment * kNuclearMagneton / kLithiumNuclearSpin) * b2_tesla;
    return {c / kEnergyUnitJoule, d / kEnergyUnitJoule};
}

double reduced_temperature_unit_kelvin() { return physical::kEnergyUnitJoule / physical::kBoltzmann; }

} // namespace hyperent
