#pragma once

#include "hyperent/linalg.hpp"

#include <optional>

namespace hyperent {

/// Spin quantum number stored as 2j so half-integers are exact.
class SpinQuantumNumber {
public:
    constexpr explicit SpinQuantumNumber(unsigned two_j) : two_j_(two_j) {}

    static constexpr SpinQuantumNumber half() { return SpinQuantumNumber(1); }
    static constexpr SpinQuantumNumber one() { return SpinQuantumNumber(2); }

    constexpr unsigned two_j() const noexcept { return two_j_; }
    constexpr double j() const noexcept { return 0.5 * two_j_; }
    constexpr std::size_t dim() const noexcept { return two_j_ + 1; }

private:
    unsigned two_j_;
};

/// Spin matrices in the |j, m> basis ordered m = j, j-1, ..., -j (hbar = 1).
struct SpinOperators {
    ComplexMatrix sx;
    ComplexMatrix sy;
    ComplexMatrix sz;
};

SpinOperators spin_operators(SpinQuantumNumber j);

/// Hyperfine coupling and the two reduced Zeeman terms,
/// H = J (I.S) + C S_z + D I_z, energies in units of the coupling.
struct FieldParams {
    double j_coupling = 1.0;
    double c = 0.0;  // electron Zeeman term, g mu_B B1
    double d = 0.0;  // nuclear Zeeman term, -(mu / I) B2
};

/// 6x6 Hamiltonian in the basis |⇑↑>, |⇑↓>, |0↑>, |0↓>, |⇓↑>, |⇓↓>
/// (nuclear m_I major, electron m_S minor). Dimensions: kNuclearElectronDims.
ComplexMatrix build_hamiltonian(const FieldParams& params);

namespace physical {

inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kBoltzmann = 1.380649e-23;         // J / K
inline constexpr double kBohrMagneton = 9.2740100783e-24;  // J / T
inline constexpr double kNuclearMagneton = 5.0507837461e-27;  // J / T
inline constexpr double kElectronG = 2.0;
/// 6Li nuclear moment in nuclear magnetons, nuclear spin I = 1.
inline constexpr double kLithiumMoment = 0.822;
inline constexpr double kLithiumNuclearSpin = 1.0;
/// 6Li ground-state hyperfine line.
inline constexpr double kHyperfineFrequencyHz = 228e6;

/// Energy of one reduced unit, taken as h * 228 MHz. Whether the line
/// frequency is J itself or the F = 3/2 / F = 1/2 splitting (3J/2) is not
/// pinned down; this helper treats it as J.
inline constexpr double kEnergyUnitJoule = kPlanck * kHyperfineFrequencyHz;

}  // namespace physical

struct ReducedFields {
    double c = 0.0;
    double d = 0.0;
};

/// Maps lab fields in tesla to reduced (C, D).
ReducedFields physical_to_reduced(double b1_tesla, double b2_tesla);

/// Kelvin per unit of reduced temperature (k_B T = one energy unit).
double reduced_temperature_unit_kelvin();

} // namespace hyperent
