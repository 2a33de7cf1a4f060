#pragma once

#include "hyperent/linalg.hpp"

#include <span>
#include <utility>
#include <vector>

namespace hyperent {

/// Normalized bipartite state vector. Construction checks only the length;
/// the measures check normalization (see kNormTol).
class PureState {
public:
    static constexpr double kNormTol = 1e-12;

    PureState(std::vector<Complex> amplitudes, BipartiteDims dims);

    /// Rescales `amplitudes` to unit norm. Throws NotNormalized for a zero vector.
    static PureState normalized(std::vector<Complex> amplitudes, BipartiteDims dims);
    /// |i>|j> in the product basis.
    static PureState product_basis(std::size_t i, std::size_t j, BipartiteDims dims);

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    BipartiteDims dims() const noexcept { return dims_; }
    double norm_squared() const;
    void require_normalized() const;

    ComplexMatrix projector() const;
    /// Reduced state of the kept factor.
    ComplexMatrix reduced(Factor keep) const;

private:
    std::vector<Complex> amplitudes_;
    BipartiteDims dims_;
};

/// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

/// Trace-one positive semidefinite Hermitian matrix over a bipartite space.
class DensityMatrix {
public:
    static constexpr double kTol = 1e-10;

    /// Validates Hermiticity, unit trace and min eigenvalue >= -kTol
    /// (roundoff negatives are tolerated but kept as-is). Throws InvalidState.
    DensityMatrix(ComplexMatrix matrix, BipartiteDims dims);

    static DensityMatrix from_pure(const PureState& psi);
    /// sum_k w_k |psi_k><psi_k|; weights must be nonnegative and sum to 1.
    static DensityMatrix mixture(std::span<const PureState> states, std::span<const double> weights);
    static DensityMatrix maximally_mixed(BipartiteDims dims);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    BipartiteDims dims() const noexcept { return dims_; }

private:
    ComplexMatrix matrix_;
    BipartiteDims dims_;
};

/// Trace distance 1/2 ||a - b||_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Dimension weights of the I-concurrence; both fixed to one.
inline constexpr double kConcurrenceNu1 = 1.0;
inline constexpr double kConcurrenceNu2 = 1.0;

/// sqrt(2 nu1 nu2 (1 - tr rho_A^2)). Throws NotNormalized.
double concurrence_pure(const PureState& psi);

/// Upper bound sqrt(2 (D - 1) / D), D = min(d_a, d_b).
double concurrence_upper_bound(BipartiteDims dims);

/// (||rho^{T_A}||_1 - 1) / 2 with the transpose taken on `over`.
double negativity(const DensityMatrix& rho, Factor over = Factor::first);

/// Pure-state negativity from the Schmidt spectrum: ((sum_i sqrt(l_i))^2 - 1) / 2,
/// l_i the eigenvalues of the reduced state on the smaller factor.
/// Test oracle for negativity().
double schmidt_negativity_oracle(const PureState& psi);

} // namespace hyperent
