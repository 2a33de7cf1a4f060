#include "hyperent/entanglement.hpp"

#include "hyperent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hyperent {

PureState::PureState(std::vector<Complex> amplitudes, BipartiteDims dims)
    : amplitudes_(std::move(amplitudes)), dims_(dims) {
    if (dims_.a == 0 || dims_.b == 0 || amplitudes_.size() != dims_.total())
        throw DimensionMismatch("state has " + std::to_string(amplitudes_.size()) + " amplitudes, expected " +
                                std::to_string(dims_.total()));
}

PureState PureState::normalized(std::vector<Complex> amplitudes, BipartiteDims dims) {
    PureState psi(std::move(amplitudes), dims);
    const double n = std::sqrt(psi.norm_squared());
    if (!(n > 0.0) || !std::isfinite(n))
        throw NotNormalized("cannot normalize a zero or non-finite vector");
    for (auto& x : psi.amplitudes_)
        x /= n;
    return psi;
}

PureState PureState::product_basis(std::size_t i, std::size_t j, BipartiteDims dims) {
    if (i >= dims.a || j >= dims.b)
        throw DimensionMismatch("product basis index out of range");
    std::vector<Complex> amps(dims.total());
    amps[dims.index(i, j)] = 1.0;
    return PureState(std::move(amps), dims);
}

double PureState::norm_squared() const {
    double s = 0.0;
    for (const auto& x : amplitudes_)
        s += std::norm(x);
    return s;
}

void PureState::require_normalized() const {
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > kNormTol)
        throw NotNormalized("state norm^2 = " + std::to_string(n2));
}

ComplexMatrix PureState::projector() const { return ComplexMatrix::outer(amplitudes_, amplitudes_); }

ComplexMatrix PureState::reduced(Factor keep) const {
    // Contract the amplitude tensor directly instead of building the projector.
    const auto d = dims_;
    if (keep == Factor::first) {
        ComplexMatrix r(d.a, d.a);
        for (std::size_t i = 0; i < d.a; ++i)
            for (std::size_t ip = 0; ip < d.a; ++ip)
                for (std::size_t j = 0; j < d.b; ++j)
                    r(i, ip) += amplitudes_[d.index(i, j)] * std::conj(amplitudes_[d.index(ip, j)]);
        return r;
    }
    ComplexMatrix r(d.b, d.b);
    for (std::size_t j = 0; j < d.b; ++j)
        for (std::size_t jp = 0; jp < d.b; ++jp)
            for (std::size_t i = 0; i < d.a; ++i)
                r(j, jp) += amplitudes_[d.index(i, j)] * std::conj(amplitudes_[d.index(i, jp)]);
    return r;
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.dims() != b.dims())
        throw DimensionMismatch("fidelity of states on different spaces");
    Complex overlap{0.0, 0.0};
    for (std::size_t k = 0; k < a.amplitudes().size(); ++k)
        overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    return std::norm(overlap);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, BipartiteDims dims) : matrix_(std::move(matrix)), dims_(dims) {
    if (!matrix_.is_square() || matrix_.rows() != dims_.total())
        throw DimensionMismatch("density matrix size does not match its dimensions");
    const double defect = matrix_.hermiticity_defect();
    if (defect > kTol)
        throw InvalidState("density matrix not Hermitian (defect " + std::to_string(defect) + ")");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTol)
        throw InvalidState("density matrix trace " + std::to_string(tr) + " != 1");
    const double min_eig = hermitian_eigenvalues(matrix_).front();
    if (min_eig < -kTol)
        throw InvalidState("density matrix has eigenvalue " + std::to_string(min_eig));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
    psi.require_normalized();
    return DensityMatrix(psi.projector(), psi.dims());
}

DensityMatrix DensityMatrix::mixture(std::span<const PureState> states, std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size())
        throw InvalidInput("mixture needs one weight per state");
    const BipartiteDims dims = states.front().dims();
    ComplexMatrix rho(dims.total(), dims.total());
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (weights[k] < 0.0)
            throw InvalidInput("negative mixture weight");
        if (states[k].dims() != dims)
            throw DimensionMismatch("mixture of states on different spaces");
        states[k].require_normalized();
        rho += states[k].projector() * Complex{weights[k]};
    }
    return DensityMatrix(std::move(rho), dims);
}

DensityMatrix DensityMatrix::maximally_mixed(BipartiteDims dims) {
    return DensityMatrix(ComplexMatrix::identity(dims.total()) * Complex{1.0 / static_cast<double>(dims.total())},
                         dims);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * trace_norm(a.matrix() - b.matrix());
}

double concurrence_pure(const PureState& psi) {
    psi.require_normalized();
    const ComplexMatrix rho_a = psi.reduced(Factor::first);
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double purity = 0.0;
    for (const auto& x : rho_a.data())
        purity += std::norm(x);
    const double linear_entropy = std::max(0.0, 1.0 - purity);
    return std::sqrt(2.0 * kConcurrenceNu1 * kConcurrenceNu2 * linear_entropy);
}

double concurrence_upper_bound(BipartiteDims dims) {
    const double d = static_cast<double>(dims.min());
    return std::sqrt(2.0 * (d - 1.0) / d);
}

double negativity(const DensityMatrix& rho, Factor over) {
    const double norm = trace_norm(partial_transpose(rho.matrix(), rho.dims(), over));
    return std::max(0.0, 0.5 * (norm - 1.0));
}

double schmidt_negativity_oracle(const PureState& psi) {
    psi.require_normalized();
    // The smaller factor carries exactly the Schmidt spectrum; the larger one
    // pads it with zeros whose roundoff would be amplified by the sqrt.
    const Factor smaller = psi.dims().b <= psi.dims().a ? Factor::second : Factor::first;
    double root_sum = 0.0;
    for (double lambda : hermitian_eigenvalues(psi.reduced(smaller)))
        root_sum += std::sqrt(std::max(0.0, lambda));
    return std::max(0.0, 0.5 * (root_sum * root_sum - 1.0));
}

} // namespace hyperent
