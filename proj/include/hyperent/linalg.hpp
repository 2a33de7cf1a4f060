#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperent {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major. Sized for the handful of
/// operators and states in a 6-dimensional Hilbert space, not for speed.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-wise literal, e.g. {{1, 0}, {0, -1}}. Rows must have equal length.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t n);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);
    /// |v><w| for column vectors v, w.
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    /// Largest |m(i,j) - conj(m(j,i))|; infinite for non-square input.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise |a - b|. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Frobenius norm.
double frobenius_norm(const ComplexMatrix& m);
/// a*b - b*a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Split of a product Hilbert space into a first factor of dimension `a`
/// and a second of dimension `b`. Product index k = i * b + j.
struct BipartiteDims {
    std::size_t a = 1;
    std::size_t b = 1;

    constexpr std::size_t total() const noexcept { return a * b; }
    constexpr std::size_t min() const noexcept { return a < b ? a : b; }
    constexpr std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * b + j; }
    friend constexpr bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Nuclear spin 1 first, electron spin 1/2 second.
inline constexpr BipartiteDims kNuclearElectronDims{3, 2};

enum class Factor { first, second };

struct HermitianEigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
    int sweeps = 0;

    std::vector<Complex> eigenvector(std::size_t k) const;
    ComplexMatrix reconstruct() const;
};

struct JacobiOptions {
    double hermitian_tol = 1e-10;
    // Off-diagonal Frobenius norm target, relative to max(1, ||m||_F).
    double off_diagonal_tol = 1e-13;
    int max_sweeps = 100;
};

/// Cyclic complex Jacobi. Throws NotHermitian or NoConvergence.
HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& m, const JacobiOptions& opts = {});

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Factor keep);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Factor over);

/// Sum of |eigenvalues|; Hermitian input only.
double trace_norm(const ComplexMatrix& m, double hermitian_tol = 1e-10);

} // namespace hyperent
