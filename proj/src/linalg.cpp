#include "hyperent/linalg.hpp"

#include "hyperent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace hyperent {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t n) { return ComplexMatrix(n, n); }

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(j, i) = (*this)(i, j);
    return r;
}

Complex ComplexMatrix::trace() const {
    if (!is_square())
        throw DimensionMismatch("trace of a non-square matrix");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= rhs.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& x : data_)
        x *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{})
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_)
        throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Complex> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += (*this)(i, j) * v[j];
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("max_abs_diff shape mismatch");
    double worst = 0.0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t k = 0; k < da.size(); ++k)
        worst = std::max(worst, std::abs(da[k] - db[k]));
    return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& x : m.data())
        s += std::norm(x);
    return std::sqrt(s);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return r;
}

std::vector<Complex> HermitianEigenDecomposition::eigenvector(std::size_t k) const {
    std::vector<Complex> v(eigenvectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = eigenvectors(i, k);
    return v;
}

ComplexMatrix HermitianEigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    ComplexMatrix scaled = eigenvectors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            scaled(i, k) *= eigenvalues[k];
    return scaled * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary
//   G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]   on rows/cols (p, q),
// where a(p,q) = |a(p,q)| e^{i phi}. The phase factor makes the pivot real,
// the real rotation then zeroes it. a <- G^H a G, v <- v G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0)
        return;
    const Complex phase = std::conj(apq) / mag;  // e^{-i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    double t;
    if (std::isinf(theta) || std::abs(theta) > 1e150)
        t = 0.5 / theta;
    else
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex gpp = c;
    const Complex gpq = s;
    const Complex gqp = -s * phase;
    const Complex gqq = c * phase;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

} // namespace

HermitianEigenDecomposition hermitian_eig(const ComplexMatrix& m, const JacobiOptions& opts) {
    if (!m.is_square())
        throw DimensionMismatch("hermitian_eig needs a square matrix");
    const double defect = m.hermiticity_defect();
    if (defect > opts.hermitian_tol)
        throw NotHermitian("matrix deviates from Hermitian by " + std::to_string(defect));

    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5};
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = opts.off_diagonal_tol * std::max(1.0, frobenius_norm(a));

    int sweeps = 0;
    while (off_diagonal_norm(a) >= target) {
        if (sweeps == opts.max_sweeps)
            throw NoConvergence("Jacobi iteration exceeded " + std::to_string(opts.max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigenDecomposition out;
    out.sweeps = sweeps;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eig(m).eigenvalues; }

namespace {

void check_bipartite(const ComplexMatrix& rho, BipartiteDims dims, const char* op) {
    if (dims.a == 0 || dims.b == 0)
        throw DimensionMismatch(std::string(op) + ": factor dimensions must be positive");
    if (!rho.is_square() || rho.rows() != dims.total())
        throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + ", expected " + std::to_string(dims.total()) +
                                " square");
}

} // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Factor keep) {
    check_bipartite(rho, dims, "partial_trace");
    if (keep == Factor::first) {
        ComplexMatrix r(dims.a, dims.a);
        for (std::size_t i = 0; i < dims.a; ++i)
            for (std::size_t ip = 0; ip < dims.a; ++ip)
                for (std::size_t j = 0; j < dims.b; ++j)
                    r(i, ip) += rho(dims.index(i, j), dims.index(ip, j));
        return r;
    }
    ComplexMatrix r(dims.b, dims.b);
    for (std::size_t j = 0; j < dims.b; ++j)
        for (std::size_t jp = 0; jp < dims.b; ++jp)
            for (std::size_t i = 0; i < dims.a; ++i)
                r(j, jp) += rho(dims.index(i, j), dims.index(i, jp));
    return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims, Factor over) {
    check_bipartite(rho, dims, "partial_transpose");
    ComplexMatrix r(rho.rows(), rho.cols());
    for (std::size_t i = 0; i < dims.a; ++i)
        for (std::size_t j = 0; j < dims.b; ++j)
            for (std::size_t ip = 0; ip < dims.a; ++ip)
                for (std::size_t jp = 0; jp < dims.b; ++jp) {
                    const Complex x = rho(dims.index(i, j), dims.index(ip, jp));
                    if (over == Factor::first)
                        r(dims.index(ip, j), dims.index(i, jp)) = x;
                    else
                        r(dims.index(i, jp), dims.index(ip, j)) = x;
                }
    return r;
}

double trace_norm(const ComplexMatrix& m, double hermitian_tol) {
    JacobiOptions opts;
    opts.hermitian_tol = hermitian_tol;
    double s = 0.0;
    for (double lambda : hermitian_eig(m, opts).eigenvalues)
        s += std::abs(lambda);
    return s;
}

} // namespace hyperent
