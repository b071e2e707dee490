#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <stdexcept>
#include <string>

namespace specstats {

using Complex = std::complex<double>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = DenseMatrix<Complex>;
using ComplexVector = DenseVector<Complex>;
using RealVector = DenseVector<double>;

// Error categories surfaced through the CLI exit codes.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConvergenceError : std::runtime_error {
    int block_lo = -1;
    int block_hi = -1;
    ConvergenceError(const std::string& what, int lo, int hi)
        : std::runtime_error(what), block_lo(lo), block_hi(hi) {}
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

// max_jk |M_jk - M_kj|
template <class Derived>
double symmetry_error(const Eigen::MatrixBase<Derived>& m) {
    return (m.derived() - m.derived().transpose()).cwiseAbs().maxCoeff();
}

// max_jk |M_jk + M_kj| (diagonal included: antisymmetry forces M_jj = 0)
template <class Derived>
double antisymmetry_error(const Eigen::MatrixBase<Derived>& m) {
    return (m.derived() + m.derived().transpose()).cwiseAbs().maxCoeff();
}

// max_jk |(M^H M - I)_jk|
template <class Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& m) {
    using S = typename Derived::Scalar;
    DenseMatrix<S> g = m.derived().adjoint() * m.derived();
    g.diagonal().array() -= S(1);
    return g.cwiseAbs().maxCoeff();
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m, double tol) {
    return symmetry_error(m) <= tol;
}
template <class Derived>
bool is_antisymmetric(const Eigen::MatrixBase<Derived>& m, double tol) {
    return antisymmetry_error(m) <= tol;
}
template <class Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol) {
    return unitarity_error(m) <= tol;
}

// Count, mean and population variance (divide by count).
struct StatSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0;
};

inline StatSummary summary(std::span<const double> values) {
    if (values.empty())
        throw ParameterError("summary: empty input");
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) {
        const double d = v - mean;
        acc += d * d;
    }
    return {values.size(), mean, acc / static_cast<double>(values.size())};
}

}  // namespace specstats
